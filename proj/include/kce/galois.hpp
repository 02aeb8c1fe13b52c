#pragma once

#include "kce/modarith.hpp"
#include "kce/realisation.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace kce {

// F_p (degree 1) or F_p[x]/(x^2 - D) (degree 2, D a non-residue mod p).
class FiniteField {
public:
    struct Elem {
        std::uint64_t a = 0;  // a + b x
        std::uint64_t b = 0;
        friend bool operator==(const Elem&, const Elem&) = default;
    };

    static FiniteField prime(std::uint64_t p);
    static FiniteField quadratic(std::uint64_t p, std::int64_t D);

    std::uint64_t p() const { return p_; }
    int degree() const { return degree_; }
    std::uint64_t order() const { return degree_ == 1 ? p_ : p_ * p_; }  // q
    std::uint64_t nonresidue() const { return d_; }

    Elem from_int(std::int64_t v) const;
    Elem from_rational(const Rational& v) const;
    Elem sqrt_d(bool flip) const;  // x or -x (degree 2 only)
    Elem one() const { return {1, 0}; }

    Elem add(Elem u, Elem v) const;
    Elem mul(Elem u, Elem v) const;
    Elem pow(Elem u, std::uint64_t e) const;
    Elem inv(Elem u) const;

    // Enumeration order of canonical representatives: a + b p.
    std::uint64_t index(Elem u) const { return u.a + u.b * p_; }
    Elem from_index(std::uint64_t i) const { return {i % p_, i / p_}; }

    // Least (by index) generator of the multiplicative group.
    Elem least_generator() const;
    std::uint64_t multiplicative_order(Elem u) const;

    std::string str(Elem u) const;

    friend bool operator==(const FiniteField& x, const FiniteField& y) {
        return x.p_ == y.p_ && x.degree_ == y.degree_ && x.d_ == y.d_;
    }

private:
    FiniteField(std::uint64_t p, int degree, std::uint64_t d) : p_(p), degree_(degree), d_(d) {}
    std::uint64_t p_;
    int degree_;
    std::uint64_t d_;
};

using FFElem = FiniteField::Elem;

struct ReducedUnit {
    FiniteField field;
    FFElem value;
    // Split: the chosen root of D mod p. Inert: 0 (the root is x, or -x if flipped).
    std::uint64_t sqrt_root = 0;
    bool flipped = false;
};

// eps = eps0^2 at a prime above p. Split primes use the least root of D mod p
// (or p minus it when flipped); inert primes land in F_{p^2}.
ReducedUnit reduce_unit(std::int64_t D, std::uint64_t p, bool flip_root = false);

// zeta = g^((q-1)/l^n), g the least generator. Throws NoSuchRoot.
FFElem root_of_unity(const FiniteField& field, std::uint64_t l, unsigned n);

// Discrete log of y to base zeta inside <zeta>, zeta of exact order l^n:
// Pohlig-Hellman along l with baby-step giant-step at each level.
std::uint64_t subgroup_dlog(const FiniteField& field, FFElem y, FFElem zeta, std::uint64_t l, unsigned n);

// tau with zeta^tau = u^((q-1)/l^n).
std::uint64_t kummer_tau(const FiniteField& field, FFElem u, std::uint64_t l, unsigned n, FFElem zeta);

struct GaloisOptions {
    bool flip_root = false;
    Generator generator = Generator::L1_L2inv;
    // Use zeta^c in place of the canonical zeta (c a unit mod l^n).
    std::uint64_t zeta_power = 1;
};

struct RepMatrix {
    unsigned dim = 2;
    std::uint64_t modulus = 0;            // l^n
    std::vector<std::uint64_t> entries;   // row-major, reduced mod l^n
    std::int64_t D = 0;
    std::uint64_t p = 0;
    std::uint64_t l = 0;
    unsigned n = 0;
    int chi = 0;
    bool inert = false;
    std::uint64_t sqrt_root = 0;
    bool flipped = false;
    FFElem generator;                     // g
    FFElem zeta;                          // zeta actually used
    std::string zeta_convention;
    Rational q_exponent;
    std::uint64_t tau_eps = 0;            // Frobenius cocycle of eps
    std::uint64_t tau = 0;                // of eps~ = eps^q

    std::uint64_t at(unsigned i, unsigned j) const { return entries[i * dim + j]; }
    friend bool operator==(const RepMatrix& x, const RepMatrix& y) {
        return x.dim == y.dim && x.modulus == y.modulus && x.entries == y.entries;
    }
};

// Matrix [[chi(p), tau p^{-1}], [0, p^{-1}]] mod l^n of Frob_p.
// Throws Ramified, BadDenominator, RootMismatch, InvalidArgument.
RepMatrix frobenius_matrix(std::int64_t D, std::uint64_t p, std::uint64_t l, unsigned n,
                           const GaloisOptions& opts = {});
RepMatrix frobenius_matrix_3d(std::int64_t D, std::uint64_t p, std::uint64_t l, unsigned n,
                              const GaloisOptions& opts = {});

std::vector<std::uint64_t> matmul_mod(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
                                      unsigned dim, std::uint64_t modulus);
std::uint64_t determinant_mod(const RepMatrix& m);

struct PowerLawCheck {
    bool holds = false;
    std::vector<std::uint64_t> power;     // M^k
    std::vector<std::uint64_t> expected;  // assembled from tau(Frob^k)
    std::uint64_t tau_k = 0;
};

// Compares M^k with the matrix built from the cocycle of Frob^k, computed
// independently as dlog(u^((p^2 - 1)/l^n)) when k = 2.
PowerLawCheck verify_power_law(std::int64_t D, std::uint64_t p, std::uint64_t l, unsigned n, unsigned k,
                               const GaloisOptions& opts = {});

}  // namespace kce
