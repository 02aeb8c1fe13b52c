#pragma once

#include "kce/modarith.hpp"
#include "kce/numeric.hpp"

#include <cstdint>
#include <optional>

namespace kce {

// Q(sqrt D) for a prime D = 1 mod 4, with integral basis (1, omega),
// omega = (1 + sqrt D)/2, omega^2 = omega + (D - 1)/4.
struct FieldCtx {
    std::int64_t D = 0;
    std::int64_t omega_trace = 1;
    std::int64_t omega_norm = 0;  // (1 - D)/4
    // Narrow class number; empty when validation was forced past the check.
    std::optional<std::int64_t> h_plus;

    friend bool operator==(const FieldCtx& a, const FieldCtx& b) { return a.D == b.D; }
};

// Throws TooSmall, NotPrime, NotOneMod4, or NarrowClassNotOne (unless force).
FieldCtx make_field(std::int64_t D, bool force = false);

enum class Embedding { Identity, Conjugate };

class QuadElem {
public:
    QuadElem(const FieldCtx& ctx, Rational a = 0, Rational b = 0);

    static QuadElem omega(const FieldCtx& ctx) { return QuadElem(ctx, 0, 1); }
    // (P + sqrt D)/Q
    static QuadElem from_surd(const FieldCtx& ctx, const Rational& P, const Rational& Q);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    std::int64_t D() const { return D_; }

    QuadElem conj() const;
    Rational norm() const;
    Rational trace() const;
    QuadElem inverse() const;
    bool is_integral() const;

    friend QuadElem operator+(const QuadElem& x, const QuadElem& y);
    friend QuadElem operator-(const QuadElem& x, const QuadElem& y);
    friend QuadElem operator*(const QuadElem& x, const QuadElem& y);
    friend QuadElem operator/(const QuadElem& x, const QuadElem& y);
    friend bool operator==(const QuadElem& x, const QuadElem& y) {
        return x.D_ == y.D_ && x.a_ == y.a_ && x.b_ == y.b_;
    }

    BigFloat embed(Embedding which, unsigned digits) const;

private:
    QuadElem(std::int64_t D, Rational a, Rational b) : D_(D), a_(std::move(a)), b_(std::move(b)) {}
    void check_same(const QuadElem& o) const;

    std::int64_t D_;
    Rational a_;
    Rational b_;
};

// Sign of x under the identity embedding, decided exactly.
int sign(const QuadElem& x);

// eps0 > 1 generating O_F^* / {+-1}, via the period of the regular continued
// fraction of omega.
QuadElem fundamental_unit(const FieldCtx& ctx);
// eps = eps0^2, generator of the totally positive units.
QuadElem totally_positive_unit(const FieldCtx& ctx);

// Kronecker symbol (D/m); for prime D = 1 mod 4 this is the Legendre symbol (m/D).
int chi(std::int64_t D, std::int64_t m);

// Number of cycles of reduced indefinite forms of discriminant D.
std::int64_t narrow_class_number(std::int64_t D);

}  // namespace kce
