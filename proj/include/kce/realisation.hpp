#pragma once

#include "kce/numeric.hpp"
#include "kce/quadfield.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace kce {

// Which Chern class generates the Dirichlet summand Q(0)chi_D. The two
// choices differ by sign, and flipping conjugates every signed output.
enum class Generator { L1_L2inv, L1inv_L2 };

std::string_view to_string(Generator g);
Generator parse_generator(std::string_view s);
inline int sign(Generator g) { return g == Generator::L1_L2inv ? 1 : -1; }

// eps^q in F^* (x) Q, eps = eps0^2.
class EpsPower {
public:
    EpsPower(std::int64_t D, Rational q) : D_(D), q_(std::move(q)) {}

    std::int64_t D() const { return D_; }
    const Rational& q() const { return q_; }

    // Theta acts by eps -> eps^{-1}.
    EpsPower conj() const { return {D_, -q_}; }
    EpsPower pow(const Rational& r) const { return {D_, q_ * r}; }
    EpsPower inverse() const { return {D_, -q_}; }
    bool is_trivial() const { return q_ == 0; }

    friend EpsPower operator*(const EpsPower& x, const EpsPower& y);
    friend bool operator==(const EpsPower& x, const EpsPower& y) { return x.D_ == y.D_ && x.q_ == y.q_; }

private:
    std::int64_t D_;
    Rational q_;
};

// Restriction of L1~^{m1} (x) L2~^{m2} to the boundary polygon:
// L1~ -> eps, L2~ -> eps^{-1}.
EpsPower boundary_ledger(const FieldCtx& ctx, std::int64_t m1, std::int64_t m2);

// Exponent q of eps~ = eps^q, q = -1/(2 zeta_F(-1)): the dual generator's
// boundary class eps^2, raised to the normalizer -1/(4 zeta_F(-1)).
Rational epsilon_tilde_exponent(const FieldCtx& ctx, Generator g = Generator::L1_L2inv);
EpsPower epsilon_tilde(const FieldCtx& ctx, Generator g = Generator::L1_L2inv);

// a + b i with rational parts.
struct GaussianRational {
    Rational re;
    Rational im;

    friend GaussianRational operator+(const GaussianRational& x, const GaussianRational& y) {
        return {x.re + y.re, x.im + y.im};
    }
    friend GaussianRational operator*(const GaussianRational& x, const GaussianRational& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    friend GaussianRational operator-(const GaussianRational& x) { return {-x.re, -x.im}; }
    friend bool operator==(const GaussianRational&, const GaussianRational&) = default;
};

inline const GaussianRational kI{0, 1};

// Multipliers of kappa_D = sqrt(D) log(eps) / (4 pi zeta_F(-1)) in front of
// c1(L1) and c1(L2). beta never contributes.
struct EisCoefficients {
    GaussianRational lambda1;
    GaussianRational lambda2;
    friend bool operator==(const EisCoefficients&, const EisCoefficients&) = default;
};

EisCoefficients eisenstein_coefficients(const FieldCtx& ctx, const GaussianRational& alpha1,
                                        const GaussianRational& alpha2, const GaussianRational& beta);

// Period of the Eisenstein difference lambda (c1(L1) - c1(L2)) against the
// generator 2 pi i (c1(L1) - c1(L2)), divided by the Gauss sum sqrt D and
// read in the basis 1/(2 pi i). Returns the rational multiple of log(eps);
// throws InvalidArgument if the coefficients are not of the form (l, -l) or
// the result is not real.
Rational hodge_coefficient_from_eisenstein(const FieldCtx& ctx, const EisCoefficients& eis,
                                           Generator g = Generator::L1_L2inv);

struct HodgeClass {
    Rational coeff;        // multiple of log(eps)
    BigFloat numeric;      // coeff * log(eps)
    std::string basis_note = "1/(2 pi i)";
};

HodgeClass hodge_de_rham_class(const FieldCtx& ctx, unsigned digits, Generator g = Generator::L1_L2inv);

struct OneMotiveDescriptor {
    std::string lattice = "Z(chi_D)";
    std::string generator_label;
    std::string target = "Pic^0(S_inf) = G_m";
    EpsPower u_image;
    // Dual, normalized exponent; equals epsilon_tilde_exponent.
    Rational normalized_q;
};

OneMotiveDescriptor kummer_one_motive(const FieldCtx& ctx, Generator g = Generator::L1_L2inv);

}  // namespace kce
