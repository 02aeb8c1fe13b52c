#include "kce/realisation.hpp"

#include "kce/error.hpp"
#include "kce/zeta.hpp"

#include <string>

namespace kce {

std::string_view to_string(Generator g) { return g == Generator::L1_L2inv ? "L1-L2inv" : "L1inv-L2"; }

Generator parse_generator(std::string_view s) {
    if (s == "L1-L2inv") return Generator::L1_L2inv;
    if (s == "L1inv-L2") return Generator::L1inv_L2;
    throw Error(ErrorCode::InvalidArgument, "unknown generator '" + std::string(s) + "'");
}

EpsPower operator*(const EpsPower& x, const EpsPower& y) {
    if (x.D_ != y.D_) throw Error(ErrorCode::InvalidArgument, "eps powers of different fields");
    return {x.D_, x.q_ + y.q_};
}

EpsPower boundary_ledger(const FieldCtx& ctx, std::int64_t m1, std::int64_t m2) {
    return {ctx.D, Rational(m1 - m2)};
}

namespace {

// Boundary class of the generator of the dual Dirichlet summand. The dual
// flips the generator: for c1(L1 (x) L2^-1) the dual is generated by
// L1~^-1 (x) L2~, which restricts to eps^-2, and flipping gives eps^2.
EpsPower dual_generator_class(const FieldCtx& ctx, Generator g) {
    const EpsPower lattice_image = boundary_ledger(ctx, -1, 1);
    return g == Generator::L1_L2inv ? lattice_image.inverse() : lattice_image;
}

void require_h_one(const FieldCtx& ctx) {
    if (ctx.h_plus && *ctx.h_plus != 1) {
        throw Error(ErrorCode::NarrowClassNotOne, "only the single cusp h = 1 is supported");
    }
}

}  // namespace

Rational epsilon_tilde_exponent(const FieldCtx& ctx, Generator g) {
    const Rational normalizer = volume_constants(ctx.D).normalizer;
    return dual_generator_class(ctx, g).pow(normalizer).q();
}

EpsPower epsilon_tilde(const FieldCtx& ctx, Generator g) { return {ctx.D, epsilon_tilde_exponent(ctx, g)}; }

EisCoefficients eisenstein_coefficients(const FieldCtx& ctx, const GaussianRational& alpha1,
                                        const GaussianRational& alpha2, const GaussianRational& /*beta*/) {
    require_h_one(ctx);
    return {alpha1, alpha2};
}

Rational hodge_coefficient_from_eisenstein(const FieldCtx& ctx, const EisCoefficients& eis, Generator g) {
    if (!(eis.lambda2 == -eis.lambda1)) {
        throw Error(ErrorCode::InvalidArgument, "Eisenstein difference is not a multiple of c1(L1) - c1(L2)");
    }
    const Rational zeta = zeta_minus1(ctx.D);
    // lambda kappa (c1(L1) - c1(L2)) = lambda kappa / (2 pi i s) * generator;
    // times 2 pi i / sqrt D, then in the basis 1/(2 pi i):
    // s * i * lambda / (2 zeta) * log(eps).
    const GaussianRational i_lambda = kI * eis.lambda1;
    if (i_lambda.im != 0) throw Error(ErrorCode::InvalidArgument, "extension class is not real");
    return sign(g) * i_lambda.re / (2 * zeta);
}

HodgeClass hodge_de_rham_class(const FieldCtx& ctx, unsigned digits, Generator g) {
    // dz1 ^ dz2 - dx1 ^ dx2 = i (dx1 ^ dy2 - dx2 ^ dy1) + dy1 ^ dy2
    const EisCoefficients eis = eisenstein_coefficients(ctx, kI, -kI, GaussianRational{1, 0});
    HodgeClass h;
    h.coeff = hodge_coefficient_from_eisenstein(ctx, eis, g);
    const BigFloat log_eps = log(totally_positive_unit(ctx).embed(Embedding::Identity, digits));
    h.numeric = BigFloat(h.coeff, digits) * log_eps;
    return h;
}

OneMotiveDescriptor kummer_one_motive(const FieldCtx& ctx, Generator g) {
    const Rational normalizer = volume_constants(ctx.D).normalizer;
    OneMotiveDescriptor m{.generator_label = "L1~^-1 (x) L2~",
                          .u_image = boundary_ledger(ctx, -1, 1),
                          .normalized_q = 0};
    const EpsPower dual = g == Generator::L1_L2inv ? m.u_image.inverse() : m.u_image;
    m.normalized_q = dual.pow(normalizer).q();
    return m;
}

}  // namespace kce
