#include "kce/zeta.hpp"

#include "kce/error.hpp"
#include "kce/quadfield.hpp"

#include <string>
#include <vector>

namespace kce {

std::int64_t sigma1(std::int64_t n) {
    std::int64_t total = 0;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            total += d;
            if (d * d != n) total += n / d;
        }
    }
    return total;
}

Rational zeta_minus1_siegel(std::int64_t D) {
    Integer total = 0;
    for (std::int64_t b = 1; b * b < D; b += 2) total += 2 * sigma1((D - b * b) / 4);  // +-b
    Rational r(total, 60);
    r.canonicalize();
    return r;
}

Rational zeta_minus1_bernoulli(std::int64_t D) {
    Integer total = 0;
#pragma omp parallel
    {
        Integer local = 0;
#pragma omp for schedule(static) nowait
        for (std::int64_t a = 1; a < D; ++a) {
            const int c = chi(D, a);
            if (c != 0) local += Integer(c) * a * a;
        }
#pragma omp critical(kce_bernoulli)
        total += local;
    }
    Rational r(total, Integer(24) * D);
    r.canonicalize();
    return r;
}

Rational zeta_minus1(std::int64_t D) {
    Rational siegel = zeta_minus1_siegel(D);
    Rational bernoulli = zeta_minus1_bernoulli(D);
    if (siegel != bernoulli) {
        throw Error(ErrorCode::Internal, "zeta_F(-1) formulas disagree for D = " + std::to_string(D) + ": " +
                                             to_string(siegel) + " vs " + to_string(bernoulli));
    }
    return siegel;
}

ZetaReport volume_constants(std::int64_t D) {
    ZetaReport r;
    r.zeta_minus1 = zeta_minus1(D);
    r.method = ZetaMethod::Siegel;
    r.volume = 2 * r.zeta_minus1;
    r.self_cup = -4 * r.zeta_minus1;
    r.normalizer = 1 / r.self_cup;
    return r;
}

namespace {

constexpr std::int64_t kChunk = 64;

void accumulate(ComplexApprox& acc, std::int64_t D, std::int64_t a, const BigFloat& two_pi_over_D,
                unsigned digits) {
    const int c = chi(D, a);
    if (c == 0) return;
    const BigFloat angle = two_pi_over_D * BigFloat(static_cast<long>(a), digits);
    if (c > 0) {
        acc.re += cos(angle);
        acc.im += sin(angle);
    } else {
        acc.re += -cos(angle);
        acc.im += -sin(angle);
    }
}

}  // namespace

ComplexApprox gauss_sum_numeric(std::int64_t D, unsigned digits) {
    const BigFloat step = BigFloat(2L, digits) * BigFloat::pi(digits) / BigFloat(static_cast<long>(D), digits);
    const std::int64_t chunks = (D - 1 + kChunk - 1) / kChunk;
    std::vector<ComplexApprox> partial(static_cast<std::size_t>(chunks),
                                       ComplexApprox{BigFloat(digits), BigFloat(digits)});
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t k = 0; k < chunks; ++k) {
        const std::int64_t lo = 1 + k * kChunk;
        const std::int64_t hi = std::min(D, lo + kChunk);
        ComplexApprox& acc = partial[static_cast<std::size_t>(k)];
        for (std::int64_t a = lo; a < hi; ++a) accumulate(acc, D, a, step, digits);
    }
    ComplexApprox total{BigFloat(digits), BigFloat(digits)};
    for (const auto& p : partial) {
        total.re += p.re;
        total.im += p.im;
    }
    return total;
}

ComplexApprox gauss_sum_numeric_serial(std::int64_t D, unsigned digits) {
    const BigFloat step = BigFloat(2L, digits) * BigFloat::pi(digits) / BigFloat(static_cast<long>(D), digits);
    ComplexApprox total{BigFloat(digits), BigFloat(digits)};
    for (std::int64_t a = 1; a < D; ++a) accumulate(total, D, a, step, digits);
    return total;
}

Covolume covolume(std::int64_t D, unsigned digits) {
    FieldCtx ctx;
    ctx.D = D;
    const QuadElem w = QuadElem::omega(ctx);
    return {"sqrt(" + std::to_string(D) + ")",
            abs(w.embed(Embedding::Conjugate, digits) - w.embed(Embedding::Identity, digits))};
}

}  // namespace kce
