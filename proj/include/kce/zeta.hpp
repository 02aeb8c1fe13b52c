#pragma once

#include "kce/numeric.hpp"

#include <cstdint>
#include <string>

namespace kce {

enum class ZetaMethod { Siegel, Bernoulli };

struct ZetaReport {
    Rational zeta_minus1;
    ZetaMethod method = ZetaMethod::Siegel;
    Rational volume;      // 2 zeta_F(-1)
    Rational self_cup;    // -4 zeta_F(-1)
    Rational normalizer;  // -1/(4 zeta_F(-1))
};

std::int64_t sigma1(std::int64_t n);

// (1/60) sum over odd b, b^2 < D, of sigma_1((D - b^2)/4).
Rational zeta_minus1_siegel(std::int64_t D);
// B_{2,chi}/24 with B_{2,chi} = (1/D) sum chi(a) a^2.
Rational zeta_minus1_bernoulli(std::int64_t D);
// Both formulas; throws Internal when they disagree.
Rational zeta_minus1(std::int64_t D);

ZetaReport volume_constants(std::int64_t D);

struct ComplexApprox {
    BigFloat re;
    BigFloat im;
};

// sum_{a=1}^{D-1} chi_D(a) exp(2 pi i a / D). Chunked OpenMP reduction;
// the result does not depend on the thread count.
ComplexApprox gauss_sum_numeric(std::int64_t D, unsigned digits);
// Plain left-to-right summation, kept as the reference for the kernel above.
ComplexApprox gauss_sum_numeric_serial(std::int64_t D, unsigned digits);

struct Covolume {
    std::string symbol;  // "sqrt(D)"
    BigFloat numeric;
};

// |embed(omega, conj) - embed(omega, id)|.
Covolume covolume(std::int64_t D, unsigned digits);

}  // namespace kce
