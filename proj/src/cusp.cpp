#include "kce/cusp.hpp"

#include "kce/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

namespace kce {

namespace {

std::int64_t isqrt(std::int64_t n) {
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::int64_t floordiv(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// sign of (u + sqrt D) for the conjugate-free comparisons below: u + sqrt D > 0?
bool plus_root_positive(std::int64_t u, std::int64_t D) { return u >= 0 || u * u < D; }
// u - sqrt D > 0?
bool minus_root_positive(std::int64_t u, std::int64_t D) { return u > 0 && u * u > D; }

}  // namespace

QuadIrrational::QuadIrrational(std::int64_t P_, std::int64_t Q_, std::int64_t D_) : P(P_), Q(Q_), D(D_) {
    if (Q == 0 || (D - P * P) % Q != 0) {
        throw Error(ErrorCode::InvalidArgument, "Q must be a nonzero divisor of D - P^2");
    }
}

bool QuadIrrational::greater_than_one() const {
    // (P + sqrt D)/Q > 1  <=>  sign(Q) (P - Q + sqrt D) > 0
    return Q > 0 ? plus_root_positive(P - Q, D) : minus_root_positive(Q - P, D);
}

bool QuadIrrational::is_reduced() const {
    if (!greater_than_one()) return false;
    // 0 < (P - sqrt D)/Q < 1
    const bool pos = Q > 0 ? minus_root_positive(P, D) : !minus_root_positive(P, D);
    const bool below_one = Q > 0 ? !minus_root_positive(P - Q, D) : minus_root_positive(P - Q, D);
    return pos && below_one;
}

std::int64_t QuadIrrational::floor() const {
    const std::int64_t s = isqrt(D);
    if (Q > 0) return floordiv(P + s, Q);
    return floordiv(-P - s - 1, -Q);
}

std::pair<std::int64_t, QuadIrrational> hj_step(const QuadIrrational& w) {
    if (!w.greater_than_one()) {
        throw Error(ErrorCode::NotGreaterThanOne,
                    "(" + std::to_string(w.P) + " + sqrt " + std::to_string(w.D) + ")/" + std::to_string(w.Q));
    }
    // sqrt D is irrational, so ceil = floor + 1.
    const std::int64_t b = w.floor() + 1;
    const std::int64_t P1 = b * w.Q - w.P;
    return {b, QuadIrrational(P1, (P1 * P1 - w.D) / w.Q, w.D)};
}

std::vector<std::int64_t> least_rotation(std::vector<std::int64_t> v) {
    std::vector<std::int64_t> best = v;
    for (std::size_t i = 1; i < v.size(); ++i) {
        std::rotate(v.begin(), v.begin() + 1, v.end());
        if (v < best) best = v;
    }
    return best;
}

CuspCycle::CuspCycle(std::vector<std::int64_t> b, std::int64_t D) : b_(least_rotation(std::move(b))), D_(D) {
    if (b_.empty()) throw Error(ErrorCode::Internal, "empty cusp cycle");
    if (*std::min_element(b_.begin(), b_.end()) < 2 || *std::max_element(b_.begin(), b_.end()) < 3) {
        throw Error(ErrorCode::Internal, "cusp cycle entries must be >= 2 with one >= 3");
    }
}

CuspCycle cusp_cycle_from(const QuadIrrational& start) {
    std::map<QuadIrrational, std::size_t> seen;
    std::vector<std::int64_t> digits;
    QuadIrrational w = start;
    while (!seen.count(w)) {
        seen.emplace(w, digits.size());
        auto [b, next] = hj_step(w);
        digits.push_back(b);
        w = next;
    }
    std::vector<std::int64_t> period(digits.begin() + static_cast<std::ptrdiff_t>(seen.at(w)), digits.end());
    return CuspCycle(std::move(period), start.D);
}

CuspCycle cusp_cycle(std::int64_t D) { return cusp_cycle_from(QuadIrrational(1, 2, D)); }

ExactMatrix intersection_matrix(const CuspCycle& c) {
    const std::size_t n = c.n();
    const auto& b = c.b();
    ExactMatrix m(n, n);
    if (n == 1) {
        // nodal rational curve: the node adds 2
        m(0, 0) = -b[0] + 2;
        return m;
    }
    for (std::size_t i = 0; i < n; ++i) m(i, i) = -b[i];
    if (n == 2) {
        m(0, 1) = m(1, 0) = 2;
        return m;
    }
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 1) % n;
        m(i, j) = m(j, i) = 1;
    }
    return m;
}

DefinitenessCertificate is_negative_definite(const ExactMatrix& m) {
    if (!m.is_symmetric()) throw Error(ErrorCode::NotSymmetric, "definiteness test needs a symmetric matrix");
    DefinitenessCertificate cert;
    cert.minors = leading_principal_minors(m);
    cert.negative_definite = true;
    for (std::size_t k = 0; k < cert.minors.size(); ++k) {
        const int expected = (k % 2 == 0) ? -1 : 1;  // (-1)^(k+1)
        if (sgn(cert.minors[k]) != expected) cert.negative_definite = false;
    }
    return cert;
}

ExactMatrix boundary_d02(std::size_t n) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "boundary polygon needs n >= 1");
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) += 1;
        m(i, (i + 1) % n) -= 1;
    }
    return m;
}

BoundaryCohomology boundary_cohomology(std::size_t n) {
    const ExactMatrix d02 = boundary_d02(n);
    RankKernel rk = rank_kernel(d02);
    BoundaryCohomology out;
    out.n = n;
    out.rank = rk.rank;
    out.kernel = std::move(rk.kernel);
    out.cokernel_dim = rank_kernel(d02.transpose()).kernel.size();

    const std::vector<Rational> ones(n, Rational(1));
    if (out.rank + 1 != n || out.kernel.size() != 1 || out.kernel.front() != ones || out.cokernel_dim != 1) {
        throw Error(ErrorCode::Internal, "d02 of the " + std::to_string(n) + "-gon does not have rank n - 1");
    }
    out.h1 = {1, 0};                  // d01 is an isomorphism; Q(0) survives
    out.h2 = {out.kernel.size(), -2};  // ker d02
    out.h3 = {out.cokernel_dim, -2};   // coker d02
    return out;
}

}  // namespace kce
