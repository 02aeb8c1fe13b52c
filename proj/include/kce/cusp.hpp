#pragma once

#include "kce/linalg.hpp"
#include "kce/numeric.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace kce {

// (P + sqrt D)/Q with Q | D - P^2.
struct QuadIrrational {
    std::int64_t P = 0;
    std::int64_t Q = 1;
    std::int64_t D = 0;

    QuadIrrational(std::int64_t P, std::int64_t Q, std::int64_t D);

    bool greater_than_one() const;
    // w > 1 and 0 < w' < 1: the states on the period of the minus expansion.
    bool is_reduced() const;
    // floor of the (irrational) value, exact.
    std::int64_t floor() const;

    friend bool operator==(const QuadIrrational&, const QuadIrrational&) = default;
    friend auto operator<=>(const QuadIrrational&, const QuadIrrational&) = default;
};

// One step of the minus continued fraction w = b - 1/w', b = ceil(w).
std::pair<std::int64_t, QuadIrrational> hj_step(const QuadIrrational& w);

class CuspCycle {
public:
    // Stores the lexicographically least rotation; throws Internal when an
    // entry is < 2 or all entries equal 2.
    CuspCycle(std::vector<std::int64_t> b, std::int64_t D);

    const std::vector<std::int64_t>& b() const { return b_; }
    std::size_t n() const { return b_.size(); }
    std::int64_t D() const { return D_; }

    friend bool operator==(const CuspCycle&, const CuspCycle&) = default;

private:
    std::vector<std::int64_t> b_;
    std::int64_t D_;
};

std::vector<std::int64_t> least_rotation(std::vector<std::int64_t> v);

// Period of the minus continued fraction started at omega = (1 + sqrt D)/2.
CuspCycle cusp_cycle(std::int64_t D);
// Same, from an arbitrary start state > 1; the pre-period is discarded.
CuspCycle cusp_cycle_from(const QuadIrrational& start);

ExactMatrix intersection_matrix(const CuspCycle& c);

struct DefinitenessCertificate {
    bool negative_definite = false;
    std::vector<Rational> minors;
};

// Sylvester criterion on leading principal minors; throws NotSymmetric.
DefinitenessCertificate is_negative_definite(const ExactMatrix& m);

// d^{02}: P_{i,i+1} -> S_i - S_{i+1}, as an n x n matrix.
ExactMatrix boundary_d02(std::size_t n);

// dim copies of the Tate motive Q(twist).
struct TateGroup {
    std::size_t dim = 0;
    int twist = 0;
};

struct BoundaryCohomology {
    std::size_t n = 0;
    std::size_t rank = 0;
    std::vector<std::vector<Rational>> kernel;
    std::size_t cokernel_dim = 0;
    TateGroup h1;  // Q(0)
    TateGroup h2;  // ker d^{02}
    TateGroup h3;  // coker d^{02}
};

// Throws Internal unless rank = n - 1 with kernel spanned by (1, ..., 1).
BoundaryCohomology boundary_cohomology(std::size_t n);
inline BoundaryCohomology boundary_cohomology(const CuspCycle& c) { return boundary_cohomology(c.n()); }

}  // namespace kce
