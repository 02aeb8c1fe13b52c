#include "kce/cusp.hpp"
#include "kce/error.hpp"

#include <doctest.h>

using namespace kce;

namespace {

using Cycle = std::vector<std::int64_t>;

std::vector<Rational> rationals(std::initializer_list<long> v) {
    std::vector<Rational> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

}  // namespace

TEST_CASE("minus continued fraction steps") {
    auto [b1, w1] = hj_step(QuadIrrational(1, 2, 5));
    CHECK(b1 == 2);
    CHECK(w1 == QuadIrrational(3, 2, 5));
    auto [b2, w2] = hj_step(QuadIrrational(3, 2, 5));
    CHECK(b2 == 3);
    CHECK(w2 == QuadIrrational(3, 2, 5));
    auto [b3, w3] = hj_step(QuadIrrational(1, 2, 13));
    CHECK(b3 == 3);
    CHECK(w3 == QuadIrrational(5, 6, 13));

    CHECK_THROWS_AS(QuadIrrational(1, 3, 5), Error);  // 3 does not divide 5 - 1
    try {
        hj_step(QuadIrrational(-1, 2, 5));  // (sqrt 5 - 1)/2 < 1
        FAIL("expected NotGreaterThanOne");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotGreaterThanOne);
    }
}

TEST_CASE("reduced states stay reduced") {
    for (std::int64_t D : {5, 13, 17, 29, 37, 41, 97}) {
        QuadIrrational w(1, 2, D);
        for (int i = 0; i < 10; ++i) w = hj_step(w).second;  // past the pre-period
        REQUIRE(w.is_reduced());
        for (int i = 0; i < 40; ++i) {
            w = hj_step(w).second;
            CHECK(w.is_reduced());
        }
    }
}

TEST_CASE("cusp cycles") {
    CHECK(cusp_cycle(5).b() == Cycle{3});
    CHECK(cusp_cycle(13).b() == Cycle{2, 2, 5});
    CHECK(cusp_cycle(17).b() == Cycle{2, 2, 3, 5, 3});
    CHECK(cusp_cycle(29).b() == Cycle{2, 2, 2, 2, 7});
    CHECK(cusp_cycle(37).b() == Cycle{2, 2, 2, 2, 3, 7, 3});
    CHECK(cusp_cycle(41).b() == Cycle{2, 2, 2, 2, 3, 2, 4, 7, 4, 2, 3});
    CHECK(cusp_cycle(41).n() == 11);
    CHECK(least_rotation({5, 2, 2}) == Cycle{2, 2, 5});
    CHECK(CuspCycle({2, 5, 2}, 13) == cusp_cycle(13));
    CHECK_THROWS_AS(CuspCycle({2, 2}, 13), Error);
    CHECK_THROWS_AS(CuspCycle({1, 3}, 13), Error);
}

TEST_CASE("the period does not depend on the starting module generator") {
    // omega + k and the other generators of O_F reach the same cycle.
    for (std::int64_t D : {5, 13, 17, 29, 37, 41, 61, 97}) {
        for (std::int64_t k = 0; k < 5; ++k) {
            CHECK(cusp_cycle_from(QuadIrrational(1 + 2 * k, 2, D)) == cusp_cycle(D));
        }
    }
}

TEST_CASE("intersection matrices") {
    CHECK(intersection_matrix(CuspCycle({3}, 5)) == ExactMatrix{{-1}});
    CHECK(intersection_matrix(CuspCycle({2, 2, 5}, 13)) == ExactMatrix{{-2, 1, 1}, {1, -2, 1}, {1, 1, -5}});
    CHECK(intersection_matrix(CuspCycle({2, 3}, 0)) == ExactMatrix{{-2, 2}, {2, -3}});
}

TEST_CASE("negative definiteness certificate") {
    const auto c = is_negative_definite(ExactMatrix{{-2, 1, 1}, {1, -2, 1}, {1, 1, -5}});
    CHECK(c.negative_definite);
    CHECK(c.minors == rationals({-2, 3, -9}));
    const auto d = is_negative_definite(ExactMatrix{{-2, 1, 1}, {1, -2, 1}, {1, 1, -2}});
    CHECK_FALSE(d.negative_definite);
    CHECK(d.minors.back() == 0);
    CHECK(is_negative_definite(ExactMatrix{{-1}}).negative_definite);
    CHECK_THROWS_AS(is_negative_definite(ExactMatrix{{-1, 1}, {0, -1}}), Error);

    const std::vector<std::vector<long>> minors{
        {-1}, {-2, 3, -9}, {-2, 3, -7, 32, -64}, {-2, 3, -4, 5, -25}, {-2, 3, -4, 5, -11, 72, -144},
        {-2, 3, -4, 5, -11, 17, -57, 382, -1471, 2560, -4096}};
    const std::vector<std::int64_t> Ds{5, 13, 17, 29, 37, 41};
    for (std::size_t i = 0; i < Ds.size(); ++i) {
        const auto cert = is_negative_definite(intersection_matrix(cusp_cycle(Ds[i])));
        CHECK(cert.negative_definite);
        std::vector<Rational> expected(minors[i].begin(), minors[i].end());
        CHECK(cert.minors == expected);
    }
}

TEST_CASE("cycle invariants for many D") {
    for (std::int64_t D : {5, 13, 17, 29, 37, 41, 53, 61, 73, 89, 97, 101, 109, 113, 137, 149, 157, 173, 181, 193,
                           197, 233, 241, 269, 277, 281, 293, 313, 317, 337, 349, 353, 373, 389, 397}) {
        const CuspCycle c = cusp_cycle(D);
        std::int64_t mx = 0;
        for (auto b : c.b()) {
            CHECK(b >= 2);
            mx = std::max(mx, b);
        }
        CHECK(mx >= 3);
        CHECK(is_negative_definite(intersection_matrix(c)).negative_definite);
    }
}

TEST_CASE("exact linear algebra") {
    CHECK(determinant(ExactMatrix{{0, 1}, {1, 0}}) == -1);
    CHECK(determinant(ExactMatrix{{2, 0, 1}, {1, 3, 2}, {1, 1, 2}}) == 6);
    CHECK(determinant(ExactMatrix{{2, 0, 1}, {1, 3, 2}, {1, 1, 1}}) == 0);
    CHECK(leading_principal_minors(ExactMatrix{{0, 1}, {1, 0}}) == rationals({0, -1}));
    const RankKernel rk = rank_kernel(ExactMatrix{{1, 2, 3}, {2, 4, 6}});
    CHECK(rk.rank == 1);
    CHECK(rk.kernel.size() == 2);
    const ExactMatrix a{{1, 2, 3}, {2, 4, 6}};
    for (const auto& v : rk.kernel) {
        for (std::size_t i = 0; i < 2; ++i) {
            Rational s = 0;
            for (std::size_t j = 0; j < 3; ++j) s += a(i, j) * v[j];
            CHECK(s == 0);
        }
    }
}

TEST_CASE("boundary differential") {
    CHECK(boundary_d02(3) == ExactMatrix{{1, -1, 0}, {0, 1, -1}, {-1, 0, 1}});
    CHECK(boundary_d02(1) == ExactMatrix{{0}});
    CHECK(boundary_d02(2) == ExactMatrix{{1, -1}, {-1, 1}});
    CHECK_THROWS_AS(boundary_d02(0), Error);

    const BoundaryCohomology h1 = boundary_cohomology(1);
    CHECK(h1.rank == 0);
    CHECK(h1.kernel.size() == 1);

    for (std::size_t n = 1; n <= 50; ++n) {
        const BoundaryCohomology h = boundary_cohomology(n);
        CHECK(h.rank == n - 1);
        REQUIRE(h.kernel.size() == 1);
        CHECK(h.kernel[0] == std::vector<Rational>(n, Rational(1)));
        CHECK(h.cokernel_dim == 1);
        CHECK(rank_kernel(boundary_d02(n).transpose()).kernel.size() == 1);
        CHECK(h.h1.dim == 1);
        CHECK(h.h1.twist == 0);
        CHECK(h.h2.dim == 1);
        CHECK(h.h2.twist == -2);
        CHECK(h.h3.dim == 1);
        CHECK(h.h3.twist == -2);
    }
}
