#include "kce/datasheet.hpp"
#include "kce/error.hpp"

#include <doctest.h>

using namespace kce;

TEST_CASE("datasheet contents") {
    const RealisationDatasheet d5 = datasheet(5);
    CHECK(d5.zeta_minus1 == "1/30");
    CHECK(d5.q_exponent == "-15");
    CHECK(d5.hodge_class.coeff == "-15");
    CHECK(d5.cusp.cycle == std::vector<std::int64_t>{3});
    CHECK(d5.norm_eps0 == "-1");
    CHECK(d5.eps0.a == "0");
    CHECK(d5.eps0.b == "1");
    CHECK(d5.volume == "1/15");
    CHECK(d5.self_cup == "-2/15");
    CHECK(d5.normalizer == "-15/2");
    CHECK(d5.motive_summands == std::vector<std::string>{"Q(0)", "Q(0)chi_D"});
    CHECK(d5.precision == kDefaultDigits);

    const RealisationDatasheet d13 = datasheet(13);
    CHECK(d13.zeta_minus1 == "1/6");
    CHECK(d13.cusp.cycle == std::vector<std::int64_t>{2, 2, 5});
    CHECK(d13.cusp.minors == std::vector<std::string>{"-2", "3", "-9"});
    CHECK(d13.q_exponent == "-3");
    CHECK(d13.boundary_cohomology.rank == 2);

    CHECK_THROWS_AS(datasheet(12), Error);
}

TEST_CASE("forced datasheet reports the true narrow class number") {
    const RealisationDatasheet d = datasheet(229, {.force = true});
    CHECK(d.h_plus == 3);
    CHECK_THROWS_AS(datasheet(229), Error);
}

TEST_CASE("JSON round trip and determinism") {
    for (std::int64_t D : {5, 13, 17, 29, 41, 97}) {
        for (Generator g : {Generator::L1_L2inv, Generator::L1inv_L2}) {
            const RealisationDatasheet d = datasheet(D, {.digits = 40, .generator = g});
            const ordered_json j = to_json(d);
            CHECK(datasheet_from_json(ordered_json::parse(j.dump())) == d);
            CHECK(to_json(datasheet(D, {.digits = 40, .generator = g})).dump() == j.dump());
        }
    }
    CHECK_THROWS_AS(datasheet_from_json(ordered_json::parse(R"({"D": 5})")), Error);
}

TEST_CASE("rationals are serialized as strings") {
    const ordered_json j = to_json(datasheet(17));
    CHECK(j["zeta_minus1"] == "1/3");
    CHECK(j["q_exponent"] == "-3/2");
    CHECK(j["normalizer"].is_string());
    CHECK(j["boundary_cohomology"]["h2"]["label"] == "Q(-2)");
}
