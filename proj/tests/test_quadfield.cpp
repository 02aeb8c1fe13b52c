#include "kce/error.hpp"
#include "kce/modarith.hpp"
#include "kce/quadfield.hpp"

#include <doctest.h>

#include <random>

using namespace kce;

namespace {

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::Internal;
}

// Admissible D below 1000, from the brute-force form-cycle oracle.
const std::vector<std::int64_t> kAdmissible{
    5,   13,  17,  29,  37,  41,  53,  61,  73,  89,  97,  101, 109, 113, 137, 149, 157, 173, 181,
    193, 197, 233, 241, 269, 277, 281, 293, 313, 317, 337, 349, 353, 373, 389, 397, 409, 421, 433,
    449, 457, 461, 509, 521, 541, 557, 569, 593, 601, 613, 617, 641, 653, 661, 673, 677, 701, 709,
    757, 769, 773, 797, 809, 821, 829, 853, 857, 877, 881, 929, 937, 941, 953, 977, 997};

}  // namespace

TEST_CASE("make_field validation") {
    const FieldCtx f = make_field(5);
    CHECK(f.D == 5);
    CHECK(f.omega_norm == -1);
    CHECK(f.h_plus == 1);

    CHECK(code_of([] { make_field(12); }) == ErrorCode::NotOneMod4);
    CHECK(code_of([] { make_field(21); }) == ErrorCode::NotPrime);
    CHECK(code_of([] { make_field(1); }) == ErrorCode::TooSmall);
    CHECK(code_of([] { make_field(229); }) == ErrorCode::NarrowClassNotOne);
    const FieldCtx forced = make_field(229, true);
    CHECK(forced.D == 229);
    CHECK(code_of([] { make_field(21, true); }) == ErrorCode::NotPrime);
}

TEST_CASE("element arithmetic") {
    const FieldCtx f = make_field(5);
    const QuadElem w = QuadElem::omega(f);
    CHECK(w.norm() == -1);
    CHECK(w.trace() == 1);
    CHECK(QuadElem(f, 1).trace() == 2);
    CHECK(w * w == w + QuadElem(f, 1));
    CHECK((w / w) == QuadElem(f, 1));
    CHECK(w * w.inverse() == QuadElem(f, 1));
    CHECK(QuadElem::from_surd(f, 1, 2) == w);
    CHECK(sign(w.conj()) == -1);
    CHECK(sign(w) == 1);
    CHECK(sign(QuadElem(f, 0)) == 0);
}

TEST_CASE("conjugation is an involution and norm/trace are multiplicative/additive") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> coef(-50, 50);
    for (std::int64_t D : {5, 13, 17, 29, 41}) {
        const FieldCtx f = make_field(D);
        for (int i = 0; i < 40; ++i) {
            const QuadElem x(f, Rational(coef(rng), 1 + (coef(rng) & 7)), coef(rng));
            const QuadElem y(f, coef(rng), Rational(coef(rng), 3));
            CHECK(x.conj().conj() == x);
            CHECK((x * y).norm() == x.norm() * y.norm());
            CHECK((x + y).trace() == x.trace() + y.trace());
            CHECK(x * x.conj() == QuadElem(f, x.norm()));
            CHECK(x + x.conj() == QuadElem(f, x.trace()));
        }
    }
}

TEST_CASE("embeddings agree with the exact norm") {
    const unsigned digits = 50;
    for (std::int64_t D : {5, 13, 97}) {
        const FieldCtx f = make_field(D);
        const QuadElem x(f, Rational(7, 3), -5);
        const BigFloat prod = x.embed(Embedding::Identity, digits) * x.embed(Embedding::Conjugate, digits);
        CHECK(abs(prod - BigFloat(x.norm(), digits)) < ten_to_minus(digits - 2, digits));
    }
}

TEST_CASE("fundamental units") {
    CHECK(fundamental_unit(make_field(5)) == QuadElem(make_field(5), 0, 1));
    CHECK(fundamental_unit(make_field(13)) == QuadElem(make_field(13), 1, 1));
    CHECK(fundamental_unit(make_field(17)) == QuadElem(make_field(17), 3, 2));
    CHECK(fundamental_unit(make_field(29)) == QuadElem(make_field(29), 2, 1));
    CHECK(fundamental_unit(make_field(41)) == QuadElem(make_field(41), 27, 10));
    CHECK(fundamental_unit(make_field(97)) == QuadElem(make_field(97), 5035, 1138));

    for (std::int64_t D : kAdmissible) {
        const FieldCtx f = make_field(D);
        const QuadElem e0 = fundamental_unit(f);
        CHECK(e0.norm() == -1);
        const QuadElem e = totally_positive_unit(f);
        CHECK(e == e0 * e0);
        CHECK(e * e.conj() == QuadElem(f, 1));
        CHECK(sign(e0 - QuadElem(f, 1)) == 1);
    }
}

TEST_CASE("fundamental unit is minimal (bounded search)") {
    // A unit u = a + b w with 1 < u < eps0 would have |u| and |u'| bounded;
    // scan integral a, b in a box that contains every such u.
    for (std::int64_t D : {5, 13, 17, 29, 37, 41, 53, 61}) {
        const FieldCtx f = make_field(D);
        const QuadElem e0 = fundamental_unit(f);
        const double e0d = e0.embed(Embedding::Identity, 30).to_double();
        const double sd = std::sqrt(static_cast<double>(D));
        // u > 1 and |u'| = 1/u < 1 give |b| sqrt D = |u - u'| < e0 + 1.
        const long bmax = static_cast<long>((e0d + 1) / sd) + 1;
        for (long b = -bmax; b <= bmax; ++b) {
            for (long a = -static_cast<long>(e0d) - bmax - 2; a <= static_cast<long>(e0d) + bmax + 2; ++a) {
                const QuadElem u(f, a, b);
                if (abs(u.norm()) != 1) continue;
                const bool between = sign(u - QuadElem(f, 1)) == 1 && sign(e0 - u) == 1;
                CHECK_FALSE(between);
            }
        }
    }
}

TEST_CASE("quadratic character") {
    CHECK(chi(5, 29) == 1);
    CHECK(chi(5, 5) == 0);
    CHECK(chi(5, 2) == -1);
    CHECK(chi(13, 3) == 1);
    for (std::int64_t D : {5, 13, 17, 101}) {
        for (std::int64_t m = 1; m < D; ++m) {
            CHECK(chi(D, D - m) == chi(D, m));
            for (std::int64_t k = 1; k < 20; ++k) CHECK(chi(D, m * k) == chi(D, m) * chi(D, k));
        }
    }
}

TEST_CASE("narrow class number") {
    CHECK(narrow_class_number(5) == 1);
    CHECK(narrow_class_number(13) == 1);
    CHECK(narrow_class_number(229) == 3);
    std::vector<std::int64_t> found;
    for (std::int64_t D = 5; D < 1000; D += 4)
        if (is_prime(static_cast<std::uint64_t>(D)) && narrow_class_number(D) == 1) found.push_back(D);
    CHECK(found == kAdmissible);
    for (std::int64_t D : {229, 257, 401, 577, 733, 761}) CHECK(narrow_class_number(D) != 1);
}

TEST_CASE("modular helpers") {
    CHECK(is_prime(2));
    CHECK(is_prime(1000000007));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(561));
    CHECK(is_prime(18446744073709551557ULL));
    CHECK(prime_factors(28) == std::vector<std::uint64_t>{2, 7});
    CHECK(sqrt_mod(5, 29) == 11);
    CHECK(legendre(5, 29) == 1);
    CHECK(invmod(2, 29) == 15);
    CHECK(powmod(2, 28, 29) == 1);
}
