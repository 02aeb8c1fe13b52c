#include "kce/numeric.hpp"

#include "kce/error.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace kce {

Rational make_rational(long num, long den) {
    if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0 || r.get_den() == 0) throw Error(ErrorCode::InvalidArgument, "bad rational '" + s + "'");
    r.canonicalize();
    return r;
}

unsigned default_digits() {
    if (const char* env = std::getenv("KCE_PRECISION")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 10 && v <= 10000) return static_cast<unsigned>(v);
    }
    return kDefaultDigits;
}

// 32 guard bits on top of the requested decimal precision.
mpfr_prec_t BigFloat::bits_for(unsigned digits) {
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 32;
}

BigFloat::BigFloat(unsigned digits) : digits_(digits) {
    mpfr_init2(value_, bits_for(digits));
    mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long v, unsigned digits) : BigFloat(digits) { mpfr_set_si(value_, v, MPFR_RNDN); }

BigFloat::BigFloat(const Rational& v, unsigned digits) : BigFloat(digits) {
    mpfr_set_q(value_, v.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const Integer& v, unsigned digits) : BigFloat(digits) {
    mpfr_set_z(value_, v.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) : digits_(o.digits_) {
    mpfr_init2(value_, mpfr_get_prec(o.value_));
    mpfr_set(value_, o.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept : digits_(o.digits_) {
    mpfr_init2(value_, mpfr_get_prec(o.value_));
    mpfr_swap(value_, o.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        digits_ = o.digits_;
        mpfr_set_prec(value_, mpfr_get_prec(o.value_));
        mpfr_set(value_, o.value_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    if (this != &o) {
        digits_ = o.digits_;
        mpfr_swap(value_, o.value_);
    }
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::pi(unsigned digits) {
    BigFloat r(digits);
    mpfr_const_pi(r.value_, MPFR_RNDN);
    return r;
}

namespace {

unsigned joint(const BigFloat& a, const BigFloat& b) { return std::max(a.digits(), b.digits()); }

template <typename Op>
BigFloat binary(const BigFloat& a, const BigFloat& b, Op op) {
    BigFloat r(joint(a, b));
    op(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

template <typename Op>
BigFloat unary(const BigFloat& x, Op op) {
    BigFloat r(x.digits());
    op(r.get(), x.get(), MPFR_RNDN);
    return r;
}

}  // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_add); }
BigFloat operator-(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_sub); }
BigFloat operator*(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_mul); }
BigFloat operator/(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_div); }
BigFloat BigFloat::operator-() const { return unary(*this, mpfr_neg); }

BigFloat& BigFloat::operator+=(const BigFloat& b) {
    mpfr_add(value_, value_, b.value_, MPFR_RNDN);
    return *this;
}

std::string BigFloat::str(unsigned digits) const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", static_cast<int>(digits), value_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

BigFloat sqrt(const BigFloat& x) { return unary(x, mpfr_sqrt); }
BigFloat log(const BigFloat& x) { return unary(x, mpfr_log); }
BigFloat abs(const BigFloat& x) { return unary(x, mpfr_abs); }
BigFloat cos(const BigFloat& x) { return unary(x, mpfr_cos); }
BigFloat sin(const BigFloat& x) { return unary(x, mpfr_sin); }

BigFloat ten_to_minus(unsigned k, unsigned digits) {
    BigFloat r(10, digits);
    mpfr_pow_si(r.get(), r.get(), -static_cast<long>(k), MPFR_RNDN);
    return r;
}

}  // namespace kce
