#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <string>

namespace kce {

using Integer = mpz_class;
using Rational = mpq_class;

// Canonical rational num/den.
Rational make_rational(long num, long den = 1);

// "num/den", or "num" when the denominator is 1.
std::string to_string(const Rational& r);
Rational parse_rational(const std::string& s);

inline constexpr unsigned kDefaultDigits = 50;

// Precision in decimal digits taken from KCE_PRECISION when set and valid,
// otherwise kDefaultDigits.
unsigned default_digits();

// Multiprecision real with its own precision; no global MPFR state is read
// except the rounding mode (always round-to-nearest here).
class BigFloat {
public:
    explicit BigFloat(unsigned digits = kDefaultDigits);
    BigFloat(long v, unsigned digits);
    BigFloat(const Rational& v, unsigned digits);
    BigFloat(const Integer& v, unsigned digits);
    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    unsigned digits() const { return digits_; }
    mpfr_srcptr get() const { return value_; }
    mpfr_ptr get() { return value_; }

    static BigFloat pi(unsigned digits);

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    BigFloat operator-() const;
    BigFloat& operator+=(const BigFloat& b);

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.value_, b.value_); }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.value_, b.value_); }

    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
    // Fixed-point rendering with `digits` significant digits.
    std::string str(unsigned digits) const;
    std::string str() const { return str(digits_); }

private:
    static mpfr_prec_t bits_for(unsigned digits);
    unsigned digits_;
    mpfr_t value_;
};

BigFloat sqrt(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat abs(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat sin(const BigFloat& x);

// 10^(-k) at the given precision, for tolerance comparisons.
BigFloat ten_to_minus(unsigned k, unsigned digits);

}  // namespace kce
