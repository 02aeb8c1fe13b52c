#include "kce/quadfield.hpp"

#include "kce/error.hpp"

#include <cmath>
#include <set>
#include <string>
#include <tuple>

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

}  // namespace

FieldCtx make_field(std::int64_t D, bool force) {
    if (D < 5) throw Error(ErrorCode::TooSmall, "D = " + std::to_string(D) + " < 5");
    const bool prime = is_prime(static_cast<std::uint64_t>(D));
    const bool one_mod_4 = D % 4 == 1;
    if (!one_mod_4) {
        throw Error(ErrorCode::NotOneMod4, "D = " + std::to_string(D) + " is not 1 mod 4" +
                                               (prime ? "" : " (and not prime: NotPrime)"));
    }
    if (!prime) throw Error(ErrorCode::NotPrime, "D = " + std::to_string(D) + " is not prime");

    FieldCtx ctx;
    ctx.D = D;
    ctx.omega_trace = 1;
    ctx.omega_norm = (1 - D) / 4;
    if (!force) {
        const std::int64_t h = narrow_class_number(D);
        if (h != 1) {
            throw Error(ErrorCode::NarrowClassNotOne,
                        "narrow class number of D = " + std::to_string(D) + " is " + std::to_string(h));
        }
        ctx.h_plus = h;
    }
    return ctx;
}

QuadElem::QuadElem(const FieldCtx& ctx, Rational a, Rational b) : D_(ctx.D), a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
}

QuadElem QuadElem::from_surd(const FieldCtx& ctx, const Rational& P, const Rational& Q) {
    // (P + sqrt D)/Q with sqrt D = 2 omega - 1
    Rational a = (P - 1) / Q;
    Rational b = Rational(2) / Q;
    return QuadElem(ctx.D, a, b);
}

void QuadElem::check_same(const QuadElem& o) const {
    if (D_ != o.D_) throw Error(ErrorCode::InvalidArgument, "elements of different fields");
}

QuadElem QuadElem::conj() const { return QuadElem(D_, a_ + b_, -b_); }

Rational QuadElem::norm() const { return a_ * a_ + a_ * b_ + b_ * b_ * make_rational(1 - D_, 4); }

Rational QuadElem::trace() const { return 2 * a_ + b_; }

QuadElem QuadElem::inverse() const {
    const Rational n = norm();
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "inverse of zero");
    QuadElem c = conj();
    return QuadElem(D_, c.a_ / n, c.b_ / n);
}

bool QuadElem::is_integral() const { return a_.get_den() == 1 && b_.get_den() == 1; }

QuadElem operator+(const QuadElem& x, const QuadElem& y) {
    x.check_same(y);
    return QuadElem(x.D_, x.a_ + y.a_, x.b_ + y.b_);
}

QuadElem operator-(const QuadElem& x, const QuadElem& y) {
    x.check_same(y);
    return QuadElem(x.D_, x.a_ - y.a_, x.b_ - y.b_);
}

QuadElem operator*(const QuadElem& x, const QuadElem& y) {
    x.check_same(y);
    // omega^2 = omega + (D - 1)/4
    const Rational bd = x.b_ * y.b_;
    return QuadElem(x.D_, x.a_ * y.a_ + bd * make_rational(x.D_ - 1, 4), x.a_ * y.b_ + x.b_ * y.a_ + bd);
}

QuadElem operator/(const QuadElem& x, const QuadElem& y) { return x * y.inverse(); }

BigFloat QuadElem::embed(Embedding which, unsigned digits) const {
    BigFloat root = sqrt(BigFloat(D_, digits));
    if (which == Embedding::Conjugate) root = -root;
    BigFloat w = (BigFloat(1L, digits) + root) / BigFloat(2L, digits);
    return BigFloat(a_, digits) + BigFloat(b_, digits) * w;
}

int sign(const QuadElem& x) {
    // x = u + v sqrt D
    const Rational u = x.a() + x.b() / 2;
    const Rational v = x.b() / 2;
    const int su = sgn(u), sv = sgn(v);
    if (su == 0) return sv;
    if (sv == 0 || su == sv) return su;
    const int cmp = ::cmp(Rational(u * u), Rational(v * v * x.D()));
    return cmp > 0 ? su : (cmp < 0 ? sv : 0);
}

QuadElem fundamental_unit(const FieldCtx& ctx) {
    const std::int64_t D = ctx.D;
    const std::int64_t s = isqrt(D);
    // Regular continued fraction of (P + sqrt D)/Q, Q > 0 along the orbit.
    auto step = [&](std::int64_t P, std::int64_t Q) {
        const std::int64_t a = floordiv(P + s, Q);
        const std::int64_t P1 = a * Q - P;
        return std::pair{P1, (D - P1 * P1) / Q};
    };
    // omega_1 is reduced; its orbit is the period.
    const auto start = step(1, 2);
    QuadElem eps0(ctx, 1, 0);
    auto state = start;
    do {
        eps0 = eps0 * QuadElem::from_surd(ctx, state.first, state.second);
        state = step(state.first, state.second);
    } while (state != start);

    if (!eps0.is_integral() || abs(eps0.norm()) != 1) {
        throw Error(ErrorCode::Internal, "continued fraction did not produce a unit for D = " + std::to_string(D));
    }
    return eps0;
}

QuadElem totally_positive_unit(const FieldCtx& ctx) {
    const QuadElem e0 = fundamental_unit(ctx);
    return e0 * e0;
}

int chi(std::int64_t D, std::int64_t m) { return legendre(m, static_cast<std::uint64_t>(D)); }

std::int64_t narrow_class_number(std::int64_t D) {
    const std::int64_t s = isqrt(D);
    // (a, b, c) with b^2 - 4ac = D is reduced when 0 < b < sqrt D and
    // sqrt D - b < 2|a| < sqrt D + b; all comparisons are done on squares.
    auto reduced = [&](std::int64_t a, std::int64_t b) {
        const std::int64_t twice = 2 * std::abs(a);
        const bool lower = D < (twice + b) * (twice + b);
        const bool upper = twice - b <= 0 || (twice - b) * (twice - b) < D;
        return b > 0 && b <= s && lower && upper;
    };
    using Form = std::tuple<std::int64_t, std::int64_t, std::int64_t>;
    std::set<Form> forms;
    for (std::int64_t b = 1; b <= s; b += 2) {
        const std::int64_t ac = (b * b - D) / 4;  // negative
        for (std::int64_t a = 1; a <= s; ++a) {
            if (ac % a != 0) continue;
            for (std::int64_t sa : {a, -a}) {
                if (reduced(sa, b)) forms.emplace(sa, b, ac / sa);
            }
        }
    }
    // rho(a, b, c) = (c, b', (b'^2 - D)/(4c)), b' = -b mod 2|c| in (sqrt D - 2|c|, sqrt D)
    auto rho = [&](const Form& f) {
        const auto [a, b, c] = f;
        const std::int64_t m = 2 * std::abs(c);
        const std::int64_t r = ((s + b) % m + m) % m;
        const std::int64_t b1 = s - r;
        return Form{c, b1, (b1 * b1 - D) / (4 * c)};
    };
    std::set<Form> seen;
    std::int64_t cycles = 0;
    for (const Form& f : forms) {
        if (seen.count(f)) continue;
        ++cycles;
        Form g = f;
        while (!seen.count(g)) {
            if (!forms.count(g)) throw Error(ErrorCode::Internal, "reduction left the set of reduced forms");
            seen.insert(g);
            g = rho(g);
        }
    }
    return cycles;
}

}  // namespace kce
