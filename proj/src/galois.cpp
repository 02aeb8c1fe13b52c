#include "kce/galois.hpp"

#include "kce/error.hpp"
#include "kce/quadfield.hpp"

#include <cmath>
#include <string>
#include <unordered_map>

namespace kce {

FiniteField FiniteField::prime(std::uint64_t p) {
    if (p < 3 || !is_prime(p)) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not an odd prime");
    return FiniteField(p, 1, 0);
}

FiniteField FiniteField::quadratic(std::uint64_t p, std::int64_t D) {
    if (p < 3 || !is_prime(p)) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not an odd prime");
    const std::uint64_t d = mod(D, p);
    if (legendre(static_cast<std::int64_t>(d), p) != -1) {
        throw Error(ErrorCode::InvalidArgument, "x^2 - D is reducible mod " + std::to_string(p));
    }
    return FiniteField(p, 2, d);
}

FFElem FiniteField::from_int(std::int64_t v) const { return {mod(v, p_), 0}; }

FFElem FiniteField::from_rational(const Rational& v) const {
    const Integer pz(static_cast<unsigned long>(p_));
    Integer num = v.get_num() % pz;
    if (num < 0) num += pz;
    const Integer den = v.get_den() % pz;
    if (den == 0) throw Error(ErrorCode::InvalidArgument, "denominator divisible by p");
    const std::uint64_t n = num.get_ui(), d = den.get_ui();
    return {mulmod(n, invmod(d, p_), p_), 0};
}

FFElem FiniteField::sqrt_d(bool flip) const {
    if (degree_ != 2) throw Error(ErrorCode::InvalidArgument, "sqrt D is not adjoined in a prime field");
    return {0, flip ? p_ - 1 : 1};
}

FFElem FiniteField::add(Elem u, Elem v) const { return {(u.a + v.a) % p_, (u.b + v.b) % p_}; }

FFElem FiniteField::mul(Elem u, Elem v) const {
    if (degree_ == 1) return {mulmod(u.a, v.a, p_), 0};
    const std::uint64_t a = (mulmod(u.a, v.a, p_) + mulmod(mulmod(u.b, v.b, p_), d_, p_)) % p_;
    const std::uint64_t b = (mulmod(u.a, v.b, p_) + mulmod(u.b, v.a, p_)) % p_;
    return {a, b};
}

FFElem FiniteField::pow(Elem u, std::uint64_t e) const {
    Elem r = one();
    while (e) {
        if (e & 1) r = mul(r, u);
        u = mul(u, u);
        e >>= 1;
    }
    return r;
}

FFElem FiniteField::inv(Elem u) const {
    if (u.a == 0 && u.b == 0) throw Error(ErrorCode::InvalidArgument, "inverse of zero");
    return pow(u, order() - 2);
}

std::uint64_t FiniteField::multiplicative_order(Elem u) const {
    std::uint64_t ord = order() - 1;
    for (std::uint64_t f : prime_factors(ord)) {
        while (ord % f == 0 && pow(u, ord / f) == one()) ord /= f;
    }
    return ord;
}

FFElem FiniteField::least_generator() const {
    const std::uint64_t group = order() - 1;
    const auto factors = prime_factors(group);
    for (std::uint64_t i = 1; i < order(); ++i) {
        const Elem g = from_index(i);
        bool generates = true;
        for (std::uint64_t f : factors) {
            if (pow(g, group / f) == one()) {
                generates = false;
                break;
            }
        }
        if (generates) return g;
    }
    throw Error(ErrorCode::Internal, "no generator found");
}

std::string FiniteField::str(Elem u) const {
    if (degree_ == 1) return std::to_string(u.a);
    return std::to_string(u.a) + "+" + std::to_string(u.b) + "*x";
}

ReducedUnit reduce_unit(std::int64_t D, std::uint64_t p, bool flip_root) {
    if (p < 3 || !is_prime(p)) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not an odd prime");
    if (D % static_cast<std::int64_t>(p) == 0) throw Error(ErrorCode::Ramified, std::to_string(p) + " divides D");
    FieldCtx ctx;
    ctx.D = D;
    const QuadElem eps = totally_positive_unit(ctx);

    if (chi(D, static_cast<std::int64_t>(p)) == 1) {
        FiniteField f = FiniteField::prime(p);
        const std::uint64_t r = sqrt_mod(mod(D, p), p);
        const std::uint64_t root = flip_root ? p - r : r;
        const FFElem omega = f.mul(f.from_int(static_cast<std::int64_t>((1 + root) % p)), f.from_rational(Rational(1, 2)));
        const FFElem value = f.add(f.from_rational(eps.a()), f.mul(f.from_rational(eps.b()), omega));
        return {f, value, root, flip_root};
    }
    FiniteField f = FiniteField::quadratic(p, D);
    const FFElem omega = f.mul(f.add(f.one(), f.sqrt_d(flip_root)), f.from_rational(Rational(1, 2)));
    const FFElem value = f.add(f.from_rational(eps.a()), f.mul(f.from_rational(eps.b()), omega));
    return {f, value, 0, flip_root};
}

FFElem root_of_unity(const FiniteField& field, std::uint64_t l, unsigned n) {
    if (!is_prime(l) || n == 0) throw Error(ErrorCode::InvalidArgument, "l must be prime and n >= 1");
    const std::uint64_t L = ipow(l, n);
    const std::uint64_t group = field.order() - 1;
    if (group % L != 0) {
        throw Error(ErrorCode::NoSuchRoot, std::to_string(l) + "^" + std::to_string(n) + " does not divide " +
                                               std::to_string(group));
    }
    return field.pow(field.least_generator(), group / L);
}

namespace {

// x in [0, m) with base^x = target, base of order m.
std::uint64_t bsgs(const FiniteField& f, FFElem base, FFElem target, std::uint64_t m) {
    const auto steps = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(m))));
    std::unordered_map<std::uint64_t, std::uint64_t> baby;
    baby.reserve(steps);
    FFElem cur = f.one();
    for (std::uint64_t j = 0; j < steps; ++j) {
        baby.emplace(f.index(cur), j);
        cur = f.mul(cur, base);
    }
    const FFElem giant = f.inv(f.pow(base, steps));
    FFElem gamma = target;
    for (std::uint64_t i = 0; i <= steps; ++i) {
        if (auto it = baby.find(f.index(gamma)); it != baby.end()) return (i * steps + it->second) % m;
        gamma = f.mul(gamma, giant);
    }
    throw Error(ErrorCode::Internal, "element is not in the subgroup");
}

}  // namespace

std::uint64_t subgroup_dlog(const FiniteField& field, FFElem y, FFElem zeta, std::uint64_t l, unsigned n) {
    const std::uint64_t top = ipow(l, n - 1);
    const FFElem gamma = field.pow(zeta, top);  // order l
    const FFElem zeta_inv = field.inv(zeta);
    std::uint64_t x = 0, lk = 1;
    for (unsigned k = 0; k < n; ++k) {
        const FFElem h = field.pow(field.mul(field.pow(zeta_inv, x), y), top / lk);
        x += bsgs(field, gamma, h, l) * lk;
        lk *= l;
    }
    if (!(field.pow(zeta, x) == y)) throw Error(ErrorCode::Internal, "element is not in <zeta>");
    return x;
}

std::uint64_t kummer_tau(const FiniteField& field, FFElem u, std::uint64_t l, unsigned n, FFElem zeta) {
    const std::uint64_t L = ipow(l, n);
    return subgroup_dlog(field, field.pow(u, (field.order() - 1) / L), zeta, l, n);
}

namespace {

struct FrobeniusData {
    explicit FrobeniusData(ReducedUnit u) : unit(std::move(u)) {}
    ReducedUnit unit;
    FFElem generator;
    FFElem zeta;
    std::uint64_t L = 0;
    int chi = 0;
    Rational q_exp;
    std::uint64_t q_mod = 0;  // q_exp mod L
    std::uint64_t tau_eps = 0;
};

FrobeniusData frobenius_data(std::int64_t D, std::uint64_t p, std::uint64_t l, unsigned n, const GaloisOptions& opts) {
    if (!is_prime(l) || n == 0) throw Error(ErrorCode::InvalidArgument, "l must be prime and n >= 1");
    if (p < 3 || !is_prime(p)) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not an odd prime");
    if (p == l) throw Error(ErrorCode::InvalidArgument, "p = l is not supported");
    if (D % static_cast<std::int64_t>(p) == 0) throw Error(ErrorCode::Ramified, std::to_string(p) + " divides D");
    const FieldCtx ctx = make_field(D);

    FrobeniusData fd(reduce_unit(D, p, opts.flip_root));
    fd.L = ipow(l, n);
    fd.q_exp = epsilon_tilde_exponent(ctx, opts.generator);
    if (Integer(fd.q_exp.get_den() % static_cast<unsigned long>(l)) == 0) {
        throw Error(ErrorCode::BadDenominator,
                    "exponent " + to_string(fd.q_exp) + " has denominator divisible by l = " + std::to_string(l));
    }
    {
        const Integer Lz(static_cast<unsigned long>(fd.L));
        Integer num = fd.q_exp.get_num() % Lz;
        if (num < 0) num += Lz;
        const Integer den = fd.q_exp.get_den() % Lz;
        fd.q_mod = mulmod(num.get_ui(), invmod(den.get_ui(), fd.L), fd.L);
    }

    // Frob(x) = zeta^c x^chi for x^(l^n) = u, so x^(p - chi) = zeta^c; the
    // value is independent of the root x only when l^n | p - chi.
    fd.chi = chi(D, static_cast<std::int64_t>(p));
    const std::uint64_t e = fd.chi == 1 ? p - 1 : p + 1;
    if (e % fd.L != 0) {
        throw Error(ErrorCode::RootMismatch, std::to_string(fd.L) + " does not divide p " +
                                                 (fd.chi == 1 ? "- 1 (split)" : "+ 1 (inert)"));
    }
    const FiniteField& f = fd.unit.field;
    fd.generator = f.least_generator();
    const FFElem canonical = f.pow(fd.generator, (f.order() - 1) / fd.L);
    if (opts.zeta_power % l == 0) throw Error(ErrorCode::InvalidArgument, "zeta power must be a unit mod l");
    fd.zeta = f.pow(canonical, opts.zeta_power % fd.L);

    const std::uint64_t c = subgroup_dlog(f, f.pow(fd.unit.value, e / fd.L), fd.zeta, l, n);
    fd.tau_eps = fd.chi == 1 ? c : (fd.L - c) % fd.L;
    return fd;
}

std::vector<std::uint64_t> assemble(std::uint64_t chi_mod, std::uint64_t tau, std::uint64_t p_inv, std::uint64_t L) {
    return {chi_mod % L, mulmod(tau, p_inv, L), 0, p_inv % L};
}

}  // namespace

RepMatrix frobenius_matrix(std::int64_t D, std::uint64_t p, std::uint64_t l, unsigned n, const GaloisOptions& opts) {
    const FrobeniusData fd = frobenius_data(D, p, l, n, opts);
    RepMatrix m;
    m.dim = 2;
    m.modulus = fd.L;
    m.D = D;
    m.p = p;
    m.l = l;
    m.n = n;
    m.chi = fd.chi;
    m.inert = fd.unit.field.degree() == 2;
    m.sqrt_root = fd.unit.sqrt_root;
    m.flipped = fd.unit.flipped;
    m.generator = fd.generator;
    m.zeta = fd.zeta;
    m.zeta_convention = "least generator g, zeta = g^((q-1)/l^n)" +
                        (opts.zeta_power == 1 ? std::string() : "^" + std::to_string(opts.zeta_power));
    m.q_exponent = fd.q_exp;
    m.tau_eps = fd.tau_eps;
    m.tau = mulmod(fd.q_mod, fd.tau_eps, fd.L);
    const std::uint64_t p_inv = invmod(p % fd.L, fd.L);
    m.entries = assemble(mod(fd.chi, fd.L), m.tau, p_inv, fd.L);
    return m;
}

RepMatrix frobenius_matrix_3d(std::int64_t D, std::uint64_t p, std::uint64_t l, unsigned n, const GaloisOptions& opts) {
    RepMatrix m = frobenius_matrix(D, p, l, n, opts);
    const auto& e = m.entries;
    m.entries = {1 % m.modulus, 0, 0, 0, e[0], e[1], 0, 0, e[3]};
    m.dim = 3;
    return m;
}

std::vector<std::uint64_t> matmul_mod(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
                                      unsigned dim, std::uint64_t modulus) {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(dim) * dim, 0);
    for (unsigned i = 0; i < dim; ++i)
        for (unsigned k = 0; k < dim; ++k)
            for (unsigned j = 0; j < dim; ++j)
                c[i * dim + j] = (c[i * dim + j] + mulmod(a[i * dim + k], b[k * dim + j], modulus)) % modulus;
    return c;
}

std::uint64_t determinant_mod(const RepMatrix& m) {
    const std::uint64_t L = m.modulus;
    auto at = [&](unsigned i, unsigned j) { return m.at(i, j); };
    if (m.dim == 2) return (mulmod(at(0, 0), at(1, 1), L) + L - mulmod(at(0, 1), at(1, 0), L)) % L;
    std::uint64_t det = 0;
    for (unsigned j = 0; j < 3; ++j) {
        const std::uint64_t minor = (mulmod(at(1, (j + 1) % 3), at(2, (j + 2) % 3), L) + L -
                                     mulmod(at(1, (j + 2) % 3), at(2, (j + 1) % 3), L)) % L;
        det = (det + mulmod(at(0, j), minor, L)) % L;
    }
    return det;
}

PowerLawCheck verify_power_law(std::int64_t D, std::uint64_t p, std::uint64_t l, unsigned n, unsigned k,
                               const GaloisOptions& opts) {
    if (k != 1 && k != 2) throw Error(ErrorCode::InvalidArgument, "k must be 1 or 2");
    const FrobeniusData fd = frobenius_data(D, p, l, n, opts);
    const RepMatrix m = frobenius_matrix(D, p, l, n, opts);
    const std::uint64_t L = fd.L;
    const std::uint64_t p_inv = invmod(p % L, L);

    PowerLawCheck out;
    if (k == 1) {
        out.power = m.entries;
        out.tau_k = mulmod(fd.q_mod, fd.tau_eps, L);
        out.expected = assemble(mod(fd.chi, L), out.tau_k, p_inv, L);
    } else {
        // Frob^2 acts on F_{p^2} trivially, so x^(p^2 - 1) = zeta^tau2 with no twist.
        const FiniteField& f = fd.unit.field;
        const std::uint64_t tau2_eps = subgroup_dlog(f, f.pow(fd.unit.value, (p * p - 1) / L), fd.zeta, l, n);
        out.tau_k = mulmod(fd.q_mod, tau2_eps, L);
        out.power = matmul_mod(m.entries, m.entries, 2, L);
        out.expected = assemble(1, out.tau_k, mulmod(p_inv, p_inv, L), L);
    }
    out.holds = out.power == out.expected;
    return out;
}

}  // namespace kce
