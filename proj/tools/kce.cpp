// kce: command-line front end.
//
// Exit codes: 0 ok, 2 domain validation, 64 usage, 70 internal, 74 I/O.

#include "kce/batch.hpp"
#include "kce/cusp.hpp"
#include "kce/datasheet.hpp"
#include "kce/error.hpp"
#include "kce/galois.hpp"
#include "kce/quadfield.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

namespace {

using kce::ordered_json;

constexpr int kExitValidation = 2;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;
constexpr int kExitIO = 74;

const std::vector<std::string> kGenerators{"L1-L2inv", "L1inv-L2"};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ordered_json matrix_json(const std::vector<std::uint64_t>& e, unsigned dim) {
    ordered_json rows = ordered_json::array();
    for (unsigned i = 0; i < dim; ++i) {
        ordered_json row = ordered_json::array();
        for (unsigned j = 0; j < dim; ++j) row.push_back(e[i * dim + j]);
        rows.push_back(row);
    }
    return rows;
}

ordered_json exact_matrix_json(const kce::ExactMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(kce::to_string(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

ordered_json tate_json(const kce::TateGroup& t) {
    return {{"dim", t.dim}, {"twist", t.twist}, {"label", "Q(" + std::to_string(t.twist) + ")"}};
}

void print_text(const ordered_json& j, const std::string& prefix = "") {
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
        if (it->is_object()) {
            print_text(*it, key);
        } else {
            std::cout << key << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << '\n';
        }
    }
}

int run_datasheet(std::int64_t D, bool json, unsigned precision, const std::string& generator, bool force) {
    kce::DatasheetOptions opts;
    opts.digits = precision ? precision : kce::default_digits();
    opts.generator = kce::parse_generator(generator);
    opts.force = force;
    const ordered_json j = kce::to_json(kce::datasheet(D, opts));
    if (json) std::cout << j.dump(2) << '\n';
    else print_text(j);
    return 0;
}

int run_galois(std::int64_t D, std::uint64_t p, std::uint64_t l, unsigned n, unsigned dim, bool flip, unsigned verify,
               const std::string& generator) {
    kce::GaloisOptions opts;
    opts.flip_root = flip;
    opts.generator = kce::parse_generator(generator);
    const kce::RepMatrix m =
        dim == 3 ? kce::frobenius_matrix_3d(D, p, l, n, opts) : kce::frobenius_matrix(D, p, l, n, opts);
    const kce::FiniteField field = m.inert ? kce::FiniteField::quadratic(p, D) : kce::FiniteField::prime(p);

    ordered_json sqrt_choice{{"prime", m.inert ? "inert" : "split"}, {"flipped", m.flipped}};
    if (m.inert) sqrt_choice["root"] = m.flipped ? "-x" : "x";
    else sqrt_choice["root"] = m.sqrt_root;

    ordered_json j{{"D", m.D},
                   {"p", m.p},
                   {"l", m.l},
                   {"n", m.n},
                   {"modulus", m.modulus},
                   {"dim", m.dim},
                   {"chi", m.chi},
                   {"sqrt_choice", sqrt_choice},
                   {"field", m.inert ? "F_p[x]/(x^2 - D)" : "F_p"},
                   {"g", field.str(m.generator)},
                   {"zeta", field.str(m.zeta)},
                   {"zeta_convention", m.zeta_convention},
                   {"generator", std::string(kce::to_string(opts.generator))},
                   {"q_exponent", kce::to_string(m.q_exponent)},
                   {"tau_eps", m.tau_eps},
                   {"tau", m.tau},
                   {"matrix", matrix_json(m.entries, m.dim)},
                   {"determinant", kce::determinant_mod(m)}};
    if (verify) {
        const kce::PowerLawCheck c = kce::verify_power_law(D, p, l, n, verify, opts);
        j["verify"] = {{"k", verify},
                       {"holds", c.holds},
                       {"tau_k", c.tau_k},
                       {"power", matrix_json(c.power, 2)},
                       {"expected", matrix_json(c.expected, 2)}};
    }
    std::cout << j.dump(2) << '\n';
    return 0;
}

int run_cusp(std::int64_t D) {
    const kce::FieldCtx ctx = kce::make_field(D);
    const kce::CuspCycle c = kce::cusp_cycle(ctx.D);
    const kce::ExactMatrix m = kce::intersection_matrix(c);
    const kce::DefinitenessCertificate cert = kce::is_negative_definite(m);
    const kce::BoundaryCohomology h = kce::boundary_cohomology(c);
    ordered_json minors = ordered_json::array();
    for (const auto& q : cert.minors) minors.push_back(kce::to_string(q));
    ordered_json kernel = ordered_json::array();
    for (const auto& v : h.kernel) {
        ordered_json row = ordered_json::array();
        for (const auto& q : v) row.push_back(kce::to_string(q));
        kernel.push_back(row);
    }
    const ordered_json j{{"D", D},
                         {"cycle", c.b()},
                         {"n", c.n()},
                         {"intersection_matrix", exact_matrix_json(m)},
                         {"minors", minors},
                         {"negative_definite", cert.negative_definite},
                         {"boundary_cohomology",
                          {{"d02", exact_matrix_json(kce::boundary_d02(c.n()))},
                           {"rank", h.rank},
                           {"kernel", kernel},
                           {"cokernel_dim", h.cokernel_dim},
                           {"h1", tate_json(h.h1)},
                           {"h2", tate_json(h.h2)},
                           {"h3", tate_json(h.h3)}}}};
    std::cout << j.dump(2) << '\n';
    return 0;
}

int run_table(std::int64_t from, std::int64_t to, const std::string& csv, const std::string& generator) {
    const kce::Table t = kce::build_table(from, to, kce::parse_generator(generator));
    if (!csv.empty()) {
        std::ofstream out(csv);
        if (!out) throw IoError("cannot open " + csv + " for writing");
        out << kce::table_csv(t);
        out.flush();
        if (!out) throw IoError("write to " + csv + " failed");
    }
    std::cout << kce::to_json(t).dump(2) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariants of the Kummer motive of a real quadratic field Q(sqrt D)"};
    app.require_subcommand(1);

    std::int64_t D = 0;
    std::string generator = kGenerators[0];

    auto* ds = app.add_subcommand("datasheet", "All invariants for one discriminant");
    bool json = false, force = false;
    unsigned precision = 0;
    ds->add_option("--D", D, "Discriminant (prime, 1 mod 4)")->required();
    ds->add_flag("--json", json, "Print JSON");
    ds->add_option("--precision", precision, "Decimal digits (default: KCE_PRECISION or 50)")
        ->check(CLI::Range(10u, 10000u));
    ds->add_option("--generator", generator, "Boundary generator")->check(CLI::IsMember(kGenerators));
    ds->add_flag("--force", force, "Proceed when the narrow class number is not one");

    auto* gal = app.add_subcommand("galois", "Frobenius matrix of the l-adic realisation mod l^n");
    std::uint64_t p = 0, l = 0;
    unsigned n = 0, dim = 2, verify = 0;
    bool flip = false;
    gal->add_option("--D", D, "Discriminant")->required();
    gal->add_option("--p", p, "Unramified prime")->required();
    gal->add_option("--l", l, "Coefficient prime")->required();
    gal->add_option("--n", n, "Exponent of l")->required()->check(CLI::Range(1u, 62u));
    gal->add_option("--dim", dim, "2 or 3")->check(CLI::IsMember({2u, 3u}));
    gal->add_flag("--flip-root", flip, "Use the other square root of D");
    gal->add_option("--verify", verify, "Check M^k against the cocycle of Frob^k")->check(CLI::IsMember({1u, 2u}));
    gal->add_option("--generator", generator, "Boundary generator")->check(CLI::IsMember(kGenerators));

    auto* cusp = app.add_subcommand("cusp", "Cusp resolution cycle and boundary cohomology");
    cusp->add_option("--D", D, "Discriminant")->required();

    auto* table = app.add_subcommand("table", "One row per admissible D in a range");
    std::int64_t from = 0, to = 0;
    std::string csv;
    table->add_option("--D-from", from, "First D")->required();
    table->add_option("--D-to", to, "Last D")->required();
    table->add_option("--csv", csv, "Also write CSV to this path");
    table->add_option("--generator", generator, "Boundary generator")->check(CLI::IsMember(kGenerators));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*ds) return run_datasheet(D, json, precision, generator, force);
        if (*gal) return run_galois(D, p, l, n, dim, flip, verify, generator);
        if (*cusp) return run_cusp(D);
        if (*table) return run_table(from, to, csv, generator);
    } catch (const kce::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.code() == kce::ErrorCode::Internal ? kExitInternal : kExitValidation;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIO;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitUsage;
}
