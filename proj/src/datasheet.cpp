#include "kce/datasheet.hpp"

#include "kce/cusp.hpp"
#include "kce/error.hpp"
#include "kce/quadfield.hpp"
#include "kce/zeta.hpp"

namespace kce {

RealisationDatasheet datasheet(std::int64_t D, const DatasheetOptions& opts) {
    const FieldCtx ctx = make_field(D, opts.force);
    const unsigned digits = opts.digits;
    RealisationDatasheet ds;
    ds.D = D;
    ds.h_plus = ctx.h_plus ? *ctx.h_plus : narrow_class_number(D);
    ds.precision = digits;

    const QuadElem e0 = fundamental_unit(ctx);
    const QuadElem e = e0 * e0;
    ds.eps0 = {to_string(e0.a()), to_string(e0.b()), e0.embed(Embedding::Identity, digits).str(digits)};
    ds.norm_eps0 = to_string(e0.norm());
    ds.eps = {to_string(e.a()), to_string(e.b()), e.embed(Embedding::Identity, digits).str(digits)};

    const ZetaReport z = volume_constants(D);
    ds.zeta_minus1 = to_string(z.zeta_minus1);
    ds.volume = to_string(z.volume);
    ds.self_cup = to_string(z.self_cup);
    ds.normalizer = to_string(z.normalizer);
    ds.q_exponent = to_string(epsilon_tilde_exponent(ctx, opts.generator));

    const HodgeClass h = hodge_de_rham_class(ctx, digits, opts.generator);
    ds.hodge_class = {to_string(h.coeff), h.numeric.str(digits)};

    const CuspCycle cycle = cusp_cycle(D);
    const DefinitenessCertificate cert = is_negative_definite(intersection_matrix(cycle));
    ds.cusp.cycle = cycle.b();
    ds.cusp.n = cycle.n();
    ds.cusp.negative_definite = cert.negative_definite;
    for (const auto& m : cert.minors) ds.cusp.minors.push_back(to_string(m));

    const BoundaryCohomology bc = boundary_cohomology(cycle);
    ds.boundary_cohomology = {bc.rank, {bc.h1.dim, bc.h1.twist}, {bc.h2.dim, bc.h2.twist}, {bc.h3.dim, bc.h3.twist}};

    const ComplexApprox g = gauss_sum_numeric(D, digits);
    const BigFloat err = abs(g.re - covolume(D, digits).numeric);
    ds.gauss_sum = {g.re.str(digits), g.im.str(digits), err.str(6)};

    ds.motive_summands = {"Q(0)", "Q(0)chi_D"};
    ds.conventions = {std::string(to_string(opts.generator)), "L1~|boundary = eps, L2~|boundary = eps^-1"};
    return ds;
}

namespace {

ordered_json tate_json(const RealisationDatasheet::Tate& t) {
    return ordered_json{{"dim", t.dim}, {"twist", t.twist}, {"label", "Q(" + std::to_string(t.twist) + ")"}};
}

RealisationDatasheet::Tate tate_from(const ordered_json& j) {
    return {j.at("dim").get<std::size_t>(), j.at("twist").get<int>()};
}

ordered_json unit_json(const RealisationDatasheet::Unit& u) {
    return ordered_json{{"a", u.a}, {"b", u.b}, {"numeric", u.numeric}};
}

RealisationDatasheet::Unit unit_from(const ordered_json& j) {
    return {j.at("a").get<std::string>(), j.at("b").get<std::string>(), j.at("numeric").get<std::string>()};
}

}  // namespace

ordered_json to_json(const RealisationDatasheet& ds) {
    ordered_json j;
    j["D"] = ds.D;
    j["h_plus"] = ds.h_plus;
    j["eps0"] = unit_json(ds.eps0);
    j["norm_eps0"] = ds.norm_eps0;
    j["eps"] = unit_json(ds.eps);
    j["zeta_minus1"] = ds.zeta_minus1;
    j["volume"] = ds.volume;
    j["self_cup"] = ds.self_cup;
    j["normalizer"] = ds.normalizer;
    j["q_exponent"] = ds.q_exponent;
    j["hodge_class"] = {{"coeff", ds.hodge_class.coeff}, {"numeric", ds.hodge_class.numeric}};
    j["cusp"] = {{"cycle", ds.cusp.cycle},
                 {"n", ds.cusp.n},
                 {"negative_definite", ds.cusp.negative_definite},
                 {"minors", ds.cusp.minors}};
    j["boundary_cohomology"] = {{"rank", ds.boundary_cohomology.rank},
                                {"h1", tate_json(ds.boundary_cohomology.h1)},
                                {"h2", tate_json(ds.boundary_cohomology.h2)},
                                {"h3", tate_json(ds.boundary_cohomology.h3)}};
    j["gauss_sum"] = {{"value", {{"re", ds.gauss_sum.re}, {"im", ds.gauss_sum.im}}}, {"error", ds.gauss_sum.error}};
    j["motive_summands"] = ds.motive_summands;
    j["conventions"] = {{"generator", ds.conventions.generator}, {"orientation", ds.conventions.orientation}};
    j["precision"] = ds.precision;
    return j;
}

RealisationDatasheet datasheet_from_json(const ordered_json& j) {
    try {
        RealisationDatasheet ds;
        ds.D = j.at("D").get<std::int64_t>();
        ds.h_plus = j.at("h_plus").get<std::int64_t>();
        ds.eps0 = unit_from(j.at("eps0"));
        ds.norm_eps0 = j.at("norm_eps0").get<std::string>();
        ds.eps = unit_from(j.at("eps"));
        ds.zeta_minus1 = j.at("zeta_minus1").get<std::string>();
        ds.volume = j.at("volume").get<std::string>();
        ds.self_cup = j.at("self_cup").get<std::string>();
        ds.normalizer = j.at("normalizer").get<std::string>();
        ds.q_exponent = j.at("q_exponent").get<std::string>();
        ds.hodge_class = {j.at("hodge_class").at("coeff").get<std::string>(),
                          j.at("hodge_class").at("numeric").get<std::string>()};
        const auto& c = j.at("cusp");
        ds.cusp.cycle = c.at("cycle").get<std::vector<std::int64_t>>();
        ds.cusp.n = c.at("n").get<std::size_t>();
        ds.cusp.negative_definite = c.at("negative_definite").get<bool>();
        ds.cusp.minors = c.at("minors").get<std::vector<std::string>>();
        const auto& bc = j.at("boundary_cohomology");
        ds.boundary_cohomology = {bc.at("rank").get<std::size_t>(), tate_from(bc.at("h1")), tate_from(bc.at("h2")),
                                  tate_from(bc.at("h3"))};
        const auto& g = j.at("gauss_sum");
        ds.gauss_sum = {g.at("value").at("re").get<std::string>(), g.at("value").at("im").get<std::string>(),
                        g.at("error").get<std::string>()};
        ds.motive_summands = j.at("motive_summands").get<std::vector<std::string>>();
        ds.conventions = {j.at("conventions").at("generator").get<std::string>(),
                          j.at("conventions").at("orientation").get<std::string>()};
        ds.precision = j.at("precision").get<unsigned>();
        return ds;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidArgument, std::string("malformed datasheet JSON: ") + e.what());
    }
}

}  // namespace kce
