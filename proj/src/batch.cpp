#include "kce/batch.hpp"

#include "kce/cusp.hpp"
#include "kce/error.hpp"
#include "kce/quadfield.hpp"
#include "kce/zeta.hpp"

#include <exception>
#include <sstream>
#include <variant>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kce {

namespace {

// Only D = 1 mod 4, D >= 5 are candidates; anything else is not reported.
bool candidate(std::int64_t D) { return D >= 5 && D % 4 == 1; }

using Slot = std::variant<std::monostate, TableRow, SkippedD>;

Slot table_slot(std::int64_t D, Generator g) {
    if (!candidate(D)) return std::monostate{};
    try {
        const FieldCtx ctx = make_field(D);
        TableRow row;
        row.D = D;
        row.h_plus = ctx.h_plus.value_or(1);
        row.zeta_minus1 = zeta_minus1(D);
        const CuspCycle c = cusp_cycle(D);
        row.n = c.n();
        row.cycle = c.b();
        row.q_exponent = epsilon_tilde_exponent(ctx, g);
        return row;
    } catch (const Error& e) {
        if (e.code() == ErrorCode::Internal) throw;
        return SkippedD{D, e.what()};
    }
}

Table collect(std::vector<Slot>& slots) {
    Table t;
    for (auto& s : slots) {
        if (auto* r = std::get_if<TableRow>(&s)) t.rows.push_back(std::move(*r));
        else if (auto* k = std::get_if<SkippedD>(&s)) t.skipped.push_back(std::move(*k));
    }
    return t;
}

bool admissible(std::int64_t D) {
    return candidate(D) && is_prime(static_cast<std::uint64_t>(D)) && narrow_class_number(D) == 1;
}

// Runs body(i) for i in [0, n) in parallel; the first exception (by index)
// is rethrown after the loop.
template <class Body>
void parallel_for(std::size_t n, Body body) {
    std::vector<std::exception_ptr> errors(n);
#pragma omp parallel for schedule(dynamic, 4)
    for (std::size_t i = 0; i < n; ++i) {
        try {
            body(i);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

std::size_t span_size(std::int64_t from, std::int64_t to) {
    return to < from ? 0 : static_cast<std::size_t>(to - from + 1);
}

}  // namespace

Table build_table(std::int64_t from, std::int64_t to, Generator g) {
    std::vector<Slot> slots(span_size(from, to));
    parallel_for(slots.size(), [&](std::size_t i) { slots[i] = table_slot(from + static_cast<std::int64_t>(i), g); });
    return collect(slots);
}

Table build_table_serial(std::int64_t from, std::int64_t to, Generator g) {
    std::vector<Slot> slots;
    for (std::int64_t D = from; D <= to; ++D) slots.push_back(table_slot(D, g));
    return collect(slots);
}

std::vector<std::int64_t> admissible_discriminants(std::int64_t from, std::int64_t to) {
    const std::size_t n = span_size(from, to);
    std::vector<char> keep(n, 0);
    parallel_for(n, [&](std::size_t i) { keep[i] = admissible(from + static_cast<std::int64_t>(i)); });
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < n; ++i)
        if (keep[i]) out.push_back(from + static_cast<std::int64_t>(i));
    return out;
}

std::vector<std::int64_t> admissible_discriminants_serial(std::int64_t from, std::int64_t to) {
    std::vector<std::int64_t> out;
    for (std::int64_t D = from; D <= to; ++D)
        if (admissible(D)) out.push_back(D);
    return out;
}

std::vector<RealisationDatasheet> datasheets(std::span<const std::int64_t> Ds, const DatasheetOptions& opts) {
    std::vector<RealisationDatasheet> out(Ds.size());
    parallel_for(Ds.size(), [&](std::size_t i) { out[i] = datasheet(Ds[i], opts); });
    return out;
}

std::vector<RealisationDatasheet> datasheets_serial(std::span<const std::int64_t> Ds, const DatasheetOptions& opts) {
    std::vector<RealisationDatasheet> out;
    out.reserve(Ds.size());
    for (std::int64_t D : Ds) out.push_back(datasheet(D, opts));
    return out;
}

std::string table_csv(const Table& t) {
    std::ostringstream os;
    os << "D,h_plus,zeta_minus1,n,cycle,q_exponent\n";
    for (const auto& r : t.rows) {
        os << r.D << ',' << r.h_plus << ',' << to_string(r.zeta_minus1) << ',' << r.n << ',';
        for (std::size_t i = 0; i < r.cycle.size(); ++i) os << (i ? " " : "") << r.cycle[i];
        os << ',' << to_string(r.q_exponent) << '\n';
    }
    return os.str();
}

ordered_json to_json(const Table& t) {
    ordered_json rows = ordered_json::array();
    for (const auto& r : t.rows) {
        rows.push_back({{"D", r.D},
                        {"h_plus", r.h_plus},
                        {"zeta_minus1", to_string(r.zeta_minus1)},
                        {"n", r.n},
                        {"cycle", r.cycle},
                        {"q_exponent", to_string(r.q_exponent)}});
    }
    ordered_json skipped = ordered_json::array();
    for (const auto& s : t.skipped) skipped.push_back({{"D", s.D}, {"reason", s.reason}});
    return {{"rows", rows}, {"skipped", skipped}};
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace kce
