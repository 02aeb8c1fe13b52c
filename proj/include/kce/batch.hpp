#pragma once

// Sweeps over ranges of discriminants. Each D is independent, so the
// parallel kernels split the range with OpenMP and write into pre-sized
// slots; output order is always ascending D. The *_serial variants are the
// plain loops the kernels are tested against.

#include "kce/datasheet.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace kce {

struct TableRow {
    std::int64_t D = 0;
    std::int64_t h_plus = 0;
    Rational zeta_minus1;
    std::size_t n = 0;
    std::vector<std::int64_t> cycle;
    Rational q_exponent;
    friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct SkippedD {
    std::int64_t D = 0;
    std::string reason;
    friend bool operator==(const SkippedD&, const SkippedD&) = default;
};

struct Table {
    std::vector<TableRow> rows;
    std::vector<SkippedD> skipped;
    friend bool operator==(const Table&, const Table&) = default;
};

Table build_table(std::int64_t from, std::int64_t to, Generator g = Generator::L1_L2inv);
Table build_table_serial(std::int64_t from, std::int64_t to, Generator g = Generator::L1_L2inv);

// Admissible D in [from, to]: prime, 1 mod 4, narrow class number one.
std::vector<std::int64_t> admissible_discriminants(std::int64_t from, std::int64_t to);
std::vector<std::int64_t> admissible_discriminants_serial(std::int64_t from, std::int64_t to);

// All Ds must be admissible (or opts.force set); errors propagate.
std::vector<RealisationDatasheet> datasheets(std::span<const std::int64_t> Ds, const DatasheetOptions& opts = {});
std::vector<RealisationDatasheet> datasheets_serial(std::span<const std::int64_t> Ds,
                                                    const DatasheetOptions& opts = {});

std::string table_csv(const Table& t);
ordered_json to_json(const Table& t);

int max_threads();

}  // namespace kce
