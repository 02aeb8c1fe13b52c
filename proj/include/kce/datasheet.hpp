#pragma once

#include "kce/realisation.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace kce {

// Everything attached to one discriminant, with exact values as "num/den"
// strings and numerics as decimal strings at `precision` digits.
struct RealisationDatasheet {
    struct Unit {
        std::string a, b, numeric;
        friend bool operator==(const Unit&, const Unit&) = default;
    };
    struct Hodge {
        std::string coeff, numeric;
        friend bool operator==(const Hodge&, const Hodge&) = default;
    };
    struct Cusp {
        std::vector<std::int64_t> cycle;
        std::size_t n = 0;
        bool negative_definite = false;
        std::vector<std::string> minors;
        friend bool operator==(const Cusp&, const Cusp&) = default;
    };
    struct Tate {
        std::size_t dim = 0;
        int twist = 0;
        friend bool operator==(const Tate&, const Tate&) = default;
    };
    struct Cohomology {
        std::size_t rank = 0;
        Tate h1, h2, h3;
        friend bool operator==(const Cohomology&, const Cohomology&) = default;
    };
    struct Gauss {
        std::string re, im, error;
        friend bool operator==(const Gauss&, const Gauss&) = default;
    };
    struct Conventions {
        std::string generator, orientation;
        friend bool operator==(const Conventions&, const Conventions&) = default;
    };

    std::int64_t D = 0;
    std::int64_t h_plus = 0;
    Unit eps0;
    std::string norm_eps0;
    Unit eps;
    std::string zeta_minus1;
    std::string volume;
    std::string self_cup;
    std::string normalizer;
    std::string q_exponent;
    Hodge hodge_class;
    Cusp cusp;
    Cohomology boundary_cohomology;
    Gauss gauss_sum;
    std::vector<std::string> motive_summands;
    Conventions conventions;
    unsigned precision = 0;

    friend bool operator==(const RealisationDatasheet&, const RealisationDatasheet&) = default;
};

struct DatasheetOptions {
    unsigned digits = kDefaultDigits;
    Generator generator = Generator::L1_L2inv;
    bool force = false;
};

// Propagates validation errors from make_field.
RealisationDatasheet datasheet(std::int64_t D, const DatasheetOptions& opts = {});

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const RealisationDatasheet& ds);
RealisationDatasheet datasheet_from_json(const ordered_json& j);

}  // namespace kce
