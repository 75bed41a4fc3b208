#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cmhecke/dimension.hpp"
#include "cmhecke/lfun.hpp"

namespace cmhecke {

struct CharacterRow {
    std::string id;
    int order = 0;
    std::map<long long, int> conductor;
    DimensionVerdict dim;
    int W = 0;
    int ord = 0;
    bool analytic_supported = false;        // central values need 4||D, D > 4
    std::optional<CentralReport> central;   // present iff analytic_supported
};

struct AnalysisRecord {
    FieldData field;
    int n_simplest = 0;
    std::vector<CharacterRow> characters;   // empty for D in {3, 4}
};

// One-discriminant analysis: field constants plus one row per simplest
// character. Central L-data is filled only when 4||D and D > 4; other cases
// still carry W, conductor, and the dimension verdict.
AnalysisRecord analyze(long long D, const NumericsConfig& cfg);

// JSON object with D, case, d, h, r, B, n_simplest, characters[]. Numbers
// carry 17 significant digits. Unsupported analytic fields are the string
// "unsupported"; an absent derivative is null.
std::string to_json(const AnalysisRecord& rec);

// D,case,d,h,r,B,spec,order,W,ord,L1,dLambda,bounds_ok
std::string csv_header();
std::vector<std::string> to_csv_rows(const AnalysisRecord& rec);

// Shared float formatting (17 significant digits).
std::string format_double(double x);

}  // namespace cmhecke
