#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cmhecke/lfun.hpp"

namespace cmhecke {

struct VerifyOptions {
    double tol_floor = 0.0;  // raise every numeric tolerance below this value up to it
    std::string only;        // run a single criterion by name when nonempty
    long long max_terms = 200'000'000;
};

// Names accepted by VerifyOptions::only.
std::vector<std::string> verification_names();

// Runs the verification suite, one pass/fail line per criterion on `out`.
// Returns 0 iff every selected criterion passes.
int run_verification(const VerifyOptions& opt, std::ostream& out);

}  // namespace cmhecke
