#pragma once

#include "satake/numeric.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace satake {

// The acceptance suite: ten independent checks covering the sphericity
// equivalence, the boundary combinatorics against oracles, and the analytic
// limit constructions.  Shared by the acceptance binary and `satake verify`.

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

struct VerifyOptions {
    std::uint64_t seed = 0xC0FFEE;
    long haar_samples = 100000;
    long probe_samples = 10000;
    Tolerances tol;
};

std::vector<CheckResult> run_acceptance_suite(const VerifyOptions& opts);

// Prints one "PASS name: detail" / "FAIL name: detail" line per check;
// returns true when everything passed.
bool report_checks(const std::vector<CheckResult>& results, std::ostream& out);

}  // namespace satake
