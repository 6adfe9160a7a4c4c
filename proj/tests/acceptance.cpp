// Acceptance gate: one line per criterion, nonzero exit when any fails.
// Tolerances and sample counts are the pinned defaults from VerifyOptions;
// pass a sample count to override for quick local runs.

#include "satake/verify.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
    satake::VerifyOptions opts;
    if (argc > 1) {
        const long samples = std::strtol(argv[1], nullptr, 10);
        if (samples < 2) {
            std::cerr << "usage: satake_acceptance [haar_samples]\n";
            return 2;
        }
        opts.haar_samples = samples;
    }
    const std::vector<satake::CheckResult> results =
        satake::run_acceptance_suite(opts);
    const bool all = satake::report_checks(results, std::cout);
    return all ? 0 : 1;
}
