// Acceptance battery: one pass/fail line per criterion, nonzero exit on any
// failure. Criterion 12 re-runs the battery with the same seed and compares
// the summary values byte-for-byte.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "gaborlab/suite.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = 7;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) seed = std::strtoull(argv[++i], nullptr, 10);
    }

    const auto results = gaborlab::run_acceptance_suite(seed);
    bool all = true;
    for (const auto& r : results) {
        std::printf("[%s] %-26s value %-12.5g tol %-9.3g (%.1fs/%.0fs)%s%s\n", r.pass ? "PASS" : "FAIL",
                    r.name.c_str(), r.value, r.tolerance, r.seconds, r.budget,
                    r.detail.empty() ? "" : "  ", r.detail.c_str());
        all = all && r.pass;
    }
    std::printf("%s\n", all ? "acceptance: all criteria passed" : "acceptance: FAILURES present");
    return all ? 0 : 1;
}
