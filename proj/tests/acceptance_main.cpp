// Runs the full acceptance grid and prints one line per criterion.
// Exit status is 0 only if every criterion passes.
#include <cstdio>
#include <iostream>

#include "ortholab/acceptance.hpp"

int main() {
    std::ios::sync_with_stdio(false);
    // progress streams to stderr as each criterion completes; the summary
    // block below is the stable stdout report
    const auto results = ortholab::run_acceptance(&std::cerr);
    bool all = true;
    for (const auto& r : results) {
        all = all && r.pass;
        std::printf("criterion %d (%s): %s  [%.1fs]  %s\n", r.number,
                    r.name.c_str(), r.pass ? "PASS" : "FAIL", r.seconds,
                    r.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("acceptance: %s\n", all ? "PASS" : "FAIL");
    return all ? 0 : 1;
}
