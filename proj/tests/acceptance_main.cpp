// Runs every acceptance criterion at its default tolerances and prints one
// [PASS]/[FAIL] line per criterion. Exit status 0 iff all of them pass.
#include <iostream>

#include "interplab_tools/acceptance.hpp"
#include "interplab_tools/config.hpp"

int main() {
    const interplab::tools::RunConfig config;
    bool all = true;
    for (int id = 1; id <= interplab::tools::kCriterionCount; ++id) {
        const auto result = interplab::tools::run_criterion(id, config);
        std::cout << interplab::tools::format_criterion(result) << '\n' << std::flush;
        all = all && result.pass();
    }
    std::cout << (all ? "acceptance: all criteria pass" : "acceptance: FAILED") << '\n';
    return all ? 0 : 1;
}
