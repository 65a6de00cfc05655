#include <cstdio>

#include "chainlab/suite.hpp"

int main() {
    chainlab::acceptance_result res = chainlab::run_acceptance_suite();
    int failures = 0;
    for (const auto& c : res.criteria) {
        std::printf("%s criterion %d: %s (%s, %.2fs)\n",
                    c.pass ? "PASS" : "FAIL", c.index, c.title.c_str(),
                    c.detail.c_str(), c.seconds);
        if (!c.pass) ++failures;
    }
    std::printf("%s\n", res.all_pass ? "ALL CRITERIA PASS"
                                     : "SOME CRITERIA FAILED");
    return failures;
}
