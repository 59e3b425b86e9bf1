// Acceptance suite: runs the full regression matrix and prints one line per
// criterion. Exit status 0 only when every criterion passes.

#include <cstdio>
#include <iostream>

#include "loja/paper_suite.hpp"

int main(int argc, char** argv) {
    uint64_t seed = 42;
    if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);

    loja::RunReport report = loja::run_paper_suite(seed);

    int failed = 0;
    for (const auto& c : report.criteria) {
        std::printf("%s  criterion %2d: %s\n", c.pass ? "PASS" : "FAIL", c.id, c.name.c_str());
        std::printf("      %s\n", c.details.c_str());
        if (!c.pass) ++failed;
    }
    std::printf("----\n%zu criteria, %d failed\n", report.criteria.size(), failed);
    return failed == 0 ? 0 : 1;
}
