// Acceptance gate: runs every verification criterion and prints one
// pass/fail line per criterion. Exit status is nonzero if any fails.

#include <iostream>

#include "wordmom/checks.hpp"

int main() {
    wordmom::RunConfig cfg;
    bool all_passed = true;
    for (int id = 1; id <= 12; ++id) {
        auto r = wordmom::checks::run_criterion(id, cfg);
        std::cout << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.name
                  << " (" << r.cases_checked << " cases";
        if (r.cases_skipped > 0) std::cout << ", " << r.cases_skipped << " skipped";
        std::cout << ")" << std::endl;
        for (const auto& line : r.details) std::cout << "    " << line << std::endl;
        all_passed = all_passed && r.passed;
    }
    return all_passed ? 0 : 1;
}
