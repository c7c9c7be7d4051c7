#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "wordmom/config.hpp"
#include "wordmom/rational.hpp"

namespace wordmom::checks {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    int cases_checked = 0;
    int cases_skipped = 0;  // budget exclusions, documented in details
    std::vector<std::string> details;  // failures and skips only
};

/// Runs acceptance criterion `id` (1..12). `log`, when set, receives
/// progress lines. Criterion 9 (Monte Carlo agreement) recomputes the exact
/// corpus of criteria 1-5 internally.
CriterionResult run_criterion(int id, const RunConfig& cfg, std::ostream* log = nullptr);

std::vector<CriterionResult> run_all(const RunConfig& cfg, std::ostream* log = nullptr);

/// Suite names: "all", "bounds" (criteria 8 and 12 plus the entropy and
/// Stirling inequality corpus), or "1".."12".
std::vector<CriterionResult> run_suite(const std::string& suite, const RunConfig& cfg,
                                       std::ostream* log = nullptr);

}  // namespace wordmom::checks
