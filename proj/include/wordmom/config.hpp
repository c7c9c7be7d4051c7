#pragma once

#include <cstdint>

namespace wordmom {

/// Run-wide knobs shared by the engine and the CLI.
struct RunConfig {
    double term_budget = 1e8;   // max Sigma-enumeration terms; >= 1e4
    int threads = 0;            // 0 = auto (env WORDMOM_THREADS, else hardware)
    std::uint64_t seed = 12345; // Monte Carlo master seed
};

/// Resolves threads: explicit value wins, else WORDMOM_THREADS, else
/// hardware concurrency (at least 1).
int effective_threads(const RunConfig& cfg);

}  // namespace wordmom
