#include "wordmom/engine.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <string>
#include <stdexcept>
#include <thread>

#include "wordmom/characters.hpp"
#include "wordmom/weingarten.hpp"

namespace wordmom {

int effective_threads(const RunConfig& cfg) {
    if (cfg.threads > 0) return cfg.threads;
    if (const char* env = std::getenv("WORDMOM_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

double TraceProductProblem::term_count() const {
    double total = 1.0;
    for (const auto& a : a_positions) {
        double f = 1.0;
        for (size_t j = 2; j <= a.size(); ++j) f *= static_cast<double>(j);
        total *= f * f;
    }
    return total;
}

TraceProductProblem build_problem(const std::vector<Word>& words, int d) {
    if (d < 1) throw std::invalid_argument("build_problem: d must be positive");
    TraceProductProblem p;
    p.words = words;
    p.d = d;
    std::map<int, std::vector<int>> a_map, b_map;
    for (const auto& w : words) {
        if (w.empty()) throw std::invalid_argument("build_problem: empty word");
        if (!(cyclic_reduce(w) == w))
            throw std::invalid_argument("build_problem: word not cyclically reduced");
        int base = p.omega_size();
        int len = w.length();
        for (int u = 0; u < len; ++u) {
            int letter = w.letter(u);
            p.letters.push_back(letter);
            p.t_successor.push_back(base + (u + 1) % len);
            if (letter > 0)
                a_map[letter].push_back(base + u);
            else
                b_map[-letter].push_back(base + u);
        }
    }
    p.balanced = true;
    std::map<int, std::pair<std::vector<int>, std::vector<int>>> merged;
    for (auto& [g, v] : a_map) merged[g].first = std::move(v);
    for (auto& [g, v] : b_map) merged[g].second = std::move(v);
    for (auto& [g, ab] : merged) {
        p.generators.push_back(g);
        if (ab.first.size() != ab.second.size()) p.balanced = false;
        p.a_positions.push_back(std::move(ab.first));
        p.b_positions.push_back(std::move(ab.second));
    }
    return p;
}

namespace {

// Accumulator key: per-generator cycle-type index of Sigma^2|_{A_i},
// followed by c(Sigma T^{-1}). Exact rationals enter only when the count
// map is folded at the end; the hot loop is all int arithmetic.
using CountMap = std::map<std::vector<int>, long long>;

struct GeneratorData {
    std::vector<int> a_pos;
    std::vector<int> b_pos;
    std::vector<Permutation> perms;                  // S_k, k = |A_i|
    std::map<std::vector<int>, int> type_index;      // cycle type -> table row
};

// Cycle-type table row of the composed map j -> b[a[j]] on [k].
int composed_type_index(const Permutation& a, const Permutation& b,
                        const GeneratorData& gen) {
    int k = a.degree();
    std::vector<int> images(k);
    for (int j = 0; j < k; ++j) images[j] = b(a(j));
    std::vector<char> seen(k, 0);
    std::vector<int> lens;
    for (int i = 0; i < k; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = images[j]) {
            seen[j] = 1;
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end(), std::greater<int>());
    return gen.type_index.at(lens);
}

class Enumerator {
  public:
    Enumerator(const TraceProductProblem& p, std::vector<GeneratorData> gens)
        : problem_(p), gens_(std::move(gens)) {
        t_pred_.resize(p.omega_size());
        for (int i = 0; i < p.omega_size(); ++i) t_pred_[p.t_successor[i]] = i;
    }

    /// Enumerates all Sigma with the first generator's alpha index in
    /// [alpha_lo, alpha_hi), accumulating into `out`.
    void run_chunk(size_t alpha_lo, size_t alpha_hi, CountMap& out) const {
        if (alpha_lo >= alpha_hi) return;
        int n_gens = static_cast<int>(gens_.size());
        std::vector<size_t> alpha_idx(n_gens, 0), beta_idx(n_gens, 0);
        alpha_idx[0] = alpha_lo;
        std::vector<int> key(n_gens + 1);
        std::vector<int> sigma(problem_.omega_size());
        std::vector<char> seen(problem_.omega_size());
        for (;;) {
            // Evaluate the current Sigma.
            for (int g = 0; g < n_gens; ++g) {
                const GeneratorData& gd = gens_[g];
                const Permutation& a = gd.perms[alpha_idx[g]];
                const Permutation& b = gd.perms[beta_idx[g]];
                int k = static_cast<int>(gd.a_pos.size());
                for (int j = 0; j < k; ++j) {
                    sigma[gd.a_pos[j]] = gd.b_pos[a(j)];
                    sigma[gd.b_pos[j]] = gd.a_pos[b(j)];
                }
                key[g] = composed_type_index(a, b, gd);
            }
            std::fill(seen.begin(), seen.end(), 0);
            int cycles = 0;
            for (int i = 0; i < problem_.omega_size(); ++i) {
                if (seen[i]) continue;
                ++cycles;
                for (int j = i; !seen[j]; j = sigma[t_pred_[j]]) seen[j] = 1;
            }
            key[n_gens] = cycles;
            ++out[key];

            // Odometer: beta indices first, then alpha indices; the first
            // generator's alpha stays within [alpha_lo, alpha_hi).
            int g = 0;
            for (; g < n_gens; ++g) {
                if (++beta_idx[g] < gens_[g].perms.size()) break;
                beta_idx[g] = 0;
                size_t limit = (g == 0) ? alpha_hi : gens_[g].perms.size();
                if (++alpha_idx[g] < limit) break;
                alpha_idx[g] = (g == 0) ? alpha_lo : 0;
            }
            if (g == n_gens) break;
        }
    }

  private:
    const TraceProductProblem& problem_;
    std::vector<GeneratorData> gens_;
    std::vector<int> t_pred_;
};

}  // namespace

Rational expected_trace_product(const TraceProductProblem& problem,
                                const RunConfig& cfg) {
    if (!problem.balanced) return Rational(0);
    if (problem.generators.empty()) return Rational(0);  // unreachable: words nonempty

    double terms = problem.term_count();
    if (terms > cfg.term_budget)
        throw BudgetError("expected_trace_product: enumeration needs " +
                              std::to_string(terms) + " terms, budget is " +
                              std::to_string(cfg.term_budget),
                          terms);

    int n_gens = static_cast<int>(problem.generators.size());
    std::vector<GeneratorData> gens(n_gens);
    for (int g = 0; g < n_gens; ++g) {
        gens[g].a_pos = problem.a_positions[g];
        gens[g].b_pos = problem.b_positions[g];
        int k = static_cast<int>(gens[g].a_pos.size());
        gens[g].perms = all_permutations(k);
        const auto& parts = CharacterTable::get(k).partitions();
        for (size_t i = 0; i < parts.size(); ++i)
            gens[g].type_index[parts[i].parts()] = static_cast<int>(i);
        WeingartenTable::get(k, problem.d);  // warm the cache before threading
    }

    Enumerator enumerator(problem, gens);
    size_t first_size = gens[0].perms.size();
    int n_threads = std::min<int>(effective_threads(cfg), static_cast<int>(first_size));

    CountMap counts;
    if (n_threads <= 1) {
        enumerator.run_chunk(0, first_size, counts);
    } else {
        std::vector<CountMap> partial(n_threads);
        std::vector<std::thread> workers;
        size_t chunk = (first_size + n_threads - 1) / n_threads;
        for (int t = 0; t < n_threads; ++t) {
            size_t lo = t * chunk;
            size_t hi = std::min(first_size, lo + chunk);
            workers.emplace_back([&, t, lo, hi] { enumerator.run_chunk(lo, hi, partial[t]); });
        }
        for (auto& w : workers) w.join();
        for (const auto& m : partial)
            for (const auto& [key, cnt] : m) counts[key] += cnt;
    }

    Rational total(0);
    for (const auto& [key, cnt] : counts) {
        Rational weight(static_cast<long>(cnt));
        for (int g = 0; g < n_gens; ++g) {
            int k = static_cast<int>(problem.a_positions[g].size());
            weight *= WeingartenTable::get(k, problem.d).value_at(key[g]);
        }
        weight *= Rational(pow(Integer(problem.d), static_cast<unsigned>(key[n_gens])));
        total += weight;
    }
    return total;
}

Rational expected_trace_product(const std::vector<Word>& words, int d,
                                const RunConfig& cfg) {
    return expected_trace_product(build_problem(words, d), cfg);
}

Rational expected_trace_product_entrywise(const std::vector<Word>& words, int d) {
    TraceProductProblem p = build_problem(words, d);
    int omega = p.omega_size();
    double assignments = std::pow(static_cast<double>(d), omega);
    if (assignments > 1e6)
        throw BudgetError("expected_trace_product_entrywise: d^{|Omega|} exceeds 1e6",
                          assignments);
    std::vector<int> f(omega, 0);
    Rational total(0);
    for (;;) {
        EntrySpec spec;
        spec.d = d;
        for (int gamma = 0; gamma < omega; ++gamma) {
            int letter = p.letters[gamma];
            int succ = p.t_successor[gamma];
            if (letter > 0)
                spec.factors.push_back({letter, f[gamma], f[succ], false});
            else
                // (X^-1)_{f(gamma), f(T gamma)} = conj X_{f(T gamma), f(gamma)}
                spec.factors.push_back({-letter, f[succ], f[gamma], true});
        }
        total += expected_entry_product(spec);
        int i = 0;
        for (; i < omega; ++i) {
            if (++f[i] < d) break;
            f[i] = 0;
        }
        if (i == omega) break;
    }
    return total;
}

Rational expected_entry_product(const EntrySpec& spec) {
    if (spec.d < 1) throw std::invalid_argument("expected_entry_product: d must be positive");
    std::map<int, std::pair<std::vector<const EntryFactor*>, std::vector<const EntryFactor*>>> by_gen;
    for (const auto& f : spec.factors) {
        if (f.row < 0 || f.row >= spec.d || f.col < 0 || f.col >= spec.d)
            throw std::invalid_argument("expected_entry_product: index out of range");
        if (f.conjugated)
            by_gen[f.gen].second.push_back(&f);
        else
            by_gen[f.gen].first.push_back(&f);
    }
    Rational total(1);
    for (const auto& [g, fc] : by_gen) {
        const auto& plain = fc.first;
        const auto& conj = fc.second;
        if (plain.size() != conj.size()) return Rational(0);
        int n = static_cast<int>(plain.size());
        if (n == 0) continue;
        if (n > 8)
            throw BudgetError("expected_entry_product: per-generator factor count exceeds 8",
                              static_cast<double>(n));
        const WeingartenTable& wg = WeingartenTable::get(n, spec.d);
        Rational gen_sum(0);
        for (const auto& sigma : all_permutations(n)) {
            bool rows_ok = true;
            for (int k = 0; k < n && rows_ok; ++k)
                rows_ok = plain[k]->row == conj[sigma(k)]->row;
            if (!rows_ok) continue;
            for (const auto& tau : all_permutations(n)) {
                bool cols_ok = true;
                for (int k = 0; k < n && cols_ok; ++k)
                    cols_ok = plain[k]->col == conj[tau(k)]->col;
                if (!cols_ok) continue;
                gen_sum += wg.value(sigma.inverse() * tau);
            }
        }
        total *= gen_sum;
        if (total == 0) return total;
    }
    return total;
}

}  // namespace wordmom
