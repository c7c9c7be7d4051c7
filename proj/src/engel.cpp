#include "wordmom/engel.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "wordmom/weingarten.hpp"

namespace wordmom {

namespace {

std::vector<int> concat(const std::vector<int>& u, const std::vector<int>& v) {
    std::vector<int> out = u;
    out.insert(out.end(), v.begin(), v.end());
    return out;
}

// (sigma v)_k = v_{sigma^-1(k)}, i.e. result[sigma(k)] = v[k].
std::vector<int> act(const Permutation& sigma, const std::vector<int>& v) {
    std::vector<int> out(v.size());
    for (size_t k = 0; k < v.size(); ++k) out[sigma(static_cast<int>(k))] = v[k];
    return out;
}

// All sigma with act(sigma, lhs) == rhs, by backtracking over positions of
// matching values.
std::vector<Permutation> matching_permutations(const std::vector<int>& lhs,
                                               const std::vector<int>& rhs) {
    int n = static_cast<int>(lhs.size());
    // Quick multiset test.
    std::vector<int> ls = lhs, rs = rhs;
    std::sort(ls.begin(), ls.end());
    std::sort(rs.begin(), rs.end());
    if (ls != rs) return {};
    std::vector<Permutation> out;
    std::vector<int> images(n, -1);
    std::vector<char> used(n, 0);
    std::function<void(int)> rec = [&](int k) {
        if (k == n) {
            out.push_back(Permutation(images));
            return;
        }
        for (int j = 0; j < n; ++j) {
            if (used[j] || rhs[j] != lhs[k]) continue;
            used[j] = 1;
            images[k] = j;
            rec(k + 1);
            used[j] = 0;
        }
    };
    rec(0);
    return out;
}

// Odometer over [d]^m.
bool next_vector(std::vector<int>& v, int d) {
    for (size_t i = 0; i < v.size(); ++i) {
        if (++v[i] < d) return true;
        v[i] = 0;
    }
    return false;
}

std::vector<std::vector<int>> increasing_vectors(int m, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int lo) {
        if (static_cast<int>(cur.size()) == m) {
            out.push_back(cur);
            return;
        }
        for (int v = lo; v < d; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

}  // namespace

Integer z_bound(int m, int d) {
    return pow(factorial(m), 7) * pow(binomial(2 * m, m), 4) * binomial(d, m) *
           pow(binomial(d + m - 1, m), 3);
}

void enumerate_Z(int m, int d, const RunConfig& cfg,
                 const std::function<void(const EngelConfiguration&)>& visit) {
    if (m < 1 || d < 1) throw std::invalid_argument("enumerate_Z: m, d must be positive");
    if (d < m) return;  // I_{m,d} is empty
    double s2m_fact = 1.0;
    for (int j = 2; j <= 2 * m; ++j) s2m_fact *= j;
    double outer = binomial(d, m).get_d() * std::pow(static_cast<double>(d), 3.0 * m) *
                   s2m_fact * s2m_fact;
    if (outer > cfg.term_budget)
        throw BudgetError("enumerate_Z: outer enumeration needs " + std::to_string(outer) +
                              " configurations, budget is " + std::to_string(cfg.term_budget),
                          outer);

    std::vector<Permutation> s2m = all_permutations(2 * m);
    EngelConfiguration conf;
    for (const auto& a : increasing_vectors(m, d)) {
        conf.a = a;
        std::vector<int> b(m, 0);
        do {
            conf.b = b;
            std::vector<int> c(m, 0);
            do {
                conf.c = c;
                std::vector<int> d2(m, 0);
                do {
                    conf.d2 = d2;
                    std::vector<int> ad = concat(a, d2);
                    std::vector<int> bc = concat(b, c);
                    for (const auto& sigma2 : s2m) {
                        conf.sigma2 = sigma2;
                        std::vector<int> AD = act(sigma2, ad);
                        conf.A2.assign(AD.begin(), AD.begin() + m);
                        conf.D2.assign(AD.begin() + m, AD.end());
                        for (const auto& tau2 : s2m) {
                            conf.tau2 = tau2;
                            // tau2(B|C) = (b|c)  <=>  (B|C) = tau2^-1 (b|c),
                            // i.e. BC[k] = bc[tau2(k)].
                            std::vector<int> BC(2 * m);
                            for (int k = 0; k < 2 * m; ++k) BC[k] = bc[tau2(k)];
                            conf.B2.assign(BC.begin(), BC.begin() + m);
                            conf.C2.assign(BC.begin() + m, BC.end());
                            std::vector<int> AB = concat(conf.A2, conf.B2);
                            std::vector<int> ab = concat(a, b);
                            std::vector<int> cd = concat(c, d2);
                            std::vector<int> DC = concat(conf.D2, conf.C2);
                            auto sigma1s = matching_permutations(AB, ab);
                            if (sigma1s.empty()) continue;
                            auto tau1s = matching_permutations(cd, DC);
                            for (const auto& s1 : sigma1s) {
                                conf.sigma1 = s1;
                                for (const auto& t1 : tau1s) {
                                    conf.tau1 = t1;
                                    visit(conf);
                                }
                            }
                        }
                    }
                } while (next_vector(d2, d));
            } while (next_vector(c, d));
        } while (next_vector(b, d));
    }
}

Integer z_count(int m, int d, const RunConfig& cfg) {
    Integer count = 0;
    enumerate_Z(m, d, cfg, [&](const EngelConfiguration&) { ++count; });
    return count;
}

Rational engel_direct(int m, int d, const RunConfig& cfg) {
    const WeingartenTable& wg = WeingartenTable::get(2 * m, d);
    // (pi x Id) for pi in S_m, with the sign of pi attached.
    std::vector<std::pair<Permutation, int>> pi_ext;
    for (const auto& pi : all_permutations(m)) {
        std::vector<int> images(2 * m);
        for (int j = 0; j < m; ++j) images[j] = pi(j);
        for (int j = m; j < 2 * m; ++j) images[j] = j;
        pi_ext.emplace_back(Permutation(images), pi.sign());
    }
    Rational total(0);
    std::map<std::vector<int>, Rational> pi_sum_cache;  // keyed on sigma2^-1 tau2
    enumerate_Z(m, d, cfg, [&](const EngelConfiguration& conf) {
        Rational first = wg.value(conf.sigma1.inverse() * conf.tau1);
        Permutation s2inv_t2 = conf.sigma2.inverse() * conf.tau2;
        auto it = pi_sum_cache.find(s2inv_t2.images());
        if (it == pi_sum_cache.end()) {
            Rational second(0);
            for (const auto& [ext, sign] : pi_ext) {
                const Rational& v = wg.value(ext * s2inv_t2);
                if (sign > 0)
                    second += v;
                else
                    second -= v;
            }
            it = pi_sum_cache.emplace(s2inv_t2.images(), second).first;
        }
        total += first * it->second;
    });
    return total;
}

}  // namespace wordmom
