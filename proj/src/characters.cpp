#include "wordmom/characters.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>
#include <stdexcept>

namespace wordmom {

namespace {

// Murnaghan-Nakayama on beta-numbers. beta_i = lambda_i + k - 1 - i for a
// fixed number of rows k; removing a border strip of length t replaces some
// beta_i by beta_i - t (valid iff nonnegative and not already present), with
// sign (-1)^{#beta_j strictly between the old and new value}.
using MNKey = std::pair<std::vector<int>, size_t>;

long long mn_rec(const std::vector<int>& parts, const std::vector<int>& mu,
                 size_t idx, std::map<MNKey, long long>& cache) {
    if (parts.empty()) return 1;  // idx == mu.size() whenever sizes match
    MNKey key{parts, idx};
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    int k = static_cast<int>(parts.size());
    std::vector<int> beta(k);
    for (int i = 0; i < k; ++i) beta[i] = parts[i] + k - 1 - i;

    int t = mu[idx];
    long long total = 0;
    for (int i = 0; i < k; ++i) {
        int b = beta[i] - t;
        if (b < 0) continue;
        if (std::find(beta.begin(), beta.end(), b) != beta.end()) continue;
        int height = 0;
        for (int v : beta)
            if (b < v && v < beta[i]) ++height;
        std::vector<int> nbeta = beta;
        nbeta[i] = b;
        std::sort(nbeta.begin(), nbeta.end(), std::greater<int>());
        std::vector<int> nparts;
        for (int j = 0; j < k; ++j) {
            int p = nbeta[j] - (k - 1 - j);
            if (p > 0) nparts.push_back(p);
        }
        long long sub = mn_rec(nparts, mu, idx + 1, cache);
        total += (height % 2 == 0) ? sub : -sub;
    }
    cache.emplace(std::move(key), total);
    return total;
}

}  // namespace

long long character_value(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw std::invalid_argument("character_value: |lambda| != |mu|");
    std::map<MNKey, long long> cache;
    return mn_rec(lambda.parts(), mu.parts(), 0, cache);
}

CharacterTable::CharacterTable(int n) : n_(n) {
    partitions_ = enumerate_partitions(n);
    for (size_t i = 0; i < partitions_.size(); ++i)
        index_[partitions_[i].parts()] = static_cast<int>(i);
    Integer nfact = factorial(n);
    for (const auto& mu : partitions_) class_sizes_.push_back(nfact / centralizer_order(mu));
    values_.resize(partitions_.size());
    for (size_t i = 0; i < partitions_.size(); ++i) {
        for (const auto& mu : partitions_) {
            // The memo key (parts, idx) pins down a subproblem only for a
            // fixed mu, so the cache cannot be shared across columns.
            std::map<MNKey, long long> cache;
            values_[i].push_back(mn_rec(partitions_[i].parts(), mu.parts(), 0, cache));
        }
    }
}

const CharacterTable& CharacterTable::get(int n) {
    static std::mutex mtx;
    static std::map<int, std::unique_ptr<CharacterTable>> tables;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = tables.find(n);
    if (it == tables.end())
        it = tables.emplace(n, std::unique_ptr<CharacterTable>(new CharacterTable(n))).first;
    return *it->second;
}

int CharacterTable::index_of(const Partition& p) const {
    auto it = index_.find(p.parts());
    if (it == index_.end()) throw std::invalid_argument("partition not of degree n");
    return it->second;
}

long long CharacterTable::value(const Partition& lambda, const Partition& mu) const {
    return values_[index_of(lambda)][index_of(mu)];
}

Integer unitary_dimension(const Partition& lambda, int d) {
    // prod over cells (i,j) of (d + j - i) / hook(i,j); zero iff length > d.
    Integer content_prod = 1;
    const auto& parts = lambda.parts();
    for (size_t i = 0; i < parts.size(); ++i)
        for (int j = 0; j < parts[i]; ++j)
            content_prod *= d + j - static_cast<int>(i);
    if (content_prod == 0) return 0;
    Integer num = symmetric_group_dimension(lambda) * content_prod;
    Integer den = factorial(lambda.size());
    Integer q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw std::logic_error("unitary_dimension: non-integral result");
    return q;
}

Integer YoungSubgroup::order() const {
    return pow(factorial(m), l);
}

std::vector<Permutation> YoungSubgroup::elements() const {
    std::vector<Permutation> block = all_permutations(m);
    std::vector<Permutation> out;
    std::vector<int> im(degree());
    std::function<void(int)> rec = [&](int blk) {
        if (blk == l) {
            out.push_back(Permutation(im));
            return;
        }
        for (const auto& p : block) {
            for (int i = 0; i < m; ++i) im[blk * m + i] = blk * m + p(i);
            rec(blk + 1);
        }
    };
    rec(0);
    return out;
}

Integer induced_multiplicity(int m, int l, const Partition& nu, LinearCharacter xi) {
    int n = m * l;
    if (n > 10)
        throw BudgetError("induced_multiplicity: m*l exceeds guard of 10",
                          static_cast<double>(n));
    if (nu.size() != n)
        throw std::invalid_argument("induced_multiplicity: |nu| != m*l");
    // <Res chi_nu, xi>_{S_m^l}: sum over component cycle types, weighted by
    // class sizes, instead of over the (m!)^l group elements.
    std::vector<Partition> classes = enumerate_partitions(m);
    Integer mfact = factorial(m);
    std::vector<Integer> weight;
    std::vector<int> parity;  // sign of the class: (-1)^{m - length}
    for (const auto& c : classes) {
        weight.push_back(mfact / centralizer_order(c));
        parity.push_back((m - c.length()) % 2);
    }
    const CharacterTable& table = CharacterTable::get(n);
    Integer total = 0;
    std::vector<int> choice(l, 0);
    std::function<void(int)> rec = [&](int blk) {
        if (blk == l) {
            std::vector<int> combined;
            Integer w = 1;
            int par = 0;
            for (int b = 0; b < l; ++b) {
                const auto& c = classes[choice[b]];
                combined.insert(combined.end(), c.parts().begin(), c.parts().end());
                w *= weight[choice[b]];
                par += parity[choice[b]];
            }
            std::sort(combined.begin(), combined.end(), std::greater<int>());
            long chi = static_cast<long>(table.value(nu, Partition(combined)));
            Integer term = w * chi;
            if (xi == LinearCharacter::Sign && par % 2 != 0) term = -term;
            total += term;
            return;
        }
        for (size_t c = 0; c < classes.size(); ++c) {
            choice[blk] = static_cast<int>(c);
            rec(blk + 1);
        }
    };
    rec(0);
    Integer order = pow(mfact, l);
    Integer q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), total.get_mpz_t(), order.get_mpz_t());
    if (r != 0) throw std::logic_error("induced_multiplicity: non-integral result");
    if (q < 0) throw std::logic_error("induced_multiplicity: negative result");
    return q;
}

Rational coset_average(const YoungSubgroup& H, LinearCharacter xi,
                       const Partition& lambda, const Permutation& g) {
    int n = H.degree();
    if (n > 8)
        throw BudgetError("coset_average: degree exceeds guard of 8",
                          static_cast<double>(n));
    if (g.degree() != n || lambda.size() != n)
        throw std::invalid_argument("coset_average: degree mismatch");
    const CharacterTable& table = CharacterTable::get(n);
    Integer sum = 0;
    for (const auto& h : H.elements()) {
        long chi = static_cast<long>(table.value(lambda, (g * h).cycle_type()));
        if (xi == LinearCharacter::Sign && h.sign() < 0)
            sum -= chi;
        else
            sum += chi;
    }
    return Rational(sum) / Rational(H.order());
}

std::vector<std::vector<Permutation>> double_cosets(int n, const YoungSubgroup& H) {
    if (n != H.degree())
        throw std::invalid_argument("double_cosets: H must have degree n");
    if (n > 8)
        throw BudgetError("double_cosets: degree exceeds guard of 8",
                          static_cast<double>(n));
    std::vector<Permutation> group = all_permutations(n);
    std::vector<Permutation> hs = H.elements();
    std::set<Permutation> visited;
    std::vector<std::vector<Permutation>> cosets;
    for (const auto& g : group) {
        if (visited.count(g)) continue;
        std::set<Permutation> coset;
        for (const auto& h1 : hs)
            for (const auto& h2 : hs) coset.insert(h1 * g * h2);
        std::vector<Permutation> list{g};
        for (const auto& x : coset)
            if (!(x == g)) list.push_back(x);
        visited.insert(coset.begin(), coset.end());
        cosets.push_back(std::move(list));
    }
    return cosets;
}

}  // namespace wordmom
