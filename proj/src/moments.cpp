#include "wordmom/moments.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "wordmom/characters.hpp"

namespace wordmom {

Partition RepSelector::to_partition() const {
    switch (kind) {
        case Wedge:
            return Partition(std::vector<int>(m, 1));
        case Sym:
            return Partition({m});
        case Lambda:
            return lambda;
    }
    throw std::logic_error("unreachable");
}

std::vector<std::pair<Partition, Rational>> power_sum_expansion(const Partition& lambda) {
    int m = lambda.size();
    if (m < 1) throw std::invalid_argument("power_sum_expansion: empty partition");
    if (m > 8)
        throw BudgetError("power_sum_expansion: |lambda| exceeds guard of 8",
                          static_cast<double>(m));
    const CharacterTable& table = CharacterTable::get(m);
    std::vector<std::pair<Partition, Rational>> out;
    for (const auto& mu : table.partitions())
        out.emplace_back(mu, Rational(static_cast<long>(table.value(lambda, mu))) /
                                 Rational(centralizer_order(mu)));
    return out;
}

namespace {

// tr_mu(w) as a list of engine words: one w^{mu_i} per part.
std::vector<Word> trace_mu_words(const Word& w, const Partition& mu) {
    std::vector<Word> out;
    for (int part : mu.parts()) out.push_back(w.power(part));
    return out;
}

Word reduced_nonempty(const Word& w, const char* op) {
    Word r = cyclic_reduce(w);
    if (r.empty())
        throw std::invalid_argument(std::string(op) + ": word is trivial in the free group");
    return r;
}

}  // namespace

Rational first_moment(const Word& w, const RepSelector& rep, int d, const RunConfig& cfg) {
    Word wr = reduced_nonempty(w, "first_moment");
    Rational total(0);
    for (const auto& [mu, coeff] : power_sum_expansion(rep.to_partition())) {
        try {
            total += coeff * expected_trace_product(trace_mu_words(wr, mu), d, cfg);
        } catch (const BudgetError& e) {
            throw BudgetError(std::string(e.what()) + " [at mu=" + mu.to_json() + "]",
                              e.required_terms());
        }
    }
    return total;
}

Rational second_moment(const Word& w, const RepSelector& rep, int d, const RunConfig& cfg) {
    Word wr = reduced_nonempty(w, "second_moment");
    Word wi = wr.inverse();
    auto expansion = power_sum_expansion(rep.to_partition());
    Rational total(0);
    for (const auto& [mu, cmu] : expansion) {
        for (const auto& [mup, cmup] : expansion) {
            std::vector<Word> words = trace_mu_words(wr, mu);
            for (const auto& v : trace_mu_words(wi, mup)) words.push_back(v);
            try {
                total += cmu * cmup * expected_trace_product(words, d, cfg);
            } catch (const BudgetError& e) {
                throw BudgetError(std::string(e.what()) + " [at (mu,mu')=(" +
                                      mu.to_json() + "," + mup.to_json() + ")]",
                                  e.required_terms());
            }
        }
    }
    return total;
}

Rational ds_moment(const std::vector<int>& a, const std::vector<int>& b, int l, int d,
                   const RunConfig& cfg) {
    if (l < 1) throw std::invalid_argument("ds_moment: l must be positive");
    Word x({1});
    std::vector<Word> words;
    for (size_t j = 0; j < a.size(); ++j)
        for (int c = 0; c < a[j]; ++c) words.push_back(x.power(static_cast<int>(j + 1) * l));
    for (size_t j = 0; j < b.size(); ++j)
        for (int c = 0; c < b[j]; ++c)
            words.push_back(x.power(static_cast<int>(j + 1) * l).inverse());
    if (words.empty()) return Rational(1);  // empty product
    return expected_trace_product(words, d, cfg);
}

namespace {

// sqrt(n) = s * sqrt(r) with r squarefree; returns (s, r). Trial division
// suffices: radicands here are prod (j p)^{e_j} with j, p small.
std::pair<Integer, Integer> squarefree_split(Integer n) {
    Integer s = 1, r = 1;
    for (Integer f = 2; f * f <= n; ++f) {
        while (n % (f * f) == 0) {
            s *= f;
            n /= f * f;
        }
        if (n % f == 0) {
            r *= f;
            n /= f;
        }
    }
    r *= n;
    return {s, r};
}

}  // namespace

std::complex<double> LimitPolynomial::evaluate(const std::vector<std::complex<double>>& z) const {
    std::complex<double> total = 0.0;
    for (const auto& term : terms) {
        std::complex<double> v =
            term.coefficient.get_d() * std::sqrt(term.radicand.get_d());
        for (size_t j = 0; j < term.exponents.size(); ++j)
            for (int e = 0; e < term.exponents[j]; ++e) v *= z[j];
        total += v;
    }
    return total;
}

LimitPolynomial limit_polynomial(int m, int p) {
    if (m < 1 || p < 1) throw std::invalid_argument("limit_polynomial: m, p must be positive");
    if (m > 8)
        throw BudgetError("limit_polynomial: m exceeds guard of 8", static_cast<double>(m));
    // det over S_m; entry (i,j): j = i+1 -> constant i+1; j <= i ->
    // sqrt((i-j+1)p) Z_{i-j+1}; else 0.
    std::map<std::vector<int>, Rational> coeffs;  // exponent vector -> rational sum
    for (const auto& pi : all_permutations(m)) {
        std::vector<int> expo(m, 0);
        Integer consts = 1;
        bool zero = false;
        for (int i = 0; i < m && !zero; ++i) {
            int j = pi(i);
            if (j == i + 1)
                consts *= i + 1;
            else if (j <= i)
                ++expo[i - j];  // Z_{i-j+1}
            else
                zero = true;
        }
        if (zero) continue;
        coeffs[expo] += Rational(pi.sign() * consts);
    }
    LimitPolynomial poly;
    poly.m = m;
    poly.p = p;
    Rational inv_mfact = Rational(1) / Rational(factorial(m));
    for (const auto& [expo, rat] : coeffs) {
        if (rat == 0) continue;
        // The monomial carries sqrt(prod_j (j p)^{e_j}).
        Integer rad_full = 1;
        for (size_t j = 0; j < expo.size(); ++j) {
            Integer base = Integer(static_cast<long>(j + 1)) * p;
            rad_full *= pow(base, static_cast<unsigned>(expo[j]));
        }
        auto [s, r] = squarefree_split(rad_full);
        LimitTerm term;
        term.exponents = expo;
        term.coefficient = rat * inv_mfact * Rational(s);
        term.radicand = r;
        poly.terms.push_back(std::move(term));
    }
    return poly;
}

}  // namespace wordmom
