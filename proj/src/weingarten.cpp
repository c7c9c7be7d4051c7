#include "wordmom/weingarten.hpp"

#include <mutex>
#include <stdexcept>

namespace wordmom {

WeingartenTable::WeingartenTable(int n, int d) : n_(n), d_(d) {
    if (n < 1 || n > 16)
        throw BudgetError("weingarten_table: degree exceeds guard of 16",
                          static_cast<double>(n));
    if (d < 1) throw std::invalid_argument("weingarten_table: d must be positive");
    const CharacterTable& table = CharacterTable::get(n);
    const auto& parts = table.partitions();
    Rational nfact2 = Rational(factorial(n)) * Rational(factorial(n));
    values_.assign(parts.size(), Rational(0));
    for (size_t li = 0; li < parts.size(); ++li) {
        const Partition& lambda = parts[li];
        if (lambda.length() > d) continue;
        Integer dim_s = symmetric_group_dimension(lambda);
        Integer dim_u = unitary_dimension(lambda, d);
        Rational weight = Rational(dim_s * dim_s) / (nfact2 * Rational(dim_u));
        for (size_t mi = 0; mi < parts.size(); ++mi)
            values_[mi] += weight * static_cast<long>(table.value_at(static_cast<int>(li), static_cast<int>(mi)));
    }
}

const WeingartenTable& WeingartenTable::get(int n, int d) {
    static std::mutex mtx;
    static std::map<std::pair<int, int>, std::unique_ptr<WeingartenTable>> tables;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(n, d);
    auto it = tables.find(key);
    if (it == tables.end())
        it = tables.emplace(key, std::unique_ptr<WeingartenTable>(new WeingartenTable(n, d))).first;
    return *it->second;
}

const Rational& WeingartenTable::value(const Partition& cycle_type) const {
    return values_[CharacterTable::get(n_).index_of(cycle_type)];
}

const Rational& WeingartenTable::value(const Permutation& sigma) const {
    if (sigma.degree() != n_)
        throw std::invalid_argument("weingarten_value: permutation degree mismatch");
    return value(sigma.cycle_type());
}

const std::vector<Partition>& WeingartenTable::cycle_types() const {
    return CharacterTable::get(n_).partitions();
}

}  // namespace wordmom
