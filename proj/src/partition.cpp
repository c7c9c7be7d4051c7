#include "wordmom/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace wordmom {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be non-increasing");
        size_ += parts_[i];
    }
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition{};
    std::vector<int> conj(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++conj[j];
    return Partition(std::move(conj));
}

std::string Partition::to_json() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ']';
    return os.str();
}

std::vector<Partition> enumerate_partitions(int n, int max_length) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be >= 0");
    if (n == 0) return {Partition()};
    std::vector<Partition> out;
    std::vector<int> cur;
    // Descending first-part recursion yields reverse-lexicographic order.
    std::function<void(int, int)> rec = [&](int rem, int max_part) {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        if (max_length > 0 && static_cast<int>(cur.size()) >= max_length) return;
        for (int p = std::min(rem, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

Integer hook_product(const Partition& lambda) {
    Integer prod = 1;
    const auto& parts = lambda.parts();
    Partition conj = lambda.conjugate();
    for (size_t i = 0; i < parts.size(); ++i) {
        for (int j = 0; j < parts[i]; ++j) {
            int arm = parts[i] - j - 1;
            int leg = conj.parts()[j] - static_cast<int>(i) - 1;
            prod *= arm + leg + 1;
        }
    }
    return prod;
}

Integer symmetric_group_dimension(const Partition& lambda) {
    Integer dim = factorial(lambda.size());
    Integer hooks = hook_product(lambda);
    Integer q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), dim.get_mpz_t(), hooks.get_mpz_t());
    if (r != 0) throw std::logic_error("hook product does not divide n!");
    return q;
}

Integer stirling_unsigned(int m, int k) {
    if (k < 0 || k > m) throw std::invalid_argument("stirling_unsigned: need 0 <= k <= m");
    // [m k] = [m-1 k-1] + (m-1)[m-1 k]
    std::vector<Integer> row(1, 1);  // [0 0] = 1
    for (int i = 1; i <= m; ++i) {
        std::vector<Integer> next(i + 1, 0);
        for (int j = 0; j <= i; ++j) {
            if (j > 0) next[j] += row[j - 1];
            if (j < i) next[j] += Integer(i - 1) * row[j];
        }
        row = std::move(next);
    }
    return row[k];
}

std::vector<int> multiplicity_vector(const Partition& mu, int n) {
    std::vector<int> a(n, 0);
    for (int p : mu.parts()) {
        if (p > n) throw std::invalid_argument("multiplicity_vector: part exceeds n");
        ++a[p - 1];
    }
    return a;
}

Integer centralizer_order(const Partition& mu) {
    Integer z = 1;
    auto a = multiplicity_vector(mu, mu.size() == 0 ? 1 : mu.size());
    for (size_t j = 0; j < a.size(); ++j) {
        z *= factorial(a[j]) * pow(Integer(static_cast<long>(j + 1)), a[j]);
    }
    return z;
}

namespace {

struct LabeledDiagram {
    std::vector<int> shape;                 // current row lengths
    std::vector<std::pair<int, int>> boxes; // (row, col) of added boxes, in add order
    std::vector<int> labels;                // stage label per added box
};

// Enumerates all ways to add `count` boxes to `dia`, no two in one column,
// labeling them `label`; calls sink on each completed expansion.
void expand_stage(LabeledDiagram& dia, int count, int label,
                  const std::function<void(LabeledDiagram&)>& sink) {
    std::vector<int> base = dia.shape;
    int rows = static_cast<int>(base.size());
    // Choose per-row additions top-down; horizontal-strip condition:
    // new_len[i] <= old_len[i-1] for i >= 1 keeps columns distinct.
    std::function<void(int, int)> rec = [&](int row, int rem) {
        if (row > rows) {
            if (rem == 0) sink(dia);
            return;
        }
        int old_len = row < rows ? base[row] : 0;
        int cap = row == 0 ? rem : std::max(0, base[row - 1] - old_len);
        for (int add = 0; add <= std::min(rem, cap); ++add) {
            if (row == rows && add == 0 && rem > 0) continue;  // nothing below
            size_t nboxes = dia.boxes.size();
            if (add > 0) {
                if (row == static_cast<int>(dia.shape.size())) dia.shape.push_back(0);
                for (int b = 0; b < add; ++b) {
                    dia.boxes.emplace_back(row, dia.shape[row]);
                    dia.labels.push_back(label);
                    ++dia.shape[row];
                }
            }
            if (row == rows && add > 0) {
                if (rem - add == 0) sink(dia);
            } else {
                rec(row + 1, rem - add);
            }
            while (dia.boxes.size() > nboxes) {
                --dia.shape[dia.boxes.back().first];
                dia.boxes.pop_back();
                dia.labels.pop_back();
            }
            if (!dia.shape.empty() && dia.shape.back() == 0) dia.shape.pop_back();
        }
    };
    rec(0, count);
}

// Reading order: rows top to bottom, within a row right to left. Strictness:
// every proper prefix has at least as many labels p as labels p+1.
bool is_strict(const LabeledDiagram& dia, int num_labels) {
    std::vector<std::pair<std::pair<int, int>, int>> order;
    for (size_t b = 0; b < dia.boxes.size(); ++b) {
        order.push_back({{dia.boxes[b].first, -dia.boxes[b].second}, dia.labels[b]});
    }
    std::sort(order.begin(), order.end());
    std::vector<int> seen(num_labels + 2, 0);
    for (const auto& [pos, label] : order) {
        for (int p = 1; p < num_labels; ++p) {
            if (seen[p] < seen[p + 1]) return false;
        }
        ++seen[label];
    }
    return true;
}

}  // namespace

Integer lr_coefficient(const Partition& lambda, const Partition& mu,
                       const Partition& nu) {
    if (nu.size() != lambda.size() + mu.size()) return 0;
    if (lambda.size() + mu.size() > 20)
        throw BudgetError("lr_coefficient: |lambda|+|mu| exceeds guard of 20",
                          static_cast<double>(lambda.size() + mu.size()));
    Integer count = 0;
    LabeledDiagram dia;
    dia.shape = lambda.parts();
    int stages = mu.length();
    std::function<void(int)> run = [&](int stage) {
        if (stage == stages) {
            if (Partition(dia.shape) == nu && is_strict(dia, stages)) ++count;
            return;
        }
        expand_stage(dia, mu.parts()[stage], stage + 1,
                     [&](LabeledDiagram&) { run(stage + 1); });
    };
    run(0);
    return count;
}

}  // namespace wordmom
