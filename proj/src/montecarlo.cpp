#include "wordmom/montecarlo.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

#include "wordmom/engine.hpp"
#include "wordmom/moments.hpp"

namespace wordmom {

namespace {

// splitmix64: decorrelates (seed, stream) pairs before feeding mt19937_64.
std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_index) {
    std::uint64_t s = master_seed;
    std::uint64_t a = splitmix64(s);
    s ^= stream_index * 0x9e3779b97f4a7c15ULL + 0x243f6a8885a308d3ULL;
    std::uint64_t b = splitmix64(s);
    std::seed_seq seq{static_cast<unsigned>(a), static_cast<unsigned>(a >> 32),
                      static_cast<unsigned>(b), static_cast<unsigned>(b >> 32)};
    gen_.seed(seq);
}

double RngStream::standard_normal() {
    // Box-Muller; explicit so results do not depend on the standard
    // library's normal_distribution implementation.
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = 0.0, u2 = 0.0;
    do {
        u1 = std::generate_canonical<double, 53>(gen_);
    } while (u1 <= 0.0);
    u2 = std::generate_canonical<double, 53>(gen_);
    double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * M_PI * u2);
    have_spare_ = true;
    return r * std::cos(2.0 * M_PI * u2);
}

std::complex<double> RngStream::standard_complex_normal() {
    return {standard_normal() * M_SQRT1_2, standard_normal() * M_SQRT1_2};
}

Matrix sample_haar(int d, RngStream& rng) {
    Matrix g(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) g(i, j) = rng.standard_complex_normal();
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ() * Matrix::Identity(d, d);
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < d; ++j) {
        std::complex<double> rjj = r(j, j);
        double mag = std::abs(rjj);
        if (mag > 0) q.col(j) *= rjj / mag;
    }
    return q;
}

Matrix evaluate_word(const Word& w, const std::vector<Matrix>& matrices) {
    if (w.rank() > static_cast<int>(matrices.size()))
        throw std::invalid_argument("evaluate_word: word rank exceeds matrix count");
    int d = matrices.empty() ? 1 : static_cast<int>(matrices[0].rows());
    Matrix result = Matrix::Identity(d, d);
    for (int l : w.letters()) {
        const Matrix& x = matrices[std::abs(l) - 1];
        if (l > 0)
            result *= x;
        else
            result *= x.adjoint();
    }
    return result;
}

std::vector<std::complex<double>> eigenvalues(const Matrix& m) {
    Eigen::ComplexEigenSolver<Matrix> solver(m, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigenvalues: solver failed");
    std::vector<std::complex<double>> out(m.rows());
    for (int i = 0; i < m.rows(); ++i) out[i] = solver.eigenvalues()(i);
    return out;
}

namespace {

std::vector<std::complex<double>> power_sums(const std::vector<std::complex<double>>& eig,
                                             int up_to) {
    std::vector<std::complex<double>> p(up_to + 1, 0.0);
    for (int k = 1; k <= up_to; ++k)
        for (const auto& ev : eig) p[k] += std::pow(ev, k);
    return p;
}

// e_m = (1/m) sum_{k=1}^m (-1)^{k-1} e_{m-k} p_k
std::vector<std::complex<double>> elementary_from_powers(
    const std::vector<std::complex<double>>& p, int up_to) {
    std::vector<std::complex<double>> e(up_to + 1, 0.0);
    e[0] = 1.0;
    for (int m = 1; m <= up_to; ++m) {
        std::complex<double> acc = 0.0;
        for (int k = 1; k <= m; ++k) acc += (k % 2 ? 1.0 : -1.0) * e[m - k] * p[k];
        e[m] = acc / static_cast<double>(m);
    }
    return e;
}

// h_m = (1/m) sum_{k=1}^m h_{m-k} p_k
std::vector<std::complex<double>> homogeneous_from_powers(
    const std::vector<std::complex<double>>& p, int up_to) {
    std::vector<std::complex<double>> h(up_to + 1, 0.0);
    h[0] = 1.0;
    for (int m = 1; m <= up_to; ++m) {
        std::complex<double> acc = 0.0;
        for (int k = 1; k <= m; ++k) acc += h[m - k] * p[k];
        h[m] = acc / static_cast<double>(m);
    }
    return h;
}

}  // namespace

std::complex<double> char_poly_coefficient(const Matrix& m, int order) {
    if (order < 1 || order > m.rows())
        throw std::invalid_argument("char_poly_coefficient: need 1 <= m <= d");
    auto p = power_sums(eigenvalues(m), order);
    auto e = elementary_from_powers(p, order);
    return (order % 2 ? -e[order] : e[order]);
}

std::complex<double> sym_trace(const Matrix& m, int order) {
    if (order < 0) throw std::invalid_argument("sym_trace: order must be >= 0");
    auto p = power_sums(eigenvalues(m), order);
    return homogeneous_from_powers(p, order)[order];
}

namespace {

struct StatEvaluator {
    Statistic stat;
    // For RhoAbs2: (mu parts, coefficient as double) from the power-sum
    // expansion of rho_lambda.
    std::vector<std::pair<std::vector<int>, double>> expansion;
    int max_power = 0;

    explicit StatEvaluator(const Statistic& s) : stat(s) {
        if (stat.kind == Statistic::RhoAbs2) {
            for (const auto& [mu, coeff] : power_sum_expansion(stat.lambda)) {
                expansion.emplace_back(mu.parts(), coeff.get_d());
                if (!mu.parts().empty()) max_power = std::max(max_power, mu.parts()[0]);
            }
        } else {
            max_power = stat.m;
        }
    }

    std::complex<double> operator()(const Matrix& m) const {
        auto eig = eigenvalues(m);
        auto p = power_sums(eig, max_power);
        switch (stat.kind) {
            case Statistic::Cm:
            case Statistic::CmAbs2:
            case Statistic::WedgeTrace: {
                auto e = elementary_from_powers(p, stat.m);
                std::complex<double> cm = (stat.m % 2 ? -e[stat.m] : e[stat.m]);
                if (stat.kind == Statistic::Cm) return cm;
                if (stat.kind == Statistic::WedgeTrace)
                    return (stat.m % 2 ? -cm : cm);
                return std::norm(cm);
            }
            case Statistic::SymTrace:
            case Statistic::SymAbs2: {
                auto h = homogeneous_from_powers(p, stat.m);
                if (stat.kind == Statistic::SymTrace) return h[stat.m];
                return std::norm(h[stat.m]);
            }
            case Statistic::RhoAbs2: {
                std::complex<double> rho = 0.0;
                for (const auto& [parts, coeff] : expansion) {
                    std::complex<double> tr_mu = 1.0;
                    for (int part : parts) tr_mu *= p[part];
                    rho += coeff * tr_mu;
                }
                return std::norm(rho);
            }
        }
        throw std::logic_error("unreachable");
    }
};

}  // namespace

EmpiricalMoment empirical_moment(const Word& w, const Statistic& stat, int d,
                                 long long n_samples, std::uint64_t seed,
                                 const RunConfig& cfg) {
    if (n_samples < 1) throw std::invalid_argument("empirical_moment: need N >= 1");
    StatEvaluator evaluate(stat);
    int rank = std::max(1, w.rank());
    int n_threads = static_cast<int>(
        std::min<long long>(effective_threads(cfg), n_samples));

    struct Partial {
        std::complex<double> sum{0.0, 0.0};
        double sum_sq = 0.0;  // sum of |x|^2
    };
    std::vector<Partial> partials(n_threads);

    auto worker = [&](int t, long long lo, long long hi) {
        Partial acc;
        std::vector<Matrix> mats(rank);
        for (long long i = lo; i < hi; ++i) {
            RngStream rng(seed, static_cast<std::uint64_t>(i));
            for (int k = 0; k < rank; ++k) mats[k] = sample_haar(d, rng);
            std::complex<double> x = evaluate(evaluate_word(w, mats));
            acc.sum += x;
            acc.sum_sq += std::norm(x);
        }
        partials[t] = acc;
    };

    if (n_threads <= 1) {
        worker(0, 0, n_samples);
    } else {
        std::vector<std::thread> workers;
        long long chunk = (n_samples + n_threads - 1) / n_threads;
        for (int t = 0; t < n_threads; ++t) {
            long long lo = t * chunk;
            long long hi = std::min(n_samples, lo + chunk);
            workers.emplace_back(worker, t, lo, hi);
        }
        for (auto& th : workers) th.join();
    }

    std::complex<double> sum{0.0, 0.0};
    double sum_sq = 0.0;
    for (const auto& pt : partials) {
        sum += pt.sum;
        sum_sq += pt.sum_sq;
    }
    EmpiricalMoment out;
    out.n = n_samples;
    out.seed = seed;
    out.mean = sum / static_cast<double>(n_samples);
    double var = 0.0;
    if (n_samples > 1) {
        double num = sum_sq - std::norm(out.mean) * static_cast<double>(n_samples);
        var = std::max(0.0, num / static_cast<double>(n_samples - 1));
    }
    out.stderr_ = std::sqrt(var / static_cast<double>(n_samples));
    return out;
}

}  // namespace wordmom
