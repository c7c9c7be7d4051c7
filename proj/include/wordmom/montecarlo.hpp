#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "wordmom/config.hpp"
#include "wordmom/partition.hpp"
#include "wordmom/word.hpp"

namespace wordmom {

using Matrix = Eigen::MatrixXcd;

/// Deterministic RNG substream: (master seed, stream index) fully determine
/// the sequence, so parallel sampling stays reproducible.
class RngStream {
  public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_index);
    double standard_normal();
    /// (g1 + i g2)/sqrt(2), g1, g2 i.i.d. N(0,1); unit variance E|z|^2 = 1.
    std::complex<double> standard_complex_normal();

  private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Haar-distributed unitary: complex Ginibre + Householder QR, each Q
/// column corrected by the phase of the matching R diagonal entry.
Matrix sample_haar(int d, RngStream& rng);

/// Ordered product of the matrices/adjoints spelled by the word's letters.
Matrix evaluate_word(const Word& w, const std::vector<Matrix>& matrices);

/// Eigenvalues of a (normal) matrix; the basis for all spectral statistics.
std::vector<std::complex<double>> eigenvalues(const Matrix& m);

/// c_m(M): coefficient of t^{d-m} in det(t I - M), via the elementary-
/// symmetric Newton recurrence on eigenvalue power sums; c_m = (-1)^m e_m.
std::complex<double> char_poly_coefficient(const Matrix& m, int order);

/// tr Sym^m(M): complete homogeneous recurrence h_m = (1/m) sum h_{m-k} p_k.
std::complex<double> sym_trace(const Matrix& m, int order);

/// Statistic evaluated per Haar sample.
struct Statistic {
    enum Kind {
        Cm,          // c_m(w(X))
        CmAbs2,      // |c_m|^2 = |tr wedge^m|^2
        WedgeTrace,  // tr wedge^m = (-1)^m c_m
        SymTrace,    // tr Sym^m
        SymAbs2,     // |tr Sym^m|^2
        RhoAbs2,     // |rho_lambda(w(X))|^2 via the power-sum expansion
    } kind = CmAbs2;
    int m = 1;         // for the c_m / wedge / sym kinds
    Partition lambda;  // for RhoAbs2
};

struct EmpiricalMoment {
    std::complex<double> mean;
    double stderr_ = 0.0;  // sample SD / sqrt(N)
    long long n = 0;
    std::uint64_t seed = 0;
};

/// Mean and standard error of the statistic over N independent Haar draws
/// of rank(w) matrices. Deterministic given (seed, N, d, w, thread count).
EmpiricalMoment empirical_moment(const Word& w, const Statistic& stat, int d,
                                 long long n_samples, std::uint64_t seed,
                                 const RunConfig& cfg = {});

}  // namespace wordmom
