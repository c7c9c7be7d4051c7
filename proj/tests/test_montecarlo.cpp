#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "wordmom/montecarlo.hpp"
#include "wordmom/rational.hpp"

using namespace wordmom;

TEST_CASE("sampled matrices are unitary") {
    for (int d : {1, 2, 5, 16, 64}) {
        RngStream rng(42, static_cast<std::uint64_t>(d));
        Matrix u = sample_haar(d, rng);
        double residual = (u * u.adjoint() - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
        CHECK(residual < 1e-10);
    }
}

TEST_CASE("evaluate_word") {
    RngStream rng(7, 0);
    std::vector<Matrix> ms = {sample_haar(3, rng), sample_haar(3, rng)};
    CHECK((evaluate_word(Word(), ms) - Matrix::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((evaluate_word(parse_word("xX"), ms) - Matrix::Identity(3, 3))
              .cwiseAbs()
              .maxCoeff() < 1e-10);
    Matrix prod = evaluate_word(parse_word("xy"), ms);
    CHECK((prod - ms[0] * ms[1]).cwiseAbs().maxCoeff() < 1e-12);
    Matrix engel = evaluate_word(parse_word("[[x,y],y]"), {sample_haar(2, rng),
                                                           sample_haar(2, rng)});
    CHECK(std::abs(engel.trace()) <= 2.0 + 1e-10);
}

TEST_CASE("char_poly_coefficient on the identity") {
    for (int d : {2, 4, 6}) {
        Matrix id = Matrix::Identity(d, d);
        for (int m = 1; m <= d; ++m) {
            double expected = binomial(static_cast<unsigned>(d), static_cast<unsigned>(m))
                                  .get_d() *
                              (m % 2 ? -1.0 : 1.0);
            CHECK(std::abs(char_poly_coefficient(id, m) -
                           std::complex<double>(expected, 0.0)) < 1e-8);
        }
    }
    // c_1(M) = -tr(M).
    RngStream rng(3, 1);
    Matrix u = sample_haar(4, rng);
    CHECK(std::abs(char_poly_coefficient(u, 1) + u.trace()) < 1e-10);
}

TEST_CASE("char poly coefficients match a direct expansion at d <= 6") {
    for (int d = 2; d <= 6; ++d) {
        RngStream rng(11, static_cast<std::uint64_t>(d));
        Matrix u = sample_haar(d, rng);
        auto evs = eigenvalues(u);
        // Expand prod (t - lambda_i) directly.
        std::vector<std::complex<double>> coeffs = {1.0};  // descending powers of t
        for (const auto& ev : evs) {
            coeffs.push_back(0.0);
            for (size_t j = coeffs.size() - 1; j >= 1; --j) coeffs[j] -= ev * coeffs[j - 1];
        }
        for (int m = 1; m <= d; ++m)
            CHECK(std::abs(char_poly_coefficient(u, m) - coeffs[m]) < 1e-8);
    }
}

TEST_CASE("sym_trace anchors") {
    for (int d : {2, 3, 5}) {
        Matrix id = Matrix::Identity(d, d);
        for (int m = 1; m <= 3; ++m) {
            double expected =
                binomial(static_cast<unsigned>(d + m - 1), static_cast<unsigned>(m)).get_d();
            CHECK(std::abs(sym_trace(id, m) - std::complex<double>(expected, 0.0)) < 1e-8);
        }
    }
    Matrix diag = Matrix::Zero(2, 2);
    std::complex<double> u(0.3, 0.4), v(-0.8, 0.6);
    diag(0, 0) = u;
    diag(1, 1) = v;
    CHECK(std::abs(sym_trace(diag, 2) - (u * u + u * v + v * v)) < 1e-10);
    RngStream rng(5, 0);
    Matrix m = sample_haar(3, rng);
    CHECK(std::abs(sym_trace(m, 1) - m.trace()) < 1e-10);
}

TEST_CASE("empirical moments: determinism and thread independence") {
    Word w = parse_word("[x,y]");
    Statistic stat{Statistic::WedgeTrace, 1, {}};
    RunConfig one, four;
    one.threads = 1;
    four.threads = 4;
    EmpiricalMoment a = empirical_moment(w, stat, 2, 2000, 99, one);
    EmpiricalMoment b = empirical_moment(w, stat, 2, 2000, 99, four);
    EmpiricalMoment c = empirical_moment(w, stat, 2, 2000, 99, one);
    CHECK(a.mean == c.mean);  // bit-identical for an identical configuration
    CHECK(a.stderr_ == c.stderr_);
    // Thread count changes only the summation grouping: the same samples are
    // drawn, so the means agree to rounding error.
    CHECK(std::abs(a.mean - b.mean) < 1e-12);
    CHECK(std::abs(a.stderr_ - b.stderr_) < 1e-12);
    EmpiricalMoment other = empirical_moment(w, stat, 2, 2000, 100, one);
    CHECK(a.mean != other.mean);
}

TEST_CASE("empirical moments agree with known exact values") {
    // E tr X = 0 at d=3.
    EmpiricalMoment zero = empirical_moment(parse_word("x"), {Statistic::WedgeTrace, 1, {}},
                                            3, 20000, 12345);
    CHECK(std::abs(zero.mean) <= 5.0 * zero.stderr_);
    // E |tr X|^2 = 1 at d=5.
    EmpiricalMoment one = empirical_moment(parse_word("x"), {Statistic::CmAbs2, 1, {}}, 5,
                                           20000, 12345);
    CHECK(std::abs(one.mean - std::complex<double>(1.0, 0.0)) <= 5.0 * one.stderr_);
    // E tr [x,y] = 1/3 at d=3 (c_1 = -tr flips the sign).
    EmpiricalMoment comm = empirical_moment(parse_word("[x,y]"), {Statistic::Cm, 1, {}}, 3,
                                            20000, 12345);
    CHECK(std::abs(comm.mean - std::complex<double>(-1.0 / 3.0, 0.0)) <=
          5.0 * comm.stderr_);
}

TEST_CASE("rho statistic reduces to the wedge statistic") {
    Word w = parse_word("x^2");
    EmpiricalMoment via_rho = empirical_moment(
        w, {Statistic::RhoAbs2, 2, Partition({1, 1})}, 4, 5000, 7);
    EmpiricalMoment via_cm = empirical_moment(w, {Statistic::CmAbs2, 2, {}}, 4, 5000, 7);
    CHECK(std::abs(via_rho.mean - via_cm.mean) < 1e-9);
}
