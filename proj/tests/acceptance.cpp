// Acceptance run: one PASS/FAIL line per criterion with the measured worst
// deviation and wall time. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "oracles.hpp"
#include "qchsh/bounds.hpp"
#include "qchsh/correlation.hpp"
#include "qchsh/optimizer.hpp"
#include "qchsh/representation.hpp"
#include "qchsh/states.hpp"

namespace {

using namespace qchsh;

const double kTwoRootTwo = 2.0 * std::sqrt(2.0);

struct Verdict {
  bool ok = true;
  double worst = 0.0;  // largest deviation seen, in the units of the criterion
  std::string note;

  void check(bool cond, double deviation) {
    ok = ok && cond;
    worst = std::max(worst, deviation);
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Verdict()> body;
};

// Spectral norm by a dense eigen-solve of the explicit sum n . Lambda.
double dense_combination_norm(const RealVector& n, const GellMannBasis& basis) {
  const int d = basis.dim();
  ComplexMatrix x = ComplexMatrix::Zero(d, d);
  for (int j = 0; j < basis.size(); ++j) x += n(j) * basis[j];
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(x, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

double squared_ld(int d) { return d % 2 == 0 ? 1.0 : (d - 1.0) / d; }

Verdict orthogonality() {
  Verdict v;
  for (int d = 2; d <= 10; ++d) {
    const GellMannBasis basis(d);
    for (int i = 0; i < basis.size(); ++i)
      for (int j = 0; j < basis.size(); ++j) {
        const double dev = std::abs((basis[i] * basis[j]).trace() - Complex(i == j ? 2.0 : 0.0));
        v.check(dev < 1e-12, dev);
      }
  }
  return v;
}

Verdict lemma_sandwich() {
  Verdict v;
  std::mt19937_64 rng(2024);
  std::normal_distribution<double> normal;
  for (int d = 2; d <= 6; ++d) {
    const GellMannBasis basis(d);
    const double lo = std::sqrt(2.0 / d);
    const double hi = std::sqrt(2.0 * (d - 1) / d);
    for (int trial = 0; trial < 10000; ++trial) {
      RealVector n(basis.size());
      for (auto& x : n) x = normal(rng);
      if (n.norm() == 0.0) continue;
      const double ratio = dense_combination_norm(n, basis) / n.norm();
      const double slack = std::min(ratio - lo, hi - ratio);
      v.check(slack >= -1e-10, std::max(0.0, -slack));
      if (d == 2) v.check(std::abs(ratio - 1.0) <= 1e-12, std::abs(ratio - 1.0));
    }
  }
  return v;
}

// Expected GHZ correlation matrix built from the label of each generator.
RealMatrix ghz_expected(const GellMannBasis& basis) {
  const int d = basis.dim();
  RealMatrix t = RealMatrix::Zero(basis.size(), basis.size());
  for (int j = 0; j < basis.size(); ++j)
    t(j, j) = (basis.label(j).rfind("as_", 0) == 0 ? -2.0 : 2.0) / d;
  return t;
}

Verdict ghz_closed_form() {
  Verdict v;
  for (int d = 2; d <= 8; ++d) {
    const GellMannBasis basis(d);
    const RealMatrix t = correlation_matrix(ghz_state(d), basis).entries;
    const double dev = (t - ghz_expected(basis)).cwiseAbs().maxCoeff();
    v.check(dev < 1e-12, dev);
    const RealMatrix sq = t * t - (4.0 / (d * d)) * RealMatrix::Identity(t.rows(), t.cols());
    const double sq_dev = sq.cwiseAbs().maxCoeff();
    v.check(sq_dev < 1e-12, sq_dev);
  }
  return v;
}

Verdict ghz_certificate() {
  Verdict v;
  // 2 l_d^2 sqrt(2) to six decimals; d = 7 is 12 sqrt(2) / 7.
  const double table[] = {2.828427, 1.885618, 2.828427, 2.262742, 2.828427, 2.424366, 2.828427};
  for (int d = 2; d <= 8; ++d) {
    const GellMannBasis basis(d);
    const double value = chsh_expectation_direct(ghz_state(d), ghz_optimal_settings(d, basis));
    const double target = 2.0 * squared_ld(d) * std::sqrt(2.0);
    v.check(std::abs(value - target) < 1e-12, std::abs(value - target));
    v.check(std::abs(value - table[d - 2]) < 5e-7, 0.0);
  }
  const double seven = 12.0 * std::sqrt(2.0) / 7.0;
  v.check(std::abs(2.0 * squared_ld(7) * std::sqrt(2.0) - seven) < 1e-15, 0.0);
  return v;
}

Verdict ghz_seesaw() {
  Verdict v;
  SeesawConfig config;
  config.mode = UpdateMode::Exact;
  config.restarts = 32;
  for (int d = 2; d <= 6; ++d) {
    const GellMannBasis basis(d);
    const double value = seesaw_maximize(ghz_state(d), basis, config).value;
    const double dev = std::abs(value - 2.0 * squared_ld(d) * std::sqrt(2.0));
    v.check(dev < 1e-6, dev);
  }
  return v;
}

// Pauli correlation matrix tr[rho (sigma_i x sigma_j)] from dense products.
RealMatrix pauli_correlations(const ComplexMatrix& rho) {
  const ComplexMatrix p[] = {testing::pauli_x(), testing::pauli_y(), testing::pauli_z()};
  RealMatrix t(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t(i, j) = testing::dense_expectation(rho, p[i], p[j]).real();
  return t;
}

Verdict horodecki() {
  Verdict v;
  const GellMannBasis basis(2);
  const SeesawConfig config;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const TwoQuditState state = random_two_qudit_state(2, 1000 + seed);
    const RealMatrix tp = pauli_correlations(state.rho);
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(tp.transpose() * tp, Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();  // ascending
    const double expected = 2.0 * std::sqrt(std::max(0.0, ev(2)) + std::max(0.0, ev(1)));

    const BoundsReport b = chsh_bounds(correlation_matrix(state, basis));
    const double bound_dev = std::max(std::abs(b.lower - expected), std::abs(b.upper - expected));
    v.check(bound_dev < 1e-12, bound_dev);
    const double seesaw_dev = std::abs(seesaw_maximize(state, basis, config).value - expected);
    v.check(seesaw_dev < 1e-6, seesaw_dev);
  }
  return v;
}

Verdict bound_sandwich() {
  Verdict v;
  const SeesawConfig config;
  for (int d = 3; d <= 5; ++d) {
    const GellMannBasis basis(d);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const TwoQuditState state = random_two_qudit_state(d, 5000 + seed);
      const BoundsReport b = chsh_bounds(correlation_matrix(state, basis));
      const double value = seesaw_maximize(state, basis, config).value;
      v.check(value <= b.upper + 1e-8, std::max(0.0, value - b.upper));
      v.check(value <= kTwoRootTwo + 1e-9, std::max(0.0, value - kTwoRootTwo));
      v.check(b.lower <= b.upper, std::max(0.0, b.lower - b.upper));
    }
  }
  return v;
}

Verdict form_equivalence() {
  Verdict v;
  std::mt19937_64 rng(77);
  for (int d = 2; d <= 4; ++d) {
    const GellMannBasis basis(d);
    for (int trial = 0; trial < 200; ++trial) {
      const TwoQuditState state = random_two_qudit_state(d, 9000 + trial);
      const auto a1 = random_rd_vector(basis, rng);
      const auto a2 = random_rd_vector(basis, rng);
      const auto b1 = random_rd_vector(basis, rng);
      const auto b2 = random_rd_vector(basis, rng);
      const ChshSettings s = settings_from_vectors(basis, a1, a2, b1, b2);
      const double direct = chsh_expectation_direct(state, s);
      const double via_t =
          chsh_expectation_via_correlations(correlation_matrix(state, basis), a1, a2, b1, b2);
      // Dense Kronecker evaluation as a third opinion.
      const double dense =
          (testing::dense_expectation(state.rho, s.a1.matrix, s.b1.matrix + s.b2.matrix) +
           testing::dense_expectation(state.rho, s.a2.matrix, s.b1.matrix - s.b2.matrix))
              .real();
      const double dev = std::max(std::abs(direct - via_t), std::abs(direct - dense));
      v.check(dev < 1e-10, dev);
    }
  }
  return v;
}

Verdict lp_oracle() {
  Verdict v;
  for (int d = 2; d <= 4; ++d) {
    const GellMannBasis basis(d);
    std::mt19937_64 rng(300 + d);
    for (int trial = 0; trial < 1000; ++trial) {
      const RealVector lambda = testing::random_traceless_spectrum(d, rng);
      const ComplexMatrix u = testing::random_unitary(d, rng);
      ComplexMatrix c = u * lambda.cast<Complex>().asDiagonal() * u.adjoint();
      c = (c + c.adjoint()) * 0.5;
      const double dev =
          std::abs(traceless_linear_max(c, basis).value - testing::vertex_enumeration_max(lambda));
      v.check(dev < 1e-12, dev);
    }
  }
  return v;
}

Verdict odd_flag() {
  Verdict v;
  for (int d : {3, 5, 7}) {
    const BoundsReport b = chsh_bounds(correlation_matrix(ghz_state(d), GellMannBasis(d)));
    const double expected = 2.0 * (d - 1) * std::sqrt(2.0) / d;
    v.check(std::abs(b.upper - expected) < 1e-12, std::abs(b.upper - expected));
    v.check(b.upper < kTwoRootTwo, 0.0);
    v.check(b.upper_improves_tsirelson(), 0.0);
  }
  return v;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Gell-Mann orthogonality d=2..10", 5, orthogonality},
      {2, "norm ratio sandwich d=2..6", 30, lemma_sandwich},
      {3, "GHZ correlation closed form d=2..8", 30, ghz_closed_form},
      {4, "GHZ certificate value d=2..8", 10, ghz_certificate},
      {5, "see-saw reaches GHZ optimum d=2..6", 120, ghz_seesaw},
      {6, "two-qubit bounds and see-saw match", 120, horodecki},
      {7, "see-saw below upper bound and 2sqrt2", 300, bound_sandwich},
      {8, "direct and correlation forms agree", 60, form_equivalence},
      {9, "linear maximizer vs vertex enumeration", 60, lp_oracle},
      {10, "odd-d GHZ upper bound flagged", 1, odd_flag},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.body();
    } catch (const std::exception& e) {
      v.ok = false;
      v.note = std::string(" exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.limit_seconds;
    const bool pass = v.ok && in_time;
    if (!pass) ++failed;
    std::printf("[%s] criterion %2d: %-40s worst=%.3e time=%.2fs (limit %.0fs)%s%s\n",
                pass ? "PASS" : "FAIL", c.id, c.name.c_str(), v.worst, seconds, c.limit_seconds,
                in_time ? "" : " over time", v.note.c_str());
  }
  std::printf("acceptance: %zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
