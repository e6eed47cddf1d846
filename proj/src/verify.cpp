#include "qchsh/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "qchsh/bounds.hpp"
#include "qchsh/errors.hpp"

namespace qchsh {
namespace {

class Tally {
 public:
  explicit Tally(std::string name) { report_.name = std::move(name); }

  // Records a check whose violation is `excess` (<= 0 means satisfied).
  void check(double excess) {
    ++report_.checks;
    if (!(excess <= 0.0)) {
      ++report_.failures;
      report_.worst_violation =
          std::isfinite(excess) ? std::max(report_.worst_violation, excess) : INFINITY;
    }
  }

  SuiteReport done() { return report_; }

 private:
  SuiteReport report_;
};

std::mt19937_64 suite_rng(const VerifyOptions& o, int d, std::uint64_t salt) {
  std::seed_seq seq{o.seed, static_cast<std::uint64_t>(d), salt};
  return std::mt19937_64(seq);
}

GellMannBasis basis_for(const VerifyOptions& o, int d) {
  return o.basis_factory ? o.basis_factory(d) : build_gellmann_basis(d);
}

ComplexMatrix random_traceless_hermitian(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(d, d);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) g(r, c) = Complex(normal(rng), normal(rng));
  }
  ComplexMatrix h = (g + g.adjoint()) * 0.5;
  h -= (h.trace() / static_cast<double>(d)) * ComplexMatrix::Identity(d, d);
  return h;
}

SuiteReport orthogonality(const VerifyOptions& o) {
  Tally tally("orthogonality");
  for (int d = o.min_dim; d <= o.max_dim; ++d) {
    const GellMannBasis basis = basis_for(o, d);
    tally.check(static_cast<double>(basis.size()) - (d * d - 1.0));
    for (std::size_t i = 0; i < basis.size(); ++i) {
      tally.check(std::abs(basis[i].trace()) - 1e-12);
      tally.check(hermiticity_residual(basis[i]) - 1e-12);
      for (std::size_t j = 0; j < basis.size(); ++j) {
        const double expected = i == j ? 2.0 : 0.0;
        tally.check(std::abs(trace_inner_product(basis[i], basis[j]) - expected) - 1e-12);
      }
    }
  }
  return tally.done();
}

SuiteReport lemma1(const VerifyOptions& o) {
  Tally tally("lemma1");
  for (int d = o.min_dim; d <= o.max_dim; ++d) {
    const GellMannBasis basis = basis_for(o, d);
    auto rng = suite_rng(o, d, 11);
    const double low = std::sqrt(2.0 / d);
    const double high = std::sqrt(2.0 * (d - 1.0) / d);
    for (long t = 0; t < o.trials; ++t) {
      const CoefficientVector n = gaussian_vector(d, rng);
      const double ratio = combination_norm(n.components, basis) / n.components.norm();
      tally.check(low - ratio - 1e-10);
      tally.check(ratio - high - 1e-10);
      if (d == 2) tally.check(std::abs(ratio - 1.0) - 1e-12);
    }
  }
  return tally.done();
}

SuiteReport roundtrip(const VerifyOptions& o) {
  Tally tally("roundtrip");
  for (int d = o.min_dim; d <= o.max_dim; ++d) {
    const GellMannBasis basis = basis_for(o, d);
    auto rng = suite_rng(o, d, 12);
    for (long t = 0; t < o.trials; ++t) {
      const CoefficientVector n = gaussian_vector(d, rng);
      const TracelessObservable x = observable_from_coefficients(n, basis);
      const CoefficientVector back = expand_observable(x.matrix, basis);
      tally.check((back.components - n.components).cwiseAbs().maxCoeff() - 1e-10);

      const ComplexMatrix h = random_traceless_hermitian(d, rng);
      const CoefficientVector nh = expand_observable(h, basis);
      const TracelessObservable xh = observable_from_coefficients(nh, basis);
      tally.check(max_abs_entry(xh.matrix - h) - 1e-10);
      const double square = trace_inner_product(h, h).real();
      tally.check(std::abs(square - d * nh.components.squaredNorm()) - 1e-10 * std::max(1.0, square));
    }
  }
  return tally.done();
}

SuiteReport correlation_bound(const VerifyOptions& o) {
  Tally tally("correlation-bound");
  const long states = std::max(1L, o.trials / 100);
  for (int d = o.min_dim; d <= o.max_dim; ++d) {
    const GellMannBasis basis = basis_for(o, d);
    auto rng = suite_rng(o, d, 13);
    const long per_state = std::max(1L, o.trials / states);
    for (long s = 0; s < states; ++s) {
      const TwoQuditState rho = random_two_qudit_state(d, o.seed * 1000003u + s);
      const CorrelationMatrix t = correlation_matrix(rho, basis);
      for (long k = 0; k < per_state; ++k) {
        const CoefficientVector a = random_rd_vector(basis, rng);
        const CoefficientVector b = random_rd_vector(basis, rng);
        tally.check(std::abs(a.components.dot(t.entries * b.components)) - 2.0 / d - 1e-9);
      }
    }
  }
  return tally.done();
}

SuiteReport ghz_closed_form(const VerifyOptions& o) {
  Tally tally("ghz-closed-form");
  for (int d = o.min_dim; d <= o.max_dim; ++d) {
    const GellMannBasis basis = basis_for(o, d);
    const CorrelationMatrix t = correlation_matrix(ghz_state(d), basis);
    const CorrelationMatrix closed = ghz_correlation_closed_form(d);
    tally.check((t.entries - closed.entries).cwiseAbs().maxCoeff() - 1e-12);
    const RealMatrix square = t.entries * t.entries;
    const RealMatrix target = (4.0 / (d * d)) * RealMatrix::Identity(t.entries.rows(), t.entries.cols());
    tally.check((square - target).cwiseAbs().maxCoeff() - 1e-12);
  }
  return tally.done();
}

SuiteReport bound_ordering(const VerifyOptions& o) {
  Tally tally("bound-ordering");
  const long states = std::max(1L, o.trials / 10);
  for (int d = o.min_dim; d <= o.max_dim; ++d) {
    const GellMannBasis basis = basis_for(o, d);
    for (long s = 0; s < states; ++s) {
      const TwoQuditState rho = random_two_qudit_state(d, o.seed * 7919u + s);
      const BoundsReport b = chsh_bounds(correlation_matrix(rho, basis));
      tally.check(b.lower - b.upper - 1e-12);
      tally.check(b.lambda2 - b.lambda1);
      if (d == 2) tally.check(std::abs(b.lower - b.upper) - 1e-12);
    }
    tally.check(std::abs(ghz_bound_value(d) - chsh_bounds(ghz_correlation_closed_form(d)).upper) -
                1e-12);
  }
  return tally.done();
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"orthogonality",     "lemma1",
                                              "roundtrip",         "correlation-bound",
                                              "ghz-closed-form",   "bound-ordering"};
  return names;
}

SuiteReport run_suite(const std::string& name, const VerifyOptions& options) {
  if (options.min_dim < 2 || options.max_dim < options.min_dim) {
    throw Error(ErrorKind::InvalidInput, "verification dimensions must satisfy 2 <= a <= b");
  }
  if (options.trials < 1) throw Error(ErrorKind::InvalidInput, "trials must be >= 1");
  if (name == "orthogonality") return orthogonality(options);
  if (name == "lemma1") return lemma1(options);
  if (name == "roundtrip") return roundtrip(options);
  if (name == "correlation-bound") return correlation_bound(options);
  if (name == "ghz-closed-form") return ghz_closed_form(options);
  if (name == "bound-ordering") return bound_ordering(options);
  throw Error(ErrorKind::InvalidInput, "unknown suite '" + name + "'");
}

}  // namespace qchsh
