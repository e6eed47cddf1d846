#include "qchsh/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include "qchsh/errors.hpp"

namespace qchsh {
namespace {

constexpr double kDegenerateNorm = 1e-12;
constexpr double kTieTolerance = 1e-12;
constexpr double kMonotoneSlack = 1e-12;
constexpr double kGhzDistance = 1e-8;
constexpr int kMaxDegenerateRetries = 20;

std::optional<CoefficientVector> paper_direction(const RealVector& w, const GellMannBasis& basis) {
  if (w.norm() <= kDegenerateNorm) return std::nullopt;
  return project_into_rd(CoefficientVector{basis.dim(), w}, basis);
}

CoefficientVector exact_direction(const RealVector& w, const GellMannBasis& basis) {
  return traceless_linear_max(basis.combine(w), basis).observable.coefficients;
}

struct Iterate {
  RealVector a1, a2, b1, b2;
};

double correlation_value(const CorrelationMatrix& t, const Iterate& x) {
  return 0.5 * t.dim *
         (x.a1.dot(t.entries * (x.b1 + x.b2)) + x.a2.dot(t.entries * (x.b1 - x.b2)));
}

struct RestartOutcome {
  Iterate best;
  double value = -std::numeric_limits<double>::infinity();
  int iterations = 0;
  bool converged = false;
  bool monotone = true;
};

class RestartRunner {
 public:
  RestartRunner(const CorrelationMatrix& t, const GellMannBasis& basis, const SeesawConfig& config)
      : t_(t), basis_(basis), config_(config) {}

  RestartOutcome run(RealVector b1, RealVector b2, std::mt19937_64& rng) const {
    RestartOutcome out;
    Iterate x{RealVector::Zero(b1.size()), RealVector::Zero(b1.size()), std::move(b1),
              std::move(b2)};
    double previous = -std::numeric_limits<double>::infinity();
    int substitutions = 0;

    for (int it = 1; it <= config_.max_iterations; ++it) {
      out.iterations = it;
      if (!update(x.b1, x.b2, Party::Alice, x.a1, x.a2, rng, substitutions)) break;
      const double half = std::abs(correlation_value(t_, x));
      track(out, x, half);
      if (half < previous - kMonotoneSlack) out.monotone = false;

      if (!update(x.a1, x.a2, Party::Bob, x.b1, x.b2, rng, substitutions)) break;
      const double full = std::abs(correlation_value(t_, x));
      track(out, x, full);
      if (full < half - kMonotoneSlack) out.monotone = false;

      if (std::abs(full - previous) < config_.tolerance) {
        out.converged = true;
        break;
      }
      previous = full;
    }
    return out;
  }

 private:
  static void track(RestartOutcome& out, const Iterate& x, double value) {
    if (value > out.value) {
      out.value = value;
      out.best = x;
    }
  }

  // Updates (p1, p2) from the partner vectors (u, v). Returns false once the
  // degenerate-direction retry budget is exhausted.
  bool update(const RealVector& u, const RealVector& v, Party side, RealVector& p1,
              RealVector& p2, std::mt19937_64& rng, int& substitutions) const {
    const RealMatrix& m = t_.entries;
    const RealVector w1 = side == Party::Alice ? RealVector(m * (u + v))
                                               : RealVector(m.transpose() * (u + v));
    const RealVector w2 = side == Party::Alice ? RealVector(m * (u - v))
                                               : RealVector(m.transpose() * (u - v));
    if (config_.mode == UpdateMode::Exact) {
      p1 = exact_direction(w1, basis_).components;
      p2 = exact_direction(w2, basis_).components;
      return true;
    }
    for (auto [w, slot] : {std::pair{&w1, &p1}, std::pair{&w2, &p2}}) {
      if (auto dir = paper_direction(*w, basis_)) {
        *slot = dir->components;
      } else {
        if (++substitutions > kMaxDegenerateRetries) return false;
        *slot = random_rd_vector(basis_, rng).components;
      }
    }
    return true;
  }

  const CorrelationMatrix& t_;
  const GellMannBasis& basis_;
  const SeesawConfig& config_;
};

std::mt19937_64 restart_rng(std::uint64_t seed, int restart) {
  std::seed_seq seq{seed, static_cast<std::uint64_t>(restart), std::uint64_t{0x5eed}};
  return std::mt19937_64(seq);
}

// Deterministic starting pair for restart 0.
std::optional<std::pair<RealVector, RealVector>> structured_start(const TwoQuditState& state,
                                                                  const CorrelationMatrix& t,
                                                                  const GellMannBasis& basis) {
  const int d = basis.dim();
  if (max_abs_entry(state.rho - ghz_state(d).rho) < kGhzDistance) {
    const ChshSettings ghz = ghz_optimal_settings(d, basis);
    return std::pair{ghz.b1.coefficients.components, ghz.b2.coefficients.components};
  }
  Eigen::JacobiSVD<RealMatrix> svd(t.entries, Eigen::ComputeFullV);
  const RealVector& sigma = svd.singularValues();
  if (sigma(0) <= kDegenerateNorm) return std::nullopt;
  const double theta = std::atan2(sigma(1), sigma(0));
  const RealVector u1 = svd.matrixV().col(0);
  const RealVector u2 = svd.matrixV().col(1);
  const RealVector b1 = std::cos(theta) * u1 + std::sin(theta) * u2;
  const RealVector b2 = std::cos(theta) * u1 - std::sin(theta) * u2;
  return std::pair{project_into_rd({d, b1}, basis).components,
                   project_into_rd({d, b2}, basis).components};
}

int resolve_threads(int requested, int restarts) {
  int n = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
  return std::clamp(n, 1, restarts);
}

}  // namespace

std::string_view to_string(UpdateMode mode) {
  return mode == UpdateMode::Paper ? "paper-update" : "exact-update";
}

UpdateMode parse_update_mode(std::string_view text) {
  if (text == "paper" || text == "paper-update") return UpdateMode::Paper;
  if (text == "exact" || text == "exact-update") return UpdateMode::Exact;
  throw Error(ErrorKind::InvalidConfig, "unknown update mode '" + std::string(text) + "'");
}

void SeesawConfig::validate() const {
  if (restarts < 1) throw Error(ErrorKind::InvalidConfig, "restarts must be >= 1");
  if (max_iterations < 1) throw Error(ErrorKind::InvalidConfig, "max_iterations must be >= 1");
  if (!(tolerance > 0.0)) throw Error(ErrorKind::InvalidConfig, "tolerance must be > 0");
  if (threads < 0) throw Error(ErrorKind::InvalidConfig, "threads must be >= 0");
}

int SeesawResult::converged_count() const {
  return static_cast<int>(std::count(converged.begin(), converged.end(), true));
}

LinearMaxResult traceless_linear_max(const ComplexMatrix& c, const GellMannBasis& basis) {
  const int d = basis.dim();
  if (c.rows() != d || c.cols() != d) {
    throw Error(ErrorKind::DimensionMismatch, "operator does not match basis dimension");
  }
  const double trace = std::abs(c.trace());
  if (trace > kHermitianTolerance) {
    std::ostringstream msg;
    msg << "linear objective has |tr C| = " << trace;
    throw Error(ErrorKind::NotTraceless, msg.str());
  }
  const EigenDecomposition eig = hermitian_eigendecomposition(c);
  const RealVector& lambda = eig.values;

  const double median =
      d % 2 == 1 ? lambda(d / 2) : 0.5 * (lambda(d / 2 - 1) + lambda(d / 2));

  RealVector mu(d);
  std::vector<int> ties;
  int above = 0;
  int below = 0;
  for (int i = 0; i < d; ++i) {
    const double gap = lambda(i) - median;
    if (std::abs(gap) < kTieTolerance) {
      ties.push_back(i);
    } else if (gap > 0) {
      mu(i) = 1.0;
      ++above;
    } else {
      mu(i) = -1.0;
      ++below;
    }
  }
  // Tied weights must contribute (below - above) to the sum; the rest cancel in
  // +1/-1 pairs, with a single 0 left over for odd d.
  int needed = below - above;
  std::size_t k = 0;
  for (; needed != 0 && k < ties.size(); ++k) {
    mu(ties[k]) = needed > 0 ? 1.0 : -1.0;
    needed += needed > 0 ? -1 : 1;
  }
  for (double sign = 1.0; k < ties.size(); ++k, sign = -sign) {
    mu(ties[k]) = (k + 1 == ties.size() && sign > 0) ? 0.0 : sign;
  }

  const ComplexMatrix x = eig.vectors * mu.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
  LinearMaxResult out;
  out.observable = make_observable((x + x.adjoint()) * 0.5, basis);
  out.value = lambda.dot(mu);
  out.threshold = median;
  out.weights = mu;
  return out;
}

std::pair<CoefficientVector, CoefficientVector> paper_party_update(const CorrelationMatrix& t,
                                                                   const CoefficientVector& u,
                                                                   const CoefficientVector& v,
                                                                   Party side,
                                                                   const GellMannBasis& basis) {
  const auto n = static_cast<Eigen::Index>(basis.size());
  if (t.entries.rows() != n || u.components.size() != n || v.components.size() != n) {
    throw Error(ErrorKind::DimensionMismatch, "update inputs do not match basis dimension");
  }
  const RealMatrix m = side == Party::Alice ? t.entries : RealMatrix(t.entries.transpose());
  auto first = paper_direction(m * (u.components + v.components), basis);
  if (!first) throw Error(ErrorKind::DegenerateDirection, "slot 1: T(u + v) = 0");
  auto second = paper_direction(m * (u.components - v.components), basis);
  if (!second) throw Error(ErrorKind::DegenerateDirection, "slot 2: T(u - v) = 0");
  return {*first, *second};
}

namespace {

double theta_weight(const CorrelationMatrix& t, const CoefficientVector& r,
                    const GellMannBasis& basis) {
  const RealVector image = t.entries * r.components;
  if (image.norm() <= kDegenerateNorm) return 0.0;
  return image.squaredNorm() / combination_norm(image, basis);
}

}  // namespace

double theta_objective(const CorrelationMatrix& t, const CoefficientVector& r1,
                       const CoefficientVector& r2, double theta, const GellMannBasis& basis) {
  return theta_weight(t, r1, basis) * std::cos(theta) +
         theta_weight(t, r2, basis) * std::sin(theta);
}

ThetaResult optimal_theta(const CorrelationMatrix& t, const CoefficientVector& r1,
                          const CoefficientVector& r2, const GellMannBasis& basis) {
  const double alpha = theta_weight(t, r1, basis);
  const double beta = theta_weight(t, r2, basis);
  if (alpha == 0.0 && beta == 0.0) {
    throw Error(ErrorKind::BothDegenerate, "T r1 and T r2 both vanish");
  }
  return {std::atan2(beta, alpha), std::hypot(alpha, beta)};
}

ChshSettings ghz_optimal_settings(int d, const GellMannBasis& basis) {
  if (d < 2) {
    throw Error(ErrorKind::InvalidDimension,
                "qudit dimension must be >= 2, got " + std::to_string(d));
  }
  if (basis.dim() != d) throw Error(ErrorKind::DimensionMismatch, "basis dimension differs");
  const double h = 1.0 / std::numbers::sqrt2;
  ComplexMatrix a1 = ComplexMatrix::Zero(d, d);
  ComplexMatrix a2 = ComplexMatrix::Zero(d, d);
  ComplexMatrix b1 = ComplexMatrix::Zero(d, d);
  ComplexMatrix b2 = ComplexMatrix::Zero(d, d);
  for (int block = 0; block + 1 < d; block += 2) {
    const int p = block;
    const int q = block + 1;
    a1(p, p) = 1.0;
    a1(q, q) = -1.0;
    a2(p, q) = a2(q, p) = 1.0;
    // (sigma_z +- sigma_x) / sqrt(2)
    b1(p, p) = h;
    b1(q, q) = -h;
    b1(p, q) = b1(q, p) = h;
    b2(p, p) = h;
    b2(q, q) = -h;
    b2(p, q) = b2(q, p) = -h;
  }
  return make_chsh_settings(make_observable(a1, basis), make_observable(a2, basis),
                            make_observable(b1, basis), make_observable(b2, basis));
}

SeesawResult seesaw_maximize(const TwoQuditState& state, const GellMannBasis& basis,
                             const SeesawConfig& config) {
  config.validate();
  const CorrelationMatrix t = correlation_matrix(state, basis);
  const RestartRunner runner(t, basis, config);
  const auto start = config.structured_start ? structured_start(state, t, basis)
                                            : std::nullopt;

  std::vector<RestartOutcome> outcomes(config.restarts);
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> failures(config.restarts);
  auto worker = [&] {
    for (int r = next++; r < config.restarts; r = next++) {
      try {
        std::mt19937_64 rng = restart_rng(config.seed, r);
        RealVector b1;
        RealVector b2;
        if (r == 0 && start) {
          b1 = start->first;
          b2 = start->second;
        } else {
          b1 = random_rd_vector(basis, rng).components;
          b2 = random_rd_vector(basis, rng).components;
        }
        outcomes[r] = runner.run(std::move(b1), std::move(b2), rng);
      } catch (...) {
        failures[r] = std::current_exception();
      }
    }
  };
  const int threads = resolve_threads(config.threads, config.restarts);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  SeesawResult result;
  result.mode = config.mode;
  int best = -1;
  for (int r = 0; r < config.restarts; ++r) {
    const RestartOutcome& o = outcomes[r];
    result.iterations_per_restart.push_back(o.iterations);
    result.converged.push_back(o.converged);
    result.monotone.push_back(o.monotone);
    result.restart_values.push_back(o.value);
    if (o.iterations > 0 && (best < 0 || o.value > outcomes[best].value)) best = r;
  }
  if (best < 0) {
    throw Error(ErrorKind::ConvergenceFailure, "no restart produced an iterate");
  }
  result.best_restart = best;
  Iterate x = outcomes[best].best;
  if (correlation_value(t, x) < 0.0) {
    x.a1 = -x.a1;
    x.a2 = -x.a2;
  }
  const int d = basis.dim();
  result.a1 = {d, x.a1};
  result.a2 = {d, x.a2};
  result.b1 = {d, x.b1};
  result.b2 = {d, x.b2};
  result.settings = settings_from_vectors(basis, result.a1, result.a2, result.b1, result.b2);
  result.value = chsh_expectation_direct(state, result.settings);
  return result;
}

double random_search_max(const TwoQuditState& state, const GellMannBasis& basis, long samples,
                         std::uint64_t seed) {
  if (samples < 1) throw Error(ErrorKind::InvalidConfig, "samples must be >= 1");
  const CorrelationMatrix t = correlation_matrix(state, basis);
  std::seed_seq seq{seed, std::uint64_t{0x07ac1e}};
  std::mt19937_64 rng(seq);
  double best = 0.0;
  for (long s = 0; s < samples; ++s) {
    Iterate x;
    x.a1 = random_rd_vector(basis, rng).components;
    x.a2 = random_rd_vector(basis, rng).components;
    x.b1 = random_rd_vector(basis, rng).components;
    x.b2 = random_rd_vector(basis, rng).components;
    best = std::max(best, std::abs(correlation_value(t, x)));
  }
  return best;
}

}  // namespace qchsh
