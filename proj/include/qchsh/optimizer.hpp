#pragma once

// Maximization of |tr[rho B_chsh]| over traceless observables with spectrum
// in [-1, 1] by alternating (see-saw) updates of the two parties.

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "qchsh/correlation.hpp"

namespace qchsh {

enum class UpdateMode {
  /// Closed-form update a = sqrt(2/d) w / ||w . Lambda||_0.
  Paper,
  /// Exact maximization of the linear functional over L_d.
  Exact,
};

std::string_view to_string(UpdateMode mode);
/// Accepts "paper", "paper-update", "exact", "exact-update". Throws InvalidConfig.
UpdateMode parse_update_mode(std::string_view text);

struct SeesawConfig {
  UpdateMode mode = UpdateMode::Exact;
  int restarts = 32;
  int max_iterations = 500;
  double tolerance = 1e-10;  ///< absolute improvement threshold per iteration
  std::uint64_t seed = 0;
  int threads = 0;  ///< 0 selects std::thread::hardware_concurrency()
  /// Seed restart 0 from the GHZ settings or the singular vectors of T.
  bool structured_start = true;

  /// Throws InvalidConfig.
  void validate() const;
};

struct SeesawResult {
  double value = 0.0;  ///< best |CHSH| found, recomputed from `settings`
  ChshSettings settings;
  CoefficientVector a1, a2, b1, b2;
  UpdateMode mode = UpdateMode::Exact;
  int best_restart = 0;
  std::vector<int> iterations_per_restart;
  std::vector<bool> converged;
  /// Whether |CHSH| never decreased across half-steps (within 1e-12).
  std::vector<bool> monotone;
  std::vector<double> restart_values;

  int converged_count() const;
};

struct LinearMaxResult {
  TracelessObservable observable;
  double value = 0.0;      ///< tr[X* C]
  double threshold = 0.0;  ///< the median t* of the spectrum of C
  RealVector weights;      ///< eigenvalues of X*, paired with C's descending spectrum
};

/// max tr[X C] over X in L_d. X* shares the eigenbasis of C and its
/// eigenvalues are sign(lambda_i - t*) with t* a median of C's spectrum; ties
/// at t* are filled so that the eigenvalues sum to exactly zero.
/// Throws NotHermitian, NotTraceless or DimensionMismatch.
LinearMaxResult traceless_linear_max(const ComplexMatrix& c, const GellMannBasis& basis);

enum class Party { Alice, Bob };

/// Closed-form update of one party. For Alice (u, v) = (b1, b2) and the result
/// is sqrt(2/d) T(u +- v) / ||T(u +- v) . Lambda||_0; Bob uses T^T with
/// (u, v) = (a1, a2). Throws DegenerateDirection when T(u +- v) vanishes; the
/// message names the slot.
std::pair<CoefficientVector, CoefficientVector> paper_party_update(const CorrelationMatrix& t,
                                                                   const CoefficientVector& u,
                                                                   const CoefficientVector& v,
                                                                   Party side,
                                                                   const GellMannBasis& basis);

struct ThetaResult {
  double theta = 0.0;  ///< in [0, pi/2]
  double value = 0.0;  ///< sqrt(alpha^2 + beta^2)
};

/// alpha cos(theta) + beta sin(theta) with alpha = ||T r1||^2 / ||T r1 . Lambda||_0
/// and beta likewise for r2 (a zero image contributes zero).
double theta_objective(const CorrelationMatrix& t, const CoefficientVector& r1,
                       const CoefficientVector& r2, double theta, const GellMannBasis& basis);

/// Maximizer of theta_objective on [0, pi/2]: tan(theta0) = beta / alpha.
/// Throws BothDegenerate when T r1 = T r2 = 0.
ThetaResult optimal_theta(const CorrelationMatrix& t, const CoefficientVector& r1,
                          const CoefficientVector& r2, const GellMannBasis& basis);

/// Best of `config.restarts` see-saw runs. Restart 0 starts from the
/// block-embedded GHZ settings when rho is within 1e-8 of ghz_state(d) and from
/// the top two right singular vectors of T otherwise; the remaining restarts
/// start from random R_d vectors seeded by (seed, restart index).
SeesawResult seesaw_maximize(const TwoQuditState& state, const GellMannBasis& basis,
                             const SeesawConfig& config);

/// sigma_z / sigma_x qubit strategy on floor(d/2) two-dimensional blocks of the
/// computational basis, padded with a zero row and column for odd d.
ChshSettings ghz_optimal_settings(int d, const GellMannBasis& basis);

/// Max |CHSH| over `samples` independent random 4-tuples of R_d vectors.
double random_search_max(const TwoQuditState& state, const GellMannBasis& basis,
                         long samples, std::uint64_t seed);

}  // namespace qchsh
