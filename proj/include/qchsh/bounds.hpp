#pragma once

#include <utility>

#include "qchsh/correlation.hpp"

namespace qchsh {

/// 2 sqrt(2).
inline constexpr double kTsirelson = 2.8284271247461900976;

/// Spectral bounds on max |tr[rho B_chsh]| over L_d observables.
struct BoundsReport {
  int dim = 0;
  double lambda1 = 0.0;  ///< largest eigenvalue of T^T T
  double lambda2 = 0.0;  ///< second largest, counted with multiplicity
  double lower = 0.0;    ///< d/(d-1) sqrt(lambda1 + lambda2)
  double upper = 0.0;    ///< l_d^2 d sqrt(lambda1 + lambda2)
  double tsirelson = kTsirelson;

  /// True when the spectral upper bound is strictly below 2 sqrt(2).
  bool upper_improves_tsirelson() const;
};

/// Two largest eigenvalues of T^T T in descending order, clamped at zero.
std::pair<double, double> top_two_singular(const CorrelationMatrix& t);

BoundsReport chsh_bounds(const CorrelationMatrix& t);

/// 2 sqrt(lambda1 + lambda2). Throws WrongDimension unless d = 2.
double horodecki_two_qubit(const CorrelationMatrix& t);

/// Block-diagonal correlation matrix of ghz_state(d): +2/d on the symmetric
/// and diagonal generators, -2/d on the antisymmetric ones.
CorrelationMatrix ghz_correlation_closed_form(int d);

/// 2 l_d^2 sqrt(2).
double ghz_bound_value(int d);

}  // namespace qchsh
