#pragma once

#include "qchsh/representation.hpp"
#include "qchsh/states.hpp"

namespace qchsh {

// Imaginary parts of tr[rho (Lambda_i x Lambda_j)] at or above this level are
// reported instead of truncated.
inline constexpr double kImaginaryTolerance = 1e-10;

/// T_ij = tr[rho (Lambda_i x Lambda_j)]; row i is Alice's basis index and
/// column j is Bob's, so <a, T b> is the bilinear correlation form.
struct CorrelationMatrix {
  int dim = 0;
  RealMatrix entries;
};

/// Alice measures a1, a2 and Bob measures b1, b2; all four are L_d members.
struct ChshSettings {
  TracelessObservable a1;
  TracelessObservable a2;
  TracelessObservable b1;
  TracelessObservable b2;
};

/// Assembles settings, throwing NotInLd or DimensionMismatch on bad input.
ChshSettings make_chsh_settings(TracelessObservable a1, TracelessObservable a2,
                                TracelessObservable b1, TracelessObservable b2);

/// Settings from four coefficient vectors via X = sqrt(d/2) (n . Lambda).
ChshSettings settings_from_vectors(const GellMannBasis& basis, const CoefficientVector& a1,
                                   const CoefficientVector& a2, const CoefficientVector& b1,
                                   const CoefficientVector& b2);

CorrelationMatrix correlation_matrix(const TwoQuditState& state, const GellMannBasis& basis);

/// A1 (x) (B1 + B2) + A2 (x) (B1 - B2).
ComplexMatrix chsh_operator(const ChshSettings& settings);

/// Signed tr[rho B_chsh].
double chsh_expectation_direct(const TwoQuditState& state, const ChshSettings& settings);

/// (d/2) (<a1, T(b1 + b2)> + <a2, T(b1 - b2)>).
double chsh_expectation_via_correlations(const CorrelationMatrix& t, const CoefficientVector& a1,
                                         const CoefficientVector& a2,
                                         const CoefficientVector& b1,
                                         const CoefficientVector& b2);

}  // namespace qchsh
