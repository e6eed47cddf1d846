#pragma once

#include <cstdint>

#include "qchsh/numerics.hpp"

namespace qchsh {

// Tolerance shared by the Hermiticity, trace and positivity checks.
inline constexpr double kStateTolerance = 1e-10;

/// Density matrix on C^d (x) C^d. Row/column j*d + k is the basis vector
/// |j> (x) |k>, 0-based.
struct TwoQuditState {
  int dim = 0;
  ComplexMatrix rho;
};

/// Projector onto (1/sqrt(d)) sum_j |j>|j>.
TwoQuditState ghz_state(int d);

/// G G^dagger / tr[G G^dagger] with G a d^2 x d^2 matrix of independent
/// standard complex normals. Deterministic per (d, seed).
TwoQuditState random_two_qudit_state(int d, std::uint64_t seed);

/// Checks shape, Hermiticity, unit trace and positivity. Errors carry the
/// measured residual: DimensionMismatch, NotHermitian, TraceNotOne, NotPositive.
TwoQuditState validate_state(const ComplexMatrix& rho, int d);

}  // namespace qchsh
