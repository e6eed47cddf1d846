#pragma once

#include <complex>

#include <Eigen/Dense>

namespace qchsh {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// Absolute entrywise tolerance on |M - M^dagger|.
inline constexpr double kHermitianTolerance = 1e-10;

/// Spectrum of a Hermitian matrix. Values are sorted in descending order and
/// column k of `vectors` is the unit eigenvector belonging to values(k).
struct EigenDecomposition {
  RealVector values;
  ComplexMatrix vectors;
};

/// max_ij |M_ij - conj(M_ji)|. Throws DimensionMismatch for non-square input.
double hermiticity_residual(const ComplexMatrix& m);

double max_abs_entry(const ComplexMatrix& m);

/// Full decomposition of a Hermitian matrix. The input is symmetrized as
/// (M + M^dagger)/2 before solving.
/// Throws NotHermitian when the residual exceeds kHermitianTolerance and
/// ConvergenceFailure when the solver does not converge.
EigenDecomposition hermitian_eigendecomposition(const ComplexMatrix& m);

/// Eigenvalues only, descending. Same preconditions and errors as above.
RealVector hermitian_eigenvalues(const ComplexMatrix& m);

/// Largest absolute eigenvalue of a Hermitian matrix.
double operator_norm(const ComplexMatrix& m);

/// Kronecker product of two d x d matrices: entry (i*d+k, j*d+l) = A_ij B_kl.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// tr[AB].
Complex trace_inner_product(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace qchsh
