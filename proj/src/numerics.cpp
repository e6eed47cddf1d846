#include "qchsh/numerics.hpp"

#include <cmath>
#include <sstream>

#include <unsupported/Eigen/KroneckerProduct>

#include "qchsh/errors.hpp"

namespace qchsh {
namespace {

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    std::ostringstream msg;
    msg << what << " expects a square matrix, got " << m.rows() << "x" << m.cols();
    throw Error(ErrorKind::DimensionMismatch, msg.str());
  }
}

ComplexMatrix checked_symmetrized(const ComplexMatrix& m, const char* what) {
  require_square(m, what);
  if (!m.allFinite()) {
    throw Error(ErrorKind::InvalidInput, std::string(what) + " received non-finite entries");
  }
  const double residual = hermiticity_residual(m);
  if (residual > kHermitianTolerance) {
    std::ostringstream msg;
    msg << what << ": max |M - M^dagger| = " << residual << " exceeds " << kHermitianTolerance;
    throw Error(ErrorKind::NotHermitian, msg.str());
  }
  return (m + m.adjoint()) * 0.5;
}

}  // namespace

double hermiticity_residual(const ComplexMatrix& m) {
  require_square(m, "hermiticity_residual");
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double max_abs_entry(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

EigenDecomposition hermitian_eigendecomposition(const ComplexMatrix& m) {
  const ComplexMatrix h = checked_symmetrized(m, "hermitian_eigendecomposition");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::ConvergenceFailure, "Hermitian eigensolver did not converge");
  }
  // Eigen returns ascending order.
  const Eigen::Index n = h.rows();
  EigenDecomposition out{RealVector(n), ComplexMatrix(n, n)};
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = solver.eigenvalues()(n - 1 - k);
    out.vectors.col(k) = solver.eigenvectors().col(n - 1 - k);
  }
  return out;
}

RealVector hermitian_eigenvalues(const ComplexMatrix& m) {
  const ComplexMatrix h = checked_symmetrized(m, "hermitian_eigenvalues");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::ConvergenceFailure, "Hermitian eigensolver did not converge");
  }
  return solver.eigenvalues().reverse();
}

double operator_norm(const ComplexMatrix& m) {
  const RealVector values = hermitian_eigenvalues(m);
  if (values.size() == 0) return 0.0;
  return std::max(std::abs(values(0)), std::abs(values(values.size() - 1)));
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_square(a, "tensor_product");
  require_square(b, "tensor_product");
  if (a.rows() != b.rows()) {
    std::ostringstream msg;
    msg << "tensor_product factors differ in dimension: " << a.rows() << " vs " << b.rows();
    throw Error(ErrorKind::DimensionMismatch, msg.str());
  }
  return Eigen::kroneckerProduct(a, b).eval();
}

Complex trace_inner_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.cols() || a.cols() != b.rows()) {
    std::ostringstream msg;
    msg << "trace_inner_product shapes " << a.rows() << "x" << a.cols() << " and " << b.rows()
        << "x" << b.cols() << " are incompatible";
    throw Error(ErrorKind::DimensionMismatch, msg.str());
  }
  return a.cwiseProduct(b.transpose()).sum();
}

}  // namespace qchsh
