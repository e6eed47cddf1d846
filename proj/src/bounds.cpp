#include "qchsh/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "qchsh/errors.hpp"

namespace qchsh {

bool BoundsReport::upper_improves_tsirelson() const { return upper < tsirelson - 1e-12; }

std::pair<double, double> top_two_singular(const CorrelationMatrix& t) {
  if (t.entries.rows() != t.entries.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "correlation matrix must be square");
  }
  if (t.entries.rows() < 2) {
    throw Error(ErrorKind::DimensionMismatch, "correlation matrix needs at least two rows");
  }
  const RealMatrix gram = t.entries.transpose() * t.entries;
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(gram, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::ConvergenceFailure, "eigensolver failed on T^T T");
  }
  const auto& values = solver.eigenvalues();  // ascending
  const auto n = values.size();
  return {std::max(values(n - 1), 0.0), std::max(values(n - 2), 0.0)};
}

BoundsReport chsh_bounds(const CorrelationMatrix& t) {
  const auto [l1, l2] = top_two_singular(t);
  const int d = t.dim;
  const double root = std::sqrt(l1 + l2);
  const double ld = max_vector_norm_ld(d);
  BoundsReport report;
  report.dim = d;
  report.lambda1 = l1;
  report.lambda2 = l2;
  report.lower = d / (d - 1.0) * root;
  report.upper = ld * ld * d * root;
  return report;
}

double horodecki_two_qubit(const CorrelationMatrix& t) {
  if (t.dim != 2) {
    throw Error(ErrorKind::WrongDimension,
                "Horodecki value is defined for d=2, got d=" + std::to_string(t.dim));
  }
  const auto [l1, l2] = top_two_singular(t);
  return 2.0 * std::sqrt(l1 + l2);
}

CorrelationMatrix ghz_correlation_closed_form(int d) {
  if (d < 2) {
    throw Error(ErrorKind::InvalidDimension,
                "qudit dimension must be >= 2, got " + std::to_string(d));
  }
  const int pairs = d * (d - 1) / 2;
  const int n = d * d - 1;
  RealVector diag(n);
  diag.head(pairs).setConstant(2.0 / d);
  diag.segment(pairs, pairs).setConstant(-2.0 / d);
  diag.tail(d - 1).setConstant(2.0 / d);
  return {d, diag.asDiagonal().toDenseMatrix()};
}

double ghz_bound_value(int d) {
  const double ld = max_vector_norm_ld(d);
  return 2.0 * ld * ld * std::sqrt(2.0);
}

}  // namespace qchsh
