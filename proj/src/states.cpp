#include "qchsh/states.hpp"

#include <random>
#include <sstream>

#include "qchsh/errors.hpp"

namespace qchsh {
namespace {

void require_dim(int d) {
  if (d < 2) {
    throw Error(ErrorKind::InvalidDimension,
                "qudit dimension must be >= 2, got " + std::to_string(d));
  }
}

}  // namespace

TwoQuditState ghz_state(int d) {
  require_dim(d);
  const int n = d * d;
  ComplexMatrix rho = ComplexMatrix::Zero(n, n);
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) rho(j * d + j, k * d + k) = 1.0 / d;
  }
  return {d, rho};
}

TwoQuditState random_two_qudit_state(int d, std::uint64_t seed) {
  require_dim(d);
  const int n = d * d;
  std::seed_seq seq{seed, static_cast<std::uint64_t>(d)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(r, c) = Complex(re, im);
    }
  }
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = (rho + rho.adjoint()) * 0.5;
  return {d, rho};
}

TwoQuditState validate_state(const ComplexMatrix& rho, int d) {
  require_dim(d);
  const int n = d * d;
  if (rho.rows() != n || rho.cols() != n) {
    std::ostringstream msg;
    msg << "state for d=" << d << " must be " << n << "x" << n << ", got " << rho.rows() << "x"
        << rho.cols();
    throw Error(ErrorKind::DimensionMismatch, msg.str());
  }
  if (!rho.allFinite()) throw Error(ErrorKind::InvalidInput, "state has non-finite entries");
  const double herm = hermiticity_residual(rho);
  if (herm > kStateTolerance) {
    std::ostringstream msg;
    msg << "max |rho - rho^dagger| = " << herm;
    throw Error(ErrorKind::NotHermitian, msg.str());
  }
  const Complex trace = rho.trace();
  const double trace_residual = std::abs(trace - Complex(1.0, 0.0));
  if (trace_residual > kStateTolerance) {
    std::ostringstream msg;
    msg << "|tr rho - 1| = " << trace_residual;
    throw Error(ErrorKind::TraceNotOne, msg.str());
  }
  const RealVector values = hermitian_eigenvalues(rho);
  const double min_eig = values(values.size() - 1);
  if (min_eig < -kStateTolerance) {
    std::ostringstream msg;
    msg << "minimum eigenvalue " << min_eig << " below " << -kStateTolerance;
    throw Error(ErrorKind::NotPositive, msg.str());
  }
  return {d, (rho + rho.adjoint()) * 0.5};
}

}  // namespace qchsh
