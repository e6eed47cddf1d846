#include "qchsh/representation.hpp"

#include <cmath>
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

void require_length(const RealVector& n, const GellMannBasis& basis) {
  if (static_cast<std::size_t>(n.size()) != basis.size()) {
    std::ostringstream msg;
    msg << "coefficient vector has length " << n.size() << ", basis for d=" << basis.dim()
        << " needs " << basis.size();
    throw Error(ErrorKind::DimensionMismatch, msg.str());
  }
}

}  // namespace

GellMannBasis::GellMannBasis(int dim) : dim_(dim) {
  require_dim(dim);
  const int d = dim;
  const Complex i_unit(0.0, 1.0);
  operators_.reserve(d * d - 1);
  labels_.reserve(d * d - 1);

  for (int m = 0; m < d; ++m) {
    for (int k = m + 1; k < d; ++k) {
      ComplexMatrix op = ComplexMatrix::Zero(d, d);
      op(m, k) = 1.0;
      op(k, m) = 1.0;
      operators_.push_back(std::move(op));
      labels_.push_back("s_" + std::to_string(m + 1) + "_" + std::to_string(k + 1));
    }
  }
  for (int m = 0; m < d; ++m) {
    for (int k = m + 1; k < d; ++k) {
      ComplexMatrix op = ComplexMatrix::Zero(d, d);
      op(m, k) = -i_unit;
      op(k, m) = i_unit;
      operators_.push_back(std::move(op));
      labels_.push_back("as_" + std::to_string(m + 1) + "_" + std::to_string(k + 1));
    }
  }
  for (int l = 1; l < d; ++l) {
    ComplexMatrix op = ComplexMatrix::Zero(d, d);
    const double scale = std::sqrt(2.0 / (l * (l + 1.0)));
    for (int j = 0; j < l; ++j) op(j, j) = scale;
    op(l, l) = -scale * l;
    operators_.push_back(std::move(op));
    labels_.push_back("diag_" + std::to_string(l));
  }
  index_nonzeros();
}

GellMannBasis GellMannBasis::from_operators(int dim, std::vector<ComplexMatrix> operators,
                                            std::vector<std::string> labels) {
  GellMannBasis basis;
  basis.dim_ = dim;
  basis.operators_ = std::move(operators);
  basis.labels_ = std::move(labels);
  basis.labels_.resize(basis.operators_.size());
  basis.index_nonzeros();
  return basis;
}

void GellMannBasis::index_nonzeros() {
  nonzeros_.clear();
  nonzeros_.reserve(operators_.size());
  for (const auto& op : operators_) {
    std::vector<Entry> entries;
    for (int r = 0; r < op.rows(); ++r) {
      for (int c = 0; c < op.cols(); ++c) {
        if (op(r, c) != Complex(0.0, 0.0)) entries.push_back({r, c, op(r, c)});
      }
    }
    nonzeros_.push_back(std::move(entries));
  }
}

ComplexMatrix GellMannBasis::combine(const RealVector& n) const {
  require_length(n, *this);
  ComplexMatrix out = ComplexMatrix::Zero(dim_, dim_);
  for (std::size_t j = 0; j < size(); ++j) {
    if (n(j) == 0.0) continue;
    for (const auto& e : nonzeros_[j]) out(e.row, e.col) += n(j) * e.value;
  }
  return out;
}

GellMannBasis build_gellmann_basis(int d) { return GellMannBasis(d); }

double combination_norm(const RealVector& n, const GellMannBasis& basis) {
  return operator_norm(basis.combine(n));
}

CoefficientVector expand_observable(const ComplexMatrix& x, const GellMannBasis& basis) {
  const int d = basis.dim();
  if (x.rows() != d || x.cols() != d) {
    std::ostringstream msg;
    msg << "observable is " << x.rows() << "x" << x.cols() << ", basis dimension is " << d;
    throw Error(ErrorKind::DimensionMismatch, msg.str());
  }
  const double residual = hermiticity_residual(x);
  if (residual > kHermitianTolerance) {
    std::ostringstream msg;
    msg << "observable has max |X - X^dagger| = " << residual;
    throw Error(ErrorKind::NotHermitian, msg.str());
  }
  const Complex trace = x.trace();
  if (std::abs(trace) > kHermitianTolerance) {
    std::ostringstream msg;
    msg << "observable has |tr X| = " << std::abs(trace);
    throw Error(ErrorKind::NotTraceless, msg.str());
  }
  CoefficientVector n{d, RealVector(basis.size())};
  const double scale = 1.0 / std::sqrt(2.0 * d);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    // tr[X Lambda_j] = sum over nonzeros (r,c) of X_cr Lambda_rc.
    Complex acc(0.0, 0.0);
    for (const auto& e : basis.nonzeros(j)) acc += x(e.col, e.row) * e.value;
    n.components(j) = scale * acc.real();
  }
  return n;
}

TracelessObservable observable_from_coefficients(const CoefficientVector& n,
                                                 const GellMannBasis& basis) {
  require_length(n.components, basis);
  TracelessObservable out;
  out.matrix = std::sqrt(basis.dim() / 2.0) * basis.combine(n.components);
  out.coefficients = CoefficientVector{basis.dim(), n.components};
  out.in_ld = operator_norm(out.matrix) <= 1.0 + kMembershipTolerance;
  return out;
}

TracelessObservable make_observable(const ComplexMatrix& x, const GellMannBasis& basis) {
  TracelessObservable out;
  out.coefficients = expand_observable(x, basis);
  out.matrix = (x + x.adjoint()) * 0.5;
  out.in_ld = operator_norm(out.matrix) <= 1.0 + kMembershipTolerance;
  return out;
}

CoefficientVector project_into_rd(const CoefficientVector& n, const GellMannBasis& basis) {
  require_length(n.components, basis);
  const double norm = combination_norm(n.components, basis);
  if (n.components.norm() == 0.0 || norm == 0.0) {
    throw Error(ErrorKind::ZeroVector, "cannot normalize the zero vector into R_d");
  }
  return {basis.dim(), std::sqrt(2.0 / basis.dim()) * n.components / norm};
}

bool rd_membership(const CoefficientVector& n, const GellMannBasis& basis) {
  require_length(n.components, basis);
  return combination_norm(n.components, basis) <=
         std::sqrt(2.0 / basis.dim()) + kMembershipTolerance;
}

double max_vector_norm_ld(int d) {
  require_dim(d);
  return d % 2 == 0 ? 1.0 : std::sqrt((d - 1.0) / d);
}

std::optional<int> kernel_class(const TracelessObservable& x) {
  const RealVector values = hermitian_eigenvalues(x.matrix);
  const double norm = std::max(std::abs(values(0)), std::abs(values(values.size() - 1)));
  if (norm > 1.0 + kMembershipTolerance) {
    std::ostringstream msg;
    msg << "operator norm " << norm << " exceeds 1";
    throw Error(ErrorKind::NotInLd, msg.str());
  }
  int zeros = 0;
  for (double v : values) {
    if (std::abs(v) <= kClassificationTolerance) {
      ++zeros;
    } else if (std::abs(std::abs(v) - 1.0) > kClassificationTolerance) {
      return std::nullopt;
    }
  }
  return zeros;
}

RealVector pure_state_coefficients(const ComplexVector& psi, const GellMannBasis& basis) {
  const int d = basis.dim();
  if (psi.size() != d) {
    throw Error(ErrorKind::DimensionMismatch, "state vector length does not match basis");
  }
  const double scale = std::sqrt(d / (2.0 * (d - 1.0)));
  RealVector r(basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    Complex acc(0.0, 0.0);
    for (const auto& e : basis.nonzeros(j)) acc += std::conj(psi(e.row)) * e.value * psi(e.col);
    r(j) = scale * acc.real();
  }
  return r;
}

CoefficientVector gaussian_vector(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  RealVector v(dim * dim - 1);
  for (Eigen::Index j = 0; j < v.size(); ++j) v(j) = normal(rng);
  return {dim, v};
}

CoefficientVector random_rd_vector(const GellMannBasis& basis, std::mt19937_64& rng) {
  for (;;) {
    CoefficientVector g = gaussian_vector(basis.dim(), rng);
    if (g.components.norm() > 0.0) return project_into_rd(g, basis);
  }
}

}  // namespace qchsh
