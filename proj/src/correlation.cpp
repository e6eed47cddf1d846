#include "qchsh/correlation.hpp"

#include <sstream>

#include "qchsh/errors.hpp"

namespace qchsh {
namespace {

void require_member(const TracelessObservable& x, const char* name, int dim) {
  if (x.matrix.rows() != dim || x.matrix.cols() != dim) {
    throw Error(ErrorKind::DimensionMismatch,
                std::string("observable ") + name + " does not match dimension " +
                    std::to_string(dim));
  }
  if (!x.in_ld) {
    throw Error(ErrorKind::NotInLd,
                std::string("observable ") + name + " has spectrum outside [-1, 1]");
  }
}

}  // namespace

ChshSettings make_chsh_settings(TracelessObservable a1, TracelessObservable a2,
                                TracelessObservable b1, TracelessObservable b2) {
  const int dim = static_cast<int>(a1.matrix.rows());
  require_member(a1, "A1", dim);
  require_member(a2, "A2", dim);
  require_member(b1, "B1", dim);
  require_member(b2, "B2", dim);
  return {std::move(a1), std::move(a2), std::move(b1), std::move(b2)};
}

ChshSettings settings_from_vectors(const GellMannBasis& basis, const CoefficientVector& a1,
                                   const CoefficientVector& a2, const CoefficientVector& b1,
                                   const CoefficientVector& b2) {
  return make_chsh_settings(
      observable_from_coefficients(a1, basis), observable_from_coefficients(a2, basis),
      observable_from_coefficients(b1, basis), observable_from_coefficients(b2, basis));
}

CorrelationMatrix correlation_matrix(const TwoQuditState& state, const GellMannBasis& basis) {
  const int d = basis.dim();
  if (state.dim != d || state.rho.rows() != d * d || state.rho.cols() != d * d) {
    std::ostringstream msg;
    msg << "state dimension " << state.dim << " does not match basis dimension " << d;
    throw Error(ErrorKind::DimensionMismatch, msg.str());
  }
  const auto n = static_cast<Eigen::Index>(basis.size());
  CorrelationMatrix t{d, RealMatrix(n, n)};
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      // tr[rho K] with K_{(a,c),(b,e)} = L_i(a,b) L_j(c,e).
      Complex acc(0.0, 0.0);
      for (const auto& x : basis.nonzeros(i)) {
        for (const auto& y : basis.nonzeros(j)) {
          acc += x.value * y.value * state.rho(x.col * d + y.col, x.row * d + y.row);
        }
      }
      if (std::abs(acc.imag()) >= kImaginaryTolerance) {
        std::ostringstream msg;
        msg << "T(" << i << "," << j << ") has imaginary part " << acc.imag();
        throw Error(ErrorKind::ImaginaryResidual, msg.str());
      }
      t.entries(i, j) = acc.real();
    }
  }
  return t;
}

ComplexMatrix chsh_operator(const ChshSettings& s) {
  const auto dim = s.a1.matrix.rows();
  for (const auto* x : {&s.a2, &s.b1, &s.b2}) {
    if (x->matrix.rows() != dim || x->matrix.cols() != dim) {
      throw Error(ErrorKind::DimensionMismatch, "CHSH observables differ in dimension");
    }
  }
  return tensor_product(s.a1.matrix, s.b1.matrix + s.b2.matrix) +
         tensor_product(s.a2.matrix, s.b1.matrix - s.b2.matrix);
}

double chsh_expectation_direct(const TwoQuditState& state, const ChshSettings& settings) {
  const ComplexMatrix op = chsh_operator(settings);
  if (op.rows() != state.rho.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "state and settings differ in dimension");
  }
  return trace_inner_product(state.rho, op).real();
}

double chsh_expectation_via_correlations(const CorrelationMatrix& t, const CoefficientVector& a1,
                                         const CoefficientVector& a2,
                                         const CoefficientVector& b1,
                                         const CoefficientVector& b2) {
  const auto n = t.entries.rows();
  for (const auto* v : {&a1, &a2, &b1, &b2}) {
    if (v->components.size() != n) {
      throw Error(ErrorKind::DimensionMismatch,
                  "coefficient vector length does not match the correlation matrix");
    }
  }
  const double first = a1.components.dot(t.entries * (b1.components + b2.components));
  const double second = a2.components.dot(t.entries * (b1.components - b2.components));
  return 0.5 * t.dim * (first + second);
}

}  // namespace qchsh
