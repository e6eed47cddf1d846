#pragma once

// Generalized Gell-Mann basis and the correspondence between traceless
// observables X with spectrum in [-1, 1] and coefficient vectors n with
// X = sqrt(d/2) (n . Lambda).
//
// Index convention: documentation and labels use 1-based computational basis
// indices |1>, ..., |d>; storage is 0-based, so |j> lives in row/column j-1.

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qchsh/numerics.hpp"

namespace qchsh {

// Absolute tolerance on operator norms in set-membership tests.
inline constexpr double kMembershipTolerance = 1e-10;
// Absolute tolerance when classifying eigenvalues into {-1, 0, 1}.
inline constexpr double kClassificationTolerance = 1e-9;

/// The d^2 - 1 generators ordered as: symmetric (m,k) pairs in lexicographic
/// order, antisymmetric pairs in the same order, then diagonal l = 1..d-1.
class GellMannBasis {
 public:
  struct Entry {
    int row;
    int col;
    Complex value;
  };

  /// Throws InvalidDimension for d < 2.
  explicit GellMannBasis(int dim);

  /// Wraps arbitrary operators without validation. Used to feed deliberately
  /// corrupted bases to the verification suites.
  static GellMannBasis from_operators(int dim, std::vector<ComplexMatrix> operators,
                                      std::vector<std::string> labels);

  int dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return operators_.size(); }
  const ComplexMatrix& operator[](std::size_t j) const { return operators_[j]; }
  const std::vector<ComplexMatrix>& operators() const noexcept { return operators_; }
  /// "s_m_k", "as_m_k" or "diag_l", 1-based.
  const std::string& label(std::size_t j) const { return labels_[j]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// Nonzero entries of operator j.
  const std::vector<Entry>& nonzeros(std::size_t j) const { return nonzeros_[j]; }

  /// n . Lambda. Throws DimensionMismatch when n has the wrong length.
  ComplexMatrix combine(const RealVector& n) const;

 private:
  GellMannBasis() = default;
  void index_nonzeros();

  int dim_ = 0;
  std::vector<ComplexMatrix> operators_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Entry>> nonzeros_;
};

GellMannBasis build_gellmann_basis(int d);

struct CoefficientVector {
  int dim = 0;
  RealVector components;
};

/// A traceless Hermitian matrix together with its coefficient vector.
/// `in_ld` records whether the spectrum lies in [-1, 1].
struct TracelessObservable {
  ComplexMatrix matrix;
  CoefficientVector coefficients;
  bool in_ld = false;
};

/// ||n . Lambda||_0.
double combination_norm(const RealVector& n, const GellMannBasis& basis);

/// n_j = tr[X Lambda_j] / sqrt(2d).
/// Throws NotHermitian, NotTraceless (|tr X| > 1e-10) or DimensionMismatch.
CoefficientVector expand_observable(const ComplexMatrix& x, const GellMannBasis& basis);

/// X = sqrt(d/2) (n . Lambda), tagged as an L_d member iff ||X||_0 <= 1 + 1e-10.
TracelessObservable observable_from_coefficients(const CoefficientVector& n,
                                                 const GellMannBasis& basis);

/// Validates and expands a matrix into a TracelessObservable.
TracelessObservable make_observable(const ComplexMatrix& x, const GellMannBasis& basis);

/// sqrt(2/d) n / ||n . Lambda||_0, which lies on the boundary of R_d.
/// Throws ZeroVector when n = 0.
CoefficientVector project_into_rd(const CoefficientVector& n, const GellMannBasis& basis);

/// ||n . Lambda||_0 <= sqrt(2/d) + 1e-10.
bool rd_membership(const CoefficientVector& n, const GellMannBasis& basis);

/// Largest Euclidean norm in R_d: 1 for even d, sqrt((d-1)/d) for odd d.
double max_vector_norm_ld(int d);

/// Multiplicity s of the zero eigenvalue when the spectrum lies in {-1, 0, 1},
/// std::nullopt otherwise. Throws NotInLd when ||X||_0 > 1 + 1e-10.
std::optional<int> kernel_class(const TracelessObservable& x);

/// r_j = sqrt(d / (2(d-1))) <psi, Lambda_j psi> for a unit vector psi.
RealVector pure_state_coefficients(const ComplexVector& psi, const GellMannBasis& basis);

/// Independent standard normal components.
CoefficientVector gaussian_vector(int dim, std::mt19937_64& rng);

/// Gaussian direction pushed onto the boundary of R_d.
CoefficientVector random_rd_vector(const GellMannBasis& basis, std::mt19937_64& rng);

}  // namespace qchsh
