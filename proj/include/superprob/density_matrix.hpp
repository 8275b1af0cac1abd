#pragma once

#include <Eigen/Dense>

#include "superprob/outcome_space.hpp"

namespace superprob {

/// A real density matrix over an outcome space: symmetric, trace 1,
/// positive semidefinite. Rows and columns follow the space's label order.
/// Construction validates all three invariants (the PSD check runs a
/// symmetric eigensolver, which is why dimensions are capped at 16).
class DensityMatrix {
 public:
  DensityMatrix(OutcomeSpace space, Eigen::MatrixXd entries);

  const OutcomeSpace& space() const { return space_; }
  const Eigen::MatrixXd& entries() const { return entries_; }
  std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
  double entry(std::size_t i, std::size_t k) const;

  double trace() const { return entries_.trace(); }

  /// tr[rho^2], computed as the sum of squared entries.
  double purity() const { return entries_.squaredNorm(); }

  /// max_ik |(rho^2 - rho)_ik|
  double idempotency_defect() const;

  /// Eigenvalues, ascending (self-adjoint solve).
  Eigen::VectorXd eigenvalues() const;

  /// Revalidate symmetry/trace/PSD at the given tolerance; throws
  /// invalid_matrix on failure. Construction already enforces this at
  /// tol::matrix, so this is a diagnostic entry point.
  void validate(double tolerance) const;

 private:
  OutcomeSpace space_;
  Eigen::MatrixXd entries_;
};

/// Pure iff rho^2 = rho within tol::matrix (max-norm). Cross-checked
/// against tr[rho^2] = 1; disagreement raises internal_inconsistency.
bool is_pure(const DensityMatrix& rho);

}  // namespace superprob
