#include "superprob/density_matrix.hpp"

#include <cmath>
#include <string>

#include "superprob/errors.hpp"
#include "superprob/tolerances.hpp"

namespace superprob {

namespace {
constexpr std::size_t kMaxDim = 16;  // keeps the eigensolver checks instant

void check_matrix(const OutcomeSpace& space, const Eigen::MatrixXd& m, double tolerance) {
  const auto n = static_cast<Eigen::Index>(space.size());
  if (m.rows() != n || m.cols() != n) {
    fail(errc::dimension_mismatch, "matrix is " + std::to_string(m.rows()) + "x" +
                                       std::to_string(m.cols()) + " but the space has " +
                                       std::to_string(space.size()) + " outcomes");
  }
  if (space.size() > kMaxDim) {
    fail(errc::cap_exceeded, "density matrices are capped at 16x16");
  }
  if (!m.allFinite()) {
    fail(errc::invalid_matrix, "matrix has non-finite entries");
  }
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > tolerance) {
    fail(errc::invalid_matrix, "matrix is not symmetric (defect " + std::to_string(asym) + ")");
  }
  const double tr = m.trace();
  if (std::abs(tr - 1.0) > tolerance) {
    fail(errc::invalid_matrix, "trace is " + std::to_string(tr) + ", expected 1");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -tolerance) {
    fail(errc::invalid_matrix, "matrix has a negative eigenvalue (" +
                                   std::to_string(solver.eigenvalues().minCoeff()) + ")");
  }
}
}  // namespace

DensityMatrix::DensityMatrix(OutcomeSpace space, Eigen::MatrixXd entries)
    : space_(std::move(space)), entries_(std::move(entries)) {
  check_matrix(space_, entries_, tol::matrix);
}

double DensityMatrix::entry(std::size_t i, std::size_t k) const {
  if (i >= dim() || k >= dim()) fail(errc::out_of_range, "matrix index out of range");
  return entries_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k));
}

double DensityMatrix::idempotency_defect() const {
  return (entries_ * entries_ - entries_).cwiseAbs().maxCoeff();
}

Eigen::VectorXd DensityMatrix::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(entries_, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

void DensityMatrix::validate(double tolerance) const { check_matrix(space_, entries_, tolerance); }

bool is_pure(const DensityMatrix& rho) {
  const bool by_square = rho.idempotency_defect() <= tol::matrix;
  const bool by_trace = std::abs(rho.purity() - 1.0) <= tol::matrix;
  if (by_square != by_trace) {
    fail(errc::internal_inconsistency,
         "purity tests disagree: max|rho^2-rho| = " + std::to_string(rho.idempotency_defect()) +
             ", tr[rho^2] = " + std::to_string(rho.purity()));
  }
  return by_square;
}

}  // namespace superprob
