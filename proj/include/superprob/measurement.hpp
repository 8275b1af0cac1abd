#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "superprob/density.hpp"
#include "superprob/density_matrix.hpp"
#include "superprob/event.hpp"
#include "superprob/partition.hpp"
#include "superprob/random_variable.hpp"

namespace superprob {

/// P_T: the diagonal 0/1 matrix selecting the outcomes of T. Idempotent and
/// symmetric exactly, since the entries are exact 0/1 doubles.
class Projection {
 public:
  explicit Projection(Event event);

  const Event& event() const { return event_; }
  const OutcomeSpace& space() const { return event_.space(); }
  Eigen::MatrixXd matrix() const;

  /// P X P^t, computed as the literal matrix product.
  Eigen::MatrixXd conjugate(const Eigen::MatrixXd& x) const;

 private:
  Event event_;
};

Projection projection(const Event& t);

/// Pr(T|rho) = tr[P_T rho], clamped to [0,1].
double prob_given(const Event& t, const DensityMatrix& rho);

/// Projects the superposition event Sigma S by P_T:
/// P_T rho(Sigma S) P_T = (Pr(T cap S)/Pr(S)) rho(Sigma(T cap S)).
/// Returns the probability and the post-measurement state. Throws
/// null_intersection when T cap S is empty, conditioning_on_null when
/// Pr(S) = 0 or Pr(T cap S) = 0.
std::pair<double, DensityMatrix> project_superposition(const Event& s, const Event& t);

/// The Luders mixture operation sum_j P_{B_j} rho P_{B_j}. Defined for any
/// density matrix, pure or mixed; requires a partition of the full space so
/// the trace is preserved.
DensityMatrix luders(const DensityMatrix& rho, const Partition& pi);

/// One branch of a projective measurement: the observable value, its
/// probability tr[P rho], and the normalized post-state P rho P / prob.
struct MeasurementOutcome {
  double value;
  double probability;
  DensityMatrix post_state;
};

/// Measures the random variable f on rho. Outcomes are ordered by ascending
/// value; branches with probability <= tol::outcome_floor are dropped.
/// Mixing the outcomes by their probabilities reproduces
/// luders(rho, partition_of(f)).
std::vector<MeasurementOutcome> measure(const DensityMatrix& rho, const RandomVariable& f);

/// O_f: the diagonal lift of f.
Eigen::MatrixXd observable_matrix(const RandomVariable& f);

/// <f> = tr[O_f rho].
double expectation(const DensityMatrix& rho, const RandomVariable& f);

}  // namespace superprob
