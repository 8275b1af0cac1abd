#pragma once

#include <Eigen/Dense>
#include <span>

#include "superprob/density_matrix.hpp"
#include "superprob/event.hpp"
#include "superprob/partition.hpp"

namespace superprob {

/// The normalized column vector |S> with i-th amplitude
/// sqrt(p_i / Pr(S)) for members of S and 0 elsewhere.
class StateVector {
 public:
  StateVector(OutcomeSpace space, Eigen::VectorXd amplitudes);

  const OutcomeSpace& space() const { return space_; }
  const Eigen::VectorXd& amplitudes() const { return amplitudes_; }
  double amplitude(std::size_t i) const;

  /// |v><v| as a density matrix.
  DensityMatrix outer() const;

 private:
  OutcomeSpace space_;
  Eigen::VectorXd amplitudes_;
};

/// |S>: requires Pr(S) > 0.
StateVector ket_of_event(const Event& s);

/// rho(Delta S): the diagonal matrix with entries p_i/Pr(S) on S.
/// The classical event, outcomes fully decohered.
DensityMatrix rho_delta(const Event& s);

/// rho(Sigma S) = |S><S|: the superposition event, pure by construction,
/// with amplitudes sqrt(p_i p_k)/Pr(S) cohering the members of S.
DensityMatrix rho_sigma(const Event& s);

/// rho(pi) = sum_j Pr(B_j | carrier) rho(Sigma B_j). For a partition of U
/// the weights are the plain block probabilities; for a restriction pi|S
/// they are conditioned on S, giving rho(pi|S) as in the Luders mixture.
/// Blocks of probability 0 contribute nothing and are skipped.
DensityMatrix rho_partition(const Partition& pi);

/// Entrywise convex combination. Weights must be non-negative and sum to 1
/// within tol::probability; all matrices must share one space.
DensityMatrix mix(std::span<const double> weights, std::span<const DensityMatrix> parts);

}  // namespace superprob
