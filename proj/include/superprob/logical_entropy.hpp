#pragma once

#include <span>

#include "superprob/density_matrix.hpp"
#include "superprob/partition.hpp"

namespace superprob {

/// h(q) = 1 - sum q_j^2: the probability that two independent draws from q
/// land on different indices.
double logical_entropy(std::span<const double> q);

/// h(pi) = 1 - sum Pr(B_j)^2 over the block probabilities (conditioned on
/// the carrier for a restricted partition).
double logical_entropy(const Partition& pi);

/// h(rho) = 1 - tr[rho^2]; zero exactly for pure states.
double logical_entropy(const DensityMatrix& rho);

/// Entropy accounting for one Luders measurement rho -> sum_j P_j rho P_j.
/// `created` is after - before; `zeroed_square_sum` is the difference of the
/// entrywise square sums, which equals the summed squares of the
/// off-diagonal entries the projections zeroed.
struct EntropyReport {
  double before;
  double after;
  double created;
  double zeroed_square_sum;
};

EntropyReport measurement_entropy_report(const DensityMatrix& rho_before, const Partition& pi);

}  // namespace superprob
