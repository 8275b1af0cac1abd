#include "superprob/logical_entropy.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "superprob/errors.hpp"
#include "superprob/measurement.hpp"
#include "superprob/tolerances.hpp"

namespace superprob {

double logical_entropy(std::span<const double> q) {
  double sum = 0.0;
  double sum_sq = 0.0;
  for (double p : q) {
    if (p < 0.0 || !std::isfinite(p)) {
      fail(errc::negative_probability, "distribution entries must be non-negative");
    }
    sum += p;
    sum_sq += p * p;
  }
  if (std::abs(sum - 1.0) > tol::probability) {
    fail(errc::normalization, "distribution sums to " + std::to_string(sum) + ", expected 1");
  }
  return 1.0 - sum_sq;
}

double logical_entropy(const Partition& pi) {
  const std::vector<double> q = pi.block_probabilities();
  return logical_entropy(std::span<const double>(q));
}

double logical_entropy(const DensityMatrix& rho) { return 1.0 - rho.purity(); }

EntropyReport measurement_entropy_report(const DensityMatrix& rho_before, const Partition& pi) {
  const DensityMatrix rho_after = luders(rho_before, pi);
  EntropyReport report;
  report.before = logical_entropy(rho_before);
  report.after = logical_entropy(rho_after);
  report.created = report.after - report.before;
  report.zeroed_square_sum = rho_before.purity() - rho_after.purity();
  return report;
}

}  // namespace superprob
