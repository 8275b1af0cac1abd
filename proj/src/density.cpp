#include "superprob/density.hpp"

#include <cmath>
#include <string>

#include "superprob/errors.hpp"
#include "superprob/tolerances.hpp"

namespace superprob {

StateVector::StateVector(OutcomeSpace space, Eigen::VectorXd amplitudes)
    : space_(std::move(space)), amplitudes_(std::move(amplitudes)) {
  if (static_cast<std::size_t>(amplitudes_.size()) != space_.size()) {
    fail(errc::dimension_mismatch, "state vector length does not match the space");
  }
  const double norm = amplitudes_.norm();
  if (std::abs(norm - 1.0) > tol::probability) {
    fail(errc::normalization, "state vector norm is " + std::to_string(norm) + ", expected 1");
  }
}

double StateVector::amplitude(std::size_t i) const {
  if (i >= static_cast<std::size_t>(amplitudes_.size())) {
    fail(errc::out_of_range, "amplitude index " + std::to_string(i));
  }
  return amplitudes_(static_cast<Eigen::Index>(i));
}

DensityMatrix StateVector::outer() const {
  return DensityMatrix(space_, amplitudes_ * amplitudes_.transpose());
}

namespace {
double positive_probability(const Event& s, const char* op) {
  const double pr = event_probability(s);
  if (pr <= 0.0) {
    fail(errc::conditioning_on_null, std::string(op) + ": event has probability 0");
  }
  return pr;
}
}  // namespace

StateVector ket_of_event(const Event& s) {
  const double pr = positive_probability(s, "ket_of_event");
  const auto n = static_cast<Eigen::Index>(s.space().size());
  Eigen::VectorXd amp = Eigen::VectorXd::Zero(n);
  for (std::size_t i : s.indices()) {
    amp(static_cast<Eigen::Index>(i)) = std::sqrt(s.space().prob(i) / pr);
  }
  return StateVector(s.space(), std::move(amp));
}

DensityMatrix rho_delta(const Event& s) {
  const double pr = positive_probability(s, "rho_delta");
  const auto n = static_cast<Eigen::Index>(s.space().size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i : s.indices()) {
    const auto ii = static_cast<Eigen::Index>(i);
    m(ii, ii) = s.space().prob(i) / pr;
  }
  return DensityMatrix(s.space(), std::move(m));
}

DensityMatrix rho_sigma(const Event& s) {
  positive_probability(s, "rho_sigma");
  return ket_of_event(s).outer();
}

DensityMatrix rho_partition(const Partition& pi) {
  const std::vector<double> weights = pi.block_probabilities();
  const auto n = static_cast<Eigen::Index>(pi.space().size());
  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t j = 0; j < pi.block_count(); ++j) {
    if (weights[j] <= 0.0) continue;  // zero-probability block, nothing to cohere
    acc += weights[j] * rho_sigma(pi.blocks()[j]).entries();
  }
  return DensityMatrix(pi.space(), std::move(acc));
}

DensityMatrix mix(std::span<const double> weights, std::span<const DensityMatrix> parts) {
  if (weights.size() != parts.size()) {
    fail(errc::dimension_mismatch, "mix: " + std::to_string(weights.size()) + " weights for " +
                                       std::to_string(parts.size()) + " matrices");
  }
  if (parts.empty()) {
    fail(errc::dimension_mismatch, "mix: nothing to mix");
  }
  double sum = 0.0;
  for (double w : weights) {
    if (w < 0.0 || !std::isfinite(w)) {
      fail(errc::normalization, "mix: weights must be non-negative");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > tol::probability) {
    fail(errc::normalization, "mix: weights sum to " + std::to_string(sum) + ", expected 1");
  }
  const OutcomeSpace& space = parts.front().space();
  for (const auto& part : parts) {
    require_same_space(part.space(), space, "mix");
  }
  const auto n = static_cast<Eigen::Index>(space.size());
  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t j = 0; j < parts.size(); ++j) {
    acc += weights[j] * parts[j].entries();
  }
  return DensityMatrix(space, std::move(acc));
}

}  // namespace superprob
