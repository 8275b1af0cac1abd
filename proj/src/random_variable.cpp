#include "superprob/random_variable.hpp"

#include <algorithm>
#include <cmath>

#include "superprob/errors.hpp"

namespace superprob {

RandomVariable::RandomVariable(OutcomeSpace space, std::vector<double> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (values_.size() != space_.size()) {
    fail(errc::dimension_mismatch, "random variable needs one value per outcome");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) {
      fail(errc::out_of_range, "random variable values must be finite");
    }
  }
}

RandomVariable RandomVariable::indicator(const Event& event) {
  std::vector<double> values(event.space().size(), 0.0);
  for (std::size_t i : event.indices()) values[i] = 1.0;
  return RandomVariable(event.space(), std::move(values));
}

RandomVariable RandomVariable::constant(const OutcomeSpace& space, double value) {
  return RandomVariable(space, std::vector<double>(space.size(), value));
}

double RandomVariable::value(std::size_t index) const {
  if (index >= values_.size()) fail(errc::out_of_range, "outcome index " + std::to_string(index));
  return values_[index];
}

std::vector<double> RandomVariable::distinct_values() const {
  std::vector<double> out = values_;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Partition partition_of(const RandomVariable& f) {
  std::vector<Event> blocks;
  for (double phi : f.distinct_values()) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < f.space().size(); ++i) {
      if (f.value(i) == phi) mask |= std::uint64_t{1} << i;
    }
    blocks.emplace_back(f.space(), mask);
  }
  return Partition(f.space(), std::move(blocks));
}

}  // namespace superprob
