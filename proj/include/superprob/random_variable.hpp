#pragma once

#include <vector>

#include "superprob/event.hpp"
#include "superprob/outcome_space.hpp"
#include "superprob/partition.hpp"

namespace superprob {

/// A real-valued function on the outcomes of a space. Its level sets induce
/// a partition of the space.
class RandomVariable {
 public:
  RandomVariable(OutcomeSpace space, std::vector<double> values);

  /// The 0/1 indicator of an event.
  static RandomVariable indicator(const Event& event);
  static RandomVariable constant(const OutcomeSpace& space, double value);

  const OutcomeSpace& space() const { return space_; }
  const std::vector<double>& values() const { return values_; }
  double value(std::size_t index) const;

  /// Distinct values, ascending.
  std::vector<double> distinct_values() const;

  bool operator==(const RandomVariable& other) const {
    return space_ == other.space_ && values_ == other.values_;
  }

 private:
  OutcomeSpace space_;
  std::vector<double> values_;
};

/// The level-set partition {f^-1(phi_j)}, blocks ordered by ascending value.
Partition partition_of(const RandomVariable& f);

}  // namespace superprob
