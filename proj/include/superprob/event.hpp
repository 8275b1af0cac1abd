#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "superprob/outcome_space.hpp"

namespace superprob {

/// A non-empty subset of an outcome space, stored as a bitmask over outcome
/// indices (bit i set iff outcome i is a member).
class Event {
 public:
  Event(OutcomeSpace space, std::uint64_t members);

  static Event from_labels(const OutcomeSpace& space, std::span<const std::string> labels);
  static Event singleton(const OutcomeSpace& space, std::size_t index);
  static Event full(const OutcomeSpace& space);

  const OutcomeSpace& space() const { return space_; }
  std::uint64_t members() const { return members_; }
  bool contains(std::size_t index) const;
  std::size_t cardinality() const;
  std::vector<std::size_t> indices() const;
  std::vector<std::string> labels() const;

  /// Set intersection; empty intersections have no Event representation.
  std::optional<Event> intersect(const Event& other) const;
  bool is_subset_of(const Event& other) const;
  bool is_disjoint_from(const Event& other) const;
  bool is_full() const;

  bool operator==(const Event& other) const;

 private:
  OutcomeSpace space_;
  std::uint64_t members_;
};

/// Pr(S) = sum of point probabilities over the members of S.
double event_probability(const Event& s);

/// Pr(T|S) = Pr(S cap T) / Pr(S). Throws conditioning_on_null if Pr(S) = 0.
double conditional_probability(const Event& t, const Event& s);

/// Throws space_mismatch unless both arguments live on the same space.
void require_same_space(const OutcomeSpace& a, const OutcomeSpace& b, const char* context);

}  // namespace superprob
