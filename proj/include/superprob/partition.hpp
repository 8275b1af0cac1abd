#pragma once

#include <vector>

#include "superprob/event.hpp"
#include "superprob/outcome_space.hpp"

namespace superprob {

/// A family of pairwise-disjoint non-empty events. The union of the blocks
/// is the partition's carrier: the whole space for a partition of U, or a
/// proper subset for a restriction pi|S. Block order is preserved as given.
class Partition {
 public:
  Partition(OutcomeSpace space, std::vector<Event> blocks);

  /// All singletons, in outcome order (the partition 1_U).
  static Partition discrete(const OutcomeSpace& space);
  /// The single block U (the partition 0_U).
  static Partition indiscrete(const OutcomeSpace& space);

  const OutcomeSpace& space() const { return space_; }
  const std::vector<Event>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }

  std::uint64_t carrier_mask() const { return carrier_mask_; }
  Event carrier() const;
  bool covers_space() const;

  /// Block probabilities conditioned on the carrier: Pr(B_j)/Pr(carrier).
  /// For a partition of U this is just Pr(B_j). Throws conditioning_on_null
  /// when the carrier has probability 0.
  std::vector<double> block_probabilities() const;

  /// Index of the block containing outcome i, or npos if outside the carrier.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t block_of(std::size_t index) const;

  bool operator==(const Partition& other) const;

 private:
  OutcomeSpace space_;
  std::vector<Event> blocks_;
  std::uint64_t carrier_mask_;
};

/// pi|S: the non-empty intersections B_j cap S, in pi's block order, as a
/// partition with carrier S. Throws conditioning_on_null when Pr(S) = 0.
Partition restrict_partition(const Partition& pi, const Event& s);

}  // namespace superprob
