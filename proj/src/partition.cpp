#include "superprob/partition.hpp"

#include "superprob/errors.hpp"

namespace superprob {

Partition::Partition(OutcomeSpace space, std::vector<Event> blocks)
    : space_(std::move(space)), blocks_(std::move(blocks)), carrier_mask_(0) {
  if (blocks_.empty()) {
    fail(errc::invalid_partition, "a partition needs at least one block");
  }
  for (const auto& block : blocks_) {
    require_same_space(block.space(), space_, "Partition");
    if ((carrier_mask_ & block.members()) != 0) {
      fail(errc::invalid_partition, "blocks overlap");
    }
    carrier_mask_ |= block.members();
  }
}

Partition Partition::discrete(const OutcomeSpace& space) {
  std::vector<Event> blocks;
  blocks.reserve(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    blocks.push_back(Event::singleton(space, i));
  }
  return Partition(space, std::move(blocks));
}

Partition Partition::indiscrete(const OutcomeSpace& space) {
  return Partition(space, {Event::full(space)});
}

Event Partition::carrier() const { return Event(space_, carrier_mask_); }

bool Partition::covers_space() const { return carrier_mask_ == space_.full_mask(); }

std::vector<double> Partition::block_probabilities() const {
  const double pr_carrier = event_probability(carrier());
  if (pr_carrier <= 0.0) {
    fail(errc::conditioning_on_null, "partition carrier has probability 0");
  }
  std::vector<double> out;
  out.reserve(blocks_.size());
  for (const auto& block : blocks_) {
    out.push_back(event_probability(block) / pr_carrier);
  }
  return out;
}

std::size_t Partition::block_of(std::size_t index) const {
  for (std::size_t j = 0; j < blocks_.size(); ++j) {
    if (blocks_[j].contains(index)) return j;
  }
  return npos;
}

bool Partition::operator==(const Partition& other) const {
  return space_ == other.space_ && blocks_ == other.blocks_;
}

Partition restrict_partition(const Partition& pi, const Event& s) {
  require_same_space(pi.space(), s.space(), "restrict_partition");
  if (event_probability(s) <= 0.0) {
    fail(errc::conditioning_on_null, "restriction event has probability 0");
  }
  std::vector<Event> blocks;
  for (const auto& block : pi.blocks()) {
    if (auto piece = block.intersect(s)) blocks.push_back(*piece);
  }
  return Partition(pi.space(), std::move(blocks));
}

}  // namespace superprob
