#include "superprob/event.hpp"

#include <bit>

#include "superprob/errors.hpp"

namespace superprob {

void require_same_space(const OutcomeSpace& a, const OutcomeSpace& b, const char* context) {
  if (!(a == b)) {
    fail(errc::space_mismatch, std::string(context) + ": arguments live on different spaces");
  }
}

Event::Event(OutcomeSpace space, std::uint64_t members)
    : space_(std::move(space)), members_(members) {
  if (members_ == 0) {
    fail(errc::empty_event, "events must be non-empty");
  }
  if ((members_ & ~space_.full_mask()) != 0) {
    fail(errc::out_of_range, "event mask has bits outside the outcome space");
  }
}

Event Event::from_labels(const OutcomeSpace& space, std::span<const std::string> labels) {
  std::uint64_t mask = 0;
  for (const auto& label : labels) {
    mask |= std::uint64_t{1} << space.index_of(label);
  }
  return Event(space, mask);
}

Event Event::singleton(const OutcomeSpace& space, std::size_t index) {
  if (index >= space.size()) {
    fail(errc::out_of_range, "outcome index " + std::to_string(index));
  }
  return Event(space, std::uint64_t{1} << index);
}

Event Event::full(const OutcomeSpace& space) { return Event(space, space.full_mask()); }

bool Event::contains(std::size_t index) const {
  return index < space_.size() && (members_ >> index) & 1;
}

std::size_t Event::cardinality() const { return static_cast<std::size_t>(std::popcount(members_)); }

std::vector<std::size_t> Event::indices() const {
  std::vector<std::size_t> out;
  out.reserve(cardinality());
  for (std::size_t i = 0; i < space_.size(); ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::vector<std::string> Event::labels() const {
  std::vector<std::string> out;
  out.reserve(cardinality());
  for (std::size_t i : indices()) out.push_back(space_.label(i));
  return out;
}

std::optional<Event> Event::intersect(const Event& other) const {
  require_same_space(space_, other.space_, "intersect");
  const std::uint64_t mask = members_ & other.members_;
  if (mask == 0) return std::nullopt;
  return Event(space_, mask);
}

bool Event::is_subset_of(const Event& other) const {
  require_same_space(space_, other.space_, "is_subset_of");
  return (members_ & ~other.members_) == 0;
}

bool Event::is_disjoint_from(const Event& other) const {
  require_same_space(space_, other.space_, "is_disjoint_from");
  return (members_ & other.members_) == 0;
}

bool Event::is_full() const { return members_ == space_.full_mask(); }

bool Event::operator==(const Event& other) const {
  return members_ == other.members_ && space_ == other.space_;
}

double event_probability(const Event& s) {
  double sum = 0.0;
  const auto& probs = s.space().probs();
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (s.contains(i)) sum += probs[i];
  }
  return sum;
}

double conditional_probability(const Event& t, const Event& s) {
  require_same_space(t.space(), s.space(), "conditional_probability");
  const double pr_s = event_probability(s);
  if (pr_s <= 0.0) {
    fail(errc::conditioning_on_null, "conditioning event has probability 0");
  }
  const auto both = t.intersect(s);
  if (!both) return 0.0;
  return event_probability(*both) / pr_s;
}

}  // namespace superprob
