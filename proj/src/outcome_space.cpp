#include "superprob/outcome_space.hpp"

#include <cmath>
#include <unordered_set>

#include "superprob/errors.hpp"
#include "superprob/tolerances.hpp"

namespace superprob {

namespace {
constexpr std::size_t kMaxOutcomes = 64;  // events are 64-bit masks
}

OutcomeSpace::OutcomeSpace(std::vector<std::string> labels, std::vector<double> probs) {
  if (labels.size() != probs.size()) {
    fail(errc::dimension_mismatch, "labels and probabilities differ in length (" +
                                       std::to_string(labels.size()) + " vs " +
                                       std::to_string(probs.size()) + ")");
  }
  if (labels.empty()) {
    fail(errc::out_of_range, "an outcome space needs at least one outcome");
  }
  if (labels.size() > kMaxOutcomes) {
    fail(errc::out_of_range, "outcome spaces are capped at 64 outcomes");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& label : labels) {
    if (label.empty()) {
      fail(errc::invalid_label, "outcome labels must be non-empty");
    }
    if (!seen.insert(label).second) {
      fail(errc::duplicate_label, "duplicate outcome label '" + label + "'");
    }
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] < 0.0 || !std::isfinite(probs[i])) {
      fail(errc::negative_probability,
           "probability of '" + labels[i] + "' is " + std::to_string(probs[i]));
    }
    sum += probs[i];
  }
  if (std::abs(sum - 1.0) > tol::probability) {
    fail(errc::normalization, "probabilities sum to " + std::to_string(sum) + ", expected 1");
  }
  data_ = std::make_shared<const Data>(Data{std::move(labels), std::move(probs)});
}

OutcomeSpace OutcomeSpace::uniform(std::vector<std::string> labels) {
  const std::size_t n = labels.empty() ? 1 : labels.size();
  std::vector<double> probs(labels.size(), 1.0 / static_cast<double>(n));
  return OutcomeSpace(std::move(labels), std::move(probs));
}

const std::string& OutcomeSpace::label(std::size_t i) const {
  if (i >= size()) fail(errc::out_of_range, "outcome index " + std::to_string(i));
  return data_->labels[i];
}

double OutcomeSpace::prob(std::size_t i) const {
  if (i >= size()) fail(errc::out_of_range, "outcome index " + std::to_string(i));
  return data_->probs[i];
}

std::size_t OutcomeSpace::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (data_->labels[i] == label) return i;
  }
  fail(errc::unknown_label, "no outcome labelled '" + std::string(label) + "'");
}

bool OutcomeSpace::has_label(std::string_view label) const {
  for (const auto& l : data_->labels) {
    if (l == label) return true;
  }
  return false;
}

std::uint64_t OutcomeSpace::full_mask() const {
  const std::size_t n = size();
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

bool OutcomeSpace::operator==(const OutcomeSpace& other) const {
  if (data_ == other.data_) return true;
  return data_->labels == other.data_->labels && data_->probs == other.data_->probs;
}

}  // namespace superprob
