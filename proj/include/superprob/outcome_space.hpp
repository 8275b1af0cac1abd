#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace superprob {

/// A finite sample space: ordered outcome labels with point probabilities.
/// The label order fixes the row/column order of every matrix built on the
/// space. Immutable after construction; copies share storage.
class OutcomeSpace {
 public:
  /// Validates: sizes match, labels unique and non-empty, probabilities
  /// non-negative and summing to 1 within tol::probability. Spaces are
  /// capped at 64 outcomes so events fit in a 64-bit mask.
  OutcomeSpace(std::vector<std::string> labels, std::vector<double> probs);

  /// Equiprobable space over the given labels.
  static OutcomeSpace uniform(std::vector<std::string> labels);

  std::size_t size() const { return data_->labels.size(); }
  const std::vector<std::string>& labels() const { return data_->labels; }
  const std::vector<double>& probs() const { return data_->probs; }
  const std::string& label(std::size_t i) const;
  double prob(std::size_t i) const;

  /// Index of a label; throws unknown_label if absent.
  std::size_t index_of(std::string_view label) const;
  bool has_label(std::string_view label) const;

  /// Mask covering every outcome.
  std::uint64_t full_mask() const;

  /// Two spaces interoperate iff they have identical labels and
  /// probabilities (shared storage short-circuits the comparison).
  bool operator==(const OutcomeSpace& other) const;

 private:
  struct Data {
    std::vector<std::string> labels;
    std::vector<double> probs;
  };
  std::shared_ptr<const Data> data_;
};

}  // namespace superprob
