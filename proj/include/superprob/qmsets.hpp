#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "superprob/density_matrix.hpp"
#include "superprob/gf2.hpp"
#include "superprob/outcome_space.hpp"

namespace superprob {

/// An ordered, labelled basis of Z_2^n. Basis vectors are written in
/// standard coordinates; label i names vector i, so a coordinate mask over
/// this basis reads as a subset of its labels.
class GF2Basis {
 public:
  GF2Basis(std::vector<GF2Vector> vectors, std::vector<std::string> labels);
  /// Auto-labels the vectors v1..vn.
  explicit GF2Basis(std::vector<GF2Vector> vectors);

  static GF2Basis standard(std::size_t dim);

  std::size_t dim() const { return vectors_.size(); }
  const std::vector<GF2Vector>& vectors() const { return vectors_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Columns are the basis vectors, so standard = matrix() * coords.
  GF2Matrix matrix() const;
  GF2Vector to_standard(const GF2Vector& coords) const;
  GF2Vector coords_of(const GF2Vector& standard) const;

  /// The labels selected by a coordinate mask over this basis.
  std::vector<std::string> labels_of(const GF2Vector& coords) const;
  std::size_t label_index(std::string_view label) const;

  /// The equiprobable outcome space whose outcomes are this basis's labels
  /// (QM/Sets convention: subsets of a basis set with equiprobable outcomes).
  OutcomeSpace frame() const;

  /// Same vector set, ignoring order and labels.
  bool same_vectors(const GF2Basis& other) const;

 private:
  std::vector<GF2Vector> vectors_;
  std::vector<std::string> labels_;
};

/// Rank-n test by mod-2 Gaussian elimination (expects n vectors of dim n).
bool is_basis(std::span<const GF2Vector> vectors);

/// Gauss's count of bases of Z_2^n: ordered is
/// (2^n - 1)(2^n - 2)...(2^n - 2^(n-1)); unordered divides by n!.
/// Exact for n <= 16; larger n throws cap_exceeded.
boost::multiprecision::cpp_int count_bases(std::size_t n, bool ordered);

/// All unordered bases of Z_2^n (n <= 4), each canonicalized with vectors
/// ascending by bitmask, the list ordered lexicographically.
std::vector<GF2Basis> enumerate_bases(std::size_t n);

/// C_{from->to}: coords_to = C * coords_from for every abstract vector.
GF2Matrix conversion_matrix(const GF2Basis& from, const GF2Basis& to);

/// Mod-2 matrix-vector product (a ket's coordinates through a conversion).
GF2Vector convert_ket(const GF2Vector& coords, const GF2Matrix& c);

/// An abstract nonzero vector of Z_2^n, representable in any basis.
/// Canonically carried by its standard coordinates.
class Ket {
 public:
  explicit Ket(GF2Vector standard_coords);
  static Ket from_coords(const GF2Basis& basis, const GF2Vector& coords);

  std::size_t dim() const { return standard_.dim(); }
  const GF2Vector& standard() const { return standard_; }
  GF2Vector coords_in(const GF2Basis& basis) const;

  bool operator==(const Ket& other) const = default;

 private:
  GF2Vector standard_;
};

/// One row per nonzero abstract vector, one column per basis; cell (r, b)
/// holds the row ket's coordinates in basis b. Rows are ordered descending
/// by standard-coordinate string read as a binary number, first coordinate
/// most significant, so the all-ones superposition comes first.
struct KetTable {
  std::vector<GF2Basis> bases;
  std::vector<Ket> kets;
  std::vector<std::vector<GF2Vector>> cells;
};

KetTable ket_table(std::vector<GF2Basis> bases);

/// A classical mixture of kets: weights are non-negative and sum to 1.
/// A single component is a pure ket.
class QState {
 public:
  explicit QState(std::vector<std::pair<double, Ket>> components);
  static QState pure(Ket ket);
  /// Components given by coordinates in a basis.
  static QState from_coords(const GF2Basis& basis,
                            std::span<const std::pair<double, GF2Vector>> components);

  const std::vector<std::pair<double, Ket>>& components() const { return components_; }
  bool is_pure() const { return components_.size() == 1; }

 private:
  std::vector<std::pair<double, Ket>> components_;
};

/// The density matrix of a 0/1 coordinate vector in the given basis frame:
/// normalize to unit length and take the self outer product. Equals
/// rho(Sigma) of the coordinate support in the equiprobable frame.
DensityMatrix ket_to_density(const GF2Basis& basis, const GF2Vector& coords);

/// Converts every component to the target basis, forms each component's
/// density matrix there, and mixes with the component weights.
DensityMatrix state_density_in_basis(const QState& state, const GF2Basis& to);

/// tr[P_target state_density_in_basis(state, to)] for a target subset of
/// the to-basis labels.
double measure_in_basis(const QState& state, const GF2Basis& to,
                        std::span<const std::string> target_labels);

}  // namespace superprob
