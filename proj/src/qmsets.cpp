#include "superprob/qmsets.hpp"

#include <algorithm>
#include <cmath>

#include "superprob/density.hpp"
#include "superprob/errors.hpp"
#include "superprob/measurement.hpp"
#include "superprob/tolerances.hpp"

namespace superprob {

namespace {
constexpr std::size_t kEnumerationCap = 4;
constexpr std::size_t kCountCap = 16;

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i + 1));
  return labels;
}
}  // namespace

GF2Basis::GF2Basis(std::vector<GF2Vector> vectors, std::vector<std::string> labels)
    : vectors_(std::move(vectors)), labels_(std::move(labels)) {
  if (vectors_.empty()) fail(errc::out_of_range, "a basis needs at least one vector");
  const std::size_t n = vectors_.front().dim();
  if (vectors_.size() != n) {
    fail(errc::dimension_mismatch, "a basis of dimension " + std::to_string(n) + " needs " +
                                       std::to_string(n) + " vectors, got " +
                                       std::to_string(vectors_.size()));
  }
  if (labels_.size() != n) {
    fail(errc::dimension_mismatch, "need one label per basis vector");
  }
  if (gf2_rank(vectors_) != n) {
    fail(errc::not_a_basis, "vectors are linearly dependent over GF(2)");
  }
}

GF2Basis::GF2Basis(std::vector<GF2Vector> vectors)
    : GF2Basis(vectors, default_labels(vectors.size())) {}

GF2Basis GF2Basis::standard(std::size_t dim) {
  std::vector<GF2Vector> vectors;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < dim; ++i) {
    vectors.push_back(GF2Vector::unit(dim, i));
    labels.push_back("u" + std::to_string(i + 1));
  }
  return GF2Basis(std::move(vectors), std::move(labels));
}

GF2Matrix GF2Basis::matrix() const { return GF2Matrix::from_columns(vectors_); }

GF2Vector GF2Basis::to_standard(const GF2Vector& coords) const { return matrix() * coords; }

GF2Vector GF2Basis::coords_of(const GF2Vector& standard) const {
  const auto inv = matrix().inverse();
  if (!inv) fail(errc::singular_matrix, "basis matrix is singular");  // ruled out by construction
  return *inv * standard;
}

std::vector<std::string> GF2Basis::labels_of(const GF2Vector& coords) const {
  if (coords.dim() != dim()) {
    fail(errc::dimension_mismatch, "coordinate dimension does not match the basis");
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (coords.bit(i)) out.push_back(labels_[i]);
  }
  return out;
}

std::size_t GF2Basis::label_index(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  fail(errc::unknown_label, "no basis label '" + std::string(label) + "'");
}

OutcomeSpace GF2Basis::frame() const { return OutcomeSpace::uniform(labels_); }

bool GF2Basis::same_vectors(const GF2Basis& other) const {
  if (dim() != other.dim()) return false;
  auto sorted_bits = [](const std::vector<GF2Vector>& vs) {
    std::vector<std::uint32_t> bits;
    for (const auto& v : vs) bits.push_back(v.bits());
    std::sort(bits.begin(), bits.end());
    return bits;
  };
  return sorted_bits(vectors_) == sorted_bits(other.vectors_);
}

bool is_basis(std::span<const GF2Vector> vectors) {
  if (vectors.empty()) return false;
  const std::size_t n = vectors.front().dim();
  for (const auto& v : vectors) {
    if (v.dim() != n) {
      fail(errc::dimension_mismatch, "is_basis: vectors have mixed dimensions");
    }
  }
  if (vectors.size() != n) return false;
  return gf2_rank(vectors) == n;
}

boost::multiprecision::cpp_int count_bases(std::size_t n, bool ordered) {
  if (n < 1) fail(errc::out_of_range, "dimension must be at least 1");
  if (n > kCountCap) {
    fail(errc::cap_exceeded, "basis counting is capped at n = 16");
  }
  using boost::multiprecision::cpp_int;
  const cpp_int total = cpp_int(1) << n;  // 2^n
  cpp_int count = 1;
  for (std::size_t i = 0; i < n; ++i) {
    count *= total - (cpp_int(1) << i);
  }
  if (!ordered) {
    for (std::size_t k = 2; k <= n; ++k) count /= k;
  }
  return count;
}

std::vector<GF2Basis> enumerate_bases(std::size_t n) {
  if (n < 1 || n > kEnumerationCap) {
    fail(errc::cap_exceeded, "basis enumeration is capped at n = 4");
  }
  const std::uint32_t limit = 1u << n;
  std::vector<GF2Basis> bases;
  // Vectors chosen in strictly increasing bitmask order, so each unordered
  // basis appears exactly once, already canonical.
  std::vector<GF2Vector> chosen;
  auto extend = [&](auto&& self, std::uint32_t next) -> void {
    if (chosen.size() == n) {
      bases.emplace_back(chosen);
      return;
    }
    for (std::uint32_t bits = next; bits < limit; ++bits) {
      chosen.emplace_back(n, bits);
      if (gf2_rank(chosen) == chosen.size()) {
        self(self, bits + 1);
      }
      chosen.pop_back();
    }
  };
  extend(extend, 1);
  return bases;
}

GF2Matrix conversion_matrix(const GF2Basis& from, const GF2Basis& to) {
  if (from.dim() != to.dim()) {
    fail(errc::dimension_mismatch, "conversion_matrix: bases have different dimensions");
  }
  const auto inv = to.matrix().inverse();
  if (!inv) fail(errc::singular_matrix, "target basis matrix is singular");
  return *inv * from.matrix();
}

GF2Vector convert_ket(const GF2Vector& coords, const GF2Matrix& c) { return c * coords; }

Ket::Ket(GF2Vector standard_coords) : standard_(std::move(standard_coords)) {
  if (standard_.is_zero()) fail(errc::zero_vector, "kets are nonzero vectors");
}

Ket Ket::from_coords(const GF2Basis& basis, const GF2Vector& coords) {
  return Ket(basis.to_standard(coords));
}

GF2Vector Ket::coords_in(const GF2Basis& basis) const { return basis.coords_of(standard_); }

KetTable ket_table(std::vector<GF2Basis> bases) {
  if (bases.empty()) fail(errc::out_of_range, "ket_table: no bases given");
  const std::size_t n = bases.front().dim();
  if (n > kEnumerationCap) fail(errc::cap_exceeded, "ket tables are capped at n = 4");
  for (const auto& basis : bases) {
    if (basis.dim() != n) {
      fail(errc::dimension_mismatch, "ket_table: bases have mixed dimensions");
    }
  }
  // Standard coordinates read as binary numbers, coordinate 0 most
  // significant, descending: the all-ones superposition leads the table.
  std::vector<std::uint32_t> masks;
  for (std::uint32_t bits = 1; bits < (1u << n); ++bits) masks.push_back(bits);
  auto msb_first = [n](std::uint32_t bits) {
    std::uint32_t value = 0;
    for (std::size_t i = 0; i < n; ++i) {
      value = (value << 1) | ((bits >> i) & 1u);
    }
    return value;
  };
  std::sort(masks.begin(), masks.end(),
            [&](std::uint32_t a, std::uint32_t b) { return msb_first(a) > msb_first(b); });

  KetTable table;
  table.bases = std::move(bases);
  for (std::uint32_t mask : masks) {
    Ket ket{GF2Vector(n, mask)};
    std::vector<GF2Vector> row;
    row.reserve(table.bases.size());
    for (const auto& basis : table.bases) {
      row.push_back(ket.coords_in(basis));
    }
    table.kets.push_back(std::move(ket));
    table.cells.push_back(std::move(row));
  }
  return table;
}

QState::QState(std::vector<std::pair<double, Ket>> components)
    : components_(std::move(components)) {
  if (components_.empty()) fail(errc::zero_vector, "a state needs at least one component");
  const std::size_t n = components_.front().second.dim();
  double sum = 0.0;
  for (const auto& [weight, ket] : components_) {
    if (ket.dim() != n) {
      fail(errc::dimension_mismatch, "state components have mixed dimensions");
    }
    if (weight < 0.0 || !std::isfinite(weight)) {
      fail(errc::normalization, "component weights must be non-negative");
    }
    sum += weight;
  }
  if (std::abs(sum - 1.0) > tol::probability) {
    fail(errc::normalization, "component weights sum to " + std::to_string(sum) + ", expected 1");
  }
}

QState QState::pure(Ket ket) {
  std::vector<std::pair<double, Ket>> components;
  components.emplace_back(1.0, std::move(ket));
  return QState(std::move(components));
}

QState QState::from_coords(const GF2Basis& basis,
                           std::span<const std::pair<double, GF2Vector>> components) {
  std::vector<std::pair<double, Ket>> out;
  out.reserve(components.size());
  for (const auto& [weight, coords] : components) {
    out.emplace_back(weight, Ket::from_coords(basis, coords));
  }
  return QState(std::move(out));
}

DensityMatrix ket_to_density(const GF2Basis& basis, const GF2Vector& coords) {
  if (coords.dim() != basis.dim()) {
    fail(errc::dimension_mismatch, "coordinate dimension does not match the basis");
  }
  if (coords.is_zero()) fail(errc::zero_vector, "the zero vector has no density matrix");
  const OutcomeSpace frame = basis.frame();
  return rho_sigma(Event(frame, coords.bits()));
}

DensityMatrix state_density_in_basis(const QState& state, const GF2Basis& to) {
  std::vector<double> weights;
  std::vector<DensityMatrix> parts;
  for (const auto& [weight, ket] : state.components()) {
    weights.push_back(weight);
    parts.push_back(ket_to_density(to, ket.coords_in(to)));
  }
  return mix(weights, parts);
}

double measure_in_basis(const QState& state, const GF2Basis& to,
                        std::span<const std::string> target_labels) {
  if (target_labels.empty()) {
    fail(errc::empty_event, "measure_in_basis: target must be non-empty");
  }
  const DensityMatrix rho = state_density_in_basis(state, to);
  const Event target = Event::from_labels(rho.space(), target_labels);
  return prob_given(target, rho);
}

}  // namespace superprob
