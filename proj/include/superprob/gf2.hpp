#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace superprob {

/// A vector over the two-element field, stored as a bitmask. Bit i is
/// coordinate i; rendering writes coordinate 0 first ("110" means
/// coordinates (1,1,0)). Dimensions are capped at 16.
class GF2Vector {
 public:
  GF2Vector(std::size_t dim, std::uint32_t bits);

  static GF2Vector zero(std::size_t dim);
  static GF2Vector unit(std::size_t dim, std::size_t i);
  /// Parses "101"-style strings, coordinate 0 first.
  static GF2Vector from_bit_string(std::string_view s);

  std::size_t dim() const { return dim_; }
  std::uint32_t bits() const { return bits_; }
  bool bit(std::size_t i) const { return (bits_ >> i) & 1u; }
  bool is_zero() const { return bits_ == 0; }
  std::size_t weight() const;

  /// Mod-2 addition.
  GF2Vector operator+(const GF2Vector& other) const;
  bool operator==(const GF2Vector& other) const = default;

  std::string bit_string() const;

 private:
  std::size_t dim_;
  std::uint32_t bits_;
};

/// A square bit matrix over GF(2); row r is stored as a bitmask with bit c
/// holding entry (r, c).
class GF2Matrix {
 public:
  explicit GF2Matrix(std::size_t dim);

  static GF2Matrix identity(std::size_t dim);
  static GF2Matrix from_columns(std::span<const GF2Vector> columns);

  std::size_t dim() const { return rows_.size(); }
  bool at(std::size_t r, std::size_t c) const { return (rows_[r] >> c) & 1u; }
  void set(std::size_t r, std::size_t c, bool value);
  GF2Vector row(std::size_t r) const;
  GF2Vector column(std::size_t c) const;

  GF2Vector operator*(const GF2Vector& v) const;
  GF2Matrix operator*(const GF2Matrix& other) const;
  bool operator==(const GF2Matrix& other) const = default;

  std::size_t rank() const;
  /// Gauss-Jordan inverse mod 2; nullopt when singular.
  std::optional<GF2Matrix> inverse() const;

  std::string to_string() const;

 private:
  std::vector<std::uint32_t> rows_;
};

/// Rank of a family of vectors (mod-2 Gaussian elimination).
std::size_t gf2_rank(std::span<const GF2Vector> vectors);

}  // namespace superprob
