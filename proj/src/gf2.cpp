#include "superprob/gf2.hpp"

#include <bit>

#include "superprob/errors.hpp"

namespace superprob {

namespace {
constexpr std::size_t kMaxGF2Dim = 16;

void check_dim(std::size_t dim) {
  if (dim < 1 || dim > kMaxGF2Dim) {
    fail(errc::out_of_range, "GF(2) dimensions must be between 1 and 16");
  }
}

void check_same_dim(std::size_t a, std::size_t b, const char* context) {
  if (a != b) {
    fail(errc::dimension_mismatch, std::string(context) + ": dimensions " + std::to_string(a) +
                                       " and " + std::to_string(b) + " differ");
  }
}
}  // namespace

GF2Vector::GF2Vector(std::size_t dim, std::uint32_t bits) : dim_(dim), bits_(bits) {
  check_dim(dim);
  if ((bits >> dim) != 0) {
    fail(errc::out_of_range, "bitmask has bits beyond the dimension");
  }
}

GF2Vector GF2Vector::zero(std::size_t dim) { return GF2Vector(dim, 0); }

GF2Vector GF2Vector::unit(std::size_t dim, std::size_t i) {
  check_dim(dim);
  if (i >= dim) fail(errc::out_of_range, "coordinate index " + std::to_string(i));
  return GF2Vector(dim, 1u << i);
}

GF2Vector GF2Vector::from_bit_string(std::string_view s) {
  check_dim(s.size());
  std::uint32_t bits = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1') {
      bits |= 1u << i;
    } else if (s[i] != '0') {
      fail(errc::parse_error, "bit strings may only contain 0 and 1");
    }
  }
  return GF2Vector(s.size(), bits);
}

std::size_t GF2Vector::weight() const { return static_cast<std::size_t>(std::popcount(bits_)); }

GF2Vector GF2Vector::operator+(const GF2Vector& other) const {
  check_same_dim(dim_, other.dim_, "GF2Vector::operator+");
  return GF2Vector(dim_, bits_ ^ other.bits_);
}

std::string GF2Vector::bit_string() const {
  std::string s(dim_, '0');
  for (std::size_t i = 0; i < dim_; ++i) {
    if (bit(i)) s[i] = '1';
  }
  return s;
}

GF2Matrix::GF2Matrix(std::size_t dim) : rows_(dim, 0) { check_dim(dim); }

GF2Matrix GF2Matrix::identity(std::size_t dim) {
  GF2Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.rows_[i] = 1u << i;
  return m;
}

GF2Matrix GF2Matrix::from_columns(std::span<const GF2Vector> columns) {
  if (columns.empty()) fail(errc::out_of_range, "no columns given");
  const std::size_t n = columns.front().dim();
  check_same_dim(columns.size(), n, "GF2Matrix::from_columns");
  GF2Matrix m(n);
  for (std::size_t c = 0; c < n; ++c) {
    check_same_dim(columns[c].dim(), n, "GF2Matrix::from_columns");
    for (std::size_t r = 0; r < n; ++r) {
      m.set(r, c, columns[c].bit(r));
    }
  }
  return m;
}

void GF2Matrix::set(std::size_t r, std::size_t c, bool value) {
  if (r >= dim() || c >= dim()) fail(errc::out_of_range, "matrix index out of range");
  if (value) {
    rows_[r] |= 1u << c;
  } else {
    rows_[r] &= ~(1u << c);
  }
}

GF2Vector GF2Matrix::row(std::size_t r) const {
  if (r >= dim()) fail(errc::out_of_range, "row index out of range");
  return GF2Vector(dim(), rows_[r]);
}

GF2Vector GF2Matrix::column(std::size_t c) const {
  if (c >= dim()) fail(errc::out_of_range, "column index out of range");
  std::uint32_t bits = 0;
  for (std::size_t r = 0; r < dim(); ++r) {
    if (at(r, c)) bits |= 1u << r;
  }
  return GF2Vector(dim(), bits);
}

GF2Vector GF2Matrix::operator*(const GF2Vector& v) const {
  check_same_dim(dim(), v.dim(), "GF2Matrix * GF2Vector");
  std::uint32_t bits = 0;
  for (std::size_t r = 0; r < dim(); ++r) {
    const auto parity = std::popcount(rows_[r] & v.bits()) & 1;
    if (parity) bits |= 1u << r;
  }
  return GF2Vector(dim(), bits);
}

GF2Matrix GF2Matrix::operator*(const GF2Matrix& other) const {
  check_same_dim(dim(), other.dim(), "GF2Matrix * GF2Matrix");
  GF2Matrix out(dim());
  for (std::size_t c = 0; c < dim(); ++c) {
    const GF2Vector col = (*this) * other.column(c);
    for (std::size_t r = 0; r < dim(); ++r) {
      out.set(r, c, col.bit(r));
    }
  }
  return out;
}

std::size_t GF2Matrix::rank() const {
  std::vector<std::uint32_t> rows = rows_;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < dim() && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !((rows[pivot] >> col) & 1u)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && ((rows[r] >> col) & 1u)) rows[r] ^= rows[rank];
    }
    ++rank;
  }
  return rank;
}

std::optional<GF2Matrix> GF2Matrix::inverse() const {
  const std::size_t n = dim();
  // Row-reduce [M | I]; the augmented half is carried in separate masks.
  std::vector<std::uint32_t> left = rows_;
  std::vector<std::uint32_t> right(n);
  for (std::size_t i = 0; i < n; ++i) right[i] = 1u << i;

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && !((left[pivot] >> col) & 1u)) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(left[col], left[pivot]);
    std::swap(right[col], right[pivot]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r != col && ((left[r] >> col) & 1u)) {
        left[r] ^= left[col];
        right[r] ^= right[col];
      }
    }
  }
  GF2Matrix out(n);
  out.rows_ = std::move(right);
  return out;
}

std::string GF2Matrix::to_string() const {
  std::string s;
  for (std::size_t r = 0; r < dim(); ++r) {
    s += '[';
    for (std::size_t c = 0; c < dim(); ++c) {
      s += at(r, c) ? '1' : '0';
      if (c + 1 < dim()) s += ' ';
    }
    s += "]\n";
  }
  return s;
}

std::size_t gf2_rank(std::span<const GF2Vector> vectors) {
  if (vectors.empty()) return 0;
  std::vector<std::uint32_t> rows;
  rows.reserve(vectors.size());
  const std::size_t dim = vectors.front().dim();
  for (const auto& v : vectors) {
    check_same_dim(v.dim(), dim, "gf2_rank");
    rows.push_back(v.bits());
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < dim && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !((rows[pivot] >> col) & 1u)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && ((rows[r] >> col) & 1u)) rows[r] ^= rows[rank];
    }
    ++rank;
  }
  return rank;
}

}  // namespace superprob
