#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "flagpath/errors.hpp"

namespace flagpath {

bool is_prime(std::uint32_t n);

/// The prime field F_q, q < 2^16. Elements are plain integers in [0, q);
/// the field object supplies the arithmetic.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t q);

  std::uint32_t modulus() const { return q_; }

  std::uint16_t add(std::uint16_t a, std::uint16_t b) const {
    std::uint32_t s = std::uint32_t(a) + b;
    return std::uint16_t(s >= q_ ? s - q_ : s);
  }
  std::uint16_t sub(std::uint16_t a, std::uint16_t b) const {
    return std::uint16_t(a >= b ? a - b : a + q_ - b);
  }
  std::uint16_t neg(std::uint16_t a) const {
    return std::uint16_t(a == 0 ? 0 : q_ - a);
  }
  std::uint16_t mul(std::uint16_t a, std::uint16_t b) const {
    return std::uint16_t(std::uint64_t(a) * b % q_);
  }
  /// Multiplicative inverse of a nonzero element.
  std::uint16_t inv(std::uint16_t a) const;

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t q_;
};

/// Dense row-major matrix over a prime field. Entries live in [0, q).
/// Zero rows are legal; a matrix always has at least one column.
class Matrix {
 public:
  Matrix(PrimeField field, std::size_t rows, std::size_t cols);

  /// Builds a matrix from explicit rows, checking every entry against the
  /// field. Throws DimensionMismatchError on ragged rows or out-of-range
  /// entries.
  static Matrix from_rows(PrimeField field, std::size_t cols,
                          const std::vector<std::vector<int>>& rows);

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint16_t at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, std::uint16_t v) {
    data_[r * cols_ + c] = v;
  }
  std::span<const std::uint16_t> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<std::uint16_t> row(std::size_t r) {
    return {data_.data() + r * cols_, cols_};
  }

  void append_row(std::span<const std::uint16_t> v);

  bool operator==(const Matrix& other) const;
  std::strong_ordering operator<=>(const Matrix& other) const;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint16_t> data_;
};

struct RrefResult {
  Matrix matrix;  // reduced row echelon form, zero rows stripped
  std::size_t rank;
};

/// Unique reduced row echelon form of m with zero rows removed. The row
/// space is preserved; rank is the number of remaining rows.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

Matrix vstack(const Matrix& a, const Matrix& b);

/// Rank of the vertical concatenation [a; b], i.e. dim of the sum of the
/// two row spaces. Throws DimensionMismatchError when fields or column
/// counts differ.
std::size_t stack_rank(const Matrix& a, const Matrix& b);

/// Reduces v against a matrix already in RREF; the residual is zero iff v
/// lies in the row space.
std::vector<std::uint16_t> reduce_row(const Matrix& rref_basis,
                                      std::vector<std::uint16_t> v);

bool in_row_space(const Matrix& rref_basis, std::span<const std::uint16_t> v);

namespace detail {
// Exposed for equivalence testing against the bit-packed GF(2) path.
RrefResult rref_generic(const Matrix& m);
RrefResult rref_gf2(const Matrix& m);
}  // namespace detail

}  // namespace flagpath
