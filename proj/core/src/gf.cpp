#include "flagpath/gf.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>

namespace flagpath {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint32_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t q) : q_(q) {
  if (q >= (1u << 16)) {
    throw DimensionMismatchError("field modulus " + std::to_string(q) +
                                 " out of range (must be < 2^16)");
  }
  if (!is_prime(q)) {
    throw DimensionMismatchError("field modulus " + std::to_string(q) +
                                 " is not prime");
  }
}

std::uint16_t PrimeField::inv(std::uint16_t a) const {
  // extended Euclid on (a, q)
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = q_, new_r = a % q_;
  while (new_r != 0) {
    std::int64_t quot = r / new_r;
    t = std::exchange(new_t, t - quot * new_t);
    r = std::exchange(new_r, r - quot * new_r);
  }
  // r == 1 since q is prime and a != 0
  if (t < 0) t += q_;
  return std::uint16_t(t);
}

Matrix::Matrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  if (cols == 0) {
    throw DimensionMismatchError("matrix must have at least one column");
  }
}

Matrix Matrix::from_rows(PrimeField field, std::size_t cols,
                         const std::vector<std::vector<int>>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw DimensionMismatchError("row " + std::to_string(r) + " has " +
                                   std::to_string(rows[r].size()) +
                                   " entries, expected " + std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) {
      int v = rows[r][c];
      if (v < 0 || std::uint32_t(v) >= field.modulus()) {
        throw DimensionMismatchError(
            "entry " + std::to_string(v) + " at (" + std::to_string(r) + "," +
            std::to_string(c) + ") outside [0," +
            std::to_string(field.modulus()) + ")");
      }
      m.set(r, c, std::uint16_t(v));
    }
  }
  return m;
}

void Matrix::append_row(std::span<const std::uint16_t> v) {
  if (v.size() != cols_) {
    throw DimensionMismatchError("appended row has wrong length");
  }
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

bool Matrix::operator==(const Matrix& other) const {
  return field_ == other.field_ && rows_ == other.rows_ &&
         cols_ == other.cols_ && data_ == other.data_;
}

std::strong_ordering Matrix::operator<=>(const Matrix& other) const {
  if (auto c = field_.modulus() <=> other.field_.modulus(); c != 0) return c;
  if (auto c = cols_ <=> other.cols_; c != 0) return c;
  if (auto c = rows_ <=> other.rows_; c != 0) return c;
  return std::lexicographical_compare_three_way(data_.begin(), data_.end(),
                                                other.data_.begin(),
                                                other.data_.end());
}

namespace detail {

RrefResult rref_generic(const Matrix& m) {
  Matrix a = m;
  const PrimeField& f = a.field();
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a.at(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      for (std::size_t j = c; j < cols; ++j) {
        std::uint16_t tmp = a.at(r, j);
        a.set(r, j, a.at(pivot, j));
        a.set(pivot, j, tmp);
      }
    }
    std::uint16_t scale = f.inv(a.at(r, c));
    if (scale != 1) {
      for (std::size_t j = c; j < cols; ++j) a.set(r, j, f.mul(a.at(r, j), scale));
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      std::uint16_t factor = a.at(i, c);
      if (factor == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        a.set(i, j, f.sub(a.at(i, j), f.mul(factor, a.at(r, j))));
      }
    }
    ++r;
  }
  Matrix out(f, 0, cols);
  for (std::size_t i = 0; i < r; ++i) out.append_row(a.row(i));
  return {out, r};
}

RrefResult rref_gf2(const Matrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  const std::size_t words = (cols + 63) / 64;
  std::vector<std::uint64_t> bits(rows * words, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (m.at(i, j)) bits[i * words + j / 64] |= std::uint64_t(1) << (j % 64);
    }
  }
  auto test = [&](std::size_t i, std::size_t j) {
    return (bits[i * words + j / 64] >> (j % 64)) & 1;
  };
  auto xor_rows = [&](std::size_t dst, std::size_t src) {
    for (std::size_t w = 0; w < words; ++w) bits[dst * words + w] ^= bits[src * words + w];
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && !test(pivot, c)) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      for (std::size_t w = 0; w < words; ++w) {
        std::swap(bits[r * words + w], bits[pivot * words + w]);
      }
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i != r && test(i, c)) xor_rows(i, r);
    }
    ++r;
  }
  Matrix out(m.field(), r, cols);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (test(i, j)) out.set(i, j, 1);
    }
  }
  return {out, r};
}

}  // namespace detail

RrefResult rref(const Matrix& m) {
  if (m.field().modulus() == 2) return detail::rref_gf2(m);
  return detail::rref_generic(m);
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) {
    throw DimensionMismatchError("cannot stack matrices over different fields");
  }
  if (a.cols() != b.cols()) {
    throw DimensionMismatchError("cannot stack matrices with " +
                                 std::to_string(a.cols()) + " and " +
                                 std::to_string(b.cols()) + " columns");
  }
  Matrix out = a;
  for (std::size_t i = 0; i < b.rows(); ++i) out.append_row(b.row(i));
  return out;
}

std::size_t stack_rank(const Matrix& a, const Matrix& b) {
  return rank(vstack(a, b));
}

std::vector<std::uint16_t> reduce_row(const Matrix& rref_basis,
                                      std::vector<std::uint16_t> v) {
  const PrimeField& f = rref_basis.field();
  if (v.size() != rref_basis.cols()) {
    throw DimensionMismatchError("vector length does not match column count");
  }
  for (std::size_t i = 0; i < rref_basis.rows(); ++i) {
    std::size_t p = 0;
    while (p < rref_basis.cols() && rref_basis.at(i, p) == 0) ++p;
    if (p == rref_basis.cols()) continue;
    std::uint16_t coeff = v[p];  // pivot entries are 1
    if (coeff == 0) continue;
    for (std::size_t j = p; j < rref_basis.cols(); ++j) {
      v[j] = f.sub(v[j], f.mul(coeff, rref_basis.at(i, j)));
    }
  }
  return v;
}

bool in_row_space(const Matrix& rref_basis, std::span<const std::uint16_t> v) {
  auto res = reduce_row(rref_basis, std::vector<std::uint16_t>(v.begin(), v.end()));
  return std::all_of(res.begin(), res.end(), [](std::uint16_t x) { return x == 0; });
}

}  // namespace flagpath
