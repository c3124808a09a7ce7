#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flagpath/motzkin.hpp"

namespace flagpath {

/// Distance vector (d_1, ..., d_{n-1}) of a pair of full flags on F_q^n:
/// non-negative, and with d_0 = d_n = 0 every consecutive difference is
/// -1, 0 or +1. Construction validates and throws VectorError.
class DistanceVector {
 public:
  DistanceVector() = default;  // n = 0
  explicit DistanceVector(std::vector<int> components);
  DistanceVector(std::vector<int> components, int n);

  int n() const { return n_; }
  const std::vector<int>& components() const { return components_; }

  /// The flag distance this vector carries: sum of components.
  int total() const;

  bool zero_free() const;

  bool operator==(const DistanceVector&) const = default;
  auto operator<=>(const DistanceVector&) const = default;

 private:
  std::vector<int> components_;
  int n_ = 0;
};

/// Checks the step condition with zero boundary values; throws VectorError
/// naming the first offending index.
DistanceVector validate_distance_vector(const std::vector<int>& components,
                                        int n);

/// Comma-separated decimal form, e.g. "1,0,1"; empty string when n <= 1.
std::string format_components(const std::vector<int>& components);
std::string to_string(const DistanceVector& v);

/// Parses "1,0,1" (or "" for the empty vector). Throws VectorError on
/// malformed input.
std::vector<int> parse_components(const std::string& text);

/// Distance vector -> Motzkin word: letter i is U/H/D as d_i - d_{i-1} is
/// +1/0/-1. Inverse of phi.
MotzkinWord psi(const DistanceVector& v);

/// Motzkin word -> distance vector of its interior heights. Inverse of psi.
DistanceVector phi(const MotzkinWord& w);

/// A matched U/D pair at 1-based letter positions open < close; the strip
/// it spans has area close - open.
struct Strip {
  int open;
  int close;
  int area() const { return close - open; }
  bool operator==(const Strip&) const = default;
};

/// The balanced-parenthesis matching of U against D letters. Strip areas
/// sum to the area of the word.
struct StripDecomposition {
  std::vector<Strip> strips;  // ascending by open position
  std::int64_t total_area() const;
};

StripDecomposition strip_decomposition(const MotzkinWord& w);

/// Rows v^1, ..., v^r of 0/1 indicators, v^k_i = 1 iff d_i >= k, so that
/// the levels stack back to the vector and row sums add up to its total.
struct LevelDecomposition {
  std::vector<std::vector<int>> levels;
  std::vector<int> row_sums() const;
};

/// Defined for zero-free vectors only; throws VectorError otherwise.
LevelDecomposition level_decomposition(const DistanceVector& v);

/// Splits a word at its returns, dropping horizontal steps on the axis.
/// Every factor is elevated and factor areas sum to area(w).
std::vector<MotzkinWord> elevated_factorization(const MotzkinWord& w);

}  // namespace flagpath
