#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flagpath/errors.hpp"

namespace flagpath {

/// Exact counts; Motzkin numbers outgrow machine words quickly.
using BigInt = mpz_class;

/// A Motzkin word over {U, H, D}: as many U as D in total, and no prefix
/// with more D than U. Construction validates and throws WordError.
class MotzkinWord {
 public:
  MotzkinWord() = default;  // the empty path
  explicit MotzkinWord(std::string_view letters);

  std::size_t size() const { return letters_.size(); }
  const std::string& str() const { return letters_; }
  char operator[](std::size_t i) const { return letters_[i]; }

  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  bool operator==(const MotzkinWord&) const = default;
  auto operator<=>(const MotzkinWord&) const = default;

 private:
  std::string letters_;
};

enum class PathClass { All, Elevated, Riordan };

/// Lattice heights h_0 = 0, ..., h_n = 0 visited by the path.
std::vector<int> heights(const MotzkinWord& w);

/// Area enclosed between the path and the x-axis. Equals the sum of the
/// interior heights; at most floor(n^2/4).
std::int64_t area(const MotzkinWord& w);

/// Interior x-coordinates where the path touches the axis, ascending.
std::vector<int> returns(const MotzkinWord& w);

struct PathClassification {
  bool elevated;  // no returns (and length >= 2)
  bool riordan;   // no horizontal step on the axis
};

PathClassification classify(const MotzkinWord& w);

bool in_class(const MotzkinWord& w, PathClass cls);

/// Streams every qualifying word of length n exactly once in lexicographic
/// order (U < H < D). The visitor returns false to stop early.
void for_each_path(int n, PathClass cls, std::optional<std::int64_t> area_filter,
                   const std::function<bool(const MotzkinWord&)>& visit);

std::vector<MotzkinWord> enumerate_paths(
    int n, PathClass cls = PathClass::All,
    std::optional<std::int64_t> area_filter = std::nullopt);

/// M_n via M_0 = 1, M_n = M_{n-1} + sum_{k=0}^{n-2} M_k M_{n-k-2}.
BigInt motzkin_number(int n);

/// C_n via C_0 = 1, C_n = sum_{k=0}^{n-1} C_k C_{n-k-1}.
BigInt catalan_number(int n);

/// Number of length-n paths without returns: 0 for n < 2, else M_{n-2}.
BigInt elevated_number(int n);

/// Number of length-n paths without horizontal steps on the axis.
BigInt riordan_number(int n);

/// T(n, k): number of length-n paths of area exactly k.
BigInt area_count(int n, std::int64_t k);

}  // namespace flagpath
