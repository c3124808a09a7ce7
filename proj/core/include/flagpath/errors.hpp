#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace flagpath {

/// Two objects live over incompatible ambient spaces, fields or shapes.
class DimensionMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two flags (or a flag and a code) disagree on their type vector.
class TypeMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A letter sequence is not a Motzkin word. `index()` is the 1-based
/// position of the offending letter, or 0 when the word as a whole is at
/// fault (imbalanced totals).
class WordError : public std::invalid_argument {
 public:
  enum class Kind { Alphabet, Prefix, Imbalance };

  WordError(Kind kind, std::size_t index, const std::string& msg)
      : std::invalid_argument(msg), kind_(kind), index_(index) {}

  Kind kind() const { return kind_; }
  std::size_t index() const { return index_; }

 private:
  Kind kind_;
  std::size_t index_;
};

/// An integer sequence is not a distance vector. `index()` is the 1-based
/// component (or boundary) where the first violation occurs, 0 when the
/// issue is the overall length.
class VectorError : public std::invalid_argument {
 public:
  enum class Kind { Length, Negative, Step, Zero };

  VectorError(Kind kind, std::size_t index, const std::string& msg)
      : std::invalid_argument(msg), kind_(kind), index_(index) {}

  Kind kind() const { return kind_; }
  std::size_t index() const { return index_; }

 private:
  Kind kind_;
  std::size_t index_;
};

/// A flag-code document failed to parse or validate.
class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace flagpath
