#include "flagpath/flag.hpp"

#include <algorithm>
#include <string>

namespace flagpath {

TypeVector::TypeVector(std::vector<int> dims, int ambient)
    : dims_(std::move(dims)), ambient_(ambient) {
  if (ambient_ < 2) {
    throw DimensionMismatchError("ambient dimension must be at least 2");
  }
  if (dims_.empty()) {
    throw DimensionMismatchError("type vector must list at least one dimension");
  }
  int prev = 0;
  for (int t : dims_) {
    if (t <= prev) {
      throw DimensionMismatchError("type vector must be strictly increasing and positive");
    }
    prev = t;
  }
  if (dims_.back() >= ambient_) {
    throw DimensionMismatchError("type dimensions must stay below the ambient dimension");
  }
}

TypeVector TypeVector::full(int ambient) {
  std::vector<int> dims(std::size_t(ambient - 1));
  for (int i = 1; i < ambient; ++i) dims[std::size_t(i - 1)] = i;
  return TypeVector(std::move(dims), ambient);
}

bool TypeVector::is_full() const {
  return int(dims_.size()) == ambient_ - 1;
}

int max_flag_distance(const TypeVector& t) {
  int n = t.ambient();
  int total = 0;
  for (int ti : t.dims()) total += std::min(ti, n - ti);
  return total;
}

Flag::Flag(TypeVector type, std::vector<Subspace> subspaces)
    : type_(std::move(type)), subspaces_(std::move(subspaces)) {
  if (subspaces_.size() != type_.length()) {
    throw DimensionMismatchError("flag has " + std::to_string(subspaces_.size()) +
                                 " subspaces, type requires " +
                                 std::to_string(type_.length()));
  }
  const PrimeField& f = subspaces_.front().field();
  for (std::size_t i = 0; i < subspaces_.size(); ++i) {
    const Subspace& s = subspaces_[i];
    if (s.field() != f) {
      throw DimensionMismatchError("flag subspaces live over different fields");
    }
    if (int(s.ambient()) != type_.ambient()) {
      throw DimensionMismatchError("subspace " + std::to_string(i + 1) +
                                   " has ambient " + std::to_string(s.ambient()) +
                                   ", type requires " +
                                   std::to_string(type_.ambient()));
    }
    if (int(s.dim()) != type_.dims()[i]) {
      throw DimensionMismatchError("subspace " + std::to_string(i + 1) +
                                   " has dimension " + std::to_string(s.dim()) +
                                   ", type requires " +
                                   std::to_string(type_.dims()[i]));
    }
    if (i > 0 && stack_rank(subspaces_[i - 1].basis(), s.basis()) != s.dim()) {
      throw DimensionMismatchError("subspace " + std::to_string(i) +
                                   " is not contained in subspace " +
                                   std::to_string(i + 1));
    }
  }
}

bool Flag::operator==(const Flag& other) const {
  return type_ == other.type_ && subspaces_ == other.subspaces_;
}

std::strong_ordering Flag::operator<=>(const Flag& other) const {
  return std::lexicographical_compare_three_way(
      subspaces_.begin(), subspaces_.end(), other.subspaces_.begin(),
      other.subspaces_.end());
}

namespace {

void check_same_type(const Flag& f, const Flag& g) {
  if (f.type() != g.type()) {
    throw TypeMismatchError("flags have different types");
  }
  if (f.field() != g.field()) {
    throw TypeMismatchError("flags live over different fields");
  }
}

}  // namespace

int flag_distance(const Flag& f, const Flag& g) {
  check_same_type(f, g);
  int total = 0;
  for (std::size_t i = 0; i < f.subspaces().size(); ++i) {
    total += int(injection_distance(f.subspace(i), g.subspace(i)));
  }
  return total;
}

std::vector<int> distance_vector(const Flag& f, const Flag& g) {
  check_same_type(f, g);
  std::vector<int> out(f.subspaces().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = int(injection_distance(f.subspace(i), g.subspace(i)));
  }
  return out;
}

std::vector<int> collapse_points(const Flag& f, const Flag& g) {
  check_same_type(f, g);
  std::vector<int> out;
  for (std::size_t i = 0; i < f.subspaces().size(); ++i) {
    if (f.subspace(i) == g.subspace(i)) out.push_back(int(i) + 1);
  }
  return out;
}

}  // namespace flagpath
