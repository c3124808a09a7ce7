#pragma once

#include <compare>
#include <vector>

#include "flagpath/subspace.hpp"

namespace flagpath {

/// Strictly increasing list of dimensions (t_1, ..., t_r) with
/// 0 < t_1 and t_r < n. The full type on F_q^n is (1, ..., n-1).
class TypeVector {
 public:
  TypeVector(std::vector<int> dims, int ambient);

  static TypeVector full(int ambient);

  const std::vector<int>& dims() const { return dims_; }
  int ambient() const { return ambient_; }
  std::size_t length() const { return dims_.size(); }
  bool is_full() const;

  bool operator==(const TypeVector&) const = default;

 private:
  std::vector<int> dims_;
  int ambient_;
};

/// Largest flag distance any two flags of this type can attain:
/// sum of t_i over t_i <= n/2 plus sum of (n - t_i) over the rest.
/// Equals floor(n^2/4) for the full type.
int max_flag_distance(const TypeVector& t);

/// A flag: nested subspaces of the given type, each strictly contained in
/// the next.
class Flag {
 public:
  Flag(TypeVector type, std::vector<Subspace> subspaces);

  const TypeVector& type() const { return type_; }
  int ambient() const { return type_.ambient(); }
  const PrimeField& field() const { return subspaces_.front().field(); }
  const std::vector<Subspace>& subspaces() const { return subspaces_; }
  const Subspace& subspace(std::size_t i) const { return subspaces_[i]; }

  bool operator==(const Flag& other) const;
  std::strong_ordering operator<=>(const Flag& other) const;

 private:
  TypeVector type_;
  std::vector<Subspace> subspaces_;
};

/// Sum of per-dimension injection distances.
int flag_distance(const Flag& f, const Flag& g);

/// Per-dimension injection distances; components sum to flag_distance.
std::vector<int> distance_vector(const Flag& f, const Flag& g);

/// 1-based indices i with f_i = g_i; empty iff the pair is disjoint.
std::vector<int> collapse_points(const Flag& f, const Flag& g);

}  // namespace flagpath
