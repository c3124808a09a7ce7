#pragma once

#include <set>
#include <vector>

#include "flagpath/flag.hpp"
#include "flagpath/motzkin.hpp"

namespace flagpath {

/// A flag code: a nonempty set of distinct flags of one type. Duplicate
/// flags in the input are rejected, not deduplicated.
class FlagCode {
 public:
  FlagCode(TypeVector type, std::vector<Flag> flags);

  const TypeVector& type() const { return type_; }
  const std::vector<Flag>& flags() const { return flags_; }
  std::size_t size() const { return flags_.size(); }
  const PrimeField& field() const { return flags_.front().field(); }

  /// Minimum flag distance over distinct pairs; 0 for a singleton.
  int min_distance() const;

  /// Distance vectors of the pairs attaining the minimum distance.
  /// Undefined (throws std::domain_error) for a singleton.
  std::set<std::vector<int>> distance_vector_set() const;

  /// Distance vectors of all distinct pairs, not just minimum-attaining.
  std::set<std::vector<int>> pairwise_vector_set() const;

  /// Number of distinct i-th subspaces, per type dimension.
  std::vector<std::size_t> projected_sizes() const;

  /// All projected sizes equal |C|: no two flags share any subspace.
  bool is_disjoint() const;

 private:
  TypeVector type_;
  std::vector<Flag> flags_;
};

/// Number of distance vectors a full flag code on F_q^n with minimum
/// distance d could have: T(n, d).
BigInt potential_vector_count(int n, std::int64_t d);

/// Same count restricted to disjoint codes: T(n-2, d-n+1), which is 0
/// below the smallest disjoint distance n-1.
BigInt disjoint_vector_count(int n, std::int64_t d);

}  // namespace flagpath
