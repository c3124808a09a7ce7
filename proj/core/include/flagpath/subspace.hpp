#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "flagpath/gf.hpp"

namespace flagpath {

/// A subspace of F_q^n, held as its unique reduced-row-echelon basis with
/// zero rows stripped. Equality of subspaces is equality of these bases.
class Subspace {
 public:
  /// The zero subspace of F_q^n.
  Subspace(PrimeField field, std::size_t ambient);

  /// Row space of `generators` (normalized to RREF internally).
  static Subspace from_matrix(const Matrix& generators);

  /// Convenience: span of explicit generator rows.
  static Subspace span(PrimeField field, std::size_t ambient,
                       const std::vector<std::vector<int>>& generators);

  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient() const { return basis_.cols(); }
  const PrimeField& field() const { return basis_.field(); }
  const Matrix& basis() const { return basis_; }

  bool contains(std::span<const std::uint16_t> v) const;
  bool contains(const Subspace& other) const;

  bool operator==(const Subspace& other) const { return basis_ == other.basis_; }
  std::strong_ordering operator<=>(const Subspace& other) const {
    return basis_ <=> other.basis_;
  }

 private:
  explicit Subspace(Matrix rref_basis);
  Matrix basis_;
};

std::size_t dim_sum(const Subspace& u, const Subspace& v);
std::size_t dim_intersection(const Subspace& u, const Subspace& v);

/// Injection distance max(dim U, dim V) - dim(U meet V).
std::size_t injection_distance(const Subspace& u, const Subspace& v);

/// Subspace distance dim(U + V) - dim(U meet V); twice the injection
/// distance for equidimensional inputs.
std::size_t subspace_distance(const Subspace& u, const Subspace& v);

}  // namespace flagpath
