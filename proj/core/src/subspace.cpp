#include "flagpath/subspace.hpp"

#include <algorithm>
#include <string>

namespace flagpath {

namespace {

void check_compatible(const Subspace& u, const Subspace& v) {
  if (u.field() != v.field()) {
    throw DimensionMismatchError("subspaces live over different fields");
  }
  if (u.ambient() != v.ambient()) {
    throw DimensionMismatchError(
        "subspaces live in different ambient spaces (" +
        std::to_string(u.ambient()) + " vs " + std::to_string(v.ambient()) + ")");
  }
}

}  // namespace

Subspace::Subspace(PrimeField field, std::size_t ambient)
    : basis_(field, 0, ambient) {}

Subspace::Subspace(Matrix rref_basis) : basis_(std::move(rref_basis)) {}

Subspace Subspace::from_matrix(const Matrix& generators) {
  return Subspace(rref(generators).matrix);
}

Subspace Subspace::span(PrimeField field, std::size_t ambient,
                        const std::vector<std::vector<int>>& generators) {
  return from_matrix(Matrix::from_rows(field, ambient, generators));
}

bool Subspace::contains(std::span<const std::uint16_t> v) const {
  return in_row_space(basis_, v);
}

bool Subspace::contains(const Subspace& other) const {
  check_compatible(*this, other);
  for (std::size_t i = 0; i < other.basis_.rows(); ++i) {
    if (!in_row_space(basis_, other.basis_.row(i))) return false;
  }
  return true;
}

std::size_t dim_sum(const Subspace& u, const Subspace& v) {
  check_compatible(u, v);
  return stack_rank(u.basis(), v.basis());
}

std::size_t dim_intersection(const Subspace& u, const Subspace& v) {
  // modular law: dim(U meet V) = dim U + dim V - dim(U + V)
  return u.dim() + v.dim() - dim_sum(u, v);
}

std::size_t injection_distance(const Subspace& u, const Subspace& v) {
  return std::max(u.dim(), v.dim()) - dim_intersection(u, v);
}

std::size_t subspace_distance(const Subspace& u, const Subspace& v) {
  return dim_sum(u, v) - dim_intersection(u, v);
}

}  // namespace flagpath
