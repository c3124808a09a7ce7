#include "flagpath/construct.hpp"

#include <string>
#include <vector>

namespace flagpath {

namespace {

// Candidate vectors are scanned in lexicographic order over the
// coordinates (leftmost most significant), starting just after zero.
class LexScan {
 public:
  LexScan(std::uint32_t q, std::size_t n) : q_(q), v_(n, 0) {}

  // Advances to the next vector; the first call yields (0, ..., 0, 1).
  bool next() {
    for (std::size_t i = v_.size(); i-- > 0;) {
      if (++v_[i] < q_) return true;
      v_[i] = 0;
    }
    return false;
  }

  const std::vector<std::uint16_t>& get() const { return v_; }

 private:
  std::uint32_t q_;
  std::vector<std::uint16_t> v_;
};

std::vector<std::uint16_t> first_outside(const Matrix& space) {
  LexScan scan(space.field().modulus(), space.cols());
  while (scan.next()) {
    if (!in_row_space(space, scan.get())) return scan.get();
  }
  throw std::logic_error("no vector outside a proper subspace");
}

std::vector<std::uint16_t> first_in_not_in(const Matrix& inside,
                                           const Matrix& outside) {
  LexScan scan(inside.field().modulus(), inside.cols());
  while (scan.next()) {
    if (in_row_space(inside, scan.get()) && !in_row_space(outside, scan.get())) {
      return scan.get();
    }
  }
  throw std::logic_error("no vector separates the two subspaces");
}

Matrix rref_append(const Matrix& base, std::span<const std::uint16_t> v) {
  Matrix m = base;
  m.append_row(v);
  return rref(m).matrix;
}

}  // namespace

FlagPair realize(const DistanceVector& v, std::uint32_t q) {
  PrimeField field(q);
  const int n = v.n();
  if (n < 2) {
    throw VectorError(VectorError::Kind::Length, 0,
                      "full flags need ambient dimension >= 2, got n = " +
                          std::to_string(n));
  }

  Matrix fb(field, 0, std::size_t(n));  // basis of F_i
  Matrix gb(field, 0, std::size_t(n));  // basis of F'_i
  Matrix sb(field, 0, std::size_t(n));  // basis of F_i + F'_i
  std::vector<Subspace> fsubs, gsubs;
  fsubs.reserve(std::size_t(n - 1));
  gsubs.reserve(std::size_t(n - 1));
  int delta = 0;

  for (int i = 0; i < n - 1; ++i) {
    const int target = v.components()[std::size_t(i)];
    if (target == delta) {
      // grow the sum by one dimension on the first flag's side
      auto u = first_outside(sb);
      Matrix nfb = rref_append(fb, u);
      if (delta == 0) {
        gb = nfb;
        sb = nfb;
      } else {
        auto up = first_in_not_in(sb, gb);
        gb = rref_append(gb, up);
        sb = rref_append(sb, u);
      }
      fb = std::move(nfb);
    } else if (target == delta + 1) {
      // grow the sum by two dimensions, one on each side
      auto u = first_outside(sb);
      Matrix su = rref_append(sb, u);
      auto up = first_outside(su);
      fb = rref_append(fb, u);
      gb = rref_append(gb, up);
      sb = rref_append(su, up);
    } else {
      // target == delta - 1: swap a vector across, the sum stays put
      auto u = first_in_not_in(gb, fb);
      auto up = first_in_not_in(fb, gb);
      fb = rref_append(fb, u);
      gb = rref_append(gb, up);
    }
    delta = target;
    fsubs.push_back(Subspace::from_matrix(fb));
    gsubs.push_back(Subspace::from_matrix(gb));
  }

  TypeVector type = TypeVector::full(n);
  return {Flag(type, std::move(fsubs)), Flag(TypeVector::full(n), std::move(gsubs))};
}

bool verify_pair(const FlagPair& p, const DistanceVector& v) {
  if (p.first.type() != p.second.type()) return false;
  if (!p.first.type().is_full()) return false;
  if (p.first.ambient() != v.n()) return false;
  return distance_vector(p.first, p.second) == v.components();
}

}  // namespace flagpath
