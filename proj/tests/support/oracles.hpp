#pragma once

// Brute-force oracles for the test suites. These deliberately avoid the
// library code paths they are used to check: subspaces are generated
// combinatorially as canonical echelon matrices, membership is decided by
// a local reduction, and distance vectors are enumerated straight from the
// unit-step condition.

#include <cstdint>
#include <vector>

#include "flagpath/flag.hpp"

namespace oracles {

// q-binomial coefficient [n choose k]_q; small inputs only.
inline unsigned long long gaussian_binomial(int n, int k, int q) {
  if (k < 0 || k > n) return 0;
  // prod_{i=0}^{k-1} (q^{n-i} - 1) / (q^{k-i} - 1), computed as a ratio of
  // exact integer products (always divides evenly)
  unsigned long long num = 1, den = 1;
  auto pow_q = [&](int e) {
    unsigned long long p = 1;
    for (int i = 0; i < e; ++i) p *= (unsigned long long)(q);
    return p;
  };
  for (int i = 0; i < k; ++i) {
    num *= pow_q(n - i) - 1;
    den *= pow_q(k - i) - 1;
  }
  return num / den;
}

using Mat = std::vector<std::vector<int>>;

// All k-subsets of {0..n-1} in lexicographic order.
inline std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  auto c = std::vector<int>(std::size_t(k));
  for (int i = 0; i < k; ++i) c[std::size_t(i)] = i;
  if (k == 0) return {{}};
  while (true) {
    out.push_back(c);
    int i = k - 1;
    while (i >= 0 && c[std::size_t(i)] == n - k + i) --i;
    if (i < 0) break;
    ++c[std::size_t(i)];
    for (int j = i + 1; j < k; ++j) c[std::size_t(j)] = c[std::size_t(j - 1)] + 1;
  }
  return out;
}

// Every k-dimensional subspace of F_q^n exactly once, as its canonical
// reduced-echelon generator matrix: choose pivot columns, then run through
// all assignments of the free entries.
inline std::vector<Mat> all_rref_matrices(int n, int k, int q) {
  std::vector<Mat> out;
  if (k == 0) {
    out.push_back(Mat{});
    return out;
  }
  for (const auto& pivots : combinations(n, k)) {
    std::vector<bool> is_pivot(std::size_t(n), false);
    for (int p : pivots) is_pivot[std::size_t(p)] = true;
    std::vector<std::pair<int, int>> free_pos;  // (row, col)
    for (int i = 0; i < k; ++i) {
      for (int c = pivots[std::size_t(i)] + 1; c < n; ++c) {
        if (!is_pivot[std::size_t(c)]) free_pos.emplace_back(i, c);
      }
    }
    std::vector<int> assign(free_pos.size(), 0);
    while (true) {
      Mat m(std::size_t(k), std::vector<int>(std::size_t(n), 0));
      for (int i = 0; i < k; ++i) m[std::size_t(i)][std::size_t(pivots[std::size_t(i)])] = 1;
      for (std::size_t t = 0; t < free_pos.size(); ++t) {
        m[std::size_t(free_pos[t].first)][std::size_t(free_pos[t].second)] = assign[t];
      }
      out.push_back(std::move(m));
      bool advanced = false;
      for (std::size_t t = assign.size(); t-- > 0;) {
        if (++assign[t] < q) {
          advanced = true;
          break;
        }
        assign[t] = 0;
      }
      if (!advanced) break;
    }
  }
  return out;
}

// Local membership test: reduce v against an echelon matrix mod q.
inline bool row_in_span(const Mat& rref, std::vector<int> v, int q) {
  for (const auto& row : rref) {
    std::size_t p = 0;
    while (p < row.size() && row[p] == 0) ++p;
    if (p == row.size()) continue;
    int coeff = v[p] % q;
    if (coeff == 0) continue;
    for (std::size_t j = p; j < row.size(); ++j) {
      v[j] = ((v[j] - coeff * row[j]) % q + q) % q;
    }
  }
  for (int x : v) {
    if (x % q != 0) return false;
  }
  return true;
}

inline bool subspace_contained(const Mat& small, const Mat& big, int q) {
  for (const auto& row : small) {
    if (!row_in_span(big, row, q)) return false;
  }
  return true;
}

inline std::vector<flagpath::Subspace> all_subspaces(flagpath::PrimeField f, int n,
                                                     int k) {
  std::vector<flagpath::Subspace> out;
  for (const auto& m : all_rref_matrices(n, k, int(f.modulus()))) {
    out.push_back(flagpath::Subspace::span(f, std::size_t(n), m));
  }
  return out;
}

// Every full flag over F_q^n, as chains of nested echelon matrices.
inline std::vector<std::vector<Mat>> all_full_flag_chains(int n, int q) {
  std::vector<std::vector<Mat>> chains;
  for (const auto& line : all_rref_matrices(n, 1, q)) chains.push_back({line});
  for (int k = 2; k < n; ++k) {
    const auto next = all_rref_matrices(n, k, q);
    std::vector<std::vector<Mat>> grown;
    for (const auto& chain : chains) {
      for (const auto& cand : next) {
        if (subspace_contained(chain.back(), cand, q)) {
          auto extended = chain;
          extended.push_back(cand);
          grown.push_back(std::move(extended));
        }
      }
    }
    chains = std::move(grown);
  }
  return chains;
}

inline std::vector<flagpath::Flag> all_full_flags(flagpath::PrimeField f, int n) {
  flagpath::TypeVector type = flagpath::TypeVector::full(n);
  std::vector<flagpath::Flag> out;
  for (const auto& chain : all_full_flag_chains(n, int(f.modulus()))) {
    std::vector<flagpath::Subspace> subs;
    for (const auto& m : chain) subs.push_back(flagpath::Subspace::span(f, std::size_t(n), m));
    out.emplace_back(type, std::move(subs));
  }
  return out;
}

// All length-(n-1) integer sequences obeying the unit-step condition with
// zero boundaries, in lexicographic order.
inline void grow_vectors(int n, std::vector<int>& cur,
                         std::vector<std::vector<int>>& out) {
  const int i = int(cur.size()) + 1;  // index of the component being chosen
  if (i == n) {
    int last = cur.empty() ? 0 : cur.back();
    if (last <= 1) out.push_back(cur);  // delta_n = 0 must be reachable
    return;
  }
  int prev = cur.empty() ? 0 : cur.back();
  for (int d = prev - 1; d <= prev + 1; ++d) {
    if (d < 0) continue;
    if (d > std::min(i, n - i)) continue;
    cur.push_back(d);
    grow_vectors(n, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<int>> all_distance_vectors(int n) {
  std::vector<std::vector<int>> out;
  if (n < 1) {
    if (n == 0) out.push_back({});
    return out;
  }
  std::vector<int> cur;
  grow_vectors(n, cur, out);
  return out;
}

}  // namespace oracles
