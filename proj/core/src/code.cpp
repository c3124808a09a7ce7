#include "flagpath/code.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace flagpath {

FlagCode::FlagCode(TypeVector type, std::vector<Flag> flags)
    : type_(std::move(type)), flags_(std::move(flags)) {
  if (flags_.empty()) {
    throw DimensionMismatchError("flag code must be nonempty");
  }
  const PrimeField& f = flags_.front().field();
  for (const Flag& fl : flags_) {
    if (fl.type() != type_) {
      throw TypeMismatchError("flag type differs from the code's type");
    }
    if (fl.field() != f) {
      throw TypeMismatchError("flags live over different fields");
    }
  }
  for (std::size_t i = 0; i < flags_.size(); ++i) {
    for (std::size_t j = i + 1; j < flags_.size(); ++j) {
      if (flags_[i] == flags_[j]) {
        throw TypeMismatchError("duplicate flags at positions " +
                                std::to_string(i + 1) + " and " +
                                std::to_string(j + 1));
      }
    }
  }
}

int FlagCode::min_distance() const {
  if (flags_.size() < 2) return 0;
  int best = std::numeric_limits<int>::max();
  for (std::size_t i = 0; i < flags_.size(); ++i) {
    for (std::size_t j = i + 1; j < flags_.size(); ++j) {
      best = std::min(best, flag_distance(flags_[i], flags_[j]));
    }
  }
  return best;
}

std::set<std::vector<int>> FlagCode::distance_vector_set() const {
  if (flags_.size() < 2) {
    throw std::domain_error("distance vector set is undefined for a singleton code");
  }
  const int d = min_distance();
  std::set<std::vector<int>> out;
  for (std::size_t i = 0; i < flags_.size(); ++i) {
    for (std::size_t j = i + 1; j < flags_.size(); ++j) {
      std::vector<int> v = distance_vector(flags_[i], flags_[j]);
      int total = 0;
      for (int x : v) total += x;
      if (total == d) out.insert(std::move(v));
    }
  }
  return out;
}

std::set<std::vector<int>> FlagCode::pairwise_vector_set() const {
  std::set<std::vector<int>> out;
  for (std::size_t i = 0; i < flags_.size(); ++i) {
    for (std::size_t j = i + 1; j < flags_.size(); ++j) {
      out.insert(distance_vector(flags_[i], flags_[j]));
    }
  }
  return out;
}

std::vector<std::size_t> FlagCode::projected_sizes() const {
  std::vector<std::size_t> out(type_.length());
  for (std::size_t i = 0; i < type_.length(); ++i) {
    std::set<Subspace> distinct;
    for (const Flag& fl : flags_) distinct.insert(fl.subspace(i));
    out[i] = distinct.size();
  }
  return out;
}

bool FlagCode::is_disjoint() const {
  for (std::size_t s : projected_sizes()) {
    if (s != flags_.size()) return false;
  }
  return true;
}

BigInt potential_vector_count(int n, std::int64_t d) {
  return area_count(n, d);
}

BigInt disjoint_vector_count(int n, std::int64_t d) {
  if (d < n - 1) return 0;
  return area_count(n - 2, d - n + 1);
}

}  // namespace flagpath
