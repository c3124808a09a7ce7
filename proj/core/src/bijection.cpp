#include "flagpath/bijection.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace flagpath {

namespace {

void check_components(const std::vector<int>& comps, int n) {
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (comps[i] < 0) {
      throw VectorError(VectorError::Kind::Negative, i + 1,
                        "component " + std::to_string(i + 1) + " is negative");
    }
  }
  int prev = 0;
  for (int i = 1; i <= n; ++i) {
    int cur = (i < n) ? comps[std::size_t(i - 1)] : 0;
    if (std::abs(cur - prev) > 1) {
      throw VectorError(VectorError::Kind::Step, std::size_t(i),
                        "step from " + std::to_string(prev) + " to " +
                            std::to_string(cur) + " at index " +
                            std::to_string(i) + " is not in {-1,0,+1}");
    }
    prev = cur;
  }
}

}  // namespace

DistanceVector::DistanceVector(std::vector<int> components)
    : components_(std::move(components)), n_(int(components_.size()) + 1) {
  check_components(components_, n_);
}

DistanceVector::DistanceVector(std::vector<int> components, int n)
    : components_(std::move(components)), n_(n) {
  std::size_t expected = n <= 0 ? 0 : std::size_t(n - 1);
  if (n < 0 || components_.size() != expected) {
    throw VectorError(VectorError::Kind::Length, 0,
                      "expected " + std::to_string(expected) +
                          " components for n = " + std::to_string(n) + ", got " +
                          std::to_string(components_.size()));
  }
  check_components(components_, n_);
}

int DistanceVector::total() const {
  return std::accumulate(components_.begin(), components_.end(), 0);
}

bool DistanceVector::zero_free() const {
  return std::none_of(components_.begin(), components_.end(),
                      [](int d) { return d == 0; });
}

DistanceVector validate_distance_vector(const std::vector<int>& components,
                                        int n) {
  return DistanceVector(components, n);
}

std::string format_components(const std::vector<int>& components) {
  std::string out;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(components[i]);
  }
  return out;
}

std::string to_string(const DistanceVector& v) {
  return format_components(v.components());
}

std::vector<int> parse_components(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string token = text.substr(pos, comma == std::string::npos
                                             ? std::string::npos
                                             : comma - pos);
    try {
      std::size_t used = 0;
      int value = std::stoi(token, &used);
      if (used != token.size() || token.empty()) throw std::invalid_argument(token);
      out.push_back(value);
    } catch (const std::exception&) {
      throw VectorError(VectorError::Kind::Length, out.size() + 1,
                        "component '" + token + "' is not an integer");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

MotzkinWord psi(const DistanceVector& v) {
  std::string letters;
  letters.reserve(std::size_t(std::max(v.n(), 0)));
  int prev = 0;
  for (int i = 1; i <= v.n(); ++i) {
    int cur = (i < v.n()) ? v.components()[std::size_t(i - 1)] : 0;
    letters += (cur - prev == 1) ? 'U' : (cur - prev == 0) ? 'H' : 'D';
    prev = cur;
  }
  return MotzkinWord(letters);
}

DistanceVector phi(const MotzkinWord& w) {
  std::vector<int> comps;
  if (w.size() > 0) {
    comps.reserve(w.size() - 1);
    int h = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      h += (w[i] == 'U' ? 1 : w[i] == 'D' ? -1 : 0);
      comps.push_back(h);
    }
  }
  return DistanceVector(std::move(comps), int(w.size()));
}

std::int64_t StripDecomposition::total_area() const {
  std::int64_t total = 0;
  for (const Strip& s : strips) total += s.area();
  return total;
}

StripDecomposition strip_decomposition(const MotzkinWord& w) {
  StripDecomposition out;
  std::vector<int> open;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 'U') {
      open.push_back(int(i) + 1);
    } else if (w[i] == 'D') {
      out.strips.push_back({open.back(), int(i) + 1});
      open.pop_back();
    }
  }
  std::sort(out.strips.begin(), out.strips.end(),
            [](const Strip& a, const Strip& b) { return a.open < b.open; });
  return out;
}

std::vector<int> LevelDecomposition::row_sums() const {
  std::vector<int> out(levels.size());
  for (std::size_t k = 0; k < levels.size(); ++k) {
    out[k] = std::accumulate(levels[k].begin(), levels[k].end(), 0);
  }
  return out;
}

LevelDecomposition level_decomposition(const DistanceVector& v) {
  for (std::size_t i = 0; i < v.components().size(); ++i) {
    if (v.components()[i] == 0) {
      throw VectorError(VectorError::Kind::Zero, i + 1,
                        "component " + std::to_string(i + 1) +
                            " is zero; the vector belongs to a collapsing pair");
    }
  }
  int r = 0;
  for (int d : v.components()) r = std::max(r, d);
  LevelDecomposition out;
  out.levels.assign(std::size_t(r), std::vector<int>(v.components().size(), 0));
  for (int k = 1; k <= r; ++k) {
    for (std::size_t i = 0; i < v.components().size(); ++i) {
      if (v.components()[i] >= k) out.levels[std::size_t(k - 1)][i] = 1;
    }
  }
  return out;
}

std::vector<MotzkinWord> elevated_factorization(const MotzkinWord& w) {
  std::vector<MotzkinWord> factors;
  int h = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (h == 0 && w[i] == 'H') {
      start = i + 1;  // axis-level horizontal step, not part of any factor
      continue;
    }
    h += (w[i] == 'U' ? 1 : w[i] == 'D' ? -1 : 0);
    if (h == 0) {
      factors.emplace_back(w.str().substr(start, i + 1 - start));
      start = i + 1;
    }
  }
  return factors;
}

}  // namespace flagpath
