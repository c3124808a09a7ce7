#include "flagpath/motzkin.hpp"

#include <algorithm>
#include <string>

namespace flagpath {

MotzkinWord::MotzkinWord(std::string_view letters) : letters_(letters) {
  int h = 0;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    switch (letters_[i]) {
      case 'U': ++h; break;
      case 'H': break;
      case 'D': --h; break;
      default:
        throw WordError(WordError::Kind::Alphabet, i + 1,
                        std::string("letter '") + letters_[i] + "' at index " +
                            std::to_string(i + 1) + " is not one of U, H, D");
    }
    if (h < 0) {
      throw WordError(WordError::Kind::Prefix, i + 1,
                      "path dips below the axis at index " + std::to_string(i + 1));
    }
  }
  if (h != 0) {
    throw WordError(WordError::Kind::Imbalance, 0,
                    "word has " + std::to_string(h) + " more U than D letters");
  }
}

std::vector<int> heights(const MotzkinWord& w) {
  std::vector<int> h(w.size() + 1, 0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    h[i + 1] = h[i] + (w[i] == 'U' ? 1 : w[i] == 'D' ? -1 : 0);
  }
  return h;
}

std::int64_t area(const MotzkinWord& w) {
  // sum of trapezoids (h_{i-1} + h_i)/2 == sum of interior heights
  std::int64_t doubled = 0;
  int h = 0;
  for (char c : w.str()) {
    int next = h + (c == 'U' ? 1 : c == 'D' ? -1 : 0);
    doubled += h + next;
    h = next;
  }
  return doubled / 2;
}

std::vector<int> returns(const MotzkinWord& w) {
  std::vector<int> out;
  int h = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    h += (w[i] == 'U' ? 1 : w[i] == 'D' ? -1 : 0);
    if (h == 0) out.push_back(int(i) + 1);
  }
  return out;
}

PathClassification classify(const MotzkinWord& w) {
  bool elevated = w.size() >= 2;
  bool riordan = true;
  int h = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 'H' && h == 0) riordan = false;
    h += (w[i] == 'U' ? 1 : w[i] == 'D' ? -1 : 0);
    if (h == 0 && i + 1 < w.size()) elevated = false;
  }
  return {elevated, riordan};
}

bool in_class(const MotzkinWord& w, PathClass cls) {
  switch (cls) {
    case PathClass::All: return true;
    case PathClass::Elevated: return classify(w).elevated;
    case PathClass::Riordan: return classify(w).riordan;
  }
  return false;
}

namespace {

// Largest possible remaining area from height h with m steps left: the
// height after j more steps is at most min(h + j, m - j).
std::int64_t max_future_area(int h, int m) {
  std::int64_t total = 0;
  for (int j = 1; j <= m; ++j) total += std::min(h + j, m - j);
  return total;
}

std::int64_t min_future_area(int h) {
  // descend immediately, then run along the axis
  return std::int64_t(h) * (h - 1) / 2;
}

struct Enumerator {
  int n;
  PathClass cls;
  std::optional<std::int64_t> target_area;
  const std::function<bool(const MotzkinWord&)>& visit;
  std::string buf;
  bool stopped = false;

  void run() {
    if (cls == PathClass::Elevated && n < 2) return;
    buf.clear();
    step(0, 0, 0);
  }

  void step(int pos, int h, std::int64_t acc) {
    if (stopped) return;
    if (pos == n) {
      if (!target_area || acc == *target_area) {
        if (!visit(MotzkinWord(buf))) stopped = true;
      }
      return;
    }
    const int rem = n - pos;
    for (char c : {'U', 'H', 'D'}) {
      int nh = h + (c == 'U' ? 1 : c == 'D' ? -1 : 0);
      if (nh < 0 || nh > rem - 1) continue;
      if (cls == PathClass::Elevated && nh == 0 && pos + 1 < n) continue;
      if (cls == PathClass::Riordan && c == 'H' && h == 0) continue;
      std::int64_t nacc = acc + nh;
      if (target_area) {
        if (nacc + min_future_area(nh) > *target_area) continue;
        if (nacc + max_future_area(nh, rem - 1) < *target_area) continue;
      }
      buf.push_back(c);
      step(pos + 1, nh, nacc);
      buf.pop_back();
      if (stopped) return;
    }
  }
};

}  // namespace

void for_each_path(int n, PathClass cls, std::optional<std::int64_t> area_filter,
                   const std::function<bool(const MotzkinWord&)>& visit) {
  if (n < 0) return;
  Enumerator e{n, cls, area_filter, visit, {}, false};
  e.run();
}

std::vector<MotzkinWord> enumerate_paths(int n, PathClass cls,
                                         std::optional<std::int64_t> area_filter) {
  std::vector<MotzkinWord> out;
  for_each_path(n, cls, area_filter, [&](const MotzkinWord& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

BigInt motzkin_number(int n) {
  if (n < 0) return 0;
  std::vector<BigInt> m(std::size_t(n) + 1);
  m[0] = 1;
  for (int i = 1; i <= n; ++i) {
    BigInt v = m[std::size_t(i - 1)];
    for (int k = 0; k <= i - 2; ++k) {
      v += m[std::size_t(k)] * m[std::size_t(i - k - 2)];
    }
    m[std::size_t(i)] = v;
  }
  return m[std::size_t(n)];
}

BigInt catalan_number(int n) {
  if (n < 0) return 0;
  std::vector<BigInt> c(std::size_t(n) + 1);
  c[0] = 1;
  for (int i = 1; i <= n; ++i) {
    BigInt v = 0;
    for (int k = 0; k <= i - 1; ++k) {
      v += c[std::size_t(k)] * c[std::size_t(i - k - 1)];
    }
    c[std::size_t(i)] = v;
  }
  return c[std::size_t(n)];
}

BigInt elevated_number(int n) {
  if (n < 2) return 0;
  return motzkin_number(n - 2);
}

BigInt riordan_number(int n) {
  if (n < 0) return 0;
  // f[h] = number of prefixes ending at height h with no H on the axis
  std::vector<BigInt> f(std::size_t(n) / 2 + 2);
  f[0] = 1;
  for (int i = 0; i < n; ++i) {
    std::vector<BigInt> g(f.size());
    int hmax = std::min(i, n - i);
    for (int h = 0; h <= hmax; ++h) {
      if (f[std::size_t(h)] == 0) continue;
      if (std::size_t(h + 1) < g.size()) g[std::size_t(h + 1)] += f[std::size_t(h)];
      if (h >= 1) {
        g[std::size_t(h)] += f[std::size_t(h)];
        g[std::size_t(h - 1)] += f[std::size_t(h)];
      }
    }
    f = std::move(g);
  }
  return f[0];
}

BigInt area_count(int n, std::int64_t k) {
  if (n < 0 || k < 0) return 0;
  const std::int64_t max_area = std::int64_t(n) * n / 4;
  if (k > max_area) return 0;
  // layered DP over (height, doubled area); doubled area beyond 2k can
  // never come back down, so those states are dropped
  const std::size_t hs = std::size_t(n) / 2 + 2;
  const std::size_t as = std::size_t(2 * k) + 1;
  auto idx = [&](std::size_t h, std::size_t a2) { return h * as + a2; };
  std::vector<BigInt> cur(hs * as), next(hs * as);
  cur[idx(0, 0)] = 1;
  for (int i = 0; i < n; ++i) {
    std::fill(next.begin(), next.end(), 0);
    int hmax = std::min(i, n - i);
    for (int h = 0; h <= hmax; ++h) {
      for (std::size_t a2 = 0; a2 < as; ++a2) {
        const BigInt& v = cur[idx(std::size_t(h), a2)];
        if (v == 0) continue;
        // U: +(2h+1), H: +2h, D: +(2h-1) to the doubled area
        if (std::size_t na = a2 + std::size_t(2 * h + 1); na < as && std::size_t(h + 1) < hs) {
          next[idx(std::size_t(h + 1), na)] += v;
        }
        if (std::size_t na = a2 + std::size_t(2 * h); na < as) {
          next[idx(std::size_t(h), na)] += v;
        }
        if (h >= 1) {
          if (std::size_t na = a2 + std::size_t(2 * h - 1); na < as) {
            next[idx(std::size_t(h - 1), na)] += v;
          }
        }
      }
    }
    std::swap(cur, next);
  }
  return cur[idx(0, std::size_t(2 * k))];
}

}  // namespace flagpath
