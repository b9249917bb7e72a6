#pragma once

// Quadratic image questions answered by evaluating q on a window of
// arguments wide enough to contain every preimage.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

struct Quad {
  std::int64_t a, b, c;
  std::int64_t operator()(std::int64_t t) const { return (a * t + b) * t + c; }
};

// Every t with q(t) <= hi satisfies |t| <= |b| + sqrt|hi - c| + 2 for a >= 1.
inline std::int64_t window(const Quad& q, std::int64_t hi) {
  const std::int64_t spread = hi > q.c ? hi - q.c : q.c - hi;
  std::int64_t r = 0;
  while (r * r <= spread) ++r;
  return (q.b < 0 ? -q.b : q.b) + r + 2;
}

inline std::size_t interval_count(const Quad& q, std::int64_t lo, std::int64_t hi) {
  const std::int64_t w = window(q, hi);
  std::set<std::int64_t> hit;
  for (std::int64_t t = -w; t <= w; ++t) {
    const std::int64_t v = q(t);
    if (v >= lo && v <= hi) hit.insert(v);
  }
  return hit.size();
}

inline bool covers(const Quad& q, std::int64_t v) {
  const std::int64_t w = window(q, v);
  for (std::int64_t t = -w; t <= w; ++t) {
    if (q(t) == v) return true;
  }
  return false;
}

// Fewest exceptions over all quadratics with a <= a_max, |b| <= b_max and
// c drawn from the values themselves (a shift always puts a covered value at
// t = 0). Returns values.size() when nothing covers anything.
inline std::size_t min_exceptions(const std::vector<std::int64_t>& values, std::int64_t a_max,
                                  std::int64_t b_max) {
  std::size_t best = values.size();
  for (std::int64_t a = 1; a <= a_max; ++a) {
    for (std::int64_t b = -b_max; b <= b_max; ++b) {
      for (std::int64_t c : values) {
        const Quad q{a, b, c};
        std::size_t miss = 0;
        for (auto v : values) {
          if (!covers(q, v)) ++miss;
        }
        best = std::min(best, miss);
      }
    }
  }
  return best;
}

}  // namespace oracle
