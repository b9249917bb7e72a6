#pragma once

// Wu class of a closed 4-manifold with intersection form Q: the unique v with
// v.x = x.x mod 2 for every x, found by trying every v.

#include <cstdint>
#include <optional>
#include <vector>

namespace oracle {

inline std::optional<std::vector<int>> wu_class(const std::vector<std::vector<int>>& q) {
  const std::size_t n = q.size();
  std::optional<std::vector<int>> found;
  for (std::uint32_t v = 0; v < (1u << n); ++v) {
    bool ok = true;
    for (std::uint32_t x = 0; x < (1u << n) && ok; ++x) {
      int vx = 0, xx = 0;
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          const int xa = (x >> a) & 1, xb = (x >> b) & 1, va = (v >> a) & 1;
          vx += va * xb * q[a][b];
          xx += xa * xb * q[a][b];
        }
      }
      ok = ((vx - xx) % 2) == 0;
    }
    if (ok) {
      if (found) return std::nullopt;  // not unique
      std::vector<int> bits(n);
      for (std::size_t a = 0; a < n; ++a) bits[a] = (v >> a) & 1;
      found = bits;
    }
  }
  return found;
}

}  // namespace oracle
