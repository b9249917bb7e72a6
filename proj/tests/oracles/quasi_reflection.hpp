#pragma once

// Brute-force manifold test for C^r / (Z/m): g is a quasi-reflection when it
// fixes a hyperplane, i.e. g j_i = 0 mod m for all but at most one i. The
// quotient is smooth iff the quasi-reflections generate Z/m, i.e. the gcd of
// m and all quasi-reflections is 1. Residues g j_i are accumulated by
// addition, so g j_i never overflows.

#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

inline bool quotient_is_manifold(std::int64_t m, const std::vector<std::int64_t>& j) {
  if (m == 1) return true;
  std::vector<std::int64_t> acc(j.size(), 0);
  std::int64_t generated = m;
  for (std::int64_t g = 1; g < m; ++g) {
    int moving = 0;
    for (std::size_t i = 0; i < j.size(); ++i) {
      acc[i] += j[i];
      if (acc[i] >= m) acc[i] -= m;
      if (acc[i] != 0) ++moving;
    }
    if (moving <= 1) {
      generated = std::gcd(generated, g);
      if (generated == 1) return true;
    }
  }
  return generated == 1;
}

}  // namespace oracle
