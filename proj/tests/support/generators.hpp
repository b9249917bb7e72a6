#pragma once

// Seeded random inputs shared by property and acceptance tests.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "circle5/abgroup.hpp"
#include "circle5/classify.hpp"
#include "circle5/construct.hpp"
#include "circle5/seifert.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline circle5::IntMatrix matrix(Rng& rng, std::size_t max_dim, std::int64_t bound) {
  const auto rows = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(max_dim)));
  const auto cols = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(max_dim)));
  circle5::IntMatrix a(rows, cols);
  // Some sparse and some low-rank matrices so zero pivots and divisibility
  // repairs actually happen.
  const int style = static_cast<int>(uniform(rng, 0, 3));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (style == 1 && uniform(rng, 0, 2) != 0) continue;
      a(r, c) = uniform(rng, -bound, bound);
    }
  }
  if (style == 2 && rows > 1) {
    for (std::size_t c = 0; c < cols; ++c) a(rows - 1, c) = 2 * a(0, c);
  }
  return a;
}

inline const std::vector<std::int64_t>& small_primes() {
  static const std::vector<std::int64_t> p{2, 3, 5, 7, 11, 13};
  return p;
}

// Torsion counts over primes <= 13, exponents <= 3, counts <= 8.
inline circle5::TorsionCounts torsion(Rng& rng, bool prefer_even) {
  circle5::TorsionCounts t;
  const auto n = uniform(rng, 0, 4);
  for (std::int64_t i = 0; i < n; ++i) {
    const auto p = small_primes()[static_cast<std::size_t>(uniform(rng, 0, 5))];
    const auto e = static_cast<unsigned>(uniform(rng, 1, 3));
    std::int64_t c = uniform(rng, 1, 8);
    if (prefer_even && c % 2 == 1 && uniform(rng, 0, 3) != 0) c = std::min<std::int64_t>(c + 1, 8);
    t[circle5::PrimePower(p, e)] = c;
  }
  return t;
}

inline circle5::WuInvariant target(Rng& rng) {
  switch (uniform(rng, 0, 2)) {
    case 0:
      return circle5::WuInvariant::finite(0);
    case 1:
      return circle5::WuInvariant::finite(1);
    default:
      return circle5::WuInvariant::infinity();
  }
}

inline circle5::ConstructionInput admissible_input(Rng& rng) {
  for (;;) {
    circle5::ConstructionInput in;
    in.k = static_cast<std::size_t>(uniform(rng, 0, 4));
    in.counts = torsion(rng, true);
    in.target = target(rng);
    if (circle_action_admissible(in.as_class()).admissible) return in;
  }
}

// Pairwise coprime tuple of integers >= 2 with product <= max_product.
inline std::vector<std::int64_t> coprime_tuple(Rng& rng, std::int64_t max_product) {
  for (;;) {
    const auto n = uniform(rng, 1, 4);
    std::vector<std::int64_t> m;
    std::int64_t prod = 1;
    bool ok = true;
    for (std::int64_t i = 0; i < n && ok; ++i) {
      const std::int64_t room = max_product / prod;
      if (room < 2) break;
      const auto x = uniform(rng, 2, std::min<std::int64_t>(room, 200));
      for (auto y : m) ok = ok && std::gcd(x, y) == 1;
      if (ok) {
        m.push_back(x);
        prod *= x;
      }
    }
    if (ok && !m.empty()) return m;
  }
}

// Valid spec with random charts, multiplicities and classes; product of the
// multiplicities stays <= max_product. Classes are generator classes unless
// `general_classes`.
inline circle5::SeifertSpec spec(Rng& rng, std::int64_t max_product, bool general_classes) {
  using namespace circle5;
  for (;;) {
    SeifertSpec s;
    s.base.charts = static_cast<std::size_t>(uniform(rng, 1, 3));
    const std::size_t rank = s.base.charts;
    const auto n = uniform(rng, 0, 4);
    std::int64_t prod = 1;
    for (std::int64_t i = 0; i < n; ++i) {
      const std::int64_t room = max_product / prod;
      if (room < 2) break;
      Divisor d;
      d.chart = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(rank) - 1));
      const auto m = uniform(rng, 2, std::min<std::int64_t>(room, 30));
      d.m = m;
      std::int64_t b;
      do {
        b = uniform(rng, 1, m - 1);
      } while (std::gcd(b, m) != 1);
      d.b = b;
      if (m == 2 && uniform(rng, 0, 4) == 0) {
        d.surface = Nonorientable{uniform(rng, 1, 3)};
      } else {
        d.surface = Orientable{uniform(rng, 0, 2)};
      }
      if (general_classes && uniform(rng, 0, 1) == 0) {
        std::vector<BigInt> cls(rank);
        for (auto& x : cls) x = uniform(rng, -3, 3);
        d.h2_class = cls;
      }
      s.divisors.push_back(d);
      prod *= m;
    }
    s.twist.resize(rank);
    for (auto& h : s.twist) h = uniform(rng, -3, 3);
    if (validate(s).empty()) return s;
  }
}

}  // namespace gen
