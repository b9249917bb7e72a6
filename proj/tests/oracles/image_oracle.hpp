#pragma once

// Image of Z^n -> sum Z/m_i by breadth-first search over the finite target.

#include <cstdint>
#include <deque>
#include <vector>

namespace oracle {

// columns[l][i] is the image of the l-th generator in Z/moduli[i].
inline std::size_t image_size(const std::vector<std::vector<std::int64_t>>& columns,
                              const std::vector<std::int64_t>& moduli) {
  std::size_t total = 1;
  for (auto m : moduli) total *= static_cast<std::size_t>(m);
  auto encode = [&](const std::vector<std::int64_t>& v) {
    std::size_t code = 0;
    for (std::size_t i = 0; i < v.size(); ++i) code = code * moduli[i] + v[i];
    return code;
  };
  std::vector<char> seen(total, 0);
  std::deque<std::vector<std::int64_t>> queue;
  std::vector<std::int64_t> zero(moduli.size(), 0);
  seen[encode(zero)] = 1;
  queue.push_back(zero);
  std::size_t count = 1;
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    for (const auto& col : columns) {
      auto w = v;
      for (std::size_t i = 0; i < w.size(); ++i) {
        w[i] = ((w[i] + col[i]) % moduli[i] + moduli[i]) % moduli[i];
      }
      const std::size_t code = encode(w);
      if (!seen[code]) {
        seen[code] = 1;
        ++count;
        queue.push_back(std::move(w));
      }
    }
  }
  return count;
}

inline bool surjective(const std::vector<std::vector<std::int64_t>>& columns,
                       const std::vector<std::int64_t>& moduli) {
  std::size_t total = 1;
  for (auto m : moduli) total *= static_cast<std::size_t>(m);
  return image_size(columns, moduli) == total;
}

}  // namespace oracle
