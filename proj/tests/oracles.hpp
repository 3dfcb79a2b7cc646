// Slow, obviously-correct reference computations used as test oracles. None
// of this calls into the library except for Perm's image array.
#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <set>
#include <vector>

#include "endocert/perm.hpp"

namespace oracle {

using Images = std::vector<std::uint32_t>;

inline Images compose(const Images& a, const Images& b) {  // a first
  Images c(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) c[x] = b[a[x]];
  return c;
}

/// Every element of <gens> by breadth-first search.
inline std::set<Images> closure(const std::vector<endocert::Perm>& gens, std::size_t n) {
  Images id(n);
  std::iota(id.begin(), id.end(), 0u);
  std::set<Images> seen{id};
  std::deque<Images> todo{id};
  while (!todo.empty()) {
    Images x = todo.front();
    todo.pop_front();
    for (const auto& g : gens) {
      Images y = compose(x, g.images());
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return seen;
}

/// Largest k such that the group is transitive on ordered k-tuples of
/// distinct points, by counting images of the tuple (0, 1, ..., k-1).
inline std::size_t transitivity(const std::set<Images>& elems, std::size_t n) {
  std::size_t k = 0;
  while (k < n) {
    std::set<Images> tuples;
    for (const auto& e : elems) tuples.insert(Images(e.begin(), e.begin() + static_cast<long>(k + 1)));
    std::size_t falling = 1;
    for (std::size_t i = 0; i <= k; ++i) falling *= n - i;
    if (tuples.size() != falling) break;
    ++k;
  }
  return k;
}

/// Rank over F_p by textbook elimination.
inline std::size_t rank_mod(std::vector<std::vector<long long>> m, long long p) {
  std::size_t r = 0, rows = m.size(), cols = rows ? m[0].size() : 0;
  for (auto& row : m)
    for (auto& x : row) x = ((x % p) + p) % p;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    long long inv = 1;
    for (long long t = 1; t < p; ++t)
      if (m[r][c] * t % p == 1) inv = t;
    for (auto& x : m[r]) x = x * inv % p;
    for (std::size_t i = 0; i < rows; ++i)
      if (i != r && m[i][c]) {
        long long f = m[i][c];
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = ((m[i][j] - f * m[r][j]) % p + p) % p;
      }
    ++r;
  }
  return r;
}

/// d x d matrices over F_2 encoded as d*d bit masks, entry (i, j) at bit i*d + j.
struct Bits {
  std::size_t d;
  bool at(std::uint32_t m, std::size_t i, std::size_t j) const { return (m >> (i * d + j)) & 1u; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t c = 0;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        unsigned s = 0;
        for (std::size_t k = 0; k < d; ++k) s ^= at(a, i, k) & at(b, k, j);
        if (s) c |= 1u << (i * d + j);
      }
    return c;
  }
  std::uint32_t identity() const {
    std::uint32_t c = 0;
    for (std::size_t i = 0; i < d; ++i) c |= 1u << (i * d + i);
    return c;
  }
};

}  // namespace oracle
