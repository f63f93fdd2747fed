#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "slr/hypergraph.hpp"
#include "slr/numeric.hpp"
#include "slr/semilinear.hpp"

namespace slr::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  bool coin() { return integer(0, 1) == 1; }

  // p/q with |p| <= bound, 1 <= q <= bound.
  Rational rational(std::int64_t bound) {
    return Rational(Integer(static_cast<long>(integer(-bound, bound))), Integer(static_cast<long>(integer(1, bound))));
  }

  std::vector<std::int64_t> permutation(std::size_t n) {
    std::vector<std::int64_t> p(n);
    std::iota(p.begin(), p.end(), 1);
    std::shuffle(p.begin(), p.end(), rng_);
    return p;
  }

  // Strictly increasing rationals with random positive gaps.
  std::vector<Rational> increasing(std::size_t n, std::int64_t gap_bound) {
    std::vector<Rational> out;
    Rational cur = rational(gap_bound);
    for (std::size_t i = 0; i < n; ++i) {
      cur += Rational(Integer(static_cast<long>(integer(1, gap_bound))), Integer(static_cast<long>(integer(1, 4))));
      out.push_back(cur);
    }
    return out;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline Matrix<Rational> random_matrix(Gen& g, std::size_t rows, std::size_t cols, std::int64_t bound) {
  Matrix<Rational> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = g.rational(bound);
  return m;
}

// Every strictly increasing r-tuple over [n].
inline std::vector<Tuple> all_tuples(Vertex n, unsigned r) {
  std::vector<Tuple> out;
  Tuple t(r);
  std::function<void(unsigned, Vertex)> rec = [&](unsigned pos, Vertex lo) {
    if (pos == r) {
      out.push_back(t);
      return;
    }
    for (Vertex v = lo; v <= n; ++v) {
      t[pos] = v;
      rec(pos + 1, v + 1);
    }
  };
  rec(0, 1);
  return out;
}

inline std::vector<Tuple> edges_by_rule(Vertex n, unsigned r, const std::function<bool(const Tuple&)>& edge) {
  std::vector<Tuple> out;
  for (const auto& t : all_tuples(n, r))
    if (edge(t)) out.push_back(t);
  return out;
}

inline std::vector<Vertex> members(std::uint32_t mask) {
  std::vector<Vertex> s;
  for (Vertex v = 0; v < 32; ++v)
    if (mask >> v & 1u) s.push_back(v + 1);
  return s;
}

// Size of the largest subset of [n] all of whose r-subsets satisfy accept,
// by enumerating every bitmask. Independent of the branch-and-bound oracle.
inline std::size_t subset_maximum(Vertex n, unsigned r, const std::function<bool(const Tuple&)>& accept) {
  std::vector<Tuple> bad;
  for (const auto& t : all_tuples(n, r))
    if (!accept(t)) bad.push_back(t);
  std::vector<std::uint32_t> bad_masks;
  for (const auto& t : bad) {
    std::uint32_t m = 0;
    for (Vertex v : t) m |= 1u << (v - 1);
    bad_masks.push_back(m);
  }
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size <= best) continue;
    bool ok = true;
    for (std::uint32_t b : bad_masks)
      if ((mask & b) == b) {
        ok = false;
        break;
      }
    if (ok) best = size;
  }
  return best;
}

inline std::size_t naive_omega(const OrderedHypergraph& h) {
  return subset_maximum(h.n(), h.r(), [&](const Tuple& t) { return h.contains(t); });
}

inline std::size_t naive_alpha(const OrderedHypergraph& h) {
  return subset_maximum(h.n(), h.r(), [&](const Tuple& t) { return !h.contains(t); });
}

}  // namespace slr::testing
