#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "opg/bigint.hpp"
#include "opg/graph.hpp"

namespace opg {

namespace detail {
template <class I>
inline void check_shift_width(int bits, const char* what) {
  if constexpr (!std::is_same_v<I, bigint>) {
    // keep one bit of headroom above offset + length = 3 * 2^{k-1}
    if (bits + 2 > std::numeric_limits<I>::digits)
      throw std::overflow_error(std::string(what) +
                                ": layer constants exceed the integer width");
  }
  if (bits < 0) throw std::invalid_argument(std::string(what) + ": negative shift");
}
}  // namespace detail

// Layer E_k: edges of span 2^k between consecutive odd multiples of 2^{k-1};
// E_0 is the nearest-neighbor layer.
template <class I = bigint>
inline layer_spec<I> dyadic_layer(int k) {
  if (k < 0) throw std::invalid_argument("dyadic_layer: k must be >= 0");
  if (k == 0) return make_unit_layer<I>();
  detail::check_shift_width<I>(k, "dyadic_layer");
  I period = I(1) << k;
  I offset = I(1) << (k - 1);
  return layer_spec<I>(period, {{std::move(offset), period}},
                       "E_" + std::to_string(k));
}

// Truncation with layers E_0..E_K.
template <class I = bigint>
inline graph_spec<I> dyadic_spec(int K) {
  if (K < 0) throw std::invalid_argument("dyadic_spec: K must be >= 0");
  std::vector<layer_spec<I>> layers;
  layers.reserve(std::size_t(K) + 1);
  for (int k = 0; k <= K; ++k) layers.push_back(dyadic_layer<I>(k));
  return graph_spec<I>(std::move(layers), "dyadic(K=" + std::to_string(K) + ")");
}

// Sparse subfamily with layers E_0 and E_{2^k} for 0 <= k <= K: polynomial
// volume growth instead of intermediate.
template <class I = bigint>
inline graph_spec<I> poly_spec(int K) {
  if (K < 0) throw std::invalid_argument("poly_spec: K must be >= 0");
  if (K > 30) throw std::invalid_argument("poly_spec: K too large (layer index 2^K)");
  std::vector<layer_spec<I>> layers;
  layers.reserve(std::size_t(K) + 2);
  layers.push_back(make_unit_layer<I>());
  for (int k = 0; k <= K; ++k) layers.push_back(dyadic_layer<I>(1 << k));
  return graph_spec<I>(std::move(layers), "poly(K=" + std::to_string(K) + ")");
}

// --- closed-form distance machinery -----------------------------------
//
// target_distance(i) is the graph distance from 0 to dyadic_target(i) =
// 2^{i-1} in the K=i truncation. Two independent routes are provided: a
// closed form driven by the breakpoint sequences below, and a memoized
// minimum over split points. Their agreement is part of the verify suite.

// Index at which the closed form switches regime: (n+1)(n+2)/2.
inline bigint breakpoint_index(int n) {
  if (n < 0) throw std::invalid_argument("breakpoint_index: n must be >= 0");
  return bigint(n + 1) * (n + 2) / 2;
}

// Distance value attained at breakpoint_index(n): n*2^n + 1.
inline bigint breakpoint_distance(int n) {
  if (n < 0) throw std::invalid_argument("breakpoint_distance: n must be >= 0");
  return bigint(n) * (bigint(1) << n) + 1;
}

// The vertex 2^{i-1} whose distance from 0 is tabulated at level i.
inline bigint dyadic_target(int i) {
  if (i < 1) throw std::invalid_argument("dyadic_target: i must be >= 1");
  return bigint(1) << (i - 1);
}

// Closed form for the distance 0 -> 2^{i-1} in the K=i truncation.
inline bigint target_distance_closed(int i) {
  if (i < 1) throw std::invalid_argument("target_distance_closed: i must be >= 1");
  if (i == 1) return 1;
  int n = 0;  // locate breakpoint_index(n) < i <= breakpoint_index(n+1)
  while (breakpoint_index(n + 1) < i) ++n;
  return breakpoint_distance(n + 1) -
         (breakpoint_index(n + 1) - i) * (bigint(1) << n);
}

// Distance 0 -> (2j+1)*2^{i-1} in the K=i truncation.
inline bigint shifted_target_distance(int i, std::int64_t j) {
  bigint base = target_distance_closed(i);
  return j >= 0 ? base + j : base + (-j - 1);
}

// Memoized recursive route: minimum over split levels k of
// 2*x(k) + 2^{i-k-1} - 1, with x(1) = 1, x(2) = 2 fixed by the graph.
class target_distance_table {
 public:
  explicit target_distance_table(int imax) : x_(std::size_t(std::max(imax, 2)) + 1) {
    if (imax < 1)
      throw std::invalid_argument("target_distance_table: imax must be >= 1");
    x_[1] = 1;
    x_[2] = 2;
    for (int i = 3; i <= imax; ++i) {
      bigint best = 2 * x_[1] + (bigint(1) << (i - 2)) - 1;
      for (int k = 2; k < i; ++k) {
        bigint cand = 2 * x_[std::size_t(k)] + (bigint(1) << (i - k - 1)) - 1;
        if (cand < best) best = std::move(cand);
      }
      x_[std::size_t(i)] = std::move(best);
    }
    imax_ = std::max(imax, 2);
  }

  int imax() const noexcept { return imax_; }

  const bigint& distance(int i) const {
    if (i < 1 || i > imax_)
      throw std::out_of_range("target_distance_table: index out of range");
    return x_[std::size_t(i)];
  }

 private:
  std::vector<bigint> x_;
  int imax_ = 0;
};

// Largest vertex reachable from 0 in (x_i - 1)/2 steps in the K=i
// truncation: max over split levels k of 2^{k-1} + 2^k*((x_i-1)/2 - x_k).
// Defined for i >= 3, where x_i is odd.
inline bigint reach_limit(int i) {
  if (i < 3) throw std::invalid_argument("reach_limit: i must be >= 3");
  const bigint steps = (target_distance_closed(i) - 1) / 2;
  bigint best;
  for (int k = 1; k <= i; ++k) {
    bigint cand = (bigint(1) << (k - 1)) +
                  (bigint(1) << k) * (steps - target_distance_closed(k));
    if (k == 1 || cand > best) best = std::move(cand);
  }
  return best;
}

// Two-sided bound on the exact ball volume |B_j(0)| in a truncation deep
// enough that no further layer is usable within radius j.
struct volume_bounds {
  int level = 0;         // largest n with breakpoint_distance(n) <= j
  bigint inner_radius;   // 2^{level-1}
  bigint lower;          // 2*inner_radius + 1
  bigint upper;          // 16 * j^2 * lower
};

inline volume_bounds ball_volume_bounds(const bigint& j) {
  if (j < 3) throw std::invalid_argument("ball_volume_bounds: j must be >= 3");
  volume_bounds b;
  b.level = 1;
  while (breakpoint_distance(b.level + 1) <= j) ++b.level;
  b.inner_radius = bigint(1) << (b.level - 1);
  b.lower = 2 * b.inner_radius + 1;
  b.upper = 16 * j * j * b.lower;
  return b;
}

// --- sparse (polynomial-growth) counterparts ---------------------------

// The vertex 2^{2^i - 1} tabulated by the sparse family at level i.
inline bigint poly_target(int i) {
  if (i < 0) throw std::invalid_argument("poly_target: i must be >= 0");
  if (i > 32) throw std::invalid_argument("poly_target: i too large");
  return bigint(1) << ((std::uint64_t(1) << i) - 1);
}

// Distance 0 -> poly_target(i) in the sparse truncation with layers up to
// E_{2^i}: base 1 at i = 0, then d(i) = 2 d(i-1) + 2^{2^{i-1}-1} - 1. The
// base case is fixed by the BFS oracle, which is authoritative here.
inline bigint poly_target_distance(int i) {
  if (i < 0) throw std::invalid_argument("poly_target_distance: i must be >= 0");
  if (i > 32) throw std::invalid_argument("poly_target_distance: i too large");
  bigint d = 1;
  for (int t = 1; t <= i; ++t)
    d = 2 * d + (bigint(1) << ((std::uint64_t(1) << (t - 1)) - 1)) - 1;
  return d;
}

}  // namespace opg
