#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "opg/bigint.hpp"
#include "opg/graph.hpp"

namespace opg {

// Boundary measurement of the interval [-n, n]: how many of its vertices
// have at least one neighbor outside. The boundary counted is the outer
// vertex boundary; the ratio is kept as an exact reduced fraction.
struct folner_row {
  std::int64_t half_width = 0;     // n
  std::int64_t interval_size = 0;  // 2n + 1
  std::int64_t boundary_count = 0;
  std::int64_t ratio_num = 0, ratio_den = 1;
};

template <class I>
inline bool has_neighbor_outside(const graph_spec<I>& g, const I& v,
                                 const I& lo, const I& hi) {
  for (const auto& layer : g.layers()) {
    const I r = mod_floor(v, layer.period());
    const auto& ts = layer.templates();
    for (std::size_t t = 0; t < ts.size(); ++t) {
      if (r == ts[t].offset) {
        I u = v + ts[t].length;
        if (u < lo || u > hi) return true;
      }
      if (r == layer.rev_offset(t)) {
        I u = v - ts[t].length;
        if (u < lo || u > hi) return true;
      }
    }
  }
  return false;
}

template <class I>
inline folner_row folner_ratio(const graph_spec<I>& g, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("folner_ratio: n must be >= 1");
  const I lo = I(-n), hi = I(n);
  folner_row row;
  row.half_width = n;
  row.interval_size = 2 * n + 1;
  for (std::int64_t vi = -n; vi <= n; ++vi) {
    if (has_neighbor_outside(g, I(vi), lo, hi)) ++row.boundary_count;
  }
  const std::int64_t d = std::gcd(row.boundary_count, row.interval_size);
  row.ratio_num = row.boundary_count / d;
  row.ratio_den = row.interval_size / d;
  return row;
}

}  // namespace opg
