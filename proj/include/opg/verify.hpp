#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include <json.hpp>

#include "opg/bfs.hpp"
#include "opg/bigint.hpp"
#include "opg/dyadic.hpp"
#include "opg/fit.hpp"
#include "opg/folner.hpp"
#include "opg/graph.hpp"
#include "opg/prime_family.hpp"

namespace opg {

// Outcome of one named check: pass/fail, how much was checked, and the first
// counterexample when something failed. elapsed_ms is the only
// non-deterministic field.
struct verdict {
  std::string lemma;
  nlohmann::json params = nlohmann::json::object();
  std::string range_checked;
  bool pass = true;
  std::uint64_t checked = 0;
  nlohmann::json counterexample;  // null unless pass == false
  std::int64_t elapsed_ms = 0;
};

inline nlohmann::json to_json(const verdict& v) {
  nlohmann::json j{{"lemma", v.lemma},       {"params", v.params},
                   {"range_checked", v.range_checked},
                   {"pass", v.pass},         {"checked", v.checked},
                   {"elapsed_ms", v.elapsed_ms}};
  if (!v.counterexample.is_null()) j["counterexample"] = v.counterexample;
  return j;
}

inline verdict merge_verdicts(const std::string& lemma,
                              const std::vector<verdict>& parts) {
  verdict v;
  v.lemma = lemma;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& p : parts) {
    v.pass = v.pass && p.pass;
    v.checked += p.checked;
    v.elapsed_ms += p.elapsed_ms;
    if (!v.range_checked.empty()) v.range_checked += "; ";
    v.range_checked += p.lemma + ": " + p.range_checked;
    if (!p.pass && v.counterexample.is_null())
      v.counterexample = {{"part", p.lemma},
                          {"counterexample", p.counterexample}};
    arr.push_back(to_json(p));
  }
  v.params = {{"parts", std::move(arr)}};
  return v;
}

namespace detail {

class stopwatch {
 public:
  std::int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point t0_ =
      std::chrono::steady_clock::now();
};

inline bigint max_edge_length(const graph_spec<bigint>& g) {
  bigint m = 1;
  for (const auto& layer : g.layers())
    for (const auto& t : layer.templates())
      if (t.length > m) m = t.length;
  return m;
}

// Rigorous bound on any vertex value a search touching values up to |maxabs|
// can reach in the given number of steps.
inline bigint wander_bound(const graph_spec<bigint>& g, const bigint& maxabs,
                           const bigint& steps) {
  return maxabs + (steps + 2) * max_edge_length(g);
}

// Run fn on the machine-width instantiation when every value provably fits,
// else on the arbitrary-precision one. fn must accept both spec types.
template <class Fn>
decltype(auto) on_engine(const graph_spec<bigint>& g, const bigint& value_bound,
                         Fn&& fn) {
  if (fits_int64(g, value_bound)) {
    auto narrowed = narrow_spec(g);
    if (narrowed) return fn(*narrowed);
  }
  return fn(g);
}

template <class I>
I vertex_cast(const bigint& v) {
  if constexpr (std::is_same_v<I, bigint>) {
    return v;
  } else {
    auto r = to_int64(v);
    if (!r) throw std::overflow_error("vertex does not fit the engine width");
    return *r;
  }
}

}  // namespace detail

// Closed form vs memoized recursion for the level-target distances, plus the
// breakpoint identity closed(breakpoint_index(n)) == breakpoint_distance(n).
inline verdict verify_lemma2(int imax = 300, int nmax = 22) {
  detail::stopwatch sw;
  verdict v;
  v.lemma = "lemma2";
  v.params = {{"imax", imax}, {"nmax", nmax}};
  v.range_checked = "recursive == closed for 1 <= i <= " + std::to_string(imax) +
                    "; breakpoint identity for 1 <= n <= " + std::to_string(nmax);
  target_distance_table table(imax);
  for (int i = 1; i <= imax && v.pass; ++i) {
    const bigint closed = target_distance_closed(i);
    if (table.distance(i) != closed) {
      v.pass = false;
      v.counterexample = {{"i", i},
                          {"recursive", to_decimal(table.distance(i))},
                          {"closed", to_decimal(closed)}};
    }
    ++v.checked;
  }
  for (int n = 1; n <= nmax && v.pass; ++n) {
    const auto idx = to_int64(breakpoint_index(n));
    if (!idx || *idx > 1'000'000) {
      v.pass = false;
      v.counterexample = {{"n", n}, {"reason", "breakpoint index too large"}};
      break;
    }
    if (target_distance_closed(int(*idx)) != breakpoint_distance(n)) {
      v.pass = false;
      v.counterexample = {{"n", n},
                          {"index", *idx},
                          {"closed", to_decimal(target_distance_closed(int(*idx)))},
                          {"expected", to_decimal(breakpoint_distance(n))}};
    }
    ++v.checked;
  }
  v.elapsed_ms = sw.ms();
  return v;
}

// BFS distance 0 -> 2^{i-1} in the K=i truncation equals the closed form.
inline verdict verify_oracle_agreement(int imax = 20,
                                       std::size_t cap = default_visit_cap) {
  detail::stopwatch sw;
  verdict v;
  v.lemma = "lemma1.oracle";
  v.params = {{"imax", imax}, {"cap", cap}};
  v.range_checked = "BFS == closed form for 1 <= i <= " + std::to_string(imax);
  for (int i = 1; i <= imax && v.pass; ++i) {
    const auto spec = dyadic_spec<bigint>(i);
    const bigint target = dyadic_target(i);
    const bigint expect = target_distance_closed(i);
    const bigint steps = std::min(bigint(cap), target);
    const std::int64_t d = detail::on_engine(
        spec, detail::wander_bound(spec, target, steps), [&](const auto& s) {
          using I = typename std::decay_t<decltype(s)>::value_type;
          return bfs_distance(s, I(0), detail::vertex_cast<I>(target), cap);
        });
    if (bigint(d) != expect) {
      v.pass = false;
      v.counterexample = {{"i", i},
                          {"bfs", d},
                          {"closed", to_decimal(expect)}};
    }
    ++v.checked;
  }
  v.elapsed_ms = sw.ms();
  return v;
}

// BFS distance 0 -> (2j+1) 2^{i-1} equals the shifted closed form.
inline verdict verify_shift_law(int imax = 8, int jmax = 8,
                                std::size_t cap = default_visit_cap) {
  detail::stopwatch sw;
  verdict v;
  v.lemma = "lemma1.shift";
  v.params = {{"imax", imax}, {"jmax", jmax}, {"cap", cap}};
  v.range_checked = "1 <= i <= " + std::to_string(imax) + ", |j| <= " +
                    std::to_string(jmax);
  for (int i = 1; i <= imax && v.pass; ++i) {
    const auto spec = dyadic_spec<bigint>(i);
    for (int j = -jmax; j <= jmax && v.pass; ++j) {
      const bigint target = bigint(2 * j + 1) * dyadic_target(i);
      const bigint expect = shifted_target_distance(i, j);
      const bigint steps = std::min(bigint(cap), bigint(abs(target)));
      const std::int64_t d = detail::on_engine(
          spec, detail::wander_bound(spec, abs(target), steps),
          [&](const auto& s) {
            using I = typename std::decay_t<decltype(s)>::value_type;
            return bfs_distance(s, I(0), detail::vertex_cast<I>(target), cap);
          });
      if (bigint(d) != expect) {
        v.pass = false;
        v.counterexample = {{"i", i},
                            {"j", j},
                            {"target", to_decimal(target)},
                            {"bfs", d},
                            {"expected", to_decimal(expect)}};
      }
      ++v.checked;
    }
  }
  v.elapsed_ms = sw.ms();
  return v;
}

// Every vertex of [0, 2^{i-1}] lies within the level-target distance of 0.
inline verdict verify_right(int imax = 12,
                            std::size_t cap = default_visit_cap) {
  detail::stopwatch sw;
  verdict v;
  v.lemma = "right";
  v.params = {{"imax", imax}, {"cap", cap}};
  v.range_checked = "d(0,m) <= target distance for 0 <= m <= 2^{i-1}, i <= " +
                    std::to_string(imax);
  for (int i = 1; i <= imax && v.pass; ++i) {
    const auto spec = dyadic_spec<bigint>(i);
    const bigint xi = target_distance_closed(i);
    const auto radius = to_int64(xi);
    if (!radius || *radius > (1 << 28)) {
      v.pass = false;
      v.counterexample = {{"i", i}, {"reason", "radius out of desk scale"}};
      break;
    }
    const bigint target = dyadic_target(i);
    auto missing = detail::on_engine(
        spec, detail::wander_bound(spec, target, xi),
        [&](const auto& s) -> std::optional<bigint> {
          using I = typename std::decay_t<decltype(s)>::value_type;
          const auto dist = distances_within(s, I(0), int(*radius), cap);
          const I end = detail::vertex_cast<I>(target);
          for (I m(0); m <= end; ++m)
            if (dist.find(m) == dist.end()) return bigint(m);
          return std::nullopt;
        });
    if (missing) {
      v.pass = false;
      v.counterexample = {{"i", i},
                          {"m", to_decimal(*missing)},
                          {"bound", to_decimal(xi)}};
    }
    v.checked += std::uint64_t(*to_int64(target)) + 1;
  }
  v.elapsed_ms = sw.ms();
  return v;
}

// Volume sandwich on one deep truncation: lower/upper bounds around the
// exact |B_j(0)| for 3 <= j <= jmax, stability of the volumes two layers
// down, the interval containments the bounds rest on, and confinement of the
// ball span.
inline verdict verify_growth_sandwich(int jmax = 161, int K = 24,
                                      std::size_t cap = default_visit_cap) {
  detail::stopwatch sw;
  verdict v;
  v.lemma = "growth.sandwich";
  v.params = {{"jmax", jmax}, {"K", K}, {"stability_K", K - 2}, {"cap", cap}};
  v.range_checked = "3 <= j <= " + std::to_string(jmax) + " at K = " +
                    std::to_string(K);
  if (jmax < 3 || K < 3) throw std::invalid_argument("verify_growth_sandwich: jmax and K must be >= 3");

  const auto spec_stab = dyadic_spec<bigint>(K - 2);
  const bigint bound_stab =
      detail::wander_bound(spec_stab, bigint(0), bigint(jmax));
  const growth_curve curve_stab = detail::on_engine(
      spec_stab, bound_stab, [&](const auto& s) {
        using I = typename std::decay_t<decltype(s)>::value_type;
        return ball(s, I(0), jmax, cap);
      });

  struct sweep_evidence {
    std::vector<std::uint64_t> volumes;
    std::vector<bigint> span_min, span_max;
    nlohmann::json inner_failure;  // first interval-membership violation
    std::uint64_t probes = 0;
  };
  const auto spec = dyadic_spec<bigint>(K);
  const bigint bound = detail::wander_bound(spec, bigint(0), bigint(jmax));
  const sweep_evidence ev = detail::on_engine(spec, bound, [&](const auto& s) {
    using I = typename std::decay_t<decltype(s)>::value_type;
    sweep_evidence e;
    const auto dist = distances_within(s, I(0), jmax, cap);
    e.volumes.assign(std::size_t(jmax) + 1, 0);
    e.span_min.assign(std::size_t(jmax) + 1, bigint(0));
    e.span_max.assign(std::size_t(jmax) + 1, bigint(0));
    std::vector<bigint> lo(std::size_t(jmax) + 1), hi(std::size_t(jmax) + 1);
    for (const auto& [vert, d] : dist) {
      e.volumes[std::size_t(d)] += 1;
      bigint b(vert);
      if (b < lo[std::size_t(d)]) lo[std::size_t(d)] = b;
      if (b > hi[std::size_t(d)]) hi[std::size_t(d)] = b;
    }
    for (int j = 1; j <= jmax; ++j) {
      e.volumes[std::size_t(j)] += e.volumes[std::size_t(j - 1)];
      lo[std::size_t(j)] = std::min(lo[std::size_t(j)], lo[std::size_t(j - 1)]);
      hi[std::size_t(j)] = std::max(hi[std::size_t(j)], hi[std::size_t(j - 1)]);
    }
    e.span_min = lo;
    e.span_max = hi;
    // interval containment: all of [-(2^{y_n - 1}), 2^{y_n - 1}] within
    // distance breakpoint_distance(n)
    int maxlevel = 1;
    while (breakpoint_distance(maxlevel + 1) <= jmax) ++maxlevel;
    for (int n = 1; n <= maxlevel && e.inner_failure.is_null(); ++n) {
      const bigint depth_bound = breakpoint_distance(n);
      const bigint half = bigint(1)
                          << int(*to_int64(breakpoint_index(n)) - 1);
      for (bigint m = 0; m <= half; ++m) {
        for (int sign : {1, -1}) {
          const I vert = detail::vertex_cast<I>(sign * m);
          auto it = dist.find(vert);
          ++e.probes;
          if (it == dist.end() || bigint(it->second) > depth_bound) {
            e.inner_failure = {{"n", n},
                               {"vertex", to_decimal(sign * m)},
                               {"required_depth", to_decimal(depth_bound)}};
            break;
          }
        }
        if (!e.inner_failure.is_null()) break;
      }
    }
    return e;
  });

  // stability: identical volumes two layers down
  for (int j = 0; j <= jmax && v.pass; ++j) {
    if (ev.volumes[std::size_t(j)] != curve_stab.volumes[std::size_t(j)]) {
      v.pass = false;
      v.counterexample = {{"check", "stability"},
                          {"j", j},
                          {"volume_K", ev.volumes[std::size_t(j)]},
                          {"volume_K_minus_2", curve_stab.volumes[std::size_t(j)]}};
    }
    ++v.checked;
  }
  // sandwich and span confinement
  for (int j = 3; j <= jmax && v.pass; ++j) {
    const auto b = ball_volume_bounds(bigint(j));
    const bigint vol(ev.volumes[std::size_t(j)]);
    if (vol < b.lower || vol > b.upper) {
      v.pass = false;
      v.counterexample = {{"check", "sandwich"},
                          {"j", j},
                          {"volume", to_decimal(vol)},
                          {"lower", to_decimal(b.lower)},
                          {"upper", to_decimal(b.upper)}};
      break;
    }
    // span confinement radius 2^{breakpoint_index(level+2) - 2}
    const bigint h = bigint(1)
                     << int(*to_int64(breakpoint_index(b.level + 2)) - 2);
    if (ev.span_min[std::size_t(j)] <= -h || ev.span_max[std::size_t(j)] >= h) {
      v.pass = false;
      v.counterexample = {{"check", "span"},
                          {"j", j},
                          {"span_min", to_decimal(ev.span_min[std::size_t(j)])},
                          {"span_max", to_decimal(ev.span_max[std::size_t(j)])},
                          {"radius", to_decimal(h)}};
      break;
    }
    v.checked += 2;
  }
  if (v.pass && !ev.inner_failure.is_null()) {
    v.pass = false;
    v.counterexample = {{"check", "interval"},
                        {"detail", ev.inner_failure}};
  }
  v.checked += ev.probes;
  v.params["volume_at_jmax"] = ev.volumes[std::size_t(jmax)];
  v.elapsed_ms = sw.ms();
  return v;
}

// The farthest vertex reachable in (x_i - 1)/2 steps equals the closed-form
// reach limit, which stays below 2^{i-2}.
inline verdict verify_reach_law(int imin = 3, int imax = 12,
                                std::size_t cap = default_visit_cap) {
  detail::stopwatch sw;
  verdict v;
  v.lemma = "growth.reach";
  v.params = {{"imin", imin}, {"imax", imax}, {"cap", cap}};
  v.range_checked = std::to_string(imin) + " <= i <= " + std::to_string(imax);
  for (int i = imin; i <= imax && v.pass; ++i) {
    const bigint expect = reach_limit(i);
    const bigint steps_big = (target_distance_closed(i) - 1) / 2;
    const auto steps = to_int64(steps_big);
    if (!steps || *steps > (1 << 28)) {
      v.pass = false;
      v.counterexample = {{"i", i}, {"reason", "step count out of desk scale"}};
      break;
    }
    const auto spec = dyadic_spec<bigint>(i);
    const bigint far = detail::on_engine(
        spec, detail::wander_bound(spec, bigint(0), steps_big),
        [&](const auto& s) {
          using I = typename std::decay_t<decltype(s)>::value_type;
          return bigint(farthest_reachable(s, I(0), int(*steps), cap));
        });
    const bigint strict_bound = bigint(1) << (i - 2);
    if (far != expect || !(expect < strict_bound)) {
      v.pass = false;
      v.counterexample = {{"i", i},
                          {"farthest", to_decimal(far)},
                          {"reach_limit", to_decimal(expect)},
                          {"strict_bound", to_decimal(strict_bound)}};
    }
    v.checked += 2;
  }
  v.elapsed_ms = sw.ms();
  return v;
}

// Sparse-family target distances: the recursion agrees with BFS for small i,
// and sits inside [2^{2^{i-1}-1}, 2^{2^{i-1}}] for the i range where that
// two-sided bound holds (i >= 4; the measured i = 2, 3 values exceed the
// upper end and are recorded, not asserted).
inline verdict verify_reader(int bfs_imax = 4, int bound_imin = 4,
                             int bound_imax = 6,
                             std::size_t cap = default_visit_cap) {
  detail::stopwatch sw;
  verdict v;
  v.lemma = "reader";
  v.params = {{"bfs_imax", bfs_imax},
              {"bound_imin", bound_imin},
              {"bound_imax", bound_imax},
              {"cap", cap}};
  v.range_checked = "BFS agreement for 1 <= i <= " + std::to_string(bfs_imax) +
                    "; bound for " + std::to_string(bound_imin) + " <= i <= " +
                    std::to_string(bound_imax);
  for (int i = 1; i <= bfs_imax && v.pass; ++i) {
    const auto spec = poly_spec<bigint>(i);
    const bigint target = poly_target(i);
    const bigint expect = poly_target_distance(i);
    const std::int64_t d = detail::on_engine(
        spec,
        detail::wander_bound(spec, target, std::min(bigint(cap), bigint(expect + 2))),
        [&](const auto& s) {
          using I = typename std::decay_t<decltype(s)>::value_type;
          return bfs_distance(s, I(0), detail::vertex_cast<I>(target), cap);
        });
    if (bigint(d) != expect) {
      v.pass = false;
      v.counterexample = {{"i", i},
                          {"bfs", d},
                          {"recursion", to_decimal(expect)}};
    }
    ++v.checked;
  }
  for (int i = bound_imin; i <= bound_imax && v.pass; ++i) {
    const bigint val = poly_target_distance(i);
    const bigint lo = bigint(1) << int((std::uint64_t(1) << (i - 1)) - 1);
    const bigint hi = bigint(1) << int(std::uint64_t(1) << (i - 1));
    if (val < lo || val > hi) {
      v.pass = false;
      v.counterexample = {{"i", i},
                          {"value", to_decimal(val)},
                          {"lower", to_decimal(lo)},
                          {"upper", to_decimal(hi)}};
    }
    ++v.checked;
  }
  v.params["measured_small_i"] = {
      {"2", to_decimal(poly_target_distance(2))},
      {"3", to_decimal(poly_target_distance(3))}};
  v.elapsed_ms = sw.ms();
  return v;
}

// Quadratic sandwich for the sparse family at radius j = distance(0 ->
// poly_target(i)): j^2 <= |B_j(0)| <= 8 j^2.
inline verdict verify_polyball(int i = 4, int K = 5,
                               std::size_t cap = default_visit_cap) {
  detail::stopwatch sw;
  verdict v;
  v.lemma = "polyball";
  const bigint j_big = poly_target_distance(i);
  const auto j = to_int64(j_big);
  if (!j || *j > (1 << 28))
    throw std::invalid_argument("verify_polyball: radius out of desk scale");
  v.params = {{"i", i}, {"K", K}, {"radius", *j}, {"cap", cap}};
  v.range_checked = "j = " + std::to_string(*j) + " on the sparse family, K = " +
                    std::to_string(K);
  const auto spec = poly_spec<bigint>(K);
  const growth_curve curve = detail::on_engine(
      spec, detail::wander_bound(spec, bigint(0), j_big), [&](const auto& s) {
        using I = typename std::decay_t<decltype(s)>::value_type;
        return ball(s, I(0), int(*j), cap);
      });
  const bigint vol(curve.volumes[std::size_t(*j)]);
  const bigint lower = j_big * j_big;
  const bigint upper = 8 * j_big * j_big;
  if (vol < lower || vol > upper) {
    v.pass = false;
    v.counterexample = {{"j", *j},
                        {"volume", to_decimal(vol)},
                        {"lower", to_decimal(lower)},
                        {"upper", to_decimal(upper)}};
  }
  v.params["volume"] = to_decimal(vol);
  ++v.checked;
  v.elapsed_ms = sw.ms();
  return v;
}

// The embedded binary tree rooted at 2: both child edges of every node up to
// depth mmax exist, BFS reaches depth-m labels within m steps, and ball
// volumes dominate the full binary tree.
inline verdict verify_tree(int mmax = 6, std::size_t cap = default_visit_cap) {
  detail::stopwatch sw;
  verdict v;
  v.lemma = "tree";
  v.params = {{"mmax", mmax}, {"cap", cap}};
  v.range_checked = "tree depth <= " + std::to_string(mmax);
  prime_tables tables(mmax + 1);
  for (int m = 1; m <= mmax && v.pass; ++m) {
    const auto spec_m = prime_spec(m + 1, tables);
    for (int j = 1; j <= (1 << (m - 1)) && v.pass; ++j) {
      const bigint& parent = tables.vertex(m, j);
      const auto nb = neighbors(spec_m, parent);
      for (int c : {2 * j - 1, 2 * j}) {
        const bigint& child = tables.vertex(m + 1, c);
        if (!std::binary_search(nb.begin(), nb.end(), child)) {
          v.pass = false;
          v.counterexample = {{"m", m},
                              {"parent", to_decimal(parent)},
                              {"missing_child", to_decimal(child)}};
          break;
        }
        ++v.checked;
      }
    }
  }
  if (v.pass) {
    const auto spec = prime_spec(mmax + 1, tables);
    const auto dist = distances_within(spec, bigint(2), mmax, cap);
    std::vector<std::uint64_t> volumes(std::size_t(mmax) + 1, 0);
    for (const auto& [vert, d] : dist) volumes[std::size_t(d)] += 1;
    for (int m = 1; m <= mmax; ++m)
      volumes[std::size_t(m)] += volumes[std::size_t(m - 1)];
    for (int m = 0; m <= mmax && v.pass; ++m) {
      for (const bigint& label : tables.level_vertices(m + 1)) {
        auto it = dist.find(label);
        if (it == dist.end() || it->second > m) {
          v.pass = false;
          v.counterexample = {{"m", m},
                              {"label", to_decimal(label)},
                              {"reason", "not within tree depth"}};
          break;
        }
        ++v.checked;
      }
      const std::uint64_t need = (std::uint64_t(1) << (m + 1)) - 1;
      if (v.pass && volumes[std::size_t(m)] < need) {
        v.pass = false;
        v.counterexample = {{"m", m},
                            {"volume", volumes[std::size_t(m)]},
                            {"tree_lower_bound", need}};
      }
      ++v.checked;
    }
  }
  v.elapsed_ms = sw.ms();
  return v;
}

// Max distinct-neighbor degree over a window is exactly five, and the
// base/left/right decomposition reconstructs every layer-incidence count.
inline verdict verify_degree(int M = 4, std::int64_t lo = 1,
                             std::int64_t hi = 1'000'000) {
  detail::stopwatch sw;
  verdict v;
  v.lemma = "degree";
  v.params = {{"M", M}, {"lo", lo}, {"hi", hi}};
  v.range_checked = "z in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                    "] on the prime family, M = " + std::to_string(M);
  if (lo > hi) throw std::invalid_argument("verify_degree: empty window");
  prime_tables tables(M);
  const auto spec = prime_spec(M, tables);
  std::size_t max_degree = 0, max_incidence = 0;
  std::int64_t arg_degree = lo, arg_incidence = lo;
  std::vector<bigint> nb;
  nb.reserve(16);
  for (std::int64_t z = lo; z <= hi && v.pass; ++z) {
    const bigint vert(z);
    nb.clear();
    for_each_neighbor(spec, vert, [&](const bigint& u) { nb.push_back(u); });
    const std::size_t incidence = nb.size();
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    const std::size_t deg = nb.size();
    const auto split = degree_decomposition(vert, tables);
    if (std::size_t(split.total()) != incidence) {
      v.pass = false;
      v.counterexample = {{"z", z},
                          {"incidences", incidence},
                          {"decomposition", split.total()},
                          {"left_hits", split.left_hits},
                          {"right_hits", split.right_hits}};
    }
    if (deg > 5 || incidence > 5) {
      v.pass = false;
      v.counterexample = {{"z", z},
                          {"degree", deg},
                          {"incidences", incidence},
                          {"reason", "degree bound exceeded"}};
    }
    if (deg > max_degree) { max_degree = deg; arg_degree = z; }
    if (incidence > max_incidence) { max_incidence = incidence; arg_incidence = z; }
    ++v.checked;
  }
  if (v.pass && (max_degree != 5 || max_incidence != 5)) {
    v.pass = false;
    v.counterexample = {{"max_degree", max_degree},
                        {"max_incidence", max_incidence},
                        {"reason", "max degree over window is not 5"}};
  }
  v.params["max_degree"] = max_degree;
  v.params["max_degree_at"] = arg_degree;
  v.params["max_incidence"] = max_incidence;
  v.params["max_incidence_at"] = arg_incidence;
  v.elapsed_ms = sw.ms();
  return v;
}

// Left/right cosets of distinct layers never intersect inside the window.
inline verdict verify_disjoint(int M = 3, const bigint& lo = 1,
                               const bigint& hi = 10'000'000) {
  detail::stopwatch sw;
  verdict v;
  v.lemma = "disjoint";
  v.params = {{"M", M}, {"lo", to_decimal(lo)}, {"hi", to_decimal(hi)}};
  v.range_checked = "layers 1.." + std::to_string(M) + " over [" +
                    to_decimal(lo) + ", " + to_decimal(hi) + "]";
  const auto rep = check_coset_disjointness(M, lo, hi);
  v.pass = rep.pass;
  v.checked = rep.checked;
  if (!rep.pass)
    v.counterexample = {{"side", rep.side},
                        {"value", to_decimal(rep.witness)},
                        {"layer_a", rep.layer_a},
                        {"layer_b", rep.layer_b}};
  v.elapsed_ms = sw.ms();
  return v;
}

// Boundary-to-size ratios of growing intervals: nonincreasing along doubling
// interval widths on the dyadic truncation and below 1/1000 at the widest,
// and below 1/1000 on the prime family window.
inline verdict verify_folner(int K = 16, int smin = 4, int smax = 16,
                             int prime_M = 3,
                             std::int64_t prime_n = 1'000'000) {
  detail::stopwatch sw;
  verdict v;
  v.lemma = "folner";
  v.params = {{"K", K},
              {"smin", smin},
              {"smax", smax},
              {"prime_M", prime_M},
              {"prime_n", prime_n}};
  v.range_checked = "dyadic K=" + std::to_string(K) + ", n = 2^" +
                    std::to_string(smin) + "..2^" + std::to_string(smax) +
                    "; prime M=" + std::to_string(prime_M) + ", n = " +
                    std::to_string(prime_n);
  const auto dspec = dyadic_spec<bigint>(K);
  std::vector<folner_row> rows;
  for (int s = smin; s <= smax; ++s) {
    const std::int64_t n = std::int64_t(1) << s;
    rows.push_back(detail::on_engine(
        dspec, detail::wander_bound(dspec, bigint(n), bigint(1)),
        [&](const auto& spec) { return folner_ratio(spec, n); }));
    ++v.checked;
  }
  nlohmann::json jrows = nlohmann::json::array();
  for (const auto& r : rows)
    jrows.push_back({{"n", r.half_width},
                     {"interval", r.interval_size},
                     {"boundary", r.boundary_count}});
  v.params["dyadic_rows"] = jrows;
  for (std::size_t k = 0; k + 1 < rows.size() && v.pass; ++k) {
    // exact comparison b_k / i_k >= b_{k+1} / i_{k+1}
    if (rows[k].boundary_count * rows[k + 1].interval_size <
        rows[k + 1].boundary_count * rows[k].interval_size) {
      v.pass = false;
      v.counterexample = {{"check", "monotone"},
                          {"n", rows[k].half_width},
                          {"next_n", rows[k + 1].half_width}};
    }
    ++v.checked;
  }
  if (v.pass && rows.back().boundary_count * 1000 >= rows.back().interval_size) {
    v.pass = false;
    v.counterexample = {{"check", "dyadic_ratio"},
                        {"boundary", rows.back().boundary_count},
                        {"interval", rows.back().interval_size}};
  }
  ++v.checked;
  if (v.pass) {
    const auto prow = folner_ratio(prime_spec(prime_M), prime_n);
    v.params["prime_row"] = {{"n", prow.half_width},
                             {"interval", prow.interval_size},
                             {"boundary", prow.boundary_count}};
    if (prow.boundary_count * 1000 >= prow.interval_size) {
      v.pass = false;
      v.counterexample = {{"check", "prime_ratio"},
                          {"boundary", prow.boundary_count},
                          {"interval", prow.interval_size}};
    }
    ++v.checked;
  }
  v.elapsed_ms = sw.ms();
  return v;
}

// Growth-regime diagnostics: positive log-squared curvature on the dyadic
// family, a polynomial slope between 1 and 3 on the sparse family, a
// positive exponential rate on the prime family. Coefficients are recorded
// for review.
inline verdict verify_fits(int dyadic_K = 24, int dyadic_radius = 161,
                           int poly_K = 5, int poly_radius = 161,
                           int prime_M = 7, int prime_radius = 10,
                           std::size_t cap = default_visit_cap) {
  detail::stopwatch sw;
  verdict v;
  v.lemma = "fits";
  v.params = {{"dyadic_K", dyadic_K},       {"dyadic_radius", dyadic_radius},
              {"poly_K", poly_K},           {"poly_radius", poly_radius},
              {"prime_M", prime_M},         {"prime_radius", prime_radius},
              {"cap", cap}};
  v.range_checked = "three family curves, radii " +
                    std::to_string(dyadic_radius) + "/" +
                    std::to_string(poly_radius) + "/" +
                    std::to_string(prime_radius);
  const auto run_ball = [&](const graph_spec<bigint>& spec, const bigint& center,
                            int radius) {
    return detail::on_engine(
        spec, detail::wander_bound(spec, abs(center), bigint(radius)),
        [&](const auto& s) {
          using I = typename std::decay_t<decltype(s)>::value_type;
          return ball(s, detail::vertex_cast<I>(center), radius, cap);
        });
  };
  const auto record = [](const fit_result& f) {
    return nlohmann::json{{"model", growth_model_name(f.model)},
                          {"coeffs", f.coeffs},
                          {"rms_residual", f.rms_residual}};
  };
  const auto curve_d = run_ball(dyadic_spec<bigint>(dyadic_K), 0, dyadic_radius);
  const auto fit_d = fit_growth(curve_d, growth_model::quadratic_log);
  const auto curve_p = run_ball(poly_spec<bigint>(poly_K), 0, poly_radius);
  const auto fit_p = fit_growth(curve_p, growth_model::poly);
  const auto curve_pr = run_ball(prime_spec(prime_M), 2, prime_radius);
  const auto fit_pr = fit_growth(curve_pr, growth_model::exponential);
  v.params["dyadic_fit"] = record(fit_d);
  v.params["poly_fit"] = record(fit_p);
  v.params["prime_fit"] = record(fit_pr);
  v.checked = 3;
  if (!(fit_d.coeffs[0] > 0.0)) {
    v.pass = false;
    v.counterexample = {{"check", "dyadic_curvature"},
                        {"coefficient", fit_d.coeffs[0]}};
  } else if (!(fit_p.coeffs[0] > 1.0 && fit_p.coeffs[0] < 3.0)) {
    v.pass = false;
    v.counterexample = {{"check", "poly_slope"},
                        {"coefficient", fit_p.coeffs[0]}};
  } else if (!(fit_pr.coeffs[0] > 0.0)) {
    v.pass = false;
    v.counterexample = {{"check", "prime_rate"},
                        {"coefficient", fit_pr.coeffs[0]}};
  }
  v.elapsed_ms = sw.ms();
  return v;
}

}  // namespace opg
