#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "opg/bigint.hpp"
#include "opg/graph.hpp"

namespace opg {

// Hard ceiling on vertices a single search may discover. Exceeding it is an
// error, never a silent truncation.
inline constexpr std::size_t default_visit_cap = 50'000'000;

struct budget_exceeded : std::runtime_error {
  std::size_t visited;
  explicit budget_exceeded(std::size_t visited_count)
      : std::runtime_error("search budget exceeded after visiting " +
                           std::to_string(visited_count) + " vertices"),
        visited(visited_count) {}
  budget_exceeded(std::size_t count, const std::string& what_arg)
      : std::runtime_error(what_arg), visited(count) {}
};

// Exact record of one BFS sweep: volumes[j] = |B_j(center)|, and the extreme
// vertex values discovered within each radius.
struct growth_curve {
  std::string spec_name;
  int truncation = 0;
  bigint center;
  std::vector<std::uint64_t> volumes;
  std::vector<bigint> span_min, span_max;
  int radius() const noexcept { return int(volumes.size()) - 1; }
};

// Exact graph distance by breadth-first search over implicit adjacency on
// the unbounded vertex set. Every spec contains the nearest-neighbor layer,
// so the target is always reachable; the cap bounds the explored region.
template <class I>
inline std::int64_t bfs_distance(const graph_spec<I>& g, const I& src,
                                 const I& dst,
                                 std::size_t cap = default_visit_cap) {
  if (cap < 1) throw std::invalid_argument("bfs_distance: cap must be >= 1");
  if (src == dst) return 0;
  std::unordered_set<I> visited;
  visited.insert(src);
  std::vector<I> frontier{src}, next;
  for (std::int64_t depth = 1;; ++depth) {
    next.clear();
    for (const I& v : frontier) {
      bool found = false;
      for_each_neighbor(g, v, [&](const I& u) {
        if (u == dst) found = true;
        auto ins = visited.insert(u);
        if (ins.second) {
          if (visited.size() > cap) throw budget_exceeded(visited.size());
          next.push_back(u);
        }
      });
      if (found) return depth;
    }
    if (next.empty())
      throw std::logic_error("bfs_distance: component exhausted");
    frontier.swap(next);
  }
}

// One sweep to the given radius, recording cumulative counts per depth.
template <class I>
inline growth_curve ball(const graph_spec<I>& g, const I& center, int radius,
                         std::size_t cap = default_visit_cap) {
  if (cap < 1) throw std::invalid_argument("ball: cap must be >= 1");
  if (radius < 0) throw std::invalid_argument("ball: radius must be >= 0");
  growth_curve curve;
  curve.spec_name = g.name();
  curve.truncation = g.truncation();
  curve.center = bigint(center);
  curve.volumes = {1};
  curve.span_min = {bigint(center)};
  curve.span_max = {bigint(center)};
  std::unordered_set<I> visited;
  visited.insert(center);
  std::vector<I> frontier{center}, next;
  I lo = center, hi = center;
  for (int depth = 1; depth <= radius; ++depth) {
    next.clear();
    for (const I& v : frontier) {
      for_each_neighbor(g, v, [&](const I& u) {
        auto ins = visited.insert(u);
        if (ins.second) {
          if (visited.size() > cap) throw budget_exceeded(visited.size());
          if (u < lo) lo = u;
          if (u > hi) hi = u;
          next.push_back(u);
        }
      });
    }
    curve.volumes.push_back(curve.volumes.back() + next.size());
    curve.span_min.push_back(bigint(lo));
    curve.span_max.push_back(bigint(hi));
    frontier.swap(next);
  }
  return curve;
}

// Distance of every vertex within the given radius of center.
template <class I>
inline std::unordered_map<I, int> distances_within(
    const graph_spec<I>& g, const I& center, int radius,
    std::size_t cap = default_visit_cap) {
  if (cap < 1) throw std::invalid_argument("distances_within: cap must be >= 1");
  if (radius < 0)
    throw std::invalid_argument("distances_within: radius must be >= 0");
  std::unordered_map<I, int> dist;
  dist.emplace(center, 0);
  std::vector<I> frontier{center}, next;
  for (int depth = 1; depth <= radius; ++depth) {
    next.clear();
    for (const I& v : frontier) {
      for_each_neighbor(g, v, [&](const I& u) {
        auto ins = dist.emplace(u, depth);
        if (ins.second) {
          if (dist.size() > cap) throw budget_exceeded(dist.size());
          next.push_back(u);
        }
      });
    }
    frontier.swap(next);
  }
  return dist;
}

// Maximum vertex value in B_steps(src).
template <class I>
inline I farthest_reachable(const graph_spec<I>& g, const I& src, int steps,
                            std::size_t cap = default_visit_cap) {
  if (cap < 1)
    throw std::invalid_argument("farthest_reachable: cap must be >= 1");
  if (steps < 0)
    throw std::invalid_argument("farthest_reachable: steps must be >= 0");
  std::unordered_set<I> visited;
  visited.insert(src);
  std::vector<I> frontier{src}, next;
  I hi = src;
  for (int depth = 1; depth <= steps; ++depth) {
    next.clear();
    for (const I& v : frontier) {
      for_each_neighbor(g, v, [&](const I& u) {
        auto ins = visited.insert(u);
        if (ins.second) {
          if (visited.size() > cap) throw budget_exceeded(visited.size());
          if (u > hi) hi = u;
          next.push_back(u);
        }
      });
    }
    frontier.swap(next);
  }
  return hi;
}

}  // namespace opg
