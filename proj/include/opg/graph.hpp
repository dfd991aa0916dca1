#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "opg/bigint.hpp"

namespace opg {

// One periodic edge family: the edges {(offset + k*period, offset + k*period
// + length)} for every integer k, where period belongs to the owning layer.
template <class I>
struct edge_template {
  I offset;
  I length;
};

// A periodic graph on the integers: a period shared by one or more edge
// templates. Immutable once constructed; construction validates ranges and
// rejects templates that denote the same edge family (read from either
// endpoint).
template <class I>
class layer_spec {
 public:
  layer_spec(I period, std::vector<edge_template<I>> templates,
             std::string label)
      : period_(std::move(period)),
        templates_(std::move(templates)),
        label_(std::move(label)) {
    if (period_ < 1)
      throw std::invalid_argument("layer " + label_ + ": period must be >= 1");
    if (templates_.empty())
      throw std::invalid_argument("layer " + label_ +
                                  ": needs at least one edge template");
    rev_offsets_.reserve(templates_.size());
    std::vector<std::pair<I, I>> keys;
    keys.reserve(templates_.size());
    for (const auto& t : templates_) {
      if (t.length < 1)
        throw std::invalid_argument("layer " + label_ +
                                    ": edge length must be >= 1");
      if (t.offset < 0 || t.offset >= period_)
        throw std::invalid_argument("layer " + label_ +
                                    ": offset out of [0, period)");
      I rev = mod_floor(I(t.offset + t.length), period_);
      keys.emplace_back(std::min(t.offset, rev), t.length);
      rev_offsets_.push_back(std::move(rev));
    }
    std::sort(keys.begin(), keys.end());
    if (std::adjacent_find(keys.begin(), keys.end()) != keys.end())
      throw std::invalid_argument("layer " + label_ +
                                  ": duplicate edge family");
  }

  const I& period() const noexcept { return period_; }
  const std::vector<edge_template<I>>& templates() const noexcept {
    return templates_;
  }
  // Canonical residue of template t's right endpoint modulo the period.
  const I& rev_offset(std::size_t t) const noexcept { return rev_offsets_[t]; }
  const std::string& label() const noexcept { return label_; }

 private:
  I period_;
  std::vector<edge_template<I>> templates_;
  std::vector<I> rev_offsets_;
  std::string label_;
};

// The nearest-neighbor layer: period 1, edges (i, i+1).
template <class I>
layer_spec<I> make_unit_layer() {
  return layer_spec<I>(I(1), {{I(0), I(1)}}, "E_0");
}

// An ordered, finite union of layers truncating a graph on the integers.
// Layer 0 must be the nearest-neighbor layer so the graph is connected;
// labels must be distinct.
template <class I>
class graph_spec {
 public:
  using value_type = I;

  graph_spec(std::vector<layer_spec<I>> layers, std::string name)
      : layers_(std::move(layers)), name_(std::move(name)) {
    if (layers_.empty())
      throw std::invalid_argument("graph " + name_ + ": no layers");
    const auto& base = layers_.front();
    if (base.period() != 1 || base.templates().size() != 1 ||
        base.templates()[0].offset != 0 || base.templates()[0].length != 1)
      throw std::invalid_argument(
          "graph " + name_ +
          ": layer 0 must be the nearest-neighbor layer (period 1, edge "
          "(0,1))");
    std::vector<std::string> labels;
    labels.reserve(layers_.size());
    for (const auto& l : layers_) labels.push_back(l.label());
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
      throw std::invalid_argument("graph " + name_ + ": duplicate layer label");
  }

  const std::vector<layer_spec<I>>& layers() const noexcept { return layers_; }
  const std::string& name() const noexcept { return name_; }
  // Index of the last layer; all computed quantities are relative to it.
  int truncation() const noexcept { return int(layers_.size()) - 1; }

 private:
  std::vector<layer_spec<I>> layers_;
  std::string name_;
};

// Calls fn(u) for every edge (v,u) generated by some layer, possibly with
// repeats when several layers generate the same edge.
template <class I, class Fn>
inline void for_each_neighbor(const graph_spec<I>& g, const I& v, Fn&& fn) {
  for (const auto& layer : g.layers()) {
    const I r = mod_floor(v, layer.period());
    const auto& ts = layer.templates();
    for (std::size_t t = 0; t < ts.size(); ++t) {
      if (r == ts[t].offset) fn(v + ts[t].length);
      if (r == layer.rev_offset(t)) fn(v - ts[t].length);
    }
  }
}

// Distinct neighbors of v, ascending.
template <class I>
inline std::vector<I> neighbors(const graph_spec<I>& g, const I& v) {
  std::vector<I> out;
  for_each_neighbor(g, v, [&](I u) { out.push_back(std::move(u)); });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Number of distinct neighbors.
template <class I>
inline std::size_t degree(const graph_spec<I>& g, const I& v) {
  return neighbors(g, v).size();
}

// Number of (layer, template, direction) edge incidences at v. Differs from
// degree(v) exactly where two layers generate the same edge.
template <class I>
inline std::size_t layer_incidences(const graph_spec<I>& g, const I& v) {
  std::size_t n = 0;
  for_each_neighbor(g, v, [&](const I&) { ++n; });
  return n;
}

// All edges with both endpoints in [lo, hi], smaller endpoint first, sorted
// lexicographically, each edge reported once.
template <class I>
inline std::vector<std::pair<I, I>> edges_in_window(const graph_spec<I>& g,
                                                    const I& lo, const I& hi) {
  if (lo > hi)
    throw std::invalid_argument("edges_in_window: lo must be <= hi");
  std::vector<std::pair<I, I>> out;
  for (const auto& layer : g.layers()) {
    const I& p = layer.period();
    for (const auto& t : layer.templates()) {
      // smallest/largest k with o + k p >= lo and o + k p + len <= hi
      I k = ceil_div(I(lo - t.offset), p);
      const I kmax = floor_div(I(hi - t.offset - t.length), p);
      for (; k <= kmax; ++k) {
        I a = t.offset + k * p;
        out.emplace_back(a, I(a + t.length));
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Least common multiple of all layer periods (exact).
template <class I>
inline bigint overall_period(const graph_spec<I>& g) {
  bigint acc = 1;
  for (const auto& layer : g.layers()) {
    bigint p(layer.period());
    acc = acc / boost::multiprecision::gcd(acc, p) * p;
  }
  return acc;
}

// True when every layer constant and every value up to |value_bound| is
// representable in int64 with enough headroom that sums and differences of
// two such values cannot overflow.
inline bool fits_int64(const graph_spec<bigint>& g, const bigint& value_bound) {
  static const bigint limit = bigint(1) << 61;
  if (value_bound >= limit) return false;
  for (const auto& layer : g.layers()) {
    if (layer.period() >= limit) return false;
    for (const auto& t : layer.templates())
      if (t.offset >= limit || t.length >= limit ||
          t.offset + t.length >= limit)
        return false;
  }
  return true;
}

// Machine-width copy of a spec whose constants all fit in int64.
inline std::optional<graph_spec<std::int64_t>> narrow_spec(
    const graph_spec<bigint>& g) {
  std::vector<layer_spec<std::int64_t>> layers;
  layers.reserve(g.layers().size());
  for (const auto& layer : g.layers()) {
    auto p = to_int64(layer.period());
    if (!p) return std::nullopt;
    std::vector<edge_template<std::int64_t>> ts;
    ts.reserve(layer.templates().size());
    for (const auto& t : layer.templates()) {
      auto o = to_int64(t.offset);
      auto len = to_int64(t.length);
      if (!o || !len || to_int64(bigint(t.offset + t.length)) == std::nullopt)
        return std::nullopt;
      ts.push_back({*o, *len});
    }
    layers.emplace_back(*p, std::move(ts), layer.label());
  }
  return graph_spec<std::int64_t>(std::move(layers), g.name());
}

}  // namespace opg
