#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <vector>

#include "opg/bigint.hpp"
#include "opg/dyadic.hpp"
#include "opg/graph.hpp"
#include "oracles.hpp"

using opg::bigint;

namespace {

// Random valid specs for property tests: unit layer plus a few small layers.
opg::graph_spec<bigint> random_spec(std::mt19937& rng) {
  std::uniform_int_distribution<int> layer_count(0, 3), period(1, 12),
      length(1, 15);
  std::vector<opg::layer_spec<bigint>> layers{opg::make_unit_layer<bigint>()};
  const int extra = layer_count(rng);
  for (int k = 0; k < extra; ++k) {
    const int p = period(rng);
    std::uniform_int_distribution<int> offset(0, p - 1);
    try {
      layers.emplace_back(bigint(p),
                          std::vector<opg::edge_template<bigint>>{
                              {bigint(offset(rng)), bigint(length(rng))}},
                          "L_" + std::to_string(k + 1));
    } catch (const std::invalid_argument&) {
      // collided with the unit layer's family; skip
    }
  }
  return opg::graph_spec<bigint>(std::move(layers), "random");
}

}  // namespace

TEST_CASE("unit layer") {
  const auto layer = opg::make_unit_layer<bigint>();
  CHECK(layer.period() == 1);
  REQUIRE(layer.templates().size() == 1);
  CHECK(layer.templates()[0].offset == 0);
  CHECK(layer.templates()[0].length == 1);
  CHECK(layer.label() == "E_0");

  const opg::graph_spec<bigint> g({layer}, "unit");
  CHECK(opg::neighbors(g, bigint(0)) == std::vector<bigint>{-1, 1});
  const auto edges = opg::edges_in_window(g, bigint(0), bigint(3));
  const std::vector<std::pair<bigint, bigint>> expect{{0, 1}, {1, 2}, {2, 3}};
  CHECK(edges == expect);
}

TEST_CASE("neighbors on the dyadic truncation") {
  const auto g = opg::dyadic_spec<bigint>(3);
  CHECK(opg::neighbors(g, bigint(0)) == std::vector<bigint>{-1, 1});
  CHECK(opg::neighbors(g, bigint(2)) == std::vector<bigint>{-2, 1, 3, 6});
  CHECK(opg::degree(g, bigint(0)) == 2);
  CHECK(opg::degree(g, bigint(6)) == 4);
  CHECK(opg::degree(g, bigint(2)) == 4);

  const auto g20 = opg::dyadic_spec<bigint>(20);
  CHECK(opg::degree(g20, bigint(6)) == 4);
}

TEST_CASE("edges_in_window") {
  const auto g1 = opg::dyadic_spec<bigint>(1);
  const auto edges = opg::edges_in_window(g1, bigint(-1), bigint(3));
  const std::vector<std::pair<bigint, bigint>> expect{
      {-1, 0}, {-1, 1}, {0, 1}, {1, 2}, {1, 3}, {2, 3}};
  CHECK(edges == expect);

  // a window too small for E_3 instances gets nothing from that layer
  const auto g3 = opg::dyadic_spec<bigint>(3);
  const auto small = opg::edges_in_window(g3, bigint(0), bigint(2));
  for (const auto& [u, v] : small) CHECK(v - u <= 2);

  CHECK_THROWS_AS(opg::edges_in_window(g1, bigint(2), bigint(1)),
                  std::invalid_argument);
}

TEST_CASE("window edges match the odd-multiple enumeration") {
  for (int K : {1, 2, 4}) {
    const auto g = opg::dyadic_spec<std::int64_t>(K);
    for (auto [lo, hi] : std::vector<std::pair<std::int64_t, std::int64_t>>{
             {-20, 20}, {-33, 7}, {5, 64}}) {
      const auto got = opg::edges_in_window(g, lo, hi);
      const auto want = oracle::dyadic_edges(oracle::iota_levels(K), lo, hi);
      REQUIRE(got == want);
    }
  }
}

TEST_CASE("neighbors agree with window materialization") {
  const auto g = opg::dyadic_spec<std::int64_t>(4);
  const auto edges = opg::edges_in_window(g, std::int64_t(-64), std::int64_t(64));
  for (std::int64_t v = -40; v <= 40; ++v) {
    std::vector<std::int64_t> from_edges;
    for (const auto& [a, b] : edges) {
      if (a == v) from_edges.push_back(b);
      if (b == v) from_edges.push_back(a);
    }
    std::sort(from_edges.begin(), from_edges.end());
    const auto nb = opg::neighbors(g, v);
    // window edges can miss neighbors near the rim; inside it they agree
    if (v >= -24 && v <= 24) CHECK(nb == from_edges);
  }
}

TEST_CASE("spec validation") {
  using layer = opg::layer_spec<bigint>;
  using tmpl = std::vector<opg::edge_template<bigint>>;
  CHECK_THROWS_AS(layer(bigint(0), tmpl{{bigint(0), bigint(1)}}, "bad"),
                  std::invalid_argument);
  CHECK_THROWS_AS(layer(bigint(4), tmpl{}, "bad"), std::invalid_argument);
  CHECK_THROWS_AS(layer(bigint(4), tmpl{{bigint(4), bigint(1)}}, "bad"),
                  std::invalid_argument);
  CHECK_THROWS_AS(layer(bigint(4), tmpl{{bigint(-1), bigint(1)}}, "bad"),
                  std::invalid_argument);
  CHECK_THROWS_AS(layer(bigint(4), tmpl{{bigint(0), bigint(0)}}, "bad"),
                  std::invalid_argument);
  // identical family listed twice
  CHECK_THROWS_AS(
      layer(bigint(4), tmpl{{bigint(1), bigint(2)}, {bigint(1), bigint(2)}},
            "bad"),
      std::invalid_argument);
  // same family read from the right endpoint
  CHECK_THROWS_AS(
      layer(bigint(4), tmpl{{bigint(0), bigint(2)}, {bigint(2), bigint(2)}},
            "bad"),
      std::invalid_argument);

  // graphs must start with the unit layer and have distinct labels
  CHECK_THROWS_AS(
      opg::graph_spec<bigint>({layer(bigint(2), tmpl{{bigint(1), bigint(2)}},
                                     "E_1")},
                              "bad"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      opg::graph_spec<bigint>({opg::make_unit_layer<bigint>(),
                               layer(bigint(2), tmpl{{bigint(1), bigint(2)}},
                                     "E_0")},
                              "bad"),
      std::invalid_argument);
}

TEST_CASE("adjacency properties on random specs") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> vdist(-50, 50);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = random_spec(rng);
    const bigint P = opg::overall_period(g);
    for (int probe = 0; probe < 12; ++probe) {
      const bigint v(vdist(rng));
      const auto nb = opg::neighbors(g, v);
      CHECK(opg::degree(g, v) == nb.size());
      CHECK(std::is_sorted(nb.begin(), nb.end()));
      CHECK(std::adjacent_find(nb.begin(), nb.end()) == nb.end());
      // symmetry
      for (const auto& u : nb) {
        const auto back = opg::neighbors(g, u);
        CHECK(std::binary_search(back.begin(), back.end(), v));
      }
      // periodicity
      const auto shifted = opg::neighbors(g, bigint(v + P));
      REQUIRE(shifted.size() == nb.size());
      for (std::size_t i = 0; i < nb.size(); ++i)
        CHECK(shifted[i] == nb[i] + P);
    }
  }
}

TEST_CASE("adding a layer never removes neighbors") {
  for (int K = 0; K < 6; ++K) {
    const auto small = opg::dyadic_spec<bigint>(K);
    const auto large = opg::dyadic_spec<bigint>(K + 1);
    for (std::int64_t v = -30; v <= 30; ++v) {
      const auto a = opg::neighbors(small, bigint(v));
      const auto b = opg::neighbors(large, bigint(v));
      CHECK(std::includes(b.begin(), b.end(), a.begin(), a.end()));
    }
  }
}

TEST_CASE("narrowing to machine width") {
  const auto g = opg::dyadic_spec<bigint>(5);
  REQUIRE(opg::fits_int64(g, bigint(1) << 40));
  const auto n = opg::narrow_spec(g);
  REQUIRE(n.has_value());
  for (std::int64_t v = -40; v <= 40; ++v) {
    const auto a = opg::neighbors(g, bigint(v));
    const auto b = opg::neighbors(*n, v);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == bigint(b[i]));
  }
  CHECK_FALSE(opg::fits_int64(g, bigint(1) << 62));
}
