#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "opg/bigint.hpp"
#include "opg/dyadic.hpp"
#include "opg/graph.hpp"

using opg::bigint;

TEST_CASE("dyadic layers realize the expected edge families") {
  // E_1 joins consecutive odd integers
  const auto g1 = opg::dyadic_spec<bigint>(1);
  const auto w1 = opg::edges_in_window(g1, bigint(-2), bigint(4));
  CHECK(std::count(w1.begin(), w1.end(), std::pair<bigint, bigint>{-1, 1}) == 1);
  CHECK(std::count(w1.begin(), w1.end(), std::pair<bigint, bigint>{1, 3}) == 1);

  // E_2 = {(4n-2, 4n+2)}
  const auto g2 = opg::dyadic_spec<bigint>(2);
  const auto w2 = opg::edges_in_window(g2, bigint(-2), bigint(6));
  CHECK(std::count(w2.begin(), w2.end(), std::pair<bigint, bigint>{-2, 2}) == 1);
  CHECK(std::count(w2.begin(), w2.end(), std::pair<bigint, bigint>{2, 6}) == 1);
}

TEST_CASE("sparse family keeps only power-of-two levels") {
  const auto g = opg::poly_spec<bigint>(2);
  std::vector<std::string> labels;
  for (const auto& l : g.layers()) labels.push_back(l.label());
  CHECK(labels == std::vector<std::string>{"E_0", "E_1", "E_2", "E_4"});

  const auto g0 = opg::poly_spec<bigint>(0);
  CHECK(g0.layers().size() == 2);
  CHECK(g0.layers().back().label() == "E_1");

  const auto nb = opg::neighbors(opg::poly_spec<bigint>(2), bigint(8));
  for (const bigint u : {bigint(7), bigint(9), bigint(-8), bigint(24)})
    CHECK(std::binary_search(nb.begin(), nb.end(), u));
}

TEST_CASE("breakpoint sequences") {
  CHECK(opg::breakpoint_index(1) == 3);
  CHECK(opg::breakpoint_index(2) == 6);
  CHECK(opg::breakpoint_index(3) == 10);
  CHECK(opg::breakpoint_distance(1) == 3);
  CHECK(opg::breakpoint_distance(2) == 9);
  CHECK(opg::breakpoint_distance(3) == 25);
  CHECK(opg::breakpoint_distance(5) == 161);
}

TEST_CASE("closed-form target distances") {
  CHECK(opg::target_distance_closed(1) == 1);
  CHECK(opg::target_distance_closed(2) == 2);
  CHECK(opg::target_distance_closed(3) == 3);
  CHECK(opg::target_distance_closed(4) == 5);
  CHECK(opg::target_distance_closed(5) == 7);
  CHECK(opg::target_distance_closed(6) == 9);
  CHECK(opg::target_distance_closed(20) == 145);
  CHECK(opg::target_distance_closed(22) == 193);
}

TEST_CASE("recursive route equals the closed form") {
  opg::target_distance_table table(60);
  CHECK(table.distance(3) == 3);
  CHECK(table.distance(5) == 7);
  for (int i = 1; i <= 60; ++i)
    REQUIRE(table.distance(i) == opg::target_distance_closed(i));
}

TEST_CASE("target distance structure") {
  opg::target_distance_table table(80);
  // strictly increasing; odd except at i = 2
  for (int i = 2; i <= 80; ++i) {
    REQUIRE(table.distance(i) > table.distance(i - 1));
    if (i != 2) CHECK(table.distance(i) % 2 == 1);
  }
  // nondecreasing difference sequence
  for (int i = 3; i <= 80; ++i)
    CHECK(table.distance(i) - table.distance(i - 1) >=
          table.distance(i - 1) - table.distance(i - 2));
  // value at each breakpoint index
  for (int n = 1; n <= 10; ++n) {
    const auto idx = opg::to_int64(opg::breakpoint_index(n));
    REQUIRE(idx.has_value());
    if (*idx <= 80)
      CHECK(table.distance(int(*idx)) == opg::breakpoint_distance(n));
  }
}

TEST_CASE("split objective is unimodal") {
  opg::target_distance_table table(60);
  for (int i = 4; i <= 60; ++i) {
    std::vector<bigint> f;
    for (int k = 1; k < i; ++k)
      f.push_back(2 * table.distance(k) + (bigint(1) << (i - k - 1)) - 1);
    const auto min_it = std::min_element(f.begin(), f.end());
    for (auto it = f.begin(); it != min_it; ++it) CHECK(*it >= *(it + 1));
    for (auto it = min_it; it + 1 != f.end(); ++it) CHECK(*it <= *(it + 1));
  }
}

TEST_CASE("shifted target distances") {
  CHECK(opg::shifted_target_distance(3, 0) == 3);
  CHECK(opg::shifted_target_distance(3, -1) == 3);
  CHECK(opg::shifted_target_distance(3, 1) == 4);
  CHECK(opg::shifted_target_distance(5, -3) == 9);
}

TEST_CASE("reach limits") {
  CHECK(opg::reach_limit(4) == 3);
  CHECK(opg::reach_limit(5) == 6);
  for (int i = 3; i <= 20; ++i)
    CHECK(opg::reach_limit(i) < bigint(1) << (i - 2));
  CHECK_THROWS_AS(opg::reach_limit(2), std::invalid_argument);
}

TEST_CASE("ball volume bounds") {
  const auto b9 = opg::ball_volume_bounds(bigint(9));
  CHECK(b9.level == 2);
  CHECK(b9.inner_radius == 2);
  CHECK(b9.lower == 5);
  CHECK(b9.upper == 6480);

  const auto b161 = opg::ball_volume_bounds(bigint(161));
  CHECK(b161.level == 5);
  CHECK(b161.inner_radius == 16);
  CHECK(b161.lower == 33);
  CHECK(b161.upper == 13686288);

  const auto b3 = opg::ball_volume_bounds(bigint(3));
  CHECK(b3.lower == 3);
  CHECK(b3.upper == 432);

  CHECK_THROWS_AS(opg::ball_volume_bounds(bigint(2)), std::invalid_argument);
}

TEST_CASE("sparse-family target distances") {
  CHECK(opg::poly_target_distance(0) == 1);
  CHECK(opg::poly_target_distance(1) == 2);
  CHECK(opg::poly_target_distance(2) == 5);
  CHECK(opg::poly_target_distance(3) == 17);
  CHECK(opg::poly_target_distance(4) == 161);
  CHECK(opg::poly_target(3) == 128);
  // the two-sided bound holds from level 4 on; measured values below it
  // exceed the upper end (5 > 4, 17 > 16), so nothing is asserted there
  for (int i = 4; i <= 8; ++i) {
    const bigint lo = bigint(1) << int((std::uint64_t(1) << (i - 1)) - 1);
    const bigint hi = bigint(1) << int(std::uint64_t(1) << (i - 1));
    CHECK(opg::poly_target_distance(i) >= lo);
    CHECK(opg::poly_target_distance(i) <= hi);
  }
}
