#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "opg/bigint.hpp"
#include "opg/dyadic.hpp"
#include "opg/graph.hpp"
#include "opg/io.hpp"
#include "opg/prime_family.hpp"

using opg::bigint;

TEST_CASE("decimal parsing") {
  CHECK(opg::parse_decimal("0") == 0);
  CHECK(opg::parse_decimal("-5") == -5);
  CHECK(opg::parse_decimal("+7") == 7);
  const std::string big = "123456789012345678901234567890";
  CHECK(opg::to_decimal(opg::parse_decimal(big)) == big);
  CHECK_THROWS_AS(opg::parse_decimal(""), std::invalid_argument);
  CHECK_THROWS_AS(opg::parse_decimal("-"), std::invalid_argument);
  CHECK_THROWS_AS(opg::parse_decimal("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(opg::parse_decimal("12x"), std::invalid_argument);
}

TEST_CASE("spec JSON round trip") {
  for (const auto& g :
       {opg::dyadic_spec<bigint>(3), opg::poly_spec<bigint>(2),
        opg::prime_spec(2)}) {
    const auto j = opg::spec_to_json(g);
    const auto back = opg::spec_from_json(j);
    CHECK(back.name() == g.name());
    REQUIRE(back.layers().size() == g.layers().size());
    for (std::size_t k = 0; k < g.layers().size(); ++k) {
      CHECK(back.layers()[k].label() == g.layers()[k].label());
      CHECK(back.layers()[k].period() == g.layers()[k].period());
      REQUIRE(back.layers()[k].templates().size() ==
              g.layers()[k].templates().size());
    }
    for (std::int64_t v = -10; v <= 10; ++v)
      CHECK(opg::neighbors(back, bigint(v)) == opg::neighbors(g, bigint(v)));
  }
}

TEST_CASE("spec JSON rejects invalid input") {
  const auto parse = [](const char* text) {
    return opg::spec_from_json(nlohmann::json::parse(text));
  };
  // no unit layer first
  CHECK_THROWS(parse(R"({"name":"x","layers":[
    {"label":"E_1","period":"2","templates":[{"offset":"1","length":"2"}]}]})"));
  // offset outside the period
  CHECK_THROWS(parse(R"({"name":"x","layers":[
    {"label":"E_0","period":"1","templates":[{"offset":"0","length":"1"}]},
    {"label":"E_1","period":"2","templates":[{"offset":"2","length":"2"}]}]})"));
  // period as a JSON number instead of a decimal string
  CHECK_THROWS(parse(R"({"name":"x","layers":[
    {"label":"E_0","period":1,"templates":[{"offset":"0","length":"1"}]}]})"));
  CHECK_THROWS(parse(R"({"name":"x"})"));
}

TEST_CASE("CSV and DOT writers") {
  opg::growth_curve c;
  c.volumes = {1, 3};
  CHECK(opg::curve_to_csv(c) == "j,volume\n0,1\n1,3\n");

  opg::folner_row r;
  r.half_width = 5;
  r.interval_size = 11;
  r.boundary_count = 2;
  r.ratio_num = 2;
  r.ratio_den = 11;
  CHECK(opg::folner_to_csv({r}) ==
        "n,interval,boundary,ratio_num,ratio_den\n5,11,2,2,11\n");

  const std::vector<std::pair<bigint, bigint>> edges{{-1, 0}, {0, 1}};
  CHECK(opg::edges_to_csv(edges) == "u,v\n-1,0\n0,1\n");
  const auto dot = opg::edges_to_dot(edges, "g");
  CHECK(dot.find("\"-1\" -- \"0\";") != std::string::npos);
  CHECK(dot.rfind("graph \"g\" {", 0) == 0);
}
