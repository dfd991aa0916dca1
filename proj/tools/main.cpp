// Command-line front end: build layered graphs on the integers, query exact
// distances and ball volumes, export edges, measure boundary ratios, and run
// the named verification suites.
//
// Exit codes: 0 success/pass, 1 verified-fail, 2 usage error, 3 budget
// exceeded.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "opg/bfs.hpp"
#include "opg/bigint.hpp"
#include "opg/dyadic.hpp"
#include "opg/fit.hpp"
#include "opg/folner.hpp"
#include "opg/graph.hpp"
#include "opg/io.hpp"
#include "opg/prime_family.hpp"
#include "opg/verify.hpp"

namespace {

using opg::bigint;

bool log_enabled() {
  const char* v = std::getenv("OPG_LOG");
  return v != nullptr && *v != '\0' && std::string(v) != "0";
}

void log_note(const std::string& msg) {
  if (log_enabled()) std::cerr << "[opg] " << msg << "\n";
}

struct family_options {
  std::string family = "dyadic";
  int truncation = -1;
  std::string spec_file;
};

void add_family_flags(CLI::App* cmd, family_options& o) {
  cmd->add_option("--family", o.family,
                  "graph family: dyadic | poly | prime | custom")
      ->check(CLI::IsMember({"dyadic", "poly", "prime", "custom"}));
  cmd->add_option("--K,--M", o.truncation, "truncation level (last layer)");
  cmd->add_option("--spec-file", o.spec_file,
                  "JSON graph spec (implies --family custom)");
}

opg::graph_spec<bigint> build_spec(const family_options& o) {
  if (!o.spec_file.empty() || o.family == "custom") {
    if (o.spec_file.empty())
      throw std::invalid_argument("custom family requires --spec-file");
    std::ifstream in(o.spec_file);
    if (!in) throw std::invalid_argument("cannot open " + o.spec_file);
    nlohmann::json j;
    in >> j;
    return opg::spec_from_json(j);
  }
  if (o.truncation < 0)
    throw std::invalid_argument("--K/--M is required for --family " + o.family);
  if (o.family == "dyadic") return opg::dyadic_spec<bigint>(o.truncation);
  if (o.family == "poly") return opg::poly_spec<bigint>(o.truncation);
  return opg::prime_spec(o.truncation);
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + out_path);
  out << text;
}

int run_dist(const family_options& fam, const std::string& from_str,
             const std::string& to_str, std::size_t cap,
             const std::string& out_path) {
  const bigint from = opg::parse_decimal(from_str);
  const bigint to = opg::parse_decimal(to_str);
  const auto spec = build_spec(fam);
  const bigint maxabs = std::max(abs(from), abs(to));
  const bigint steps = std::min(bigint(cap), bigint(abs(from - to)));
  const std::int64_t d = opg::detail::on_engine(
      spec, opg::detail::wander_bound(spec, maxabs, steps),
      [&](const auto& s) {
        using I = typename std::decay_t<decltype(s)>::value_type;
        return opg::bfs_distance(s, opg::detail::vertex_cast<I>(from),
                                 opg::detail::vertex_cast<I>(to), cap);
      });
  emit(out_path, nlohmann::json{{"distance", d}}.dump() + "\n");
  return 0;
}

int run_ball(const family_options& fam, const std::string& center_str,
             int radius, std::size_t cap, const std::string& format,
             const std::string& out_path) {
  const bigint center = opg::parse_decimal(center_str);
  const auto spec = build_spec(fam);
  const opg::growth_curve curve = opg::detail::on_engine(
      spec, opg::detail::wander_bound(spec, abs(center), bigint(radius)),
      [&](const auto& s) {
        using I = typename std::decay_t<decltype(s)>::value_type;
        return opg::ball(s, opg::detail::vertex_cast<I>(center), radius, cap);
      });
  if (format == "json") {
    nlohmann::json j{{"spec", curve.spec_name},
                     {"truncation", curve.truncation},
                     {"center", opg::to_decimal(curve.center)},
                     {"volumes", curve.volumes}};
    emit(out_path, j.dump() + "\n");
  } else {
    emit(out_path, opg::curve_to_csv(curve));
  }
  return 0;
}

int run_export(const family_options& fam, const std::string& lo_str,
               const std::string& hi_str, std::size_t cap,
               const std::string& format, const std::string& out_path) {
  const bigint lo = opg::parse_decimal(lo_str);
  const bigint hi = opg::parse_decimal(hi_str);
  const auto spec = build_spec(fam);
  if (lo > hi) throw std::invalid_argument("export: lo must be <= hi");
  // materialization budget, counted before allocating anything
  bigint estimate = 0;
  for (const auto& layer : spec.layers()) {
    for (const auto& t : layer.templates()) {
      const bigint kmin = opg::ceil_div(bigint(lo - t.offset), layer.period());
      const bigint kmax =
          opg::floor_div(bigint(hi - t.offset - t.length), layer.period());
      if (kmax >= kmin) estimate += kmax - kmin + 1;
    }
  }
  if (estimate > cap)
    throw opg::budget_exceeded(
        cap, "window holds " + opg::to_decimal(estimate) +
                 " edges, over the materialization budget of " +
                 std::to_string(cap));
  const std::string text = opg::detail::on_engine(
      spec, bigint(std::max(abs(lo), abs(hi))), [&](const auto& s) {
        using I = typename std::decay_t<decltype(s)>::value_type;
        const auto edges =
            opg::edges_in_window(s, opg::detail::vertex_cast<I>(lo),
                                 opg::detail::vertex_cast<I>(hi));
        return format == "dot" ? opg::edges_to_dot(edges, s.name())
                               : opg::edges_to_csv(edges);
      });
  emit(out_path, text);
  return 0;
}

int run_tree(int depth, const std::string& out_path) {
  if (depth < 0) throw std::invalid_argument("tree: depth must be >= 0");
  opg::prime_tables tables(std::max(depth, 1));
  nlohmann::json edges = nlohmann::json::array();
  for (int m = 1; m <= depth; ++m)
    for (int j = 1; j <= (1 << (m - 1)); ++j) {
      const std::string parent = opg::to_decimal(tables.vertex(m, j));
      edges.push_back({parent, opg::to_decimal(tables.vertex(m + 1, 2 * j - 1))});
      edges.push_back({parent, opg::to_decimal(tables.vertex(m + 1, 2 * j))});
    }
  nlohmann::json j{{"root", "2"}, {"edges", std::move(edges)}};
  emit(out_path, j.dump() + "\n");
  return 0;
}

int run_folner(const family_options& fam, const std::vector<std::int64_t>& ns,
               const std::string& out_path) {
  const auto spec = build_spec(fam);
  std::vector<opg::folner_row> rows;
  for (std::int64_t n : ns) {
    rows.push_back(opg::detail::on_engine(
        spec, opg::detail::wander_bound(spec, bigint(n), bigint(1)),
        [&](const auto& s) { return opg::folner_ratio(s, n); }));
  }
  emit(out_path, opg::folner_to_csv(rows));
  return 0;
}

struct verify_options {
  std::string lemma;
  std::optional<int> imax, jmax, nmax, K, M, i_level, bound_imin, bound_imax;
  std::optional<std::int64_t> lo, hi, n;
  std::size_t cap = opg::default_visit_cap;
  std::string out_path;
};

int run_verify(const verify_options& o) {
  opg::verdict v;
  const auto cap = o.cap;
  if (o.lemma == "lemma1") {
    v = opg::merge_verdicts(
        "lemma1", {opg::verify_oracle_agreement(o.imax.value_or(20), cap),
                   opg::verify_shift_law(8, o.jmax.value_or(8), cap)});
  } else if (o.lemma == "lemma2") {
    v = opg::verify_lemma2(o.imax.value_or(300), o.nmax.value_or(22));
  } else if (o.lemma == "right") {
    v = opg::verify_right(o.imax.value_or(12), cap);
  } else if (o.lemma == "growth") {
    v = opg::merge_verdicts(
        "growth",
        {opg::verify_growth_sandwich(o.jmax.value_or(161), o.K.value_or(24), cap),
         opg::verify_reach_law(3, o.imax.value_or(12), cap)});
  } else if (o.lemma == "reader") {
    v = opg::verify_reader(o.imax.value_or(4), o.bound_imin.value_or(4),
                           o.bound_imax.value_or(6), cap);
  } else if (o.lemma == "polyball") {
    v = opg::verify_polyball(o.i_level.value_or(4), o.K.value_or(5), cap);
  } else if (o.lemma == "tree") {
    v = opg::verify_tree(o.M.value_or(6), cap);
  } else if (o.lemma == "disjoint") {
    v = opg::verify_disjoint(o.M.value_or(3), bigint(o.lo.value_or(1)),
                             bigint(o.hi.value_or(10'000'000)));
  } else if (o.lemma == "degree") {
    v = opg::verify_degree(o.M.value_or(4), o.lo.value_or(1),
                           o.hi.value_or(1'000'000));
  } else if (o.lemma == "folner") {
    v = opg::verify_folner(o.K.value_or(16), 4, o.jmax.value_or(16),
                           o.M.value_or(3), o.n.value_or(1'000'000));
  } else if (o.lemma == "fits") {
    v = opg::verify_fits(o.K.value_or(24), o.jmax.value_or(161), 5, 161, 7,
                         10, cap);
  } else {
    throw std::invalid_argument("unknown lemma '" + o.lemma + "'");
  }
  log_note("verify " + v.lemma + ": " + (v.pass ? "pass" : "FAIL") + " in " +
           std::to_string(v.elapsed_ms) + " ms");
  emit(o.out_path, opg::to_json(v).dump(2) + "\n");
  return v.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"layered periodic graphs on the integers: exact distances, "
               "growth curves, boundary ratios, verification suites"};
  app.require_subcommand(1);

  family_options fam;
  std::size_t cap = opg::default_visit_cap;
  std::string out_path, format, from_str, to_str;
  std::string center_str = "0", lo_str, hi_str;
  int radius = 0, depth = 3;
  std::vector<std::int64_t> folner_ns;

  auto* dist = app.add_subcommand("dist", "exact distance between two vertices");
  add_family_flags(dist, fam);
  dist->add_option("--from", from_str, "source vertex")->required();
  dist->add_option("--to", to_str, "target vertex")->required();
  dist->add_option("--cap", cap, "visited-vertex budget");
  dist->add_option("--out", out_path, "output path (default stdout)");

  auto* ball_cmd = app.add_subcommand("ball", "ball volumes around a center");
  add_family_flags(ball_cmd, fam);
  ball_cmd->add_option("--center", center_str, "center vertex");
  ball_cmd->add_option("--radius", radius, "sweep radius")->required();
  ball_cmd->add_option("--cap", cap, "visited-vertex budget");
  ball_cmd->add_option("--format", format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  ball_cmd->add_option("--out", out_path, "output path (default stdout)");

  auto* export_cmd = app.add_subcommand("export", "edge list of a window");
  add_family_flags(export_cmd, fam);
  export_cmd->add_option("--lo", lo_str, "window lower end")->required();
  export_cmd->add_option("--hi", hi_str, "window upper end")->required();
  export_cmd->add_option("--cap", cap, "edge materialization budget");
  export_cmd->add_option("--format", format, "csv | dot")
      ->check(CLI::IsMember({"csv", "dot"}));
  export_cmd->add_option("--out", out_path, "output path (default stdout)");

  auto* tree_cmd =
      app.add_subcommand("tree", "embedded binary tree of the prime family");
  tree_cmd->add_option("--depth", depth, "tree depth")->required();
  tree_cmd->add_option("--out", out_path, "output path (default stdout)");

  auto* folner_cmd =
      app.add_subcommand("folner", "interval boundary ratios, exact fractions");
  add_family_flags(folner_cmd, fam);
  folner_cmd->add_option("--n", folner_ns, "interval half-widths")->required();
  folner_cmd->add_option("--out", out_path, "output path (default stdout)");

  verify_options vo;
  auto* verify_cmd = app.add_subcommand(
      "verify",
      "named checks: lemma1 lemma2 right growth reader polyball tree "
      "disjoint degree folner fits");
  verify_cmd->add_option("lemma", vo.lemma, "check name")->required();
  verify_cmd->add_option("--imax", vo.imax, "largest level index");
  verify_cmd->add_option("--jmax", vo.jmax, "largest radius / shift");
  verify_cmd->add_option("--nmax", vo.nmax, "largest breakpoint index");
  verify_cmd->add_option("--K", vo.K, "dyadic truncation");
  verify_cmd->add_option("--M", vo.M, "prime truncation / tree depth");
  verify_cmd->add_option("--i", vo.i_level, "sparse-family level");
  verify_cmd->add_option("--bound-imin", vo.bound_imin, "first bounded level");
  verify_cmd->add_option("--bound-imax", vo.bound_imax, "last bounded level");
  verify_cmd->add_option("--lo", vo.lo, "window lower end");
  verify_cmd->add_option("--hi", vo.hi, "window upper end");
  verify_cmd->add_option("--n", vo.n, "interval half-width");
  verify_cmd->add_option("--cap", vo.cap, "visited-vertex budget");
  verify_cmd->add_option("--out", vo.out_path, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (dist->parsed()) return run_dist(fam, from_str, to_str, cap, out_path);
    if (ball_cmd->parsed())
      return run_ball(fam, center_str, radius, cap,
                      format.empty() ? "csv" : format, out_path);
    if (export_cmd->parsed())
      return run_export(fam, lo_str, hi_str, cap,
                        format.empty() ? "csv" : format, out_path);
    if (tree_cmd->parsed()) return run_tree(depth, out_path);
    if (folner_cmd->parsed()) return run_folner(fam, folner_ns, out_path);
    if (verify_cmd->parsed()) return run_verify(vo);
  } catch (const opg::budget_exceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
