#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "opg/bigint.hpp"
#include "opg/graph.hpp"

namespace opg {

// First n primes by trial division; n stays in the hundreds here (level M
// needs the first 2^{M+1} primes).
inline std::vector<std::int64_t> first_primes(int n) {
  if (n < 0) throw std::invalid_argument("first_primes: n must be >= 0");
  std::vector<std::int64_t> ps;
  ps.reserve(std::size_t(n));
  for (std::int64_t c = 2; int(ps.size()) < n; ++c) {
    bool prime = true;
    for (std::int64_t p : ps) {
      if (p * p > c) break;
      if (c % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) ps.push_back(c);
  }
  return ps;
}

// The i-th prime, 1-based: nth_prime(1) == 2.
inline std::int64_t nth_prime(int i) {
  if (i < 1) throw std::invalid_argument("nth_prime: i must be >= 1");
  return first_primes(i).back();
}

// Precomputed primes, level moduli and level vertex labels for the prime
// family truncated at layer M. Immutable after construction; queries are
// cheap enough for bulk scans.
class prime_tables {
 public:
  explicit prime_tables(int M) : max_layer_(M) {
    if (M < 1) throw std::invalid_argument("prime_tables: M must be >= 1");
    if (M > 16) throw std::invalid_argument("prime_tables: M too large");
    primes_ = first_primes(1 << (M + 1));
    moduli_.resize(std::size_t(M + 1) + 1);
    vertices_.resize(std::size_t(M + 1) + 1);
    for (int m = 1; m <= M + 1; ++m) {
      bigint prod = 1;
      for (int i = 1; i <= (1 << m); ++i)
        prod *= boost::multiprecision::pow(bigint(primes_[std::size_t(i - 1)]),
                                           unsigned(i));
      moduli_[std::size_t(m)] = std::move(prod);
      auto& vs = vertices_[std::size_t(m)];
      vs.reserve(std::size_t(1) << (m - 1));
      bigint pw = 1;
      for (int j = 1; j <= (1 << (m - 1)); ++j) {
        pw *= primes_[std::size_t(m - 1)];
        vs.push_back(pw);  // p_m^j, ascending
      }
    }
  }

  int max_layer() const noexcept { return max_layer_; }

  std::int64_t prime(int i) const {
    if (i < 1 || i > int(primes_.size()))
      throw std::out_of_range("prime_tables: prime index out of range");
    return primes_[std::size_t(i - 1)];
  }

  // Modulus of level m: product of the first 2^m primes with exponents 1..2^m.
  const bigint& modulus(int m) const {
    if (m < 1 || m > max_layer_ + 1)
      throw std::out_of_range("prime_tables: modulus level out of range");
    return moduli_[std::size_t(m)];
  }

  // Vertex label p_m^j carried by slot j of level m, 1 <= j <= 2^{m-1}.
  const bigint& vertex(int m, int j) const {
    if (m < 1 || m > max_layer_ + 1)
      throw std::out_of_range("prime_tables: vertex level out of range");
    const auto& vs = vertices_[std::size_t(m)];
    if (j < 1 || j > int(vs.size()))
      throw std::invalid_argument("prime_tables: vertex slot out of range");
    return vs[std::size_t(j - 1)];
  }

  // All labels of level m, ascending.
  const std::vector<bigint>& level_vertices(int m) const {
    if (m < 1 || m > max_layer_ + 1)
      throw std::out_of_range("prime_tables: level out of range");
    return vertices_[std::size_t(m)];
  }

  // Does z lie in the left-endpoint coset of layer m (labels of level m,
  // modulo the level-(m+1) modulus)?
  bool in_left_coset(const bigint& z, int m) const {
    const bigint r = mod_floor(z, modulus(m + 1));
    const auto& vs = level_vertices(m);
    return std::binary_search(vs.begin(), vs.end(), r);
  }

  // Does z lie in the right-endpoint coset of layer m (labels of level m+1,
  // modulo the level-(m+1) modulus)?
  bool in_right_coset(const bigint& z, int m) const {
    const bigint r = mod_floor(z, modulus(m + 1));
    const auto& vs = level_vertices(m + 1);
    return std::binary_search(vs.begin(), vs.end(), r);
  }

 private:
  int max_layer_;
  std::vector<std::int64_t> primes_;
  std::vector<bigint> moduli_;
  std::vector<std::vector<bigint>> vertices_;
};

inline bigint level_modulus(int m) {
  if (m < 1) throw std::invalid_argument("level_modulus: m must be >= 1");
  return prime_tables(m).modulus(m);
}

inline bigint level_vertex(int m, int j) {
  if (m < 1) throw std::invalid_argument("level_vertex: m must be >= 1");
  return prime_tables(m).vertex(m, j);
}

// Layer m of the prime family: period modulus(m+1); each level-m label is
// the left endpoint of two edges, to its pair of level-(m+1) labels.
inline layer_spec<bigint> prime_layer(int m, const prime_tables& tables) {
  if (m < 1 || m > tables.max_layer())
    throw std::invalid_argument("prime_layer: m out of tables range");
  std::vector<edge_template<bigint>> ts;
  ts.reserve(std::size_t(2) << (m - 1));
  for (int j = 1; j <= (1 << (m - 1)); ++j) {
    const bigint& from = tables.vertex(m, j);
    ts.push_back({from, bigint(tables.vertex(m + 1, 2 * j - 1) - from)});
    ts.push_back({from, bigint(tables.vertex(m + 1, 2 * j) - from)});
  }
  return layer_spec<bigint>(tables.modulus(m + 1), std::move(ts),
                            "E_" + std::to_string(m));
}

inline layer_spec<bigint> prime_layer(int m) {
  if (m < 1) throw std::invalid_argument("prime_layer: m must be >= 1");
  return prime_layer(m, prime_tables(m));
}

// Truncation with the nearest-neighbor layer plus prime layers 1..M.
inline graph_spec<bigint> prime_spec(int M, const prime_tables& tables) {
  if (M < 1) throw std::invalid_argument("prime_spec: M must be >= 1");
  if (M > tables.max_layer())
    throw std::invalid_argument("prime_spec: M out of tables range");
  std::vector<layer_spec<bigint>> layers;
  layers.reserve(std::size_t(M) + 1);
  layers.push_back(make_unit_layer<bigint>());
  for (int m = 1; m <= M; ++m) layers.push_back(prime_layer(m, tables));
  return graph_spec<bigint>(std::move(layers),
                            "prime(M=" + std::to_string(M) + ")");
}

inline graph_spec<bigint> prime_spec(int M) {
  if (M < 1) throw std::invalid_argument("prime_spec: M must be >= 1");
  return prime_spec(M, prime_tables(M));
}

inline bool in_left_coset(const bigint& z, int m) {
  return prime_tables(m).in_left_coset(z, m);
}

inline bool in_right_coset(const bigint& z, int m) {
  return prime_tables(m).in_right_coset(z, m);
}

// The 2^m vertex labels at depth m of the embedded binary tree rooted at 2;
// level 0 is {2}.
inline std::vector<bigint> tree_level(int m) {
  if (m < 0) throw std::invalid_argument("tree_level: m must be >= 0");
  prime_tables tables(m + 1);
  return tables.level_vertices(m + 1);
}

// Split of the edge incidences at z: two nearest-neighbor edges, two per
// layer whose left coset contains z, one per layer whose right coset does.
struct degree_split {
  int base = 2;
  int left_hits = 0;
  int right_hits = 0;
  int total() const noexcept { return base + 2 * left_hits + right_hits; }
};

inline degree_split degree_decomposition(const bigint& z,
                                         const prime_tables& tables) {
  degree_split d;
  for (int m = 1; m <= tables.max_layer(); ++m) {
    if (tables.in_left_coset(z, m)) ++d.left_hits;
    if (tables.in_right_coset(z, m)) ++d.right_hits;
  }
  return d;
}

inline degree_split degree_decomposition(const bigint& z, int M) {
  return degree_decomposition(z, prime_tables(M));
}

// Result of enumerating the left/right cosets of layers 1..M inside a window
// and checking that distinct layers never share an element.
struct coset_disjointness_report {
  bool pass = true;
  std::uint64_t checked = 0;      // coset elements enumerated
  std::string side;               // "left" or "right" on failure
  bigint witness;                 // offending value
  int layer_a = 0, layer_b = 0;   // the two layers sharing it
};

// Elements of one coset family inside [lo, hi], by arithmetic-progression
// stepping (the moduli dwarf any reasonable window).
inline std::vector<bigint> coset_elements_in_window(
    const std::vector<bigint>& representatives, const bigint& modulus,
    const bigint& lo, const bigint& hi) {
  std::vector<bigint> out;
  for (const bigint& rep : representatives) {
    bigint k = ceil_div(bigint(lo - rep), modulus);
    const bigint kmax = floor_div(bigint(hi - rep), modulus);
    for (; k <= kmax; ++k) out.push_back(rep + k * modulus);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline coset_disjointness_report check_coset_disjointness(int M,
                                                          const bigint& lo,
                                                          const bigint& hi) {
  if (M < 2) throw std::invalid_argument("check_coset_disjointness: M must be >= 2");
  if (lo > hi) throw std::invalid_argument("check_coset_disjointness: empty window");
  prime_tables tables(M);
  coset_disjointness_report rep;
  std::vector<std::vector<bigint>> left(std::size_t(M) + 1),
      right(std::size_t(M) + 1);
  for (int m = 1; m <= M; ++m) {
    left[std::size_t(m)] = coset_elements_in_window(
        tables.level_vertices(m), tables.modulus(m + 1), lo, hi);
    right[std::size_t(m)] = coset_elements_in_window(
        tables.level_vertices(m + 1), tables.modulus(m + 1), lo, hi);
    rep.checked += left[std::size_t(m)].size() + right[std::size_t(m)].size();
  }
  auto intersect = [&](const std::vector<std::vector<bigint>>& sets,
                       const char* side) {
    for (int a = 1; a <= M && rep.pass; ++a)
      for (int b = a + 1; b <= M && rep.pass; ++b) {
        std::vector<bigint> common;
        std::set_intersection(sets[std::size_t(a)].begin(),
                              sets[std::size_t(a)].end(),
                              sets[std::size_t(b)].begin(),
                              sets[std::size_t(b)].end(),
                              std::back_inserter(common));
        if (!common.empty()) {
          rep.pass = false;
          rep.side = side;
          rep.witness = common.front();
          rep.layer_a = a;
          rep.layer_b = b;
        }
      }
  };
  intersect(left, "left");
  intersect(right, "right");
  return rep;
}

}  // namespace opg
