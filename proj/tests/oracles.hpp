#pragma once

// Reference constructions for tests, written directly from the family
// definitions (odd multiples, prime powers) rather than through the layer
// template machinery they are used to check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "opg/bigint.hpp"

namespace oracle {

using opg::bigint;

// Dyadic-family edges inside [lo, hi]: level 0 joins consecutive integers,
// level k joins consecutive odd multiples of 2^{k-1}.
inline std::vector<std::pair<std::int64_t, std::int64_t>> dyadic_edges(
    const std::vector<int>& levels, std::int64_t lo, std::int64_t hi) {
  std::set<std::pair<std::int64_t, std::int64_t>> out;
  for (int k : levels) {
    if (k == 0) {
      for (std::int64_t i = lo; i + 1 <= hi; ++i) out.emplace(i, i + 1);
      continue;
    }
    const std::int64_t half = std::int64_t(1) << (k - 1);
    const std::int64_t span = std::int64_t(1) << k;
    // first odd multiple of 2^{k-1} that is >= lo
    std::int64_t q = lo / half;
    while (q * half < lo || q % 2 == 0) ++q;
    for (std::int64_t a = q * half; a + span <= hi; a += span)
      out.emplace(a, a + span);
  }
  return {out.begin(), out.end()};
}

inline std::vector<int> iota_levels(int K) {
  std::vector<int> ls(std::size_t(K) + 1);
  for (int k = 0; k <= K; ++k) ls[std::size_t(k)] = k;
  return ls;
}

inline std::vector<std::int64_t> small_primes(int n) {
  std::vector<std::int64_t> ps;
  std::int64_t c = 2;
  while (int(ps.size()) < n) {
    bool ok = true;
    for (std::int64_t p : ps) {
      if (p * p > c) break;
      if (c % p == 0) { ok = false; break; }
    }
    if (ok) ps.push_back(c);
    ++c;
  }
  return ps;
}

inline bigint big_pow(std::int64_t base, int exp) {
  bigint r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Prime-family edges inside [lo, hi], enumerated straight from the defining
// endpoint lists: level m joins p_m^j to p_{m+1}^{2j-1} and p_{m+1}^{2j},
// shifted by multiples of the level-(m+1) modulus.
inline std::vector<std::pair<bigint, bigint>> prime_edges(int M,
                                                          const bigint& lo,
                                                          const bigint& hi) {
  std::set<std::pair<bigint, bigint>> out;
  for (bigint i = lo; i + 1 <= hi; ++i) out.emplace(i, i + 1);
  const auto ps = small_primes(1 << (M + 1));
  for (int m = 1; m <= M; ++m) {
    bigint modulus = 1;
    for (int i = 1; i <= (1 << (m + 1)); ++i)
      modulus *= big_pow(ps[std::size_t(i - 1)], i);
    for (int j = 1; j <= (1 << (m - 1)); ++j) {
      const bigint a = big_pow(ps[std::size_t(m - 1)], j);
      for (int c : {2 * j - 1, 2 * j}) {
        const bigint b = big_pow(ps[std::size_t(m)], c);
        // shifts with any chance of landing in the window
        for (bigint k = opg::floor_div(bigint(lo - b), modulus) - 1;
             k <= opg::ceil_div(bigint(hi - a), modulus) + 1; ++k) {
          const bigint u = a + k * modulus;
          const bigint v = b + k * modulus;
          if (u >= lo && v <= hi) out.emplace(u, v);
        }
      }
    }
  }
  return {out.begin(), out.end()};
}

// Plain queue BFS over an explicit finite edge list.
template <class V>
inline std::map<V, int> bfs_on_edges(
    const std::vector<std::pair<V, V>>& edges, const V& src) {
  std::map<V, std::vector<V>> adj;
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::map<V, int> dist;
  dist[src] = 0;
  std::queue<V> q;
  q.push(src);
  while (!q.empty()) {
    V v = q.front();
    q.pop();
    for (const V& u : adj[v]) {
      if (dist.emplace(u, dist[v] + 1).second) q.push(u);
    }
  }
  return dist;
}

}  // namespace oracle
