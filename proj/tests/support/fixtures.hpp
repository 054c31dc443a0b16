#pragma once

// Graph literals and brute-force oracles shared by the test suites. The
// oracles deliberately avoid the library's BFS/enumeration code paths.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "infconn/families.hpp"
#include "infconn/graph.hpp"
#include "infconn/rational.hpp"

namespace infconn::testing {

inline Graph make(std::size_t n, std::vector<std::pair<long long, long long>> e) { return Graph::from_edge_list(n, e); }

inline Graph P(std::size_t n) { return generate(family::Path{n}); }
inline Graph C(std::size_t n) { return generate(family::Cycle{n}); }
inline Graph K(std::size_t n) { return generate(family::Complete{n}); }
inline Graph S(std::size_t n) { return generate(family::Star{n}); }
inline Graph Kmn(std::size_t m, std::size_t n) { return generate(family::CompleteBipartite{m, n}); }
inline Graph Q(std::size_t t) { return generate(family::Hypercube{t}); }
inline Graph petersen() { return generate(family::Petersen{}); }
inline Graph two_k2() { return make(4, {{0, 1}, {2, 3}}); }

/// All-pairs distances by Floyd-Warshall on the adjacency matrix.
inline std::vector<std::vector<std::uint64_t>> floyd_warshall(const Graph& g) {
  constexpr std::uint64_t inf = std::numeric_limits<std::uint32_t>::max();
  const std::size_t n = g.n();
  std::vector<std::vector<std::uint64_t>> d(n, std::vector<std::uint64_t>(n, inf));
  for (std::size_t u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (g.has_edge(u, v)) d[u][v] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

inline std::vector<std::uint64_t> brute_transmissions(const Graph& g) {
  const auto d = floyd_warshall(g);
  std::vector<std::uint64_t> tr;
  for (const auto& row : d) {
    std::uint64_t s = 0;
    for (auto x : row) s += x;
    tr.push_back(s);
  }
  return tr;
}

/// gamma = n / max transmission, from Floyd-Warshall.
inline Rational brute_gamma(const Graph& g) {
  const auto tr = brute_transmissions(g);
  return Rational(static_cast<long long>(g.n()), static_cast<long long>(*std::max_element(tr.begin(), tr.end())));
}

/// Cheeger constant over all proper non-empty subsets, recomputing cut and
/// volume from scratch for every subset (no pinning, no Gray code).
inline Rational brute_cheeger(const Graph& g) {
  const std::size_t n = g.n();
  const auto edges = g.edges();
  std::uint64_t total = 2 * g.m();
  Rational best(std::numeric_limits<long long>::max());
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
    std::uint64_t cut = 0, vol = 0;
    for (const auto& [u, v] : edges)
      if (((mask >> u) & 1U) != ((mask >> v) & 1U)) ++cut;
    for (std::size_t u = 0; u < n; ++u)
      if ((mask >> u) & 1U) vol += g.degree(u);
    const Rational h(static_cast<long long>(cut), static_cast<long long>(std::min(vol, total - vol)));
    best = std::min(best, h);
  }
  return best;
}

}  // namespace infconn::testing
