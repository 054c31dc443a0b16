#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "infconn/error.hpp"
#include "infconn/graph.hpp"

// Seeded random graph corpora used by the property tests, the acceptance
// suite and `verify --random`.

namespace infconn::random {

using Rng = std::mt19937_64;
using EdgePairs = std::vector<std::pair<long long, long long>>;

inline Graph gnp(std::size_t n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  EdgePairs e;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  return Graph::from_edge_list(n, e);
}

/// G(n, p) conditioned on connectivity (rejection sampling).
inline Graph connected_gnp(std::size_t n, double p, Rng& rng) {
  for (;;) {
    Graph g = gnp(n, p, rng);
    if (is_connected(g)) return g;
  }
}

/// G(n, p) conditioned on disconnection; needs n >= 2 and p < 1.
inline Graph disconnected_gnp(std::size_t n, double p, Rng& rng) {
  if (n < 2 || p >= 1.0) throw Error(ErrorCode::InvalidSpec, "cannot sample a disconnected graph");
  for (;;) {
    Graph g = gnp(n, p, rng);
    if (!is_connected(g)) return g;
  }
}

/// Uniform labelled tree via a random Pruefer sequence.
inline Graph tree(std::size_t n, Rng& rng) {
  if (n == 1) return Graph::from_edge_list(1, EdgePairs{});
  if (n == 2) return Graph::from_edge_list(2, EdgePairs{{0, 1}});
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<std::size_t> code(n - 2);
  for (auto& c : code) c = pick(rng);
  std::vector<std::size_t> degree(n, 1);
  for (auto c : code) ++degree[c];
  std::set<std::size_t> leaves;
  for (std::size_t v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.insert(v);
  EdgePairs e;
  for (auto c : code) {
    const std::size_t leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    e.emplace_back(leaf, c);
    if (--degree[c] == 1) leaves.insert(c);
  }
  const std::size_t a = *leaves.begin();
  const std::size_t b = *std::next(leaves.begin());
  e.emplace_back(a, b);
  return Graph::from_edge_list(n, e);
}

/// Connected graph with exactly m edges: a random tree plus uniformly drawn
/// extra edges.
inline Graph connected_with_edges(std::size_t n, std::size_t m, Rng& rng) {
  if (m + 1 < n || m > n * (n - 1) / 2) throw Error(ErrorCode::InvalidSpec, "edge count out of range");
  const Graph t = tree(n, rng);
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& uv : t.edges()) edges.insert(uv);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  while (edges.size() < m) {
    std::size_t u = pick(rng), v = pick(rng);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    edges.emplace(u, v);
  }
  EdgePairs e(edges.begin(), edges.end());
  return Graph::from_edge_list(n, e);
}

/// Graph plus one missing edge, chosen uniformly; returns g itself if complete.
inline Graph add_random_edge(const Graph& g, Rng& rng) {
  std::vector<std::pair<std::size_t, std::size_t>> missing;
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v)
      if (!g.has_edge(u, v)) missing.emplace_back(u, v);
  if (missing.empty()) return g;
  std::uniform_int_distribution<std::size_t> pick(0, missing.size() - 1);
  EdgePairs e;
  for (const auto& [u, v] : g.edges()) e.emplace_back(u, v);
  const auto [u, v] = missing[pick(rng)];
  e.emplace_back(u, v);
  return Graph::from_edge_list(g.n(), e);
}

}  // namespace infconn::random
