#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "infconn/error.hpp"

namespace infconn {

using Vertex = std::size_t;
using Hops = std::uint32_t;

/// Distinguished "no path" marker; never mixed into sums.
inline constexpr Hops kUnreachable = std::numeric_limits<Hops>::max();

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Immutable once built; share freely between threads.
class Graph {
 public:
  Graph() = default;

  /// Builds from an edge list. Self-loops, repeated pairs (in either
  /// orientation) and out-of-range ids are rejected, never repaired.
  static Graph from_edge_list(std::size_t n, std::span<const std::pair<long long, long long>> pairs) {
    if (n == 0) throw Error(ErrorCode::TooSmall, "graph needs at least one vertex");
    Graph g;
    g.adj_.resize(n);
    for (const auto& [a, b] : pairs) {
      if (a < 0 || b < 0 || static_cast<unsigned long long>(a) >= n ||
          static_cast<unsigned long long>(b) >= n) {
        throw Error(ErrorCode::VertexOutOfRange,
                    "edge (" + std::to_string(a) + "," + std::to_string(b) + ") with n=" + std::to_string(n));
      }
      if (a == b) throw Error(ErrorCode::SelfLoop, "vertex " + std::to_string(a));
      g.adj_[static_cast<Vertex>(a)].push_back(static_cast<Vertex>(b));
      g.adj_[static_cast<Vertex>(b)].push_back(static_cast<Vertex>(a));
    }
    for (Vertex u = 0; u < n; ++u) {
      auto& row = g.adj_[u];
      std::sort(row.begin(), row.end());
      if (auto it = std::adjacent_find(row.begin(), row.end()); it != row.end()) {
        throw Error(ErrorCode::DuplicateEdge, "edge {" + std::to_string(u) + "," + std::to_string(*it) + "}");
      }
    }
    g.m_ = pairs.size();
    return g;
  }

  static Graph from_edge_list(std::size_t n, const std::vector<std::pair<long long, long long>>& pairs) {
    return from_edge_list(n, std::span<const std::pair<long long, long long>>(pairs));
  }

  std::size_t n() const noexcept { return adj_.size(); }
  std::size_t m() const noexcept { return m_; }
  std::span<const Vertex> neighbors(Vertex u) const { return adj_[u]; }
  std::size_t degree(Vertex u) const { return adj_[u].size(); }

  bool has_edge(Vertex u, Vertex v) const {
    const auto& row = adj_[u];
    return std::binary_search(row.begin(), row.end(), v);
  }

  /// Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n(); ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  bool is_regular() const {
    return std::all_of(adj_.begin(), adj_.end(), [&](const auto& row) { return row.size() == adj_[0].size(); });
  }

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t m_ = 0;
};

inline void check_vertex(const Graph& g, Vertex u) {
  if (u >= g.n())
    throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(u) + " with n=" + std::to_string(g.n()));
}

struct DistanceProfile {
  Vertex source = 0;
  std::vector<Hops> dist;
  Hops eccentricity = 0;                      // max finite distance
  std::optional<std::uint64_t> transmission;  // only when every vertex is reachable
};

/// Breadth-first distances into a caller-owned buffer; returns the number of
/// vertices reached. Used by the batch routines to avoid reallocation.
inline std::size_t bfs_fill(const Graph& g, Vertex source, std::vector<Hops>& dist, std::vector<Vertex>& queue) {
  dist.assign(g.n(), kUnreachable);
  queue.resize(g.n());
  std::size_t head = 0, tail = 0;
  dist[source] = 0;
  queue[tail++] = source;
  while (head < tail) {
    const Vertex u = queue[head++];
    const Hops next = dist[u] + 1;
    for (Vertex v : g.neighbors(u)) {
      if (dist[v] == kUnreachable) {
        dist[v] = next;
        queue[tail++] = v;
      }
    }
  }
  return tail;
}

inline DistanceProfile bfs_distances(const Graph& g, Vertex source) {
  check_vertex(g, source);
  DistanceProfile p;
  p.source = source;
  std::vector<Vertex> queue;
  const std::size_t reached = bfs_fill(g, source, p.dist, queue);
  std::uint64_t total = 0;
  for (Hops d : p.dist) {
    if (d == kUnreachable) continue;
    p.eccentricity = std::max(p.eccentricity, d);
    total += d;
  }
  if (reached == g.n()) p.transmission = total;
  return p;
}

inline bool is_connected(const Graph& g) {
  if (g.n() <= 1) return true;
  std::vector<Hops> dist;
  std::vector<Vertex> queue;
  return bfs_fill(g, 0, dist, queue) == g.n();
}

/// Connected components, each sorted, ordered by smallest member.
inline std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(g.n(), false);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    auto& comp = out.emplace_back();
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (Vertex v : g.neighbors(u))
        if (!seen[v]) {
          seen[v] = true;
          stack.push_back(v);
        }
    }
    std::sort(comp.begin(), comp.end());
  }
  return out;
}

inline void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g)) throw Error(ErrorCode::DisconnectedGraph, std::string(what) + " requires a connected graph");
}

struct TransmissionTable {
  std::vector<std::uint64_t> tr;
  std::uint64_t d_max = 0;
  std::vector<Vertex> argmax;  // ascending
  std::uint64_t wiener = 0;

  bool operator==(const TransmissionTable&) const = default;
};

namespace detail {

inline TransmissionTable finish_table(std::vector<std::uint64_t> tr) {
  TransmissionTable t;
  std::uint64_t sum = 0;
  for (std::uint64_t x : tr) {
    t.d_max = std::max(t.d_max, x);
    sum += x;
  }
  for (Vertex u = 0; u < tr.size(); ++u)
    if (tr[u] == t.d_max) t.argmax.push_back(u);
  t.wiener = sum / 2;
  t.tr = std::move(tr);
  return t;
}

}  // namespace detail

/// All transmissions via one BFS per vertex. With `workers > 1` the sweeps
/// are split into contiguous source ranges; each worker writes only its own
/// slots, so the result is identical to the sequential run.
inline TransmissionTable transmission_table(const Graph& g, unsigned workers = 1) {
  require_connected(g, "transmission_table");
  const std::size_t n = g.n();
  std::vector<std::uint64_t> tr(n, 0);

  auto sweep = [&g, &tr](Vertex begin, Vertex end) {
    std::vector<Hops> dist;
    std::vector<Vertex> queue;
    for (Vertex s = begin; s < end; ++s) {
      bfs_fill(g, s, dist, queue);
      std::uint64_t total = 0;
      for (Hops d : dist) total += d;
      tr[s] = total;
    }
  };

  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n)));
  if (workers == 1) {
    sweep(0, n);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t begin = 0; begin < n; begin += chunk)
      pool.emplace_back(sweep, begin, std::min(n, begin + chunk));
  }
  return detail::finish_table(std::move(tr));
}

/// S_0(u), S_1(u), ..., S_ecc(u): vertices grouped by distance from u.
inline std::vector<std::vector<Vertex>> shells(const Graph& g, Vertex u) {
  check_vertex(g, u);
  const auto p = bfs_distances(g, u);
  if (!p.transmission) throw Error(ErrorCode::DisconnectedGraph, "shells requires a connected graph");
  std::vector<std::vector<Vertex>> out(p.eccentricity + 1);
  for (Vertex v = 0; v < g.n(); ++v) out[p.dist[v]].push_back(v);
  return out;
}

inline Hops diameter(const Graph& g) {
  require_connected(g, "diameter");
  Hops best = 0;
  std::vector<Hops> dist;
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < g.n(); ++s) {
    bfs_fill(g, s, dist, queue);
    best = std::max(best, *std::max_element(dist.begin(), dist.end()));
  }
  return best;
}

inline std::vector<Vertex> pendant_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex u = 0; u < g.n(); ++u)
    if (g.degree(u) == 1) out.push_back(u);
  return out;
}

inline bool is_tree(const Graph& g) { return g.m() + 1 == g.n() && is_connected(g); }

inline bool is_complete(const Graph& g) { return g.m() == g.n() * (g.n() - 1) / 2; }

inline bool is_path_graph(const Graph& g) {
  if (!is_tree(g)) return false;
  for (Vertex u = 0; u < g.n(); ++u)
    if (g.degree(u) > 2) return false;
  return true;
}

inline bool is_star(const Graph& g) {
  if (!is_tree(g)) return false;
  if (g.n() <= 2) return true;
  for (Vertex u = 0; u < g.n(); ++u)
    if (g.degree(u) == g.n() - 1) return true;
  return false;
}

/// Linear-time transmissions of a tree by rerooting: tr(0) from depths, then
/// tr(child) = tr(parent) + n - 2 * |subtree(child)|.
inline TransmissionTable tree_transmissions(const Graph& g) {
  if (!is_tree(g)) throw Error(ErrorCode::NotATree, "tree_transmissions requires a tree");
  const std::size_t n = g.n();
  constexpr Vertex kNone = std::numeric_limits<Vertex>::max();

  std::vector<Vertex> order;
  order.reserve(n);
  std::vector<Vertex> parent(n, kNone);
  std::vector<std::uint64_t> depth(n, 0);
  order.push_back(0);
  parent[0] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Vertex u = order[i];
    for (Vertex v : g.neighbors(u)) {
      if (parent[v] != kNone) continue;
      parent[v] = u;
      depth[v] = depth[u] + 1;
      order.push_back(v);
    }
  }

  std::vector<std::uint64_t> size(n, 1);
  for (std::size_t i = n; i-- > 1;) size[parent[order[i]]] += size[order[i]];

  std::vector<std::uint64_t> tr(n, 0);
  for (Vertex v = 0; v < n; ++v) tr[0] += depth[v];
  for (std::size_t i = 1; i < n; ++i) {
    const Vertex v = order[i];
    tr[v] = tr[parent[v]] + n - 2 * size[v];
  }
  return detail::finish_table(std::move(tr));
}

/// Dense n x n distance matrix, row-major. O(n^2) memory; only for callers
/// that need the full matrix.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}
  std::size_t size() const noexcept { return n_; }
  Hops operator()(Vertex u, Vertex v) const { return data_[u * n_ + v]; }
  std::span<const Hops> row(Vertex u) const { return {data_.data() + u * n_, n_}; }
  std::span<Hops> row(Vertex u) { return {data_.data() + u * n_, n_}; }

 private:
  std::size_t n_;
  std::vector<Hops> data_;
};

inline DistanceMatrix distance_matrix(const Graph& g) {
  require_connected(g, "distance_matrix");
  DistanceMatrix d(g.n());
  std::vector<Hops> dist;
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < g.n(); ++s) {
    bfs_fill(g, s, dist, queue);
    std::copy(dist.begin(), dist.end(), d.row(s).begin());
  }
  return d;
}

}  // namespace infconn
