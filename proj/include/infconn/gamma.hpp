#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "infconn/error.hpp"
#include "infconn/graph.hpp"
#include "infconn/lp_oracle.hpp"
#include "infconn/rational.hpp"

namespace infconn {

/// Exact feasibility residuals of a candidate l-infinity Fiedler vector.
/// All three are zero for a valid witness.
struct WitnessResiduals {
  Rational sum;                  // |sum x|
  Rational sup_norm_deviation;   // |max |x_v| - 1|
  Rational edge_gap;             // |max_{uv in E} |x_u - x_v| - gamma|

  bool all_zero() const { return sum.is_zero() && sup_norm_deviation.is_zero() && edge_gap.is_zero(); }
};

struct GammaCertificate {
  Rational gamma;
  bool connected = false;
  std::optional<Vertex> attaining_vertex;
  std::vector<Rational> witness;
  bool witness_valid = false;
  WitnessResiduals residuals;
  /// Populated only when the exact witness fails its check: the LP optimum
  /// for the attaining vertex, in floating point.
  std::vector<double> fallback_witness;

  double approx() const { return gamma.to_double(); }
};

inline Rational max_edge_difference(const Graph& g, std::span<const Rational> x) {
  Rational best;
  for (const auto& [u, v] : g.edges()) best = std::max(best, abs(x[u] - x[v]));
  return best;
}

inline WitnessResiduals witness_residuals(const Graph& g, std::span<const Rational> x, const Rational& gamma) {
  Rational sum, sup;
  for (const Rational& xv : x) {
    sum += xv;
    sup = std::max(sup, abs(xv));
  }
  return {abs(sum), abs(sup - Rational(1)), abs(max_edge_difference(g, x) - gamma)};
}

/// gamma(G) = n / max transmission for connected G, 0 otherwise, with an
/// explicit witness checked in exact arithmetic.
///
/// Connected: u is the smallest-id vertex of maximum transmission and the
/// witness is x_v = 1 - d(u, v) * gamma. Disconnected: x = 1 on a smallest
/// component C and -|C| / (n - |C|) elsewhere.
inline GammaCertificate gamma(const Graph& g) {
  const std::size_t n = g.n();
  if (n < 2) throw Error(ErrorCode::TooSmall, "gamma is undefined for n < 2 (no vector with sum 0 and sup-norm 1)");
  GammaCertificate cert;
  cert.connected = is_connected(g);

  if (!cert.connected) {
    const auto comps = components(g);
    const auto smallest = std::min_element(comps.begin(), comps.end(),
                                           [](const auto& a, const auto& b) { return a.size() < b.size(); });
    const auto c1 = static_cast<Rational::int_type>(smallest->size());
    const Rational other(-c1, static_cast<Rational::int_type>(n) - c1);
    cert.witness.assign(n, other);
    for (Vertex v : *smallest) cert.witness[v] = Rational(1);
    cert.gamma = Rational(0);
  } else {
    const auto table = transmission_table(g);
    const Vertex u = table.argmax.front();
    cert.attaining_vertex = u;
    cert.gamma = Rational(static_cast<Rational::int_type>(n), static_cast<Rational::int_type>(table.d_max));
    const auto profile = bfs_distances(g, u);
    cert.witness.resize(n);
    for (Vertex v = 0; v < n; ++v)
      cert.witness[v] = Rational(1) - Rational(static_cast<Rational::int_type>(profile.dist[v])) * cert.gamma;
  }

  cert.residuals = witness_residuals(g, cert.witness, cert.gamma);
  cert.witness_valid = cert.residuals.all_zero();
  if (!cert.witness_valid && cert.connected) {
    const auto sol = solve_lp_k(g, *cert.attaining_vertex);
    cert.fallback_witness.assign(sol.assignment.begin(), sol.assignment.begin() + static_cast<std::ptrdiff_t>(n));
  }
  return cert;
}

inline constexpr double kFeasibilityTol = 1e-9;

/// gamma_x(G) = max over edges of |x_u - x_v| for a feasible x
/// (|sum x| <= 1e-9 and |max |x_v| - 1| <= 1e-9).
inline double gamma_objective(const Graph& g, std::span<const double> x) {
  if (x.size() != g.n())
    throw Error(ErrorCode::InfeasibleVector, "vector length " + std::to_string(x.size()) + " != n");
  double sum = 0.0, sup = 0.0;
  for (double xv : x) {
    sum += xv;
    sup = std::max(sup, std::abs(xv));
  }
  if (std::abs(sum) > kFeasibilityTol) throw Error(ErrorCode::InfeasibleVector, "sum of entries is not zero");
  if (std::abs(sup - 1.0) > kFeasibilityTol) throw Error(ErrorCode::InfeasibleVector, "sup-norm is not one");
  double best = 0.0;
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v : g.neighbors(u)) best = std::max(best, std::abs(x[u] - x[v]));
  return best;
}

/// Exact variant; feasibility must hold exactly.
inline Rational gamma_objective(const Graph& g, std::span<const Rational> x) {
  if (x.size() != g.n())
    throw Error(ErrorCode::InfeasibleVector, "vector length " + std::to_string(x.size()) + " != n");
  Rational sum, sup;
  for (const Rational& xv : x) {
    sum += xv;
    sup = std::max(sup, abs(xv));
  }
  if (!sum.is_zero()) throw Error(ErrorCode::InfeasibleVector, "sum of entries is " + sum.str());
  if (sup != Rational(1)) throw Error(ErrorCode::InfeasibleVector, "sup-norm is " + sup.str());
  return max_edge_difference(g, x);
}

inline std::uint64_t wiener_index(const Graph& g) { return transmission_table(g).wiener; }

inline bool is_transmission_regular(const Graph& g) {
  const auto t = transmission_table(g);
  return t.argmax.size() == g.n();
}

}  // namespace infconn
