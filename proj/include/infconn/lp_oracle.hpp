#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "infconn/error.hpp"
#include "infconn/graph.hpp"
#include "infconn/simplex.hpp"

namespace infconn {

/// LP(k): variables x_0..x_{n-1} then y (index n).
///   minimize y
///   s.t. x_u - x_v <= y and x_v - x_u <= y for every edge uv,
///        sum x = 0, -1 <= x_j <= 1, x_k = 1 (as equal bounds), 0 <= y <= 2.
inline LinearProgram build_lp_k(const Graph& g, Vertex k) {
  check_vertex(g, k);
  const std::size_t n = g.n();
  LinearProgram lp(n + 1);
  lp.objective[n] = 1.0;
  for (const auto& [u, v] : g.edges()) {
    auto& fwd = lp.add_constraint(Relation::LessEqual, 0.0);
    fwd.coeffs[u] = 1.0;
    fwd.coeffs[v] = -1.0;
    fwd.coeffs[n] = -1.0;
    auto& back = lp.add_constraint(Relation::LessEqual, 0.0);
    back.coeffs[u] = -1.0;
    back.coeffs[v] = 1.0;
    back.coeffs[n] = -1.0;
  }
  auto& sum = lp.add_constraint(Relation::Equal, 0.0);
  for (std::size_t j = 0; j < n; ++j) sum.coeffs[j] = 1.0;
  for (std::size_t j = 0; j < n; ++j) lp.bounds[j] = {-1.0, 1.0};
  lp.bounds[k] = {1.0, 1.0};
  lp.bounds[n] = {0.0, 2.0};
  return lp;
}

inline LPSolution solve_lp_k(const Graph& g, Vertex k, double tol = kDefaultPivotTol) {
  auto sol = simplex_solve(build_lp_k(g, k), tol);
  if (sol.status != LPStatus::Optimal)
    throw Error(ErrorCode::NoConvergence, "LP(" + std::to_string(k) + ") ended " + to_string(sol.status));
  return sol;
}

struct LpGammaProfile {
  double gamma = 0.0;
  std::vector<double> per_k;  // optimum of LP(k) for each k
  Vertex best_k = 0;          // smallest k attaining the minimum
};

/// Solves every LP(k) and takes the minimum.
inline LpGammaProfile lp_gamma_profile(const Graph& g, double tol = kDefaultPivotTol) {
  if (g.n() < 2) throw Error(ErrorCode::TooSmall, "LP oracle needs n >= 2");
  // The LP itself would return 0 here; rejected to match the formula's domain.
  require_connected(g, "gamma_via_lp");
  LpGammaProfile out;
  out.per_k.reserve(g.n());
  for (Vertex k = 0; k < g.n(); ++k) {
    out.per_k.push_back(solve_lp_k(g, k, tol).objective);
    if (out.per_k[k] < out.per_k[out.best_k]) out.best_k = k;
  }
  out.gamma = out.per_k[out.best_k];
  return out;
}

inline double gamma_via_lp(const Graph& g, double tol = kDefaultPivotTol) { return lp_gamma_profile(g, tol).gamma; }

inline constexpr std::size_t kBOracleMaxN = 12;

/// b(G) for tiny graphs. For each sign pattern s in {+1,-1}^n the l1 norm is
/// linear on the orthant {s_v x_v >= 0}, so
///   minimize sum_e t_e  s.t.  t_e >= +-(x_u - x_v), sum x = 0, sum s_v x_v = 1
/// is an LP; b(G) is the minimum over all 2^n orthants (closed, so they
/// overlap on their boundaries, which does not affect the minimum).
/// Variables: x_0..x_{n-1}, then t_e in edge order.
inline double b_small_oracle(const Graph& g, std::size_t max_n = kBOracleMaxN, double tol = kDefaultPivotTol) {
  const std::size_t n = g.n();
  if (n < 2) throw Error(ErrorCode::TooSmall, "b oracle needs n >= 2");
  if (n > max_n) throw Error(ErrorCode::TooLarge, "b oracle limited to n <= " + std::to_string(max_n));
  require_connected(g, "b_small_oracle");
  const auto edges = g.edges();
  const std::size_t nv = n + edges.size();

  LinearProgram lp(nv);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [u, v] = edges[e];
    lp.objective[n + e] = 1.0;
    auto& up = lp.add_constraint(Relation::GreaterEqual, 0.0);
    up.coeffs[n + e] = 1.0;
    up.coeffs[u] = -1.0;
    up.coeffs[v] = 1.0;
    auto& down = lp.add_constraint(Relation::GreaterEqual, 0.0);
    down.coeffs[n + e] = 1.0;
    down.coeffs[u] = 1.0;
    down.coeffs[v] = -1.0;
  }
  auto& sum = lp.add_constraint(Relation::Equal, 0.0);
  for (std::size_t j = 0; j < n; ++j) sum.coeffs[j] = 1.0;
  const std::size_t norm_row = lp.constraints.size();
  lp.add_constraint(Relation::Equal, 1.0);

  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    for (std::size_t j = 0; j < n; ++j) {
      const bool negative = (mask >> j) & 1U;
      lp.constraints[norm_row].coeffs[j] = negative ? -1.0 : 1.0;
      lp.bounds[j] = negative ? VariableBound{-kInf, 0.0} : VariableBound{0.0, kInf};
    }
    const auto sol = simplex_solve(lp, tol);
    if (sol.status == LPStatus::Optimal && sol.objective < best) best = sol.objective;
  }
  return best;
}

}  // namespace infconn
