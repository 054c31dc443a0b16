#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "infconn/error.hpp"
#include "infconn/graph.hpp"
#include "infconn/rational.hpp"

namespace infconn {

inline constexpr std::size_t kCheegerMaxN = 24;

struct CheegerResult {
  Rational value;              // |dS| / min(vol S, vol S^c)
  std::vector<Vertex> subset;  // a minimising S, contains vertex 0

  double approx() const { return value.to_double(); }
};

/// Exact Cheeger constant by enumerating every proper S containing vertex 0
/// (h(S) = h(S^c), so pinning one vertex loses nothing). Subsets are visited
/// in Gray-code order so each step toggles one vertex and updates the cut
/// and volume in O(deg).
inline CheegerResult cheeger_constant(const Graph& g, std::size_t max_n = kCheegerMaxN) {
  const std::size_t n = g.n();
  if (n < 2) throw Error(ErrorCode::TooSmall, "Cheeger constant needs n >= 2");
  if (n > max_n || n > 63) throw Error(ErrorCode::TooLarge, "Cheeger enumeration limited to n <= " + std::to_string(max_n));
  require_connected(g, "cheeger_constant");

  const std::uint64_t total_vol = 2 * g.m();
  std::vector<char> in_s(n, 0);
  in_s[0] = 1;
  std::uint64_t cut = g.degree(0);
  std::uint64_t vol = g.degree(0);

  std::uint64_t best_cut = cut, best_den = std::min(vol, total_vol - vol);
  std::uint64_t best_mask = 0, mask = 0;

  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  for (std::uint64_t i = 1; i < count; ++i) {
    const auto bit = static_cast<unsigned>(std::countr_zero(i));
    const Vertex v = bit + 1;
    for (Vertex w : g.neighbors(v)) {
      if (in_s[w] == in_s[v]) ++cut;
      else --cut;
    }
    in_s[v] ^= 1;
    if (in_s[v]) vol += g.degree(v);
    else vol -= g.degree(v);
    mask ^= std::uint64_t{1} << bit;
    if (mask == count - 1) continue;  // S = V
    const std::uint64_t den = std::min(vol, total_vol - vol);
    if (cut * best_den < best_cut * den) {
      best_cut = cut;
      best_den = den;
      best_mask = mask;
    }
  }

  CheegerResult out;
  out.value = Rational(static_cast<Rational::int_type>(best_cut), static_cast<Rational::int_type>(best_den));
  out.subset.push_back(0);
  for (Vertex v = 1; v < n; ++v)
    if ((best_mask >> (v - 1)) & 1U) out.subset.push_back(v);
  return out;
}

}  // namespace infconn
