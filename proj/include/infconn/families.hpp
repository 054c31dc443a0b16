#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "infconn/error.hpp"
#include "infconn/graph.hpp"
#include "infconn/rational.hpp"

namespace infconn {

namespace family {
struct Path { std::size_t n; };
struct Cycle { std::size_t n; };
struct Complete { std::size_t n; };
struct Star { std::size_t n; };  // n vertices, centre 0
struct CompleteBipartite { std::size_t m, n; };
struct Hypercube { std::size_t t; };
struct Hamming { std::size_t t, s; };
struct Grid3 { std::size_t l, m, n; };
struct Torus { std::size_t m, n; };
struct Petersen {};
}  // namespace family

using FamilySpec = std::variant<family::Path, family::Cycle, family::Complete, family::Star, family::CompleteBipartite,
                                family::Hypercube, family::Hamming, family::Grid3, family::Torus, family::Petersen>;

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

inline std::string to_string(const FamilySpec& spec) {
  using std::to_string;
  return std::visit(
      overloaded{
          [](const family::Path& f) { return "path(" + to_string(f.n) + ")"; },
          [](const family::Cycle& f) { return "cycle(" + to_string(f.n) + ")"; },
          [](const family::Complete& f) { return "complete(" + to_string(f.n) + ")"; },
          [](const family::Star& f) { return "star(" + to_string(f.n) + ")"; },
          [](const family::CompleteBipartite& f) { return "bipartite(" + to_string(f.m) + "," + to_string(f.n) + ")"; },
          [](const family::Hypercube& f) { return "hypercube(" + to_string(f.t) + ")"; },
          [](const family::Hamming& f) { return "hamming(" + to_string(f.t) + "," + to_string(f.s) + ")"; },
          [](const family::Grid3& f) {
            return "grid3(" + to_string(f.l) + "," + to_string(f.m) + "," + to_string(f.n) + ")";
          },
          [](const family::Torus& f) { return "torus(" + to_string(f.m) + "," + to_string(f.n) + ")"; },
          [](const family::Petersen&) { return std::string("petersen"); },
      },
      spec);
}

inline void validate(const FamilySpec& spec) {
  auto fail = [&](const char* why) { throw Error(ErrorCode::InvalidSpec, to_string(spec) + ": " + why); };
  std::visit(overloaded{
                 [&](const family::Path& f) { if (f.n < 1) fail("n >= 1"); },
                 [&](const family::Cycle& f) { if (f.n < 3) fail("n >= 3"); },
                 [&](const family::Complete& f) { if (f.n < 1) fail("n >= 1"); },
                 [&](const family::Star& f) { if (f.n < 1) fail("n >= 1"); },
                 [&](const family::CompleteBipartite& f) { if (f.n < 1 || f.m < f.n) fail("m >= n >= 1"); },
                 [&](const family::Hypercube& f) { if (f.t < 1) fail("t >= 1"); },
                 [&](const family::Hamming& f) { if (f.t < 1 || f.s < 2) fail("t >= 1, s >= 2"); },
                 [&](const family::Grid3& f) { if (f.l < 1 || f.m < 1 || f.n < 1) fail("l, m, n >= 1"); },
                 [&](const family::Torus& f) { if (f.m < 3 || f.n < 3) fail("m, n >= 3"); },
                 [](const family::Petersen&) {},
             },
             spec);
}

/// Vertex count of the generated member, without building it.
inline std::size_t vertex_count(const FamilySpec& spec) {
  // Saturates instead of wrapping so oversized specs are still rejected.
  auto ipow = [](std::size_t b, std::size_t e) {
    std::size_t r = 1;
    while (e--) r = r > (std::size_t{1} << 40) / b ? std::size_t{1} << 40 : r * b;
    return r;
  };
  return std::visit(overloaded{
                        [](const family::Path& f) { return f.n; },
                        [](const family::Cycle& f) { return f.n; },
                        [](const family::Complete& f) { return f.n; },
                        [](const family::Star& f) { return f.n; },
                        [](const family::CompleteBipartite& f) { return f.m + f.n; },
                        [&](const family::Hypercube& f) { return ipow(2, f.t); },
                        [&](const family::Hamming& f) { return ipow(f.s, f.t); },
                        [](const family::Grid3& f) { return f.l * f.m * f.n; },
                        [](const family::Torus& f) { return f.m * f.n; },
                        [](const family::Petersen&) { return std::size_t{10}; },
                    },
                    spec);
}

/// Cartesian product G x H with (u, v) -> u * |H| + v.
inline Graph cartesian_product(const Graph& g, const Graph& h) {
  const std::size_t nh = h.n();
  std::vector<std::pair<long long, long long>> pairs;
  pairs.reserve(g.m() * nh + h.m() * g.n());
  auto id = [nh](Vertex u, Vertex v) { return static_cast<long long>(u * nh + v); };
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex v = 0; v < nh; ++v) {
      for (Vertex u2 : g.neighbors(u))
        if (u < u2) pairs.emplace_back(id(u, v), id(u2, v));
      for (Vertex v2 : h.neighbors(v))
        if (v < v2) pairs.emplace_back(id(u, v), id(u, v2));
    }
  }
  return Graph::from_edge_list(g.n() * nh, pairs);
}

/// k-fold product as a left fold; vertex ids are row-major over the factor
/// ids with the first factor most significant.
inline Graph cartesian_product(std::span<const Graph> factors) {
  if (factors.size() < 2) throw Error(ErrorCode::EmptyFactor, "cartesian product needs at least two factors");
  for (const auto& f : factors)
    if (f.n() == 0) throw Error(ErrorCode::EmptyFactor, "factor without vertices");
  Graph acc = cartesian_product(factors[0], factors[1]);
  for (std::size_t i = 2; i < factors.size(); ++i) acc = cartesian_product(acc, factors[i]);
  return acc;
}

inline Graph cartesian_product(const std::vector<Graph>& factors) {
  return cartesian_product(std::span<const Graph>(factors));
}

namespace detail {

inline Graph build(std::size_t n, const std::vector<std::pair<long long, long long>>& e) {
  return Graph::from_edge_list(n, e);
}

inline Graph path(std::size_t n) {
  std::vector<std::pair<long long, long long>> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return build(n, e);
}

inline Graph cycle(std::size_t n) {
  std::vector<std::pair<long long, long long>> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, n - 1);
  return build(n, e);
}

inline Graph complete(std::size_t n) {
  std::vector<std::pair<long long, long long>> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return build(n, e);
}

inline Graph power(const Graph& base, std::size_t t) {
  if (t == 1) return base;
  return cartesian_product(std::vector<Graph>(t, base));
}

}  // namespace detail

inline constexpr std::size_t kMaxGeneratedVertices = std::size_t{1} << 22;

inline Graph generate(const FamilySpec& spec) {
  validate(spec);
  if (vertex_count(spec) > kMaxGeneratedVertices)
    throw Error(ErrorCode::TooLarge, to_string(spec) + " has more than " + std::to_string(kMaxGeneratedVertices) + " vertices");
  return std::visit(
      overloaded{
          [](const family::Path& f) { return detail::path(f.n); },
          [](const family::Cycle& f) { return detail::cycle(f.n); },
          [](const family::Complete& f) { return detail::complete(f.n); },
          [](const family::Star& f) {
            std::vector<std::pair<long long, long long>> e;
            for (std::size_t i = 1; i < f.n; ++i) e.emplace_back(0, i);
            return detail::build(f.n, e);
          },
          [](const family::CompleteBipartite& f) {
            // Part of size m is 0..m-1, part of size n follows.
            std::vector<std::pair<long long, long long>> e;
            for (std::size_t i = 0; i < f.m; ++i)
              for (std::size_t j = 0; j < f.n; ++j) e.emplace_back(i, f.m + j);
            return detail::build(f.m + f.n, e);
          },
          [](const family::Hypercube& f) { return detail::power(detail::complete(2), f.t); },
          [](const family::Hamming& f) { return detail::power(detail::complete(f.s), f.t); },
          [](const family::Grid3& f) {
            return cartesian_product(std::vector<Graph>{detail::path(f.l), detail::path(f.m), detail::path(f.n)});
          },
          [](const family::Torus& f) { return cartesian_product(detail::cycle(f.m), detail::cycle(f.n)); },
          [](const family::Petersen&) {
            // Kneser graph K(5,2): 2-subsets of {0..4} in lexicographic order,
            // adjacent when disjoint.
            std::vector<std::pair<int, int>> sets;
            for (int a = 0; a < 5; ++a)
              for (int b = a + 1; b < 5; ++b) sets.emplace_back(a, b);
            std::vector<std::pair<long long, long long>> e;
            for (std::size_t i = 0; i < sets.size(); ++i)
              for (std::size_t j = i + 1; j < sets.size(); ++j) {
                const auto [a, b] = sets[i];
                const auto [c, d] = sets[j];
                if (a != c && a != d && b != c && b != d) e.emplace_back(i, j);
              }
            return detail::build(10, e);
          },
      },
      spec);
}

/// 1 / (1/g_1 + ... + 1/g_k).
inline Rational gamma_harmonic(std::span<const Rational> values) {
  if (values.empty()) throw Error(ErrorCode::NonPositiveInput, "no values");
  Rational inv_sum;
  for (const Rational& v : values) {
    if (v <= Rational(0)) throw Error(ErrorCode::NonPositiveInput, "value " + v.str() + " is not positive");
    inv_sum += Rational(1) / v;
  }
  return Rational(1) / inv_sum;
}

inline Rational gamma_harmonic(std::initializer_list<Rational> values) {
  return gamma_harmonic(std::span<const Rational>(values.begin(), values.size()));
}

/// Closed-form gamma for each family.
inline Rational closed_form_gamma(const FamilySpec& spec) {
  validate(spec);
  using R = Rational;
  auto i = [](std::size_t v) { return static_cast<R::int_type>(v); };
  auto need = [&](bool ok, const char* why) {
    if (!ok) throw Error(ErrorCode::InvalidSpec, to_string(spec) + ": " + why);
  };
  auto cycle_gamma = [&](std::size_t n) { return R(i(n), i((n / 2) * ((n + 1) / 2))); };
  return std::visit(
      overloaded{
          [&](const family::Path& f) {
            need(f.n >= 2, "closed form needs n >= 2");
            return R(2, i(f.n - 1));
          },
          [&](const family::Cycle& f) { return cycle_gamma(f.n); },
          [&](const family::Complete& f) {
            need(f.n >= 2, "closed form needs n >= 2");
            return R(i(f.n), i(f.n - 1));
          },
          [&](const family::Star& f) {
            need(f.n >= 2, "closed form needs n >= 2");
            return R(i(f.n), i(2 * f.n - 3));
          },
          [&](const family::CompleteBipartite& f) { return R(i(f.m + f.n), i(2 * f.m + f.n - 2)); },
          [&](const family::Hypercube& f) { return R(2, i(f.t)); },
          [&](const family::Hamming& f) { return R(i(f.s), i(f.t * (f.s - 1))); },
          [&](const family::Grid3& f) {
            need(f.l * f.m * f.n >= 2, "closed form needs at least two vertices");
            return R(2, i(f.l + f.m + f.n - 3));
          },
          [&](const family::Torus& f) {
            const std::size_t m = f.m, n = f.n;
            return R(i(m * n), i(m * (n / 2) * ((n + 1) / 2) + n * (m / 2) * ((m + 1) / 2)));
          },
          [](const family::Petersen&) { return R(2, 3); },
      },
      spec);
}

/// Parses a family name and its comma-separated parameters, e.g.
/// ("hamming", {2, 3}). Names: path cycle complete star bipartite hypercube
/// hamming grid3 torus petersen.
inline FamilySpec parse_family(const std::string& name, const std::vector<long long>& params) {
  auto want = [&](std::size_t count) {
    if (params.size() != count)
      throw Error(ErrorCode::InvalidSpec, name + " takes " + std::to_string(count) + " parameter(s)");
    for (long long p : params)
      if (p < 1) throw Error(ErrorCode::InvalidSpec, name + ": parameters must be positive");
  };
  auto p = [&](std::size_t k) { return static_cast<std::size_t>(params[k]); };
  FamilySpec spec;
  if (name == "path") want(1), spec = family::Path{p(0)};
  else if (name == "cycle") want(1), spec = family::Cycle{p(0)};
  else if (name == "complete") want(1), spec = family::Complete{p(0)};
  else if (name == "star") want(1), spec = family::Star{p(0)};
  else if (name == "bipartite") want(2), spec = family::CompleteBipartite{p(0), p(1)};
  else if (name == "hypercube") want(1), spec = family::Hypercube{p(0)};
  else if (name == "hamming") want(2), spec = family::Hamming{p(0), p(1)};
  else if (name == "grid3") want(3), spec = family::Grid3{p(0), p(1), p(2)};
  else if (name == "torus") want(2), spec = family::Torus{p(0), p(1)};
  else if (name == "petersen") want(0), spec = family::Petersen{};
  else throw Error(ErrorCode::InvalidSpec, "unknown family '" + name + "'");
  validate(spec);
  return spec;
}

}  // namespace infconn
