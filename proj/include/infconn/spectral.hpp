#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "infconn/error.hpp"
#include "infconn/graph.hpp"

namespace infconn {

struct SpectralEstimate {
  double value = 0.0;
  double residual = 0.0;  // ||A x - value x|| / ||x||
  std::size_t iterations = 0;
  bool converged = false;
};

inline constexpr double kDefaultSpectralTol = 1e-10;
inline constexpr std::size_t kPowerIterationCap = 100000;
inline constexpr std::size_t kJacobiSweepCap = 100;

/// Dense symmetric matrix, row-major.
class SymMatrix {
 public:
  explicit SymMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}
  std::size_t size() const noexcept { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  std::vector<double> apply(const std::vector<double>& x) const {
    std::vector<double> y(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
      const double* row = a_.data() + i * n_;
      double s = 0.0;
      for (std::size_t j = 0; j < n_; ++j) s += row[j] * x[j];
      y[i] = s;
    }
    return y;
  }

 private:
  std::size_t n_;
  std::vector<double> a_;
};

inline double norm2(const std::vector<double>& x) {
  return std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
}

inline double eigen_residual(const SymMatrix& a, const std::vector<double>& x, double lambda) {
  auto ax = a.apply(x);
  for (std::size_t i = 0; i < ax.size(); ++i) ax[i] -= lambda * x[i];
  return norm2(ax) / norm2(x);
}

struct EigenDecomposition {
  std::vector<double> values;                // ascending
  std::vector<std::vector<double>> vectors;  // vectors[k] pairs with values[k]
  std::size_t sweeps = 0;
};

/// Cyclic Jacobi rotations. Stops once the off-diagonal Frobenius norm is at
/// most 1e-12 times the diagonal norm; NoConvergence after the sweep cap.
inline EigenDecomposition jacobi_eigen(SymMatrix a) {
  const std::size_t n = a.size();
  std::vector<double> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
  };
  auto diag_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a(i, i) * a(i, i);
    return std::sqrt(s);
  };

  std::size_t sweep = 0;
  for (;; ++sweep) {
    const double off = off_norm();
    if (off <= 1e-12 * diag_norm() || off == 0.0) break;
    if (sweep == kJacobiSweepCap)
      throw Error(ErrorCode::NoConvergence, "Jacobi eigensolver exceeded " + std::to_string(kJacobiSweepCap) + " sweeps");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v[k * n + p], vkq = v[k * n + q];
          v[k * n + p] = c * vkp - s * vkq;
          v[k * n + q] = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });
  EigenDecomposition out;
  out.sweeps = sweep;
  for (std::size_t k : idx) {
    out.values.push_back(a(k, k));
    std::vector<double> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = v[i * n + k];
    out.vectors.push_back(std::move(col));
  }
  return out;
}

inline SymMatrix laplacian_matrix(const Graph& g) {
  SymMatrix l(g.n());
  for (Vertex u = 0; u < g.n(); ++u) {
    l(u, u) = static_cast<double>(g.degree(u));
    for (Vertex v : g.neighbors(u)) l(u, v) = -1.0;
  }
  return l;
}

inline SymMatrix normalized_laplacian_matrix(const Graph& g) {
  SymMatrix l(g.n());
  for (Vertex u = 0; u < g.n(); ++u) {
    if (g.degree(u) == 0) continue;
    l(u, u) = 1.0;
    for (Vertex v : g.neighbors(u))
      l(u, v) = -1.0 / std::sqrt(static_cast<double>(g.degree(u)) * static_cast<double>(g.degree(v)));
  }
  return l;
}

inline SymMatrix distance_matrix_dense(const Graph& g) {
  const auto d = distance_matrix(g);
  SymMatrix out(g.n());
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = 0; v < g.n(); ++v) out(u, v) = d(u, v);
  return out;
}

namespace detail {

inline SpectralEstimate second_smallest(const SymMatrix& m, double tol) {
  const auto eig = jacobi_eigen(m);
  SpectralEstimate est;
  est.value = eig.values[1];
  est.residual = eigen_residual(m, eig.vectors[1], est.value);
  est.iterations = eig.sweeps;
  est.converged = est.residual <= tol * std::max(1.0, std::abs(est.value));
  return est;
}

}  // namespace detail

/// Largest eigenvalue of the distance matrix by power iteration on D + I,
/// starting from the all-ones vector. The shift makes the Perron value
/// strictly dominant in modulus (K_2 has spectrum {1, -1} unshifted).
/// Converged when successive Rayleigh quotients differ by at most
/// tol * max(1, value) and the residual against D is within the same bound.
inline SpectralEstimate distance_spectral_radius(const Graph& g, double tol = kDefaultSpectralTol) {
  if (!(tol > 0)) throw Error(ErrorCode::NonPositiveInput, "tol must be positive");
  require_connected(g, "distance_spectral_radius");
  const std::size_t n = g.n();
  SymMatrix d = distance_matrix_dense(g);
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));

  SpectralEstimate est;
  double previous = 0.0;
  for (std::size_t it = 1; it <= kPowerIterationCap; ++it) {
    auto y = d.apply(x);
    for (std::size_t i = 0; i < n; ++i) y[i] += x[i];
    // x is unit length, so x . (D + I) x is the shifted Rayleigh quotient.
    const double rayleigh = std::inner_product(x.begin(), x.end(), y.begin(), 0.0) - 1.0;
    const double len = norm2(y);
    for (double& yi : y) yi /= len;
    x = std::move(y);
    const double scale = std::max(1.0, std::abs(rayleigh));
    if (it > 1 && std::abs(rayleigh - previous) <= tol * scale) {
      const double residual = eigen_residual(d, x, rayleigh);
      if (residual <= tol * scale) {
        est.value = rayleigh;
        est.residual = residual;
        est.iterations = it;
        est.converged = true;
        return est;
      }
    }
    previous = rayleigh;
  }
  throw Error(ErrorCode::NoConvergence, "power iteration exceeded " + std::to_string(kPowerIterationCap) + " steps");
}

/// a(G): second smallest Laplacian eigenvalue (0 for disconnected graphs).
inline SpectralEstimate algebraic_connectivity(const Graph& g, double tol = kDefaultSpectralTol) {
  if (g.n() < 2) throw Error(ErrorCode::TooSmall, "algebraic connectivity needs n >= 2");
  return detail::second_smallest(laplacian_matrix(g), tol);
}

/// mu_{n-1}: second smallest eigenvalue of the normalized Laplacian.
inline SpectralEstimate normalized_laplacian_mu(const Graph& g, double tol = kDefaultSpectralTol) {
  if (g.n() < 2) throw Error(ErrorCode::TooSmall, "normalized Laplacian needs n >= 2");
  require_connected(g, "normalized_laplacian_mu");
  return detail::second_smallest(normalized_laplacian_matrix(g), tol);
}

}  // namespace infconn
