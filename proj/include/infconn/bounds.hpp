#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "infconn/cheeger.hpp"
#include "infconn/error.hpp"
#include "infconn/gamma.hpp"
#include "infconn/graph.hpp"
#include "infconn/lp_oracle.hpp"
#include "infconn/rational.hpp"
#include "infconn/spectral.hpp"

namespace infconn {

/// Every entry states `lhs <= rhs` (nonstrict) or `lhs < rhs` (strict).
enum class Strictness { Nonstrict, Strict };
enum class EntryStatus { Evaluated, Skipped, Failed };

inline const char* to_string(EntryStatus s) {
  switch (s) {
    case EntryStatus::Evaluated: return "evaluated";
    case EntryStatus::Skipped: return "skipped";
    case EntryStatus::Failed: return "failed";
  }
  return "?";
}

/// Float comparisons: nonstrict entries and equality detection allow
/// kCompareTol * max(1, |rhs|); strict entries allow kStrictSlack. Exact
/// entries (both sides rational) are compared exactly.
inline constexpr double kCompareTol = 1e-8;
inline constexpr double kStrictSlack = 1e-9;
inline constexpr double kBBoundSlack = 1e-7;

struct BoundEntry {
  std::string id;         // "i", "ii", ..., "vii.upper", ...
  std::string statement;  // human-readable inequality
  Strictness relation = Strictness::Nonstrict;
  EntryStatus status = EntryStatus::Skipped;
  std::string note;  // reason when skipped or failed
  double lhs = 0.0;
  double rhs = 0.0;
  std::optional<Rational> lhs_exact, rhs_exact;
  bool holds = false;
  bool equality_attained = false;
  std::optional<bool> equality_expected;  // set where the equality case is characterised
};

struct BoundReport {
  std::vector<BoundEntry> entries;

  const BoundEntry& at(const std::string& id) const {
    for (const auto& e : entries)
      if (e.id == id) return e;
    throw Error(ErrorCode::InvalidSpec, "no bound entry '" + id + "'");
  }

  /// True when no evaluated entry is violated and no entry failed.
  bool all_hold() const {
    for (const auto& e : entries) {
      if (e.status == EntryStatus::Failed) return false;
      if (e.status == EntryStatus::Evaluated && !e.holds) return false;
    }
    return true;
  }
};

struct BoundOptions {
  double tol = kDefaultSpectralTol;  // spectral convergence tolerance
  bool cheeger = true;
  bool b_oracle = true;
  std::size_t cheeger_max_n = kCheegerMaxN;
  std::size_t b_max_n = kBOracleMaxN;
};

namespace detail {

inline void compare_float(BoundEntry& e) {
  const double scale = std::max(1.0, std::abs(e.rhs));
  e.equality_attained = std::abs(e.lhs - e.rhs) <= kCompareTol * scale;
  e.holds = e.relation == Strictness::Strict ? e.lhs < e.rhs + kStrictSlack : e.lhs <= e.rhs + kCompareTol * scale;
}

inline void compare_exact(BoundEntry& e, const Rational& lhs, const Rational& rhs) {
  e.lhs_exact = lhs;
  e.rhs_exact = rhs;
  e.lhs = lhs.to_double();
  e.rhs = rhs.to_double();
  e.equality_attained = lhs == rhs;
  e.holds = e.relation == Strictness::Strict ? lhs < rhs : lhs <= rhs;
}

// Runs `body` for one entry, recording errors against that entry only.
inline void evaluate(BoundEntry& e, const std::function<void(BoundEntry&)>& body) {
  try {
    body(e);
    if (e.status != EntryStatus::Skipped) e.status = EntryStatus::Evaluated;
  } catch (const Error& err) {
    e.status = EntryStatus::Failed;
    e.note = err.what();
    e.holds = false;
  }
}

template <class T>
class Lazy {
 public:
  explicit Lazy(std::function<T()> f) : f_(std::move(f)) {}
  const T& get() {
    if (!value_) value_ = f_();
    return *value_;
  }

 private:
  std::function<T()> f_;
  std::optional<T> value_;
};

}  // namespace detail

/// Evaluates the gamma inequality suite on a connected graph. Report order
/// is fixed; an error in one entry marks that entry failed and the rest are
/// still evaluated.
inline BoundReport bound_report(const Graph& g, const BoundOptions& opt = {}) {
  const std::size_t n = g.n();
  if (n < 2) throw Error(ErrorCode::TooSmall, "bound report needs n >= 2");
  require_connected(g, "bound_report");
  using R = Rational;
  const auto ni = static_cast<R::int_type>(n);
  const auto mi = static_cast<R::int_type>(g.m());
  const double nd = static_cast<double>(n), md = static_cast<double>(g.m());

  const GammaCertificate cert = gamma(g);
  const TransmissionTable table = transmission_table(g);
  const R gam = cert.gamma;
  const double gd = gam.to_double();
  const bool regular_tr = table.argmax.size() == n;
  const bool complete = is_complete(g);

  detail::Lazy<SpectralEstimate> d1([&] { return distance_spectral_radius(g, opt.tol); });
  detail::Lazy<SpectralEstimate> alg([&] { return algebraic_connectivity(g, opt.tol); });
  detail::Lazy<SpectralEstimate> mu([&] { return normalized_laplacian_mu(g, opt.tol); });
  detail::Lazy<CheegerResult> cheeger([&] { return cheeger_constant(g, opt.cheeger_max_n); });

  auto cheeger_skip = [&](BoundEntry& e) {
    if (!opt.cheeger) e.note = "Cheeger analysis not requested";
    else if (n > opt.cheeger_max_n) e.note = "n > " + std::to_string(opt.cheeger_max_n) + " (exact enumeration cap)";
    else return false;
    e.status = EntryStatus::Skipped;
    return true;
  };

  BoundReport report;
  auto add = [&](std::string id, std::string statement, Strictness rel, const std::function<void(BoundEntry&)>& body) {
    BoundEntry e;
    e.id = std::move(id);
    e.statement = std::move(statement);
    e.relation = rel;
    e.status = EntryStatus::Evaluated;
    detail::evaluate(e, body);
    report.entries.push_back(std::move(e));
  };

  add("i", "gamma <= n / d1 (equality iff transmission-regular)", Strictness::Nonstrict, [&](BoundEntry& e) {
    e.equality_expected = regular_tr;
    e.lhs = gd;
    e.rhs = nd / d1.get().value;
    detail::compare_float(e);
  });

  add("ii", "gamma <= n^2 / (2 W) (equality iff transmission-regular)", Strictness::Nonstrict, [&](BoundEntry& e) {
    e.equality_expected = regular_tr;
    detail::compare_exact(e, gam, R(ni * ni, 2 * static_cast<R::int_type>(table.wiener)));
  });

  add("iii", "b <= (m / 2) gamma", Strictness::Nonstrict, [&](BoundEntry& e) {
    if (!opt.b_oracle) {
      e.status = EntryStatus::Skipped;
      e.note = "b oracle not requested";
      return;
    }
    if (n > opt.b_max_n) {
      e.status = EntryStatus::Skipped;
      e.note = "n > " + std::to_string(opt.b_max_n) + " (b oracle cap)";
      return;
    }
    e.lhs = b_small_oracle(g, opt.b_max_n);
    e.rhs = md / 2.0 * gd;
    e.equality_attained = std::abs(e.lhs - e.rhs) <= kCompareTol * std::max(1.0, e.rhs);
    e.holds = e.lhs <= e.rhs + kBBoundSlack;
  });

  add("iv", "n / (n - 1) <= ||x||_2^2 for the witness (equality iff complete)", Strictness::Nonstrict,
      [&](BoundEntry& e) {
        e.equality_expected = complete;
        if (cert.witness_valid) {
          R norm;
          for (const R& x : cert.witness) norm += x * x;
          detail::compare_exact(e, R(ni, ni - 1), norm);
        } else {
          double norm = 0.0;
          for (double x : cert.fallback_witness) norm += x * x;
          e.lhs = nd / (nd - 1.0);
          e.rhs = norm;
          e.note = "exact witness invalid; LP fallback witness used";
          detail::compare_float(e);
        }
      });

  add("v", "a(G) < m (n - 1) / n * gamma^2", Strictness::Strict, [&](BoundEntry& e) {
    e.lhs = alg.get().value;
    e.rhs = (R(mi * (ni - 1), ni) * gam * gam).to_double();
    detail::compare_float(e);
  });

  add("vi", "h_G < sqrt(n - 1) gamma (regular graphs)", Strictness::Strict, [&](BoundEntry& e) {
    if (!g.is_regular()) {
      e.status = EntryStatus::Skipped;
      e.note = "graph is not regular";
      return;
    }
    if (cheeger_skip(e)) return;
    e.lhs = cheeger.get().approx();
    e.rhs = std::sqrt(nd - 1.0) * gd;
    detail::compare_float(e);
  });

  add("vii.upper", "mu_{n-1} <= 2 h_G", Strictness::Nonstrict, [&](BoundEntry& e) {
    if (cheeger_skip(e)) return;
    e.lhs = mu.get().value;
    e.rhs = 2.0 * cheeger.get().approx();
    detail::compare_float(e);
  });

  add("vii.lower", "h_G^2 / 2 < mu_{n-1}", Strictness::Strict, [&](BoundEntry& e) {
    if (cheeger_skip(e)) return;
    const R h = cheeger.get().value;
    e.lhs = (h * h / R(2)).to_double();
    e.rhs = mu.get().value;
    detail::compare_float(e);
  });

  add("viii.lower", "2 / (n - 1) <= gamma (equality iff path)", Strictness::Nonstrict, [&](BoundEntry& e) {
    e.equality_expected = is_path_graph(g);
    detail::compare_exact(e, R(2, ni - 1), gam);
  });

  add("viii.upper", "gamma <= n / (n - 1) (equality iff complete)", Strictness::Nonstrict, [&](BoundEntry& e) {
    e.equality_expected = complete;
    detail::compare_exact(e, gam, R(ni, ni - 1));
  });

  add("ix", "gamma <= n / (2n - 3) for trees, n >= 3 (equality iff star)", Strictness::Nonstrict, [&](BoundEntry& e) {
    if (!is_tree(g)) {
      e.status = EntryStatus::Skipped;
      e.note = "graph is not a tree";
      return;
    }
    if (n < 3) {
      e.status = EntryStatus::Skipped;
      e.note = "tree bound needs n >= 3";
      return;
    }
    e.equality_expected = is_star(g);
    detail::compare_exact(e, gam, R(ni, 2 * ni - 3));
  });

  return report;
}

}  // namespace infconn
