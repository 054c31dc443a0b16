#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "infconn/error.hpp"

namespace infconn {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Relation { LessEqual, Equal, GreaterEqual };

struct LinearConstraint {
  std::vector<double> coeffs;
  Relation relation = Relation::LessEqual;
  double rhs = 0.0;
};

struct VariableBound {
  double lower = 0.0;
  double upper = kInf;
};

/// minimize objective . x subject to the constraints and per-variable bounds.
struct LinearProgram {
  std::size_t num_vars = 0;
  std::vector<double> objective;
  std::vector<LinearConstraint> constraints;
  std::vector<VariableBound> bounds;

  explicit LinearProgram(std::size_t vars = 0) : num_vars(vars), objective(vars, 0.0), bounds(vars) {}

  LinearConstraint& add_constraint(Relation rel, double rhs) {
    auto& c = constraints.emplace_back();
    c.coeffs.assign(num_vars, 0.0);
    c.relation = rel;
    c.rhs = rhs;
    return c;
  }

  void validate() const {
    if (objective.size() != num_vars || bounds.size() != num_vars)
      throw Error(ErrorCode::InvalidSpec, "objective/bounds length differs from num_vars");
    for (const auto& c : constraints)
      if (c.coeffs.size() != num_vars) throw Error(ErrorCode::InvalidSpec, "constraint length differs from num_vars");
    for (const auto& b : bounds)
      if (!(b.lower <= b.upper)) throw Error(ErrorCode::InvalidSpec, "variable bound with lower > upper");
  }
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

inline const char* to_string(LPStatus s) {
  switch (s) {
    case LPStatus::Optimal: return "Optimal";
    case LPStatus::Infeasible: return "Infeasible";
    case LPStatus::Unbounded: return "Unbounded";
  }
  return "?";
}

struct LPSolution {
  LPStatus status = LPStatus::Infeasible;
  double objective = 0.0;
  std::vector<double> assignment;  // empty unless Optimal
  std::size_t pivots = 0;
};

inline constexpr double kDefaultPivotTol = 1e-9;
inline constexpr std::size_t kSimplexPivotCap = 200000;

namespace detail {

// How an original variable maps onto non-negative standard-form columns.
struct VarMap {
  enum class Kind { Fixed, Shifted, Mirrored, Split } kind = Kind::Shifted;
  double offset = 0.0;  // lower (Shifted), upper (Mirrored), value (Fixed)
  std::size_t col = 0;  // first standard column
};

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), t_((rows + 1) * (cols + 1), 0.0), basis_(rows, 0) {}

  double& at(std::size_t r, std::size_t c) { return t_[r * (cols_ + 1) + c]; }
  double at(std::size_t r, std::size_t c) const { return t_[r * (cols_ + 1) + c]; }
  double& rhs(std::size_t r) { return at(r, cols_); }
  double& cost(std::size_t c) { return at(rows_, c); }  // reduced cost row
  double& value() { return at(rows_, cols_); }          // minus current objective

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t pr, std::size_t pc) {
    const std::size_t w = cols_ + 1;
    double* prow = t_.data() + pr * w;
    const double inv = 1.0 / prow[pc];
    for (std::size_t c = 0; c < w; ++c) prow[c] *= inv;
    prow[pc] = 1.0;
    for (std::size_t r = 0; r <= rows_; ++r) {
      if (r == pr) continue;
      double* row = t_.data() + r * w;
      const double f = row[pc];
      if (f == 0.0) continue;
      for (std::size_t c = 0; c < w; ++c)
        if (prow[c] != 0.0) row[c] -= f * prow[c];
      row[pc] = 0.0;
    }
    basis_[pr] = pc;
  }

  /// Bland's rule: lowest-index improving column, lowest-index basic
  /// variable among ratio-test ties. Returns false on unboundedness.
  bool optimize(std::size_t allowed_cols, double tol, std::size_t& pivots) {
    for (;;) {
      std::size_t enter = allowed_cols;
      for (std::size_t c = 0; c < allowed_cols; ++c)
        if (cost(c) < -tol) {
          enter = c;
          break;
        }
      if (enter == allowed_cols) return true;

      std::size_t leave = rows_;
      double best = kInf;
      for (std::size_t r = 0; r < rows_; ++r) {
        const double a = at(r, enter);
        if (a <= tol) continue;
        const double ratio = rhs(r) / a;
        if (leave == rows_ || ratio < best - tol) {
          leave = r;
          best = ratio;
        } else if (ratio <= best + tol && basis_[r] < basis_[leave]) {
          leave = r;
          best = std::min(best, ratio);
        }
      }
      if (leave == rows_) return false;
      if (++pivots > kSimplexPivotCap)
        throw Error(ErrorCode::IterationCap, "simplex exceeded " + std::to_string(kSimplexPivotCap) + " pivots");
      pivot(leave, enter);
    }
  }

 private:
  std::size_t rows_, cols_;
  std::vector<double> t_;
  std::vector<std::size_t> basis_;
};

}  // namespace detail

/// Two-phase tableau simplex. Bounded variables are shifted (or mirrored)
/// onto [0, inf), fixed variables are substituted out, free variables are
/// split. Bland's rule throughout, so the pivot sequence is deterministic
/// and degenerate cycling cannot occur under exact pivoting.
inline LPSolution simplex_solve(const LinearProgram& lp, double tol = kDefaultPivotTol) {
  using detail::VarMap;
  lp.validate();
  const std::size_t nv = lp.num_vars;

  std::vector<VarMap> map(nv);
  std::size_t ncols = 0;
  struct Row {
    std::vector<std::pair<std::size_t, double>> terms;
    Relation rel;
    double rhs;
  };
  std::vector<Row> rows;

  for (std::size_t j = 0; j < nv; ++j) {
    const auto [lo, hi] = lp.bounds[j];
    auto& vm = map[j];
    if (lo == hi) {
      vm = {VarMap::Kind::Fixed, lo, 0};
    } else if (std::isfinite(lo)) {
      vm = {VarMap::Kind::Shifted, lo, ncols++};
      if (std::isfinite(hi)) rows.push_back({{{vm.col, 1.0}}, Relation::LessEqual, hi - lo});
    } else if (std::isfinite(hi)) {
      vm = {VarMap::Kind::Mirrored, hi, ncols++};
    } else {
      vm = {VarMap::Kind::Split, 0.0, ncols};
      ncols += 2;
    }
  }

  // Expand a linear form over original variables into standard columns;
  // returns the constant part.
  auto expand = [&](const std::vector<double>& coeffs, std::vector<std::pair<std::size_t, double>>& terms) {
    double constant = 0.0;
    for (std::size_t j = 0; j < nv; ++j) {
      const double a = coeffs[j];
      if (a == 0.0) continue;
      const auto& vm = map[j];
      switch (vm.kind) {
        case VarMap::Kind::Fixed: constant += a * vm.offset; break;
        case VarMap::Kind::Shifted:
          constant += a * vm.offset;
          terms.emplace_back(vm.col, a);
          break;
        case VarMap::Kind::Mirrored:
          constant += a * vm.offset;
          terms.emplace_back(vm.col, -a);
          break;
        case VarMap::Kind::Split:
          terms.emplace_back(vm.col, a);
          terms.emplace_back(vm.col + 1, -a);
          break;
      }
    }
    return constant;
  };

  for (const auto& c : lp.constraints) {
    Row r{{}, c.relation, 0.0};
    r.rhs = c.rhs - expand(c.coeffs, r.terms);
    rows.push_back(std::move(r));
  }
  std::vector<std::pair<std::size_t, double>> obj_terms;
  expand(lp.objective, obj_terms);

  // Normalise to rhs >= 0, then count slack and artificial columns.
  std::size_t n_slack = 0, n_art = 0;
  for (auto& r : rows) {
    if (r.rhs < 0) {
      r.rhs = -r.rhs;
      for (auto& t : r.terms) t.second = -t.second;
      if (r.rel == Relation::LessEqual) r.rel = Relation::GreaterEqual;
      else if (r.rel == Relation::GreaterEqual) r.rel = Relation::LessEqual;
    }
    if (r.rel != Relation::Equal) ++n_slack;
    if (r.rel != Relation::LessEqual) ++n_art;
  }

  const std::size_t m = rows.size();
  const std::size_t art_begin = ncols + n_slack;
  detail::Tableau tab(m, art_begin + n_art);
  std::size_t slack = ncols, art = art_begin;
  for (std::size_t i = 0; i < m; ++i) {
    for (const auto& [c, a] : rows[i].terms) tab.at(i, c) += a;
    tab.rhs(i) = rows[i].rhs;
    switch (rows[i].rel) {
      case Relation::LessEqual:
        tab.at(i, slack) = 1.0;
        tab.basis()[i] = slack++;
        break;
      case Relation::GreaterEqual:
        tab.at(i, slack++) = -1.0;
        tab.at(i, art) = 1.0;
        tab.basis()[i] = art++;
        break;
      case Relation::Equal:
        tab.at(i, art) = 1.0;
        tab.basis()[i] = art++;
        break;
    }
  }

  LPSolution sol;
  const double feas_tol = std::max(1e-7, 100 * tol);

  if (n_art > 0) {
    // Phase 1: minimise the sum of artificials, priced out against the basis.
    for (std::size_t i = 0; i < m; ++i) {
      if (tab.basis()[i] < art_begin) continue;
      for (std::size_t c = 0; c <= tab.cols(); ++c) tab.at(m, c) -= tab.at(i, c);
    }
    for (std::size_t c = art_begin; c < tab.cols(); ++c) tab.cost(c) += 1.0;
    for (std::size_t i = 0; i < m; ++i)
      if (tab.basis()[i] >= art_begin) tab.cost(tab.basis()[i]) = 0.0;
    tab.optimize(tab.cols(), tol, sol.pivots);
    if (-tab.value() > feas_tol) {
      sol.status = LPStatus::Infeasible;
      return sol;
    }
    // Drive remaining (zero-valued) artificials out of the basis where possible.
    for (std::size_t i = 0; i < m; ++i) {
      if (tab.basis()[i] < art_begin) continue;
      for (std::size_t c = 0; c < art_begin; ++c)
        if (std::abs(tab.at(i, c)) > tol) {
          tab.pivot(i, c);
          break;
        }
    }
  }

  // Phase 2 reduced costs for the real objective.
  for (std::size_t c = 0; c <= tab.cols(); ++c) tab.cost(c) = 0.0;
  for (const auto& [c, a] : obj_terms) tab.cost(c) += a;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t b = tab.basis()[i];
    const double cb = tab.cost(b);
    if (cb == 0.0) continue;
    for (std::size_t c = 0; c <= tab.cols(); ++c) tab.at(m, c) -= cb * tab.at(i, c);
  }
  if (!tab.optimize(art_begin, tol, sol.pivots)) {
    sol.status = LPStatus::Unbounded;
    return sol;
  }

  std::vector<double> z(tab.cols(), 0.0);
  for (std::size_t i = 0; i < m; ++i) z[tab.basis()[i]] = tab.rhs(i);
  sol.assignment.resize(nv);
  for (std::size_t j = 0; j < nv; ++j) {
    const auto& vm = map[j];
    switch (vm.kind) {
      case VarMap::Kind::Fixed: sol.assignment[j] = vm.offset; break;
      case VarMap::Kind::Shifted: sol.assignment[j] = vm.offset + z[vm.col]; break;
      case VarMap::Kind::Mirrored: sol.assignment[j] = vm.offset - z[vm.col]; break;
      case VarMap::Kind::Split: sol.assignment[j] = z[vm.col] - z[vm.col + 1]; break;
    }
  }
  sol.status = LPStatus::Optimal;
  sol.objective = 0.0;
  for (std::size_t j = 0; j < nv; ++j) sol.objective += lp.objective[j] * sol.assignment[j];
  return sol;
}

/// Largest violation of any constraint or bound by `x` (0 when feasible).
inline double max_violation(const LinearProgram& lp, const std::vector<double>& x) {
  double worst = 0.0;
  for (const auto& c : lp.constraints) {
    double lhs = 0.0;
    for (std::size_t j = 0; j < lp.num_vars; ++j) lhs += c.coeffs[j] * x[j];
    const double d = lhs - c.rhs;
    switch (c.relation) {
      case Relation::LessEqual: worst = std::max(worst, d); break;
      case Relation::GreaterEqual: worst = std::max(worst, -d); break;
      case Relation::Equal: worst = std::max(worst, std::abs(d)); break;
    }
  }
  for (std::size_t j = 0; j < lp.num_vars; ++j) {
    worst = std::max(worst, lp.bounds[j].lower - x[j]);
    worst = std::max(worst, x[j] - lp.bounds[j].upper);
  }
  return worst;
}

}  // namespace infconn
