#include <gtest/gtest.h>

#include <random>

#include "infconn/simplex.hpp"

using namespace infconn;

TEST(Simplex, BoundedOptimum) {
  LinearProgram lp(1);
  lp.objective[0] = -1.0;
  lp.bounds[0] = {0.0, 1.0};
  const auto sol = simplex_solve(lp);
  ASSERT_EQ(sol.status, LPStatus::Optimal);
  EXPECT_NEAR(sol.objective, -1.0, 1e-12);
  EXPECT_NEAR(sol.assignment[0], 1.0, 1e-12);
}

TEST(Simplex, InfeasibleRow) {
  LinearProgram lp(1);
  lp.objective[0] = 1.0;
  lp.add_constraint(Relation::LessEqual, -1.0).coeffs[0] = 1.0;  // x <= -1 with x >= 0
  EXPECT_EQ(simplex_solve(lp).status, LPStatus::Infeasible);
}

TEST(Simplex, Unbounded) {
  LinearProgram lp(1);
  lp.objective[0] = -1.0;
  EXPECT_EQ(simplex_solve(lp).status, LPStatus::Unbounded);
}

TEST(Simplex, FreeAndMirroredVariables) {
  // minimize x + 2y  s.t.  x + y = 1, x - y <= 3, x free, y <= 5 (no lower bound).
  LinearProgram lp(2);
  lp.objective = {1.0, 2.0};
  lp.bounds[0] = {-kInf, kInf};
  lp.bounds[1] = {-kInf, 5.0};
  auto& eq = lp.add_constraint(Relation::Equal, 1.0);
  eq.coeffs = {1.0, 1.0};
  auto& le = lp.add_constraint(Relation::LessEqual, 3.0);
  le.coeffs = {1.0, -1.0};
  const auto sol = simplex_solve(lp);
  ASSERT_EQ(sol.status, LPStatus::Optimal);
  // x = 2, y = -1 is the vertex where both rows are tight.
  EXPECT_NEAR(sol.assignment[0], 2.0, 1e-9);
  EXPECT_NEAR(sol.assignment[1], -1.0, 1e-9);
  EXPECT_NEAR(sol.objective, 0.0, 1e-9);
}

TEST(Simplex, FixedVariableAndGreaterEqual) {
  // minimize y s.t. y >= x - 3, x fixed at 5, y >= 0.
  LinearProgram lp(2);
  lp.objective = {0.0, 1.0};
  lp.bounds[0] = {5.0, 5.0};
  auto& ge = lp.add_constraint(Relation::GreaterEqual, -3.0);
  ge.coeffs = {-1.0, 1.0};
  const auto sol = simplex_solve(lp);
  ASSERT_EQ(sol.status, LPStatus::Optimal);
  EXPECT_NEAR(sol.objective, 2.0, 1e-9);
}

TEST(Simplex, RedundantEqualityRows) {
  LinearProgram lp(2);
  lp.objective = {1.0, 1.0};
  lp.add_constraint(Relation::Equal, 2.0).coeffs = {1.0, 1.0};
  lp.add_constraint(Relation::Equal, 4.0).coeffs = {2.0, 2.0};
  const auto sol = simplex_solve(lp);
  ASSERT_EQ(sol.status, LPStatus::Optimal);
  EXPECT_NEAR(sol.objective, 2.0, 1e-9);
}

TEST(Simplex, RejectsMalformedPrograms) {
  LinearProgram lp(2);
  lp.bounds[0] = {1.0, 0.0};
  EXPECT_THROW(simplex_solve(lp), Error);
  LinearProgram short_row(2);
  short_row.constraints.push_back({{1.0}, Relation::LessEqual, 1.0});
  EXPECT_THROW(simplex_solve(short_row), Error);
}

// Random programs over a bounded box. Two-variable cases are also compared
// with a grid search over the box.
TEST(Simplex, RandomProgramsFeasibleAndDeterministic) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> coef(-3, 3), ub(0.5, 4);
  for (int i = 0; i < 300; ++i) {
    const std::size_t nv = 2 + i % 4;
    LinearProgram lp(nv);
    for (auto& c : lp.objective) c = coef(rng);
    for (auto& b : lp.bounds) b = {0.0, ub(rng)};
    for (int r = 0; r < 3; ++r) {
      auto& row = lp.add_constraint(r == 0 ? Relation::GreaterEqual : Relation::LessEqual, coef(rng));
      for (auto& a : row.coeffs) a = coef(rng);
    }
    const auto a = simplex_solve(lp);
    const auto b = simplex_solve(lp);
    ASSERT_EQ(a.status, b.status);
    EXPECT_EQ(a.pivots, b.pivots);
    EXPECT_EQ(a.assignment, b.assignment);
    ASSERT_NE(a.status, LPStatus::Unbounded);  // bounded box
    if (a.status != LPStatus::Optimal) continue;
    EXPECT_LE(max_violation(lp, a.assignment), 1e-8);
    double obj = 0.0;
    for (std::size_t j = 0; j < nv; ++j) obj += lp.objective[j] * a.assignment[j];
    EXPECT_NEAR(obj, a.objective, 1e-8);
    if (nv == 2) {
      double best = kInf;
      for (int s = 0; s <= 400; ++s)
        for (int t = 0; t <= 400; ++t) {
          const std::vector<double> x{lp.bounds[0].upper * s / 400.0, lp.bounds[1].upper * t / 400.0};
          if (max_violation(lp, x) <= 0) best = std::min(best, lp.objective[0] * x[0] + lp.objective[1] * x[1]);
        }
      if (best < kInf) {
        EXPECT_LE(a.objective, best + 1e-9);
      }
    }
  }
}
