// Copyright 2026 The empc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "empc/bench/generators.hpp"
#include "empc/drp.hpp"
#include "empc/error.hpp"
#include "empc/lap.hpp"
#include "empc/random.hpp"
#include "oracles.hpp"

namespace empc {
namespace {

oracle::Mat rows_of(const SquareMatrix<Amount>& m) {
  oracle::Mat r(m.size(), std::vector<std::int64_t>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) r[i][j] = m(i, j);
  return r;
}

std::vector<std::size_t> zero_based(const Assignment& a) { return {a.mapping().begin(), a.mapping().end()}; }

TEST(LapSolve, IdentityOnZeroDiagonal) {
  auto r = lap_solve(AssignmentProblem::from_rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
  EXPECT_EQ(r.assignment, Assignment::identity(3));
  EXPECT_EQ(r.cost, 0);
}

TEST(LapSolve, ThreeByThreeMatchesEnumeration) {
  const oracle::Mat w = {{4, 1, 3}, {2, 0, 5}, {3, 2, 2}};
  auto expect = oracle::assignment_min(w);
  ASSERT_EQ(expect.cost, 5);
  auto r = lap_solve(AssignmentProblem::from_rows(w));
  EXPECT_EQ(r.cost, 5);
  EXPECT_EQ(zero_based(r.assignment), expect.perm);
  EXPECT_EQ(r.assignment.one_based(), (std::vector<std::int64_t>{2, 1, 3}));
  auto b = lap_brute(AssignmentProblem::from_rows(w));
  EXPECT_EQ(b.assignment, r.assignment);
}

TEST(LapSolve, SingleMachine) {
  auto r = lap_solve(AssignmentProblem::from_rows({{7}}));
  EXPECT_EQ(r.cost, 7);
  EXPECT_EQ(r.assignment, Assignment::identity(1));
  EXPECT_EQ(lap_brute(AssignmentProblem::from_rows({{7}})).cost, 7);
}

TEST(LapSolve, RejectsNegativeWeights) {
  EXPECT_THROW(AssignmentProblem::from_rows({{0, -1}, {1, 0}}), InstanceError);
}

TEST(LapBrute, Guard) {
  auto big = bench::gen_lap(11, 5, 1);
  EXPECT_THROW(lap_brute(big), GuardError);
  EXPECT_NO_THROW(lap_brute(bench::gen_lap(4, 5, 1), 4));
}

TEST(LapSolve, RandomSixBySixAgainstBrute) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    auto prob = bench::gen_lap(6, s % 2 ? 3 : 100, s);
    auto r = lap_solve(prob);
    auto b = lap_brute(prob);
    EXPECT_EQ(r.cost, b.cost);
    EXPECT_EQ(r.assignment, b.assignment);
    EXPECT_EQ(r.cost, oracle::assignment_min(rows_of(prob.weights())).cost);
  }
}

TEST(LapSolve, RowPermutationInvariance) {
  Rng rng(3);
  for (std::uint64_t s = 0; s < 50; ++s) {
    auto prob = bench::gen_lap(5, 20, 900 + s);
    std::vector<std::size_t> sigma(5);
    std::iota(sigma.begin(), sigma.end(), 0);
    for (std::size_t k = 5; k > 1; --k) std::swap(sigma[k - 1], sigma[rng.index(k)]);
    SquareMatrix<Amount> w(5);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) w(sigma[i], j) = prob.weight(i, j);
    auto a = lap_solve(prob);
    auto b = lap_solve(AssignmentProblem::from_matrix(w));
    EXPECT_EQ(a.cost, b.cost);
    std::vector<std::size_t> moved(5);
    for (std::size_t j = 0; j < 5; ++j) moved[j] = sigma[a.assignment[j]];
    EXPECT_EQ(assignment_cost(AssignmentProblem::from_matrix(w), Assignment::from_zero_based(moved)), b.cost);
  }
}

TEST(LapSolve, ColumnShiftKeepsArgminSet) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    auto prob = bench::gen_lap(5, 4, 40 + s);
    SquareMatrix<Amount> w = prob.weights();
    for (std::size_t i = 0; i < 5; ++i) w(i, s % 5) += 13;
    auto shifted = AssignmentProblem::from_matrix(w);
    const Amount base = lap_brute(prob).cost;
    std::vector<oracle::Perm> set_a, set_b;
    oracle::for_each_perm(5, [&](const oracle::Perm& a) {
      auto as = Assignment::from_zero_based(a);
      if (assignment_cost(prob, as) == base) set_a.push_back(a);
      if (assignment_cost(shifted, as) == base + 13) set_b.push_back(a);
    });
    EXPECT_EQ(set_a, set_b);
    EXPECT_EQ(lap_solve(shifted).assignment, lap_solve(prob).assignment);
  }
}

TEST(DrpToLap, ColumnSumsMinusEntries) {
  auto w = drp_to_lap(TransferMatrix::from_rows({{0, 5}, {3, 0}}));
  EXPECT_EQ(w.weights(), AssignmentProblem::from_rows({{3, 0}, {0, 5}}).weights());
}

TEST(DrpToLap, DiagonalTransferGivesIdentity) {
  auto r = lap_solve(drp_to_lap(TransferMatrix::from_rows({{4, 0, 0}, {0, 9, 0}, {0, 0, 1}})));
  EXPECT_EQ(r.assignment, Assignment::identity(3));
  EXPECT_EQ(r.cost, 0);
}

TEST(DrpToLap, UniformTransferMakesEveryAssignmentEqual) {
  const Amount t = 3;
  const std::size_t p = 4;
  auto prob = drp_to_lap(TransferMatrix::from_rows(std::vector<std::vector<Amount>>(p, std::vector<Amount>(p, t))));
  oracle::for_each_perm(p, [&](const oracle::Perm& a) {
    EXPECT_EQ(assignment_cost(prob, Assignment::from_zero_based(a)), static_cast<Amount>((p - 1) * p) * t);
  });
}

TEST(DrpToLap, SurrogateEqualsUniformCostObjective) {
  for (std::uint64_t s = 0; s < 100; ++s) {
    const std::size_t p = 2 + s % 5;
    auto inst = bench::gen_drp(p, 1, 1, 30, s);
    auto prob = drp_to_lap(inst.transfer());
    oracle::for_each_perm(p, [&](const oracle::Perm& a) {
      auto as = Assignment::from_zero_based(a);
      EXPECT_EQ(assignment_cost(prob, as), drp_cost(inst.transfer(), CostMatrix::uniform(p), as));
    });
  }
}

// ---------------------------------------------------------------------------

TEST(DrpSolveExact, Examples) {
  auto inst = DrpInstance::make(TransferMatrix::from_rows({{0, 5}, {3, 0}}), CostMatrix::from_rows({{0, 1}, {1, 0}}));
  auto s = drp_solve_exact(inst);
  EXPECT_EQ(s.assignment.one_based(), (std::vector<std::int64_t>{2, 1}));
  EXPECT_EQ(s.cost, 0);

  auto diag = DrpInstance::make(TransferMatrix::from_rows({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}),
                                CostMatrix::from_rows({{0, 3, 1}, {4, 0, 1}, {5, 9, 0}}));
  EXPECT_EQ(drp_solve_exact(diag).assignment, Assignment::identity(3));
  EXPECT_EQ(drp_solve_exact(diag).cost, 0);

  auto anti = DrpInstance::make(TransferMatrix::from_rows({{0, 0, 6}, {0, 6, 0}, {6, 0, 0}}), CostMatrix::uniform(3));
  auto r = drp_solve_exact(anti);
  EXPECT_EQ(r.assignment.one_based(), (std::vector<std::int64_t>{3, 2, 1}));
  EXPECT_EQ(r.cost, 0);
}

TEST(DrpSolveExact, Guard) {
  auto inst = bench::gen_drp(11, 1, 2, 3, 0);
  EXPECT_THROW(drp_solve_exact(inst), GuardError);
  EXPECT_THROW(drp_solve_exact(bench::gen_drp(5, 1, 2, 3, 0), 4), GuardError);
}

TEST(DrpSolveExact, MatchesOracle) {
  for (std::uint64_t s = 0; s < 150; ++s) {
    const std::size_t p = 2 + s % 5;
    auto inst = bench::gen_drp(p, 1, 10, 20, 7000 + s);
    auto want = oracle::drp_min(rows_of(inst.transfer().entries()), rows_of(inst.cost().entries()));
    auto got = drp_solve_exact(inst);
    EXPECT_EQ(got.cost, want.cost);
    EXPECT_EQ(zero_based(got.assignment), want.perm);
  }
}

TEST(DrpSolveExact, MonotoneInCostEntries) {
  Rng rng(17);
  for (std::uint64_t s = 0; s < 100; ++s) {
    auto inst = bench::gen_drp(4, 1, 10, 20, 50 + s);
    const Amount before = drp_solve_exact(inst).cost;
    SquareMatrix<Amount> c = inst.cost().entries();
    std::size_t i = rng.index(4), j = rng.index(4);
    if (i == j) j = (j + 1) % 4;
    c(i, j) += rng.uniform_int(1, 20);
    auto after = drp_solve_exact(DrpInstance::make(inst.transfer(), CostMatrix::from_matrix(c))).cost;
    EXPECT_GE(after, before);
  }
}

TEST(DrpSolveApprox, Examples) {
  auto diag = DrpInstance::make(TransferMatrix::from_rows({{2, 0}, {0, 8}}), CostMatrix::from_rows({{0, 4}, {1, 0}}));
  EXPECT_EQ(drp_solve_approx(diag).assignment, Assignment::identity(2));
  EXPECT_EQ(drp_solve_approx(diag).cost, 0);

  auto inst = DrpInstance::make(TransferMatrix::from_rows({{0, 5}, {3, 0}}), CostMatrix::from_rows({{0, 9}, {1, 0}}));
  auto s = drp_solve_approx(inst);
  EXPECT_EQ(s.assignment.one_based(), (std::vector<std::int64_t>{2, 1}));
  EXPECT_EQ(s.cost, 0);
}

TEST(DrpSolveApprox, ReportsTrueCost) {
  for (std::uint64_t s = 0; s < 100; ++s) {
    auto inst = bench::gen_drp(5, 1, 10, 20, 300 + s);
    auto a = drp_solve_approx(inst);
    EXPECT_EQ(a.cost, drp_cost(inst.transfer(), inst.cost(), a.assignment));
    EXPECT_EQ(a.assignment, lap_solve(drp_to_lap(inst.transfer())).assignment);
  }
}

TEST(DrpSolveApprox, WithinRatioBound) {
  for (Amount r : {1, 3, 10}) {
    for (std::uint64_t s = 0; s < 100; ++s) {
      const std::size_t p = 2 + s % 6;
      auto inst = bench::gen_drp(p, 1, r, 50, 11 * s + r);
      auto ex = drp_solve_exact(inst);
      auto ap = drp_solve_approx(inst);
      EXPECT_GE(ap.cost, ex.cost);
      EXPECT_TRUE(ratio_bound(inst.cost()).admits(ap.cost, ex.cost));
      EXPECT_LE(ap.cost, r * ex.cost);
    }
  }
}

TEST(RatioBound, Examples) {
  EXPECT_EQ(ratio_bound(CostMatrix::uniform(4, 6)).value(), 1.0);
  auto c = CostMatrix::from_rows({{0, 1, 2}, {3, 0, 4}, {5, 9, 0}});
  auto r = ratio_bound(c);
  EXPECT_EQ(r.numerator, 9);
  EXPECT_EQ(r.denominator, 1);
  auto reduced = ratio_bound(CostMatrix::from_rows({{0, 4}, {6, 0}}));
  EXPECT_EQ(reduced.numerator, 3);
  EXPECT_EQ(reduced.denominator, 2);
  for (std::uint64_t s = 0; s < 50; ++s) EXPECT_GE(ratio_bound(bench::gen_drp(4, 1, 50, 1, s).cost()).value(), 1.0);
}

TEST(RatioBound, AdmitsIsExact) {
  Ratio r{3, 2};
  EXPECT_TRUE(r.admits(3, 2));
  EXPECT_FALSE(r.admits(4, 2));
  EXPECT_TRUE(r.admits(0, 0));
  EXPECT_FALSE(r.admits(1, 0));
}

// ---------------------------------------------------------------------------

std::vector<std::size_t> ones_in_row(const TransferMatrix& t, std::size_t i) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < t.p(); ++j)
    if (t(i, j) == 1) out.push_back(j + 1);
  return out;
}

TEST(TspFb, OddPattern) {
  auto t = tspfb_transfer_pattern(3);
  for (std::size_t i = 1; i <= 3; ++i) {
    std::vector<std::size_t> want = {1 + (i + 1) % 3, 1 + (i - 1) % 3};
    std::sort(want.begin(), want.end());
    EXPECT_EQ(ones_in_row(t, i - 1), want) << "row " << i;
  }
}

TEST(TspFb, EvenPattern) {
  auto t = tspfb_transfer_pattern(4);
  EXPECT_EQ(ones_in_row(t, 0), (std::vector<std::size_t>{2, 3}));
  EXPECT_EQ(ones_in_row(t, 1), (std::vector<std::size_t>{1, 4}));
}

TEST(TspFb, PatternIsOneHamiltonCycle) {
  for (std::size_t n = 3; n <= 12; ++n) {
    auto t = tspfb_transfer_pattern(n);
    for (std::size_t i = 0; i < n; ++i) {
      Amount row = 0, col = 0;
      for (std::size_t j = 0; j < n; ++j) {
        EXPECT_TRUE(t(i, j) == 0 || t(i, j) == 1);
        row += t(i, j);
        col += t(j, i);
      }
      EXPECT_EQ(row, 2);
      EXPECT_EQ(col, 2);
    }
    // Walk the 2-regular bipartite graph from row 0; a single cycle visits
    // all 2n vertices before returning.
    std::size_t r = 0, prev_c = n, steps = 0;
    do {
      auto cs = ones_in_row(t, r);
      std::size_t c = cs[0] - 1 == prev_c ? cs[1] - 1 : cs[0] - 1;
      std::size_t next_r = n;
      for (std::size_t k = 0; k < n; ++k)
        if (k != r && t(k, c) == 1) next_r = k;
      prev_c = c;
      r = next_r;
      steps += 2;
    } while (r != 0 && steps <= 2 * n);
    EXPECT_EQ(steps, 2 * n) << "n=" << n;
  }
}

TEST(TspFb, RejectsTooSmall) {
  EXPECT_THROW(tspfb_transfer_pattern(2), InstanceError);
  EXPECT_THROW(tspfb_to_drp(TspFbInstance::from_rows({{1, 2}, {3, 4}})), InstanceError);
  EXPECT_THROW(TspFbInstance::from_rows({{1, 0}, {3, 4}}), InstanceError);
}

TEST(TspFb, ReductionCopiesWeights) {
  auto t = bench::gen_tspfb(4, 1, 9, 3);
  auto d = tspfb_to_drp(t);
  EXPECT_EQ(d.transfer(), tspfb_transfer_pattern(4));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(d.cost()(i, j), t.weight(i, j));
}

TEST(TspFbBrute, Examples) {
  EXPECT_EQ(tspfb_brute(TspFbInstance::from_rows({{1, 2}, {3, 4}})), 10);
  for (std::size_t n = 2; n <= 5; ++n) {
    std::vector<std::vector<Amount>> w(n, std::vector<Amount>(n, 7));
    EXPECT_EQ(tspfb_brute(TspFbInstance::from_rows(w)), static_cast<Amount>(2 * n * 7));
  }
  EXPECT_THROW(tspfb_brute(bench::gen_tspfb(7, 1, 3, 0)), GuardError);
}

TEST(TspFbBrute, MatchesIndependentEnumeration) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const std::size_t n = 2 + s % 4;
    auto t = bench::gen_tspfb(n, 1, 30, s);
    EXPECT_EQ(tspfb_brute(t), oracle::bipartite_tsp(rows_of(t.weights())));
  }
}

TEST(TspFbReduction, OddThreeIsEquivalent) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    auto t = bench::gen_tspfb(3, 1, 20, 100 + s);
    EXPECT_EQ(tspfb_brute(t), drp_solve_exact(tspfb_to_drp(t)).cost);
  }
}

// The reduced objective is linear in the assignment: with B[j][k] =
// sum_i T[i][j] * C[i][k], cost(a) = sum_j B[j][a[j]]. An assignment
// problem is solvable in polynomial time, which is why equivalence with the
// Hamilton-cycle minimum cannot hold for every n (see acceptance criterion 3).
TEST(TspFbReduction, ReducedInstanceIsAnAssignmentProblem) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const std::size_t n = 3 + s % 3;
    auto d = tspfb_to_drp(bench::gen_tspfb(n, 1, 20, 400 + s));
    oracle::Mat b(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) b[k][j] += d.transfer()(i, j) * d.cost()(i, k);
    EXPECT_EQ(drp_solve_exact(d).cost, oracle::assignment_min(b).cost);
  }
}

}  // namespace
}  // namespace empc
