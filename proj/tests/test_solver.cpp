#include <gtest/gtest.h>

#include <cmath>

#include "cayley/solver.hpp"

namespace cayley {
namespace {

// Reference values: tests/oracles/frozen_values.py.
constexpr double kInvSqrt6 = 0.40824829046386302;
constexpr double kTIhStar = 1.8291361594235169;  // k=2, beta=J=1
constexpr double kBF = 0.32570047740516724;      // k=2, beta=J=1
constexpr double kBAF = 2.2480177208637747;      // k=2, beta=1, J=-1

struct AltRef {
  double theta, h1, h2;
};
constexpr AltRef kAltK2Q1[] = {
    {0.75, 0.51187461509367371, 0.73899794385173863},
    {0.8, 0.79536546122390563, 1.1779284608657626},
    {0.9, 1.3535549527958657, 2.1291090072494251},
    {0.95, 1.7776321318856524, 2.9155328437370243},
};

void expect_all_residuals_small(const SolutionSet& set) {
  for (const auto& s : set.solutions) EXPECT_LE(s.residual, 1e-12) << to_string(s.branch);
}

TEST(ThetaC, Examples) {
  EXPECT_NEAR(theta_c(2, 1), std::sqrt(0.5), 1e-15);
  EXPECT_EQ(theta_c(4, 1), 0.5);
  EXPECT_NEAR(theta_c(3, 2), kInvSqrt6, 1e-15);
  EXPECT_THROW(theta_c(2, 2), std::invalid_argument);
  EXPECT_THROW(theta_c(2, 0), std::invalid_argument);
}

TEST(SolveAlternating, Examples) {
  const auto below = solve_alternating(2, 1, 0.5);
  ASSERT_EQ(below.size(), 1u);
  EXPECT_EQ(below.solutions[0].branch, Branch::Zero);
  EXPECT_EQ(below.solutions[0].first, 0.0);

  EXPECT_EQ(solve_alternating(2, 1, theta_c(2, 1)).size(), 1u);

  const auto above = solve_alternating(2, 1, 0.9);
  ASSERT_EQ(above.size(), 3u);
  const auto cf = closed_form_k2q1(0.9);
  EXPECT_NEAR(above.find(Branch::Plus)->first, cf.h1_star, 1e-10);
  EXPECT_NEAR(above.find(Branch::Plus)->second, cf.h2_star, 1e-10);
  expect_all_residuals_small(above);
}

TEST(SolveAlternating, FrozenValues) {
  for (const auto& ref : kAltK2Q1) {
    const auto set = solve_alternating(2, 1, ref.theta);
    const Solution* s = set.find(Branch::Plus);
    ASSERT_NE(s, nullptr);
    EXPECT_NEAR(s->first, ref.h1, 1e-12);
    EXPECT_NEAR(s->second, ref.h2, 1e-12);
  }
  const auto k3 = solve_alternating_coupling(3, 1, 1.5);
  const Solution* s = k3.find(Branch::Plus);
  ASSERT_NE(s, nullptr);
  EXPECT_NEAR(s->first, 1.4899847938800879, 1e-12);
  EXPECT_NEAR(s->second, 3.4489697593313449, 1e-12);
}

TEST(SolveAlternating, BifurcationSharpness) {
  for (int k : {2, 3, 4}) {
    for (int q = 1; q < k; ++q) {
      const double tc = theta_c(k, q);
      EXPECT_EQ(solve_alternating(k, q, tc * (1 - 1e-3)).size(), 1u) << k << "," << q;
      const auto set = solve_alternating(k, q, tc * (1 + 1e-3));
      EXPECT_EQ(set.size(), 3u) << k << "," << q;
      expect_all_residuals_small(set);
    }
  }
}

TEST(SolveAlternating, OddnessAndNegativeTheta) {
  for (double t : {0.8, -0.8, 0.95, -0.95}) {
    const auto set = solve_alternating(3, 1, t);
    ASSERT_EQ(set.size(), 3u);
    const Solution* p = set.find(Branch::Plus);
    const Solution* m = set.find(Branch::Minus);
    EXPECT_EQ(p->first, -m->first);
    EXPECT_EQ(p->second, -m->second);
    EXPECT_GT(p->second, 0.0);
    if (t < 0) EXPECT_LT(p->first, 0.0);
    expect_all_residuals_small(set);
  }
}

TEST(SolveAlternating, StrongCoupling) {
  for (double K : {10.0, 20.0, 40.0}) {
    const auto set = solve_alternating_coupling(2, 1, K);
    ASSERT_EQ(set.size(), 3u);
    const Solution* s = set.find(Branch::Plus);
    EXPECT_NEAR(s->first, K, 1e-6);
    EXPECT_NEAR(s->second, 2 * K - std::log(2.0), 1e-6);
    EXPECT_LE(s->residual, 1e-12);
  }
}

TEST(AlternatingMap, DerivativeAtZero) {
  const double eps = 1e-5;
  for (int k : {2, 3, 5}) {
    for (int q = 1; q < k; ++q) {
      for (double t : {0.2, 0.5, -0.7}) {
        const double K = std::atanh(t);
        const double fd =
            (alternating_map(eps, k, q, K) - alternating_map(-eps, k, q, K)) / (2 * eps);
        EXPECT_NEAR(std::abs(fd), k * q * t * t, 1e-6);
      }
    }
  }
}

TEST(ClosedFormK2Q1, Examples) {
  const auto near = closed_form_k2q1(std::sqrt(0.5) + 1e-9);
  EXPECT_LT(near.h1_star, 1e-3);
  EXPECT_LT(near.h2_star, 1e-3);
  const auto cf = closed_form_k2q1(0.9);
  EXPECT_NEAR(cf.h2_star, 2 * f_theta(cf.h1_star, 0.9), 1e-12);
  EXPECT_NEAR(cf.h1_star, f_theta(cf.h2_star, 0.9), 1e-12);
  for (const auto& ref : kAltK2Q1) {
    const auto v = closed_form_k2q1(ref.theta);
    EXPECT_NEAR(v.h1_star, ref.h1, 1e-10);
    EXPECT_NEAR(v.h2_star, ref.h2, 1e-10);
  }
  EXPECT_THROW(closed_form_k2q1(0.7), std::domain_error);
}

TEST(SolveTI, Examples) {
  EXPECT_EQ(solve_TI(ModelParams(2, 1.0, 0.0, std::atanh(0.5))).size(), 1u);
  EXPECT_EQ(solve_TI(ModelParams(2, 1.0, 0.0, 0.4)).size(), 1u);

  const ModelParams p(2, 1.0, 0.0, 1.0);
  const auto set = solve_TI(p);
  ASSERT_EQ(set.size(), 3u);
  EXPECT_NEAR(set.find(Branch::HMax)->first, kTIhStar, 1e-12);
  EXPECT_NEAR(set.find(Branch::HMin)->first, -kTIhStar, 1e-12);
  EXPECT_EQ(set.find(Branch::H0)->first, 0.0);
  expect_all_residuals_small(set);

  const auto high = solve_TI(p.with_B(kBF * 1.01));
  ASSERT_EQ(high.size(), 1u);
  EXPECT_EQ(high.solutions[0].branch, Branch::Unique);
}

TEST(SolveTI, CountChangesAtOneOverK) {
  for (int k : {2, 3, 4}) {
    const double tc = 1.0 / k;
    EXPECT_EQ(solve_TI(ModelParams(k, std::atanh(tc - 1e-3), 0.0, 1.0)).size(), 1u);
    EXPECT_EQ(solve_TI(ModelParams(k, std::atanh(tc + 1e-3), 0.0, 1.0)).size(), 3u);
  }
}

TEST(SolvePeriodic, Examples) {
  const ModelParams fm(2, 1.0, 0.0, 1.0);
  const auto per = solve_periodic(fm);
  const auto ti = solve_TI(fm);
  ASSERT_EQ(per.size(), ti.size());
  for (std::size_t i = 0; i < per.size(); ++i) {
    EXPECT_EQ(per.solutions[i].branch, Branch::Diagonal);
    EXPECT_NEAR(per.solutions[i].first, ti.solutions[i].first, 1e-12);
  }

  const auto afm = solve_periodic(ModelParams(2, -1.0, 0.0, 1.0));
  const Solution* up = afm.find(Branch::CycleAscending);
  const Solution* down = afm.find(Branch::CycleDescending);
  ASSERT_NE(up, nullptr);
  ASSERT_NE(down, nullptr);
  EXPECT_NEAR(up->first, -kTIhStar, 1e-12);
  EXPECT_NEAR(up->second, kTIhStar, 1e-12);
  EXPECT_EQ(down->first, up->second);
  expect_all_residuals_small(afm);

  const auto free_spins = solve_periodic(ModelParams(2, 0.0, 0.0, 1.0));
  ASSERT_EQ(free_spins.size(), 1u);
  EXPECT_EQ(free_spins.solutions[0].first, 0.0);
}

TEST(SolvePeriodic, AntiferroTransitionNearMinusOneOverK) {
  for (int k : {2, 3}) {
    const double t = 1.0 / k;
    EXPECT_EQ(solve_periodic(ModelParams(k, -std::atanh(t - 1e-3), 0.0, 1.0))
                  .count(Branch::CycleAscending),
              0u);
    EXPECT_EQ(solve_periodic(ModelParams(k, -std::atanh(t + 1e-3), 0.0, 1.0))
                  .count(Branch::CycleAscending),
              1u);
  }
}

TEST(Spinodals, FrozenValuesAndCountTransitions) {
  const ModelParams fm(2, 1.0, 0.0, 1.0);
  EXPECT_NEAR(spinodal_BF(fm), kBF, 1e-14);
  EXPECT_EQ(solve_TI(fm.with_B(0.99 * kBF)).size(), 3u);
  EXPECT_EQ(solve_TI(fm.with_B(1.01 * kBF)).size(), 1u);
  EXPECT_EQ(solve_TI(fm.with_B(-0.99 * kBF)).size(), 3u);

  const ModelParams afm(2, -1.0, 0.0, 1.0);
  EXPECT_NEAR(spinodal_BAF(afm), kBAF, 1e-13);
  EXPECT_EQ(solve_periodic(afm.with_B(0.99 * kBAF)).count(Branch::CycleAscending), 1u);
  EXPECT_EQ(solve_periodic(afm.with_B(1.01 * kBAF)).count(Branch::CycleAscending), 0u);

  EXPECT_THROW(spinodal_BF(afm), std::domain_error);
  EXPECT_THROW(spinodal_BAF(fm), std::domain_error);
}

TEST(Spinodals, VanishAtThreshold) {
  double previous_f = INFINITY, previous_af = INFINITY;
  for (double eps : {1e-4, 1e-6, 1e-8, 1e-10}) {
    const double beta = std::atanh(0.5 + eps);
    const double bf = spinodal_BF(ModelParams(2, 1.0, 0.0, beta));
    const double baf = spinodal_BAF(ModelParams(2, -1.0, 0.0, beta));
    EXPECT_LT(bf, previous_f);
    EXPECT_LT(baf, previous_af);
    previous_f = bf;
    previous_af = baf;
  }
  EXPECT_LT(previous_f, 1e-9);
  EXPECT_LT(previous_af, 1e-4);
}

TEST(BOfH, Examples) {
  const ModelParams p(2, 1.0, 0.0, 1.0);
  EXPECT_EQ(B_of_h(0.0, p), 0.0);
  const double B = B_of_h(0.5, p);
  EXPECT_LE(std::abs(ti_residual(p.with_B(B), 0.5)), 1e-12);
  EXPECT_NEAR(B_of_h(-0.3, p), -B_of_h(0.3, p), 1e-15);
  EXPECT_THROW(B_of_h(2.0, p), std::domain_error);
}

TEST(BOfH, RoundTripAndTurningPoint) {
  const ModelParams p(3, 1.0, 0.0, 0.8);
  const double hs = spinodal_h(p);
  EXPECT_NEAR(B_of_h(hs, p), -spinodal_BF(p), 1e-12);
  for (double h = -2.3; h <= 2.3; h += 0.1) {
    EXPECT_LE(std::abs(ti_residual(p.with_B(B_of_h(h, p)), h)), 1e-12) << h;
  }
}

}  // namespace
}  // namespace cayley
