#include <gtest/gtest.h>

#include "polystrata/hyperbolic.hpp"
#include "polystrata/resonance.hpp"

using namespace polystrata;

TEST(Hyperbolic, BackendNames) {
  for (auto b : {HypBackend::cells, HypBackend::order_complex, HypBackend::delta}) EXPECT_EQ(parse_backend(to_string(b)), b);
  EXPECT_FALSE(parse_backend("simplicial").has_value());
}

TEST(Hyperbolic, BackendsAgree) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& lambda : NumberPartition::all_of(n)) {
      const auto cells = hyp_homology(lambda, HypBackend::cells);
      EXPECT_EQ(hyp_homology(lambda, HypBackend::order_complex), cells) << lambda.to_string();
      EXPECT_EQ(hyp_homology(lambda, HypBackend::delta), cells) << lambda.to_string();
    }
  }
}

TEST(Hyperbolic, DefaultRunsEveryBackendWithinBudget) {
  const auto r = hyp_homology(NumberPartition({1, 1, 2}));
  EXPECT_EQ(r.ran.size(), 3u);
  EXPECT_TRUE(r.skipped.empty());
  EXPECT_EQ(r.per_backend.size(), 3u);
}

TEST(Hyperbolic, BudgetSkipsOrderComplex) {
  const NumberPartition lambda({1, 1, 1, 1, 2});
  EXPECT_GT(order_complex_face_estimate(lambda), 1.0);
  const auto r = hyp_homology(lambda, 1.0);
  ASSERT_EQ(r.skipped.size(), 1u);
  EXPECT_EQ(r.skipped[0], HypBackend::order_complex);
  EXPECT_EQ(r.result, hyp_homology(lambda, HypBackend::order_complex));
}

TEST(Hyperbolic, FaceEstimateIsExactChainCount) {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& lambda : NumberPartition::all_of(n)) {
      const auto oc = order_complex(c_lambda_poset(lambda).poset);
      EXPECT_EQ(order_complex_face_estimate(lambda), static_cast<double>(oc.face_count())) << lambda.to_string();
    }
  }
}

TEST(Hyperbolic, HookPredictionsSmall) {
  for (int n = 2; n <= 9; ++n) {
    for (int k = 2; k <= n; ++k) {
      const auto p = hook_prediction(n, k).compactification;
      const auto h = hyp_homology(NumberPartition::hook(n, k)).result;
      EXPECT_TRUE(p.matches(h)) << "n=" << n << " k=" << k << " " << h.to_string();
      // Independent restatement of the case table.
      if (n % k == 1) {
        EXPECT_EQ(h.sphere_dimension(), 2 * (n - 1) / k);
      } else if (n % k == 0) {
        EXPECT_EQ(h.sphere_dimension(), 2 * n / k - 1);
      } else {
        EXPECT_TRUE(h.is_zero());
      }
    }
  }
  EXPECT_THROW(hook_prediction(3, 1), InvalidInput);
}

TEST(Hyperbolic, ResonanceFreePredictions) {
  for (int n = 1; n <= 9; ++n) {
    for (const auto& lambda : NumberPartition::all_of(n)) {
      const auto p = resonance_free_prediction(lambda);
      if (!is_free_of_resonances(lambda)) {
        EXPECT_EQ(p.kind, Prediction::Kind::none);
        continue;
      }
      const auto h = hyp_homology(lambda).result;
      if (lambda.has_repeated_part()) {
        EXPECT_TRUE(h.is_zero()) << lambda.to_string();
      } else {
        EXPECT_EQ(h.sphere_dimension(), static_cast<int>(lambda.length())) << lambda.to_string();
      }
    }
  }
}
