#include <gtest/gtest.h>

#include <set>

#include "polystrata/hyperbolic.hpp"
#include "polystrata/strata.hpp"

using namespace polystrata;

namespace {

HomologyResult sphere(int d) {
  HomologyResult h;
  h.set(d, 1);
  return h;
}

}  // namespace

TEST(Strata, CellDimensionAndLabel) {
  const StratumCell c{Composition({1, 1}), 4};
  EXPECT_EQ(c.dimension(), 4);
  EXPECT_EQ(c.to_string(), "(1,1)@4");
  EXPECT_EQ((StratumCell{Composition(), 2}).dimension(), 2);
}

TEST(Strata, TotalCellCount) {
  for (int n = 1; n <= 12; ++n) {
    std::size_t expected = n % 2 == 0 ? 1 : 0;
    for (int l = 1; l <= n; ++l) {
      if ((n - l) % 2 == 0) expected += std::size_t{1} << (l - 1);
    }
    EXPECT_EQ(total_cell_count(n), expected);
  }
}

TEST(Strata, ClosureIsClosedUnderBoundary) {
  for (int n = 1; n <= 8; ++n) {
    for (int l = n % 2; l <= n; l += 2) {
      for (const auto& lambda : l == 0 ? std::vector<NumberPartition>{NumberPartition()} : NumberPartition::all_of(l)) {
        const auto cells = closure_cells(lambda, n);
        const std::set<StratumCell> in(cells.begin(), cells.end());
        for (const auto& c : compositions_of_type(lambda)) EXPECT_TRUE(in.count(StratumCell{c, n}));
        for (const auto& cell : cells) {
          for (const auto& [face, coef] : boundary(cell)) {
            EXPECT_TRUE(in.count(face)) << cell.to_string() << " -> " << face.to_string();
            EXPECT_EQ(face.dimension(), cell.dimension() - 1);
          }
        }
      }
    }
  }
}

TEST(Strata, BoundarySquaredVanishes) {
  for (int n = 1; n <= 10; ++n) {
    for (int l = n % 2; l <= n; l += 2) {
      for (const auto& c : l == 0 ? std::vector<Composition>{Composition()} : all_compositions(l)) {
        EXPECT_TRUE(boundary_squared(StratumCell{c, n}).empty()) << c.to_string() << "@" << n;
      }
    }
  }
}

TEST(Strata, LiteralRunRuleBreaksBoundarySquared) {
  const auto sq = boundary_squared(StratumCell{Composition({1, 1}), 4}, RunParity::literal);
  ASSERT_EQ(sq.size(), 1u);
  EXPECT_EQ(sq[0].first, (StratumCell{Composition({2, 2}), 4}));
  EXPECT_EQ(sq[0].second, -1);
  EXPECT_THROW(pol_chain_complex(NumberPartition({1, 1}), 4, RunParity::literal), InvariantViolation);
}

TEST(Strata, GeometricExamples) {
  EXPECT_TRUE(pol_homology(NumberPartition(), 2).is_zero());
  EXPECT_EQ(pol_homology(NumberPartition({2}), 4), sphere(3));
  EXPECT_EQ(pol_homology(NumberPartition({2}), 2), sphere(1));
  EXPECT_EQ(pol_homology(NumberPartition({1}), 1), sphere(1));
}

TEST(Strata, FullDegreeMatchesOrderComplex) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& lambda : NumberPartition::all_of(n)) {
      EXPECT_EQ(pol_homology(lambda, n), hyp_homology(lambda, HypBackend::order_complex)) << lambda.to_string();
    }
  }
}

TEST(Strata, RejectsBadParity) {
  EXPECT_THROW(pol_chain_complex(NumberPartition({2}), 3), InvalidInput);
  EXPECT_THROW(pol_chain_complex(NumberPartition({2, 2}), 2), InvalidInput);
}

TEST(Strata, ComplementByDuality) {
  EXPECT_EQ(complement_cohomology(NumberPartition({2}), 2).homology.betti(0), 1u);
  EXPECT_EQ(complement_cohomology(NumberPartition({2}), 4).homology.betti(0), 1u);
  const auto x = pol_homology(NumberPartition({1, 1}), 4);
  const auto t = complement_cohomology(NumberPartition({1, 1}), 4);
  for (int q = 0; q < 4; ++q) {
    EXPECT_EQ(t.homology.betti(q), x.betti(4 - q - 1));
    EXPECT_EQ(t.cohomology.betti(q), x.betti(4 - q - 1));
  }
  EXPECT_THROW(complement_cohomology(NumberPartition({1}), 1), InvalidInput);
}

TEST(Strata, ComplementEulerCharacteristic) {
  // Reduced Euler characteristics of a compact set and its complement in S^n
  // satisfy chi(X) = (-1)^{n+1} chi(S^n \ X).
  for (int n = 2; n <= 7; ++n) {
    for (int l = n % 2 == 0 ? 2 : 1; l <= n; l += 2) {
      for (const auto& lambda : NumberPartition::all_of(l)) {
        if (closure_cells(lambda, n).size() == total_cell_count(n)) continue;
        const auto x = pol_homology(lambda, n);
        const auto t = complement_cohomology(lambda, n);
        const long sign = n % 2 == 0 ? -1 : 1;
        EXPECT_EQ(x.euler_characteristic(), sign * t.homology.euler_characteristic()) << lambda.to_string() << "@" << n;
      }
    }
  }
}

TEST(Strata, CellPosetMatchesBoundarySupport) {
  const auto cells = closure_cells(NumberPartition({2}), 4);
  const auto p = stratum_cell_poset(NumberPartition({2}), 4);
  // A double root times a quadratic degenerates to (2,2), then to (4).
  EXPECT_EQ(p.size(), cells.size());
  EXPECT_EQ(p.labels(), (std::vector<std::string>{"4", "2,2", "2"}));
  EXPECT_EQ(p.covers().size(), 2u);
}

TEST(Strata, StabilizationColumns) {
  const auto r = stabilization_report(NumberPartition({2}), 2, 8);
  ASSERT_EQ(r.columns.size(), 4u);
  ASSERT_EQ(r.first_difference.size(), 3u);
  for (const auto& d : r.first_difference) EXPECT_FALSE(d.has_value());
  EXPECT_GT(r.union_poset.size(), 0u);
}
