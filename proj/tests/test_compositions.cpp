#include <gtest/gtest.h>

#include <set>

#include "polystrata/compositions.hpp"

using namespace polystrata;

namespace {

std::uint64_t merged_mask(const std::vector<int>& parts) {
  int n = 0;
  for (int p : parts) n += p;
  std::uint64_t cuts = 0;
  int s = 0;
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    s += parts[i];
    cuts |= std::uint64_t{1} << (s - 1);
  }
  const std::uint64_t full = n > 1 ? (std::uint64_t{1} << (n - 1)) - 1 : 0;
  return full & ~cuts;
}

std::set<std::uint64_t> union_closure(const NumberPartition& lambda) {
  std::vector<int> parts = lambda.parts();
  std::set<std::uint64_t> gens;
  do {
    gens.insert(merged_mask(parts));
  } while (std::next_permutation(parts.begin(), parts.end()));
  std::set<std::uint64_t> closed = gens;
  for (bool grew = true; grew;) {
    grew = false;
    for (auto a : std::vector<std::uint64_t>(closed.begin(), closed.end())) {
      for (auto g : gens) grew |= closed.insert(a | g).second;
    }
  }
  closed.erase(merged_mask({lambda.weight()}));
  return closed;
}

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST(Compositions, ParseAndPrint) {
  EXPECT_EQ(Composition::parse("2,1,3").parts(), (std::vector<int>{2, 1, 3}));
  EXPECT_EQ(NumberPartition::parse("3,1,2").parts(), (std::vector<int>{1, 2, 3}));
  EXPECT_TRUE(Composition::parse("()").empty());
  EXPECT_TRUE(Composition::parse("").empty());
  EXPECT_EQ(Composition().to_string(), "()");
  EXPECT_THROW(Composition::parse("1,0"), InvalidInput);
  EXPECT_THROW(Composition::parse("1,,2"), InvalidInput);
  EXPECT_THROW(Composition::parse("a"), InvalidInput);
  EXPECT_THROW(NumberPartition::parse("-1"), InvalidInput);
}

TEST(Compositions, CountsByWeightAndType) {
  for (int n = 1; n <= 12; ++n) EXPECT_EQ(all_compositions(n).size(), std::size_t{1} << (n - 1));
  for (int n = 1; n <= 9; ++n) {
    for (const auto& lambda : NumberPartition::all_of(n)) {
      std::size_t expected = factorial(lambda.length());
      for (auto [value, mult] : lambda.multiplicities()) expected /= factorial(static_cast<std::size_t>(mult));
      EXPECT_EQ(compositions_of_type(lambda).size(), expected) << lambda.to_string();
    }
  }
  // Partition numbers p(1..10).
  const std::vector<std::size_t> p{1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(NumberPartition::all_of(n).size(), p[static_cast<std::size_t>(n - 1)]);
}

TEST(Compositions, MergedSetRoundTrip) {
  for (int n = 1; n <= 10; ++n) {
    for (const auto& c : all_compositions(n)) {
      const auto a = merged_set(c);
      EXPECT_EQ(a.mask, merged_mask(c.parts()));
      EXPECT_EQ(composition_from_merged_set(a), c);
      EXPECT_EQ(a.size(), n - static_cast<int>(c.length()));
    }
  }
  const auto a = MergedSet::from_positions(5, {1, 3, 4});
  EXPECT_EQ(composition_from_merged_set(a), Composition({2, 3}));
  EXPECT_THROW(MergedSet::from_positions(5, {5}), InvalidInput);
}

TEST(Compositions, CoarseningMatchesPartialSums) {
  for (int n = 1; n <= 7; ++n) {
    const auto all = all_compositions(n);
    for (const auto& coarse : all) {
      for (const auto& fine : all) {
        const auto cs = coarse.partial_sums();
        const auto fs = fine.partial_sums();
        const bool subset = std::includes(fs.begin(), fs.end(), cs.begin(), cs.end());
        EXPECT_EQ(is_coarsening(coarse, fine), subset);
      }
    }
  }
}

TEST(Compositions, CLambdaIsUnionClosure) {
  for (int n = 1; n <= 9; ++n) {
    for (const auto& lambda : NumberPartition::all_of(n)) {
      const auto oracle = union_closure(lambda);
      const auto cp = c_lambda_poset(lambda);
      std::set<std::uint64_t> got;
      for (const auto& m : cp.merged) got.insert(m.mask);
      EXPECT_EQ(got, oracle) << lambda.to_string();
      for (std::size_t i = 0; i < cp.merged.size(); ++i) {
        EXPECT_EQ(composition_from_merged_set(cp.merged[i]), cp.compositions[i]);
        for (std::size_t j = 0; j < cp.merged.size(); ++j) {
          EXPECT_EQ(cp.poset.leq(i, j), cp.merged[i].subset_of(cp.merged[j]));
        }
      }
    }
  }
}

TEST(Compositions, CLambdaElementsAreJoinsOfMinimalElements) {
  for (int n = 2; n <= 8; ++n) {
    for (const auto& lambda : NumberPartition::all_of(n)) {
      const auto cp = c_lambda_poset(lambda);
      const auto mins = cp.poset.minimal_elements();
      for (std::size_t i = 0; i < cp.merged.size(); ++i) {
        std::uint64_t joined = 0;
        for (auto m : mins) {
          if (cp.poset.leq(m, i)) joined |= cp.merged[m].mask;
        }
        EXPECT_EQ(joined, cp.merged[i].mask);
      }
    }
  }
}

TEST(Compositions, TwoThreeIsAnAntichain) {
  const auto cp = c_lambda_poset(NumberPartition({2, 3}));
  ASSERT_EQ(cp.compositions.size(), 2u);
  EXPECT_TRUE(cp.poset.covers().empty());
  std::set<Composition> got(cp.compositions.begin(), cp.compositions.end());
  EXPECT_EQ(got, (std::set<Composition>{Composition({2, 3}), Composition({3, 2})}));
}

TEST(Compositions, CoarseningPosetOracle) {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& lambda : NumberPartition::all_of(n)) {
      std::set<Composition> oracle;
      const auto types = compositions_of_type(lambda);
      for (const auto& c : all_compositions(n)) {
        if (c.length() < 2) continue;
        for (const auto& fine : types) {
          if (is_coarsening(c, fine)) {
            oracle.insert(c);
            break;
          }
        }
      }
      const auto cp = coarsening_poset(lambda);
      EXPECT_EQ(std::set<Composition>(cp.compositions.begin(), cp.compositions.end()), oracle) << lambda.to_string();
      // The join-closure sits inside and shares its homology.
      const auto cl = c_lambda_poset(lambda);
      for (const auto& c : cl.compositions) EXPECT_TRUE(oracle.count(c));
      EXPECT_EQ(simplicial_homology(order_complex(cp.poset)), simplicial_homology(order_complex(cl.poset)))
          << lambda.to_string();
    }
  }
  // A value repeated three times is where the two posets part ways.
  EXPECT_EQ(c_lambda_poset(NumberPartition({1, 1, 3})).compositions.size(), 5u);
  EXPECT_EQ(coarsening_poset(NumberPartition({1, 1, 3})).compositions.size(), 7u);
}

TEST(Compositions, SetPartitionJoin) {
  const SetPartition a(4, {{1, 2}, {3}, {4}});
  const SetPartition b(4, {{1}, {2, 3}, {4}});
  const auto j = partition_join(a, b);
  EXPECT_EQ(j, SetPartition(4, {{1, 2, 3}, {4}}));
  EXPECT_TRUE(is_interval_partition(j));
  EXPECT_EQ(composition_of(j), Composition({3, 1}));
  EXPECT_FALSE(is_interval_partition(SetPartition(3, {{1, 3}, {2}})));
  EXPECT_THROW(composition_of(SetPartition(3, {{1, 3}, {2}})), InvalidInput);
  EXPECT_THROW(SetPartition(3, {{1, 2}, {2, 3}}), InvalidInput);
  EXPECT_EQ(SetPartition::from_composition(Composition({2, 1})).to_string(), "|1 2|3|");
}

TEST(Compositions, DeltaFacesAreCoarsenings) {
  for (int n = 2; n <= 8; ++n) {
    for (const auto& lambda : NumberPartition::all_of(n)) {
      const auto delta = delta_lambda_complex(lambda);
      EXPECT_EQ(delta.complex.face_count(), coarsening_poset(lambda).compositions.size()) << lambda.to_string();
      EXPECT_TRUE(facet_labels_join_to_face_labels(delta));
      for (const auto& f : delta.complex.all_faces()) {
        std::vector<int> sums(f.begin(), f.end());
        EXPECT_EQ(delta.label(f).partial_sums(), sums);
      }
    }
  }
}

TEST(Compositions, ClosureReductionMatchesCLambda) {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& lambda : NumberPartition::all_of(n)) {
      const auto r = verify_closure_reduction(lambda);
      EXPECT_TRUE(r.ok()) << lambda.to_string();
    }
  }
}
