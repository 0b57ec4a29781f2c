#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "polystrata/homology.hpp"
#include "polystrata/poset.hpp"

using namespace polystrata;

namespace {

Poset chain(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<CoverPair> covers;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    if (i) covers.emplace_back(i - 1, i);
  }
  return Poset::from_covers(labels, covers);
}

// Boolean lattice of subsets of {0..k-1}, empty and full removed.
Poset proper_boolean(std::size_t k) {
  std::vector<std::string> labels;
  std::vector<unsigned> masks;
  for (unsigned m = 1; m + 1 < (1u << k); ++m) {
    masks.push_back(m);
    labels.push_back(std::to_string(m));
  }
  return Poset::from_order(labels, [&](std::size_t a, std::size_t b) {
    return masks[a] != masks[b] && (masks[a] & masks[b]) == masks[a];
  });
}

}  // namespace

TEST(Poset, RejectsCyclesAndRedundantCovers) {
  EXPECT_THROW(Poset::from_covers({"a", "b"}, {{0, 1}, {1, 0}}), InvalidInput);
  EXPECT_THROW(Poset::from_covers({"a"}, {{0, 0}}), InvalidInput);
  EXPECT_THROW(Poset::from_covers({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}}), InvalidInput);
  EXPECT_THROW(Poset::from_covers({"a", "b"}, {{0, 1}, {0, 1}}), InvalidInput);
}

TEST(Poset, ChainComparisons) {
  const Poset p = chain(5);
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) EXPECT_EQ(p.less(i, j), i < j);
  }
  EXPECT_EQ(p.ranks(), (std::vector<std::size_t>{0, 1, 2, 3, 4}));
  EXPECT_EQ(p.minimal_elements(), std::vector<std::size_t>{0});
  EXPECT_EQ(p.maximal_elements(), std::vector<std::size_t>{4});
}

TEST(Poset, FromOrderTakesTransitiveReduction) {
  const Poset p = proper_boolean(3);
  EXPECT_EQ(p.size(), 6u);
  EXPECT_EQ(p.covers().size(), 6u);
}

TEST(Poset, OrderComplexOfChainIsSimplex) {
  const auto oc = order_complex(chain(4));
  EXPECT_EQ(oc.dimension(), 3);
  EXPECT_EQ(oc.face_count(), 15u);
  EXPECT_TRUE(simplicial_homology(oc).is_zero());
}

TEST(Poset, ProperBooleanLatticeIsSphere) {
  for (std::size_t k = 2; k <= 6; ++k) {
    const auto h = simplicial_homology(order_complex(proper_boolean(k)));
    EXPECT_EQ(h.sphere_dimension(), static_cast<int>(k) - 2) << "k=" << k;
  }
}

TEST(Poset, ProductOfChainsCounts) {
  for (std::size_t k = 1; k <= 4; ++k) {
    for (std::size_t m = 1; m <= 4; ++m) {
      const Poset p = product_of_chains(k, m);
      std::size_t size = 1;
      for (std::size_t i = 0; i < k; ++i) size *= m;
      EXPECT_EQ(p.size(), size);
      // Each coordinate can step up from m - 1 of its m values.
      EXPECT_EQ(p.covers().size(), k * (m - 1) * size / m);
    }
  }
}

TEST(Poset, IsomorphismFindsRelabeling) {
  const Poset p = proper_boolean(4);
  std::vector<std::size_t> perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937 rng(7);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::string> labels(p.size());
  std::vector<CoverPair> covers;
  for (std::size_t i = 0; i < p.size(); ++i) labels[perm[i]] = p.label(i);
  for (auto [a, b] : p.covers()) covers.emplace_back(perm[a], perm[b]);
  std::sort(covers.begin(), covers.end());
  const Poset q = Poset::from_covers(labels, covers);
  const auto iso = are_isomorphic(p, q);
  ASSERT_TRUE(iso.has_value());
  EXPECT_TRUE(is_isomorphism(p, q, *iso));
  EXPECT_FALSE(are_isomorphic(p, chain(p.size())).has_value());
  EXPECT_FALSE(are_isomorphic(p.dual(), chain(p.size())).has_value());
}

TEST(Poset, QuotientBySwap) {
  // Square a<b, a<c, b<d, c<d with b and c swapped.
  const Poset p = Poset::from_covers({"a", "b", "c", "d"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  GroupAction swap{{{0, 2, 1, 3}}};
  const auto q = quotient_poset(p, swap);
  EXPECT_EQ(q.poset.size(), 3u);
  EXPECT_EQ(q.orbit_of[1], q.orbit_of[2]);
  EXPECT_TRUE(are_isomorphic(q.poset, chain(3)).has_value());
  GroupAction bad{{{1, 0, 2, 3}}};
  EXPECT_THROW(bad.validate(p), InvalidInput);
}

TEST(Poset, ClosureImageLaws) {
  const Poset p = chain(3);
  const auto img = closure_image(p, {2, 2, 2});
  EXPECT_EQ(img.elements, std::vector<std::size_t>{2});
  try {
    closure_image(p, {0, 0, 2});
    FAIL() << "expected a closure law violation";
  } catch (const ClosureLawViolation& e) {
    EXPECT_EQ(e.law(), "inflationary");
  }
  EXPECT_THROW(closure_image(p, {2, 1, 2}), ClosureLawViolation);
}
