#include <gtest/gtest.h>

#include <random>

#include "polystrata/errors.hpp"
#include "polystrata/homology.hpp"

using namespace polystrata;

namespace {

using Dense = std::vector<std::vector<BigInt>>;

BigInt det(Dense m) {
  const std::size_t n = m.size();
  BigInt sign = 1;
  // Bareiss fraction-free elimination.
  BigInt prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out, std::vector<std::size_t>& cur, std::size_t start = 0) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, out, cur, i + 1);
    cur.pop_back();
  }
}

// Invariant factors from determinantal divisors: d_k = D_k / D_{k-1}, D_k the
// gcd of all k x k minors.
std::vector<BigInt> factors_by_minors(const Dense& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<BigInt> out;
  BigInt previous = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(rows, k, rs, cur);
    subsets(cols, k, cs, cur);
    BigInt g = 0;
    for (const auto& r : rs) {
      for (const auto& c : cs) {
        Dense minor(k, std::vector<BigInt>(k));
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) minor[i][j] = m[r[i]][c[j]];
        }
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), BigInt(det(minor)).get_mpz_t());
      }
    }
    if (g == 0) break;
    out.push_back(g / previous);
    previous = g;
  }
  return out;
}

SimplicialComplex boundary_of_simplex(std::size_t d) {
  std::vector<SimplicialComplex::Face> facets;
  for (std::size_t skip = 0; skip <= d + 1; ++skip) {
    SimplicialComplex::Face f;
    for (std::size_t v = 0; v <= d + 1; ++v) {
      if (v != skip) f.push_back(v);
    }
    facets.push_back(f);
  }
  return SimplicialComplex::from_facets(facets);
}

// Six-vertex real projective plane.
SimplicialComplex rp2() {
  return SimplicialComplex::from_facets({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                         {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {1, 3, 5}, {2, 4, 5}});
}

// Seven-vertex torus.
SimplicialComplex torus() {
  std::vector<SimplicialComplex::Face> facets;
  for (std::size_t i = 0; i < 7; ++i) {
    auto tri = [](std::size_t a, std::size_t b, std::size_t c) {
      SimplicialComplex::Face f{a % 7, b % 7, c % 7};
      std::sort(f.begin(), f.end());
      return f;
    };
    facets.push_back(tri(i, i + 1, i + 3));
    facets.push_back(tri(i, i + 2, i + 3));
  }
  return SimplicialComplex::from_facets(facets);
}

}  // namespace

TEST(Smith, AgreesWithDeterminantalDivisors) {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> shape(1, 4);
  std::uniform_int_distribution<int> value(-4, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = static_cast<std::size_t>(shape(rng));
    const std::size_t c = static_cast<std::size_t>(shape(rng));
    Dense m(r, std::vector<BigInt>(c));
    for (auto& row : m) {
      for (auto& x : row) x = value(rng) * (rng() % 3 == 0 ? 0 : 1) * (rng() % 5 == 0 ? 6 : 1);
    }
    EXPECT_EQ(smith_normal_form(m), factors_by_minors(m)) << "trial " << trial;
  }
}

TEST(Smith, SparseAndDenseAgree) {
  Dense m{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  EXPECT_EQ(smith_normal_form(m), (std::vector<BigInt>{2, 6, 12}));
  EXPECT_EQ(smith_normal_form(SparseMatrix::from_dense(m)), smith_normal_form(m));
}

TEST(Homology, SpheresAsSimplexBoundaries) {
  for (std::size_t d = 0; d <= 5; ++d) {
    const auto h = simplicial_homology(boundary_of_simplex(d));
    EXPECT_EQ(h.sphere_dimension(), static_cast<int>(d));
    EXPECT_EQ(h.groups().size(), 1u);
  }
}

TEST(Homology, ProjectivePlaneHasTorsion) {
  const auto h = simplicial_homology(rp2());
  EXPECT_EQ(h.betti(0), 0u);
  EXPECT_EQ(h.betti(1), 0u);
  EXPECT_EQ(h.torsion(1), std::vector<BigInt>{2});
  EXPECT_EQ(h.betti(2), 0u);
  EXPECT_EQ(h.to_string(), "H1=Z/2");
}

TEST(Homology, Torus) {
  const auto h = simplicial_homology(torus());
  EXPECT_EQ(h.betti(1), 2u);
  EXPECT_EQ(h.betti(2), 1u);
  EXPECT_TRUE(h.torsion(1).empty());
}

TEST(Homology, EulerCharacteristicMatchesFaceCounts) {
  for (const auto& k : {rp2(), torus(), boundary_of_simplex(3)}) {
    const auto h = simplicial_homology(k);
    EXPECT_EQ(h.euler_characteristic(), k.euler_characteristic() - 1);
  }
}

TEST(Homology, ChainComplexRejectsNonzeroSquare) {
  SparseMatrix d1(1, 1), d2(1, 1);
  d1.add(0, 0, 1);
  d2.add(0, 0, 1);
  EXPECT_THROW(ChainComplex({{0, 1}, {1, 1}, {2, 1}}, {{1, d1}, {2, d2}}), InvariantViolation);
  SparseMatrix wrong(2, 1);
  EXPECT_THROW(ChainComplex({{0, 1}, {1, 1}}, {{1, wrong}}), InvalidInput);
}

TEST(Homology, SuspensionShift) {
  HomologyResult h;
  h.set(1, 2, {3});
  const auto s = suspension_shift(h, 2);
  EXPECT_EQ(s.betti(3), 2u);
  EXPECT_EQ(s.torsion(3), std::vector<BigInt>{3});
  EXPECT_THROW(h.set(0, 0, {4, 6}), InvalidInput);
}

TEST(Homology, FromFacesRequiresClosure) {
  EXPECT_THROW(SimplicialComplex::from_faces({{0, 1}}), InvalidInput);
  const auto k = SimplicialComplex::from_faces({{0}, {1}, {0, 1}});
  EXPECT_TRUE(simplicial_homology(k).is_zero());
}
