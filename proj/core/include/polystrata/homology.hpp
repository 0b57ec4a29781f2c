#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace polystrata {

using BigInt = mpz_class;

/// Coordinate-list integer matrix.  Duplicate coordinates are summed by
/// consumers; zero values are allowed and ignored.
struct SparseMatrix {
  struct Entry {
    std::size_t row;
    std::size_t col;
    BigInt value;
  };

  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Entry> entries;

  SparseMatrix() = default;
  SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c) {}

  void add(std::size_t row, std::size_t col, const BigInt& value);
  /// Entries with duplicates merged and zeros dropped, sorted by (col, row).
  [[nodiscard]] std::vector<Entry> canonical() const;
  [[nodiscard]] std::vector<std::vector<BigInt>> to_dense() const;
  static SparseMatrix from_dense(const std::vector<std::vector<BigInt>>& dense);
};

/// Product a*b (shapes must agree).
SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);

/// Invariant factors d1 | d2 | ... | dr of an integer matrix (r = rank).
/// Unit pivots are eliminated sparsely first; the remaining block is reduced
/// densely with smallest-magnitude pivoting over arbitrary-precision integers.
std::vector<BigInt> smith_normal_form(const SparseMatrix& m);
std::vector<BigInt> smith_normal_form(const std::vector<std::vector<BigInt>>& dense);

/// Graded free abelian groups with boundary maps d_q : C_q -> C_{q-1}.
class ChainComplex {
 public:
  ChainComplex() = default;

  /// `ranks[q]` is the number of generators in degree q; `boundaries[q]` has
  /// shape ranks[q-1] x ranks[q].  Missing boundaries are zero.  Throws
  /// InvalidInput on shape mismatch and InvariantViolation if d∘d != 0 (the
  /// message names the offending generator and its nonzero image).
  ChainComplex(std::map<int, std::size_t> ranks, std::map<int, SparseMatrix> boundaries,
               std::map<int, std::vector<std::string>> labels = {});

  [[nodiscard]] std::size_t rank(int q) const;
  [[nodiscard]] SparseMatrix boundary(int q) const;
  [[nodiscard]] const std::map<int, std::size_t>& ranks() const { return ranks_; }
  [[nodiscard]] std::string generator_label(int q, std::size_t i) const;
  [[nodiscard]] std::optional<int> min_degree() const;
  [[nodiscard]] std::optional<int> max_degree() const;
  /// Σ (-1)^q rank(q).
  [[nodiscard]] long euler_characteristic() const;

 private:
  std::map<int, std::size_t> ranks_;
  std::map<int, SparseMatrix> boundaries_;
  std::map<int, std::vector<std::string>> labels_;
};

struct HomologyGroup {
  int degree = 0;
  std::size_t betti = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1, divisibility chain

  [[nodiscard]] bool trivial() const { return betti == 0 && torsion.empty(); }
  bool operator==(const HomologyGroup& other) const = default;
};

/// Per-degree Betti numbers and torsion.  Only nontrivial degrees are
/// stored; every other degree reads as zero.
class HomologyResult {
 public:
  explicit HomologyResult(bool reduced = true) : reduced_(reduced) {}

  /// Replaces degree q.  Throws InvalidInput if torsion is not a
  /// divisibility chain of factors > 1.
  void set(int degree, std::size_t betti, std::vector<BigInt> torsion = {});

  [[nodiscard]] bool reduced() const { return reduced_; }
  [[nodiscard]] std::size_t betti(int q) const;
  [[nodiscard]] std::vector<BigInt> torsion(int q) const;
  [[nodiscard]] std::vector<HomologyGroup> groups() const;
  [[nodiscard]] bool is_zero() const { return groups_.empty(); }
  [[nodiscard]] long euler_characteristic() const;
  /// If the result is Z in exactly one degree, that degree.
  [[nodiscard]] std::optional<int> sphere_dimension() const;
  [[nodiscard]] std::string to_string() const;

  bool operator==(const HomologyResult& other) const {
    return reduced_ == other.reduced_ && groups_ == other.groups_;
  }

 private:
  bool reduced_;
  std::map<int, HomologyGroup> groups_;
};

/// H_q = ker d_q / im d_{q+1} for every degree carrying generators.  The
/// Euler–Poincaré identity is checked on every call.
HomologyResult chain_homology(const ChainComplex& complex, bool reduced = true);

/// Finite abstract simplicial complex.  Faces are nonempty sorted vertex
/// lists, closed under nonempty subsets, kept per dimension in
/// lexicographic order.
class SimplicialComplex {
 public:
  using Face = std::vector<std::size_t>;

  SimplicialComplex() = default;

  /// Validates downward closure (throws InvalidInput otherwise).
  static SimplicialComplex from_faces(std::vector<Face> faces);
  /// Downward closure of the given faces.
  static SimplicialComplex from_facets(const std::vector<Face>& facets);

  /// -1 for the empty complex.
  [[nodiscard]] int dimension() const { return static_cast<int>(faces_.size()) - 1; }
  [[nodiscard]] bool empty() const { return faces_.empty(); }
  [[nodiscard]] const std::vector<Face>& faces(int dim) const;
  [[nodiscard]] std::size_t face_count() const;
  [[nodiscard]] std::vector<Face> all_faces() const;
  [[nodiscard]] std::vector<Face> facets() const;
  [[nodiscard]] std::optional<std::size_t> index_of(const Face& face) const;
  [[nodiscard]] bool contains(const Face& face) const { return index_of(face).has_value(); }
  /// Σ (-1)^dim over faces (unreduced).
  [[nodiscard]] long euler_characteristic() const;

  /// Augmented simplicial chain complex: the empty face sits in degree -1.
  [[nodiscard]] ChainComplex chain_complex() const;

  bool operator==(const SimplicialComplex& other) const = default;

 private:
  std::vector<std::vector<Face>> faces_;
};

/// Reduced integral homology.  The empty complex has H_{-1} = Z.
HomologyResult simplicial_homology(const SimplicialComplex& complex);

/// Moves every degree up by k (k-fold suspension).
HomologyResult suspension_shift(const HomologyResult& h, int k);

}  // namespace polystrata
