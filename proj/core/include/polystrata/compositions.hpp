#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "polystrata/homology.hpp"
#include "polystrata/poset.hpp"

namespace polystrata {

/// Largest n for which merged sets fit the 64-bit position mask.
inline constexpr int kMaxWeight = 64;

/// Ordered tuple of positive parts.  The empty composition () is allowed; it
/// indexes the purely elliptic cell.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  /// "1,1,2"; "" or "()" is the empty composition.
  static Composition parse(std::string_view text);

  [[nodiscard]] const std::vector<int>& parts() const { return parts_; }
  [[nodiscard]] int weight() const { return weight_; }
  [[nodiscard]] std::size_t length() const { return parts_.size(); }
  [[nodiscard]] bool empty() const { return parts_.empty(); }
  /// P_1, ..., P_{t-1}.
  [[nodiscard]] std::vector<int> partial_sums() const;
  [[nodiscard]] std::string to_string() const;

  auto operator<=>(const Composition& other) const { return parts_ <=> other.parts_; }
  bool operator==(const Composition& other) const { return parts_ == other.parts_; }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// Multiset of part sizes, stored ascending.
class NumberPartition {
 public:
  NumberPartition() = default;
  explicit NumberPartition(std::vector<int> parts);

  static NumberPartition parse(std::string_view text);
  static NumberPartition type_of(const Composition& c);
  /// (1^{n-k}, k).
  static NumberPartition hook(int n, int k);
  /// Every partition of n, parts ascending, in lexicographic order.
  static std::vector<NumberPartition> all_of(int n);

  [[nodiscard]] const std::vector<int>& parts() const { return parts_; }
  [[nodiscard]] int weight() const { return weight_; }
  [[nodiscard]] std::size_t length() const { return parts_.size(); }
  /// part value -> multiplicity e_i (only positive multiplicities).
  [[nodiscard]] std::map<int, int> multiplicities() const;
  [[nodiscard]] bool has_repeated_part() const;
  [[nodiscard]] std::string to_string() const;

  auto operator<=>(const NumberPartition& other) const { return parts_ <=> other.parts_; }
  bool operator==(const NumberPartition& other) const { return parts_ == other.parts_; }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// Set partition of [n] = {1..n}; blocks sorted internally and by minimum.
class SetPartition {
 public:
  SetPartition(int ground, std::vector<std::vector<int>> blocks);
  static SetPartition discrete(int ground);
  /// The interval partition whose block sizes are the parts, in order.
  static SetPartition from_composition(const Composition& c);

  [[nodiscard]] int ground() const { return ground_; }
  [[nodiscard]] const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  [[nodiscard]] std::string to_string() const;  // "|1 2|3|"

  bool operator==(const SetPartition& other) const = default;

 private:
  int ground_;
  std::vector<std::vector<int>> blocks_;
};

/// Join in the partition lattice.  Throws InvalidInput on ground mismatch.
SetPartition partition_join(const SetPartition& a, const SetPartition& b);
/// True iff every block is an interval of [n].
bool is_interval_partition(const SetPartition& p);
/// Block sizes of an interval partition, left to right.
Composition composition_of(const SetPartition& p);

/// Positions i in [n-1] where slots i and i+1 share a part.  Bit i-1 of
/// `mask` represents position i.
struct MergedSet {
  int ambient = 0;
  std::uint64_t mask = 0;

  static MergedSet from_positions(int ambient, const std::vector<int>& positions);
  [[nodiscard]] std::vector<int> positions() const;
  [[nodiscard]] int size() const;
  [[nodiscard]] bool contains(int position) const { return (mask >> (position - 1)) & 1U; }
  [[nodiscard]] bool subset_of(const MergedSet& o) const { return (mask & ~o.mask) == 0; }
  [[nodiscard]] std::uint64_t full_mask() const;

  bool operator==(const MergedSet& other) const = default;
};

MergedSet merged_set(const Composition& c);
Composition composition_from_merged_set(const MergedSet& a);

/// Distinct orderings of the parts, lexicographic.
std::vector<Composition> compositions_of_type(const NumberPartition& lambda);
/// All compositions of n, lexicographic.
std::vector<Composition> all_compositions(int n);
/// True iff `coarse` arises from `fine` by merging adjacent parts.
bool is_coarsening(const Composition& coarse, const Composition& fine);

/// Union-closure of the merged sets of type-λ compositions, without the full
/// set, ordered by inclusion.  Element i of `poset` is `compositions[i]`.
struct CompositionPoset {
  Poset poset;
  std::vector<Composition> compositions;
  std::vector<MergedSet> merged;
};
CompositionPoset c_lambda_poset(const NumberPartition& lambda);
/// Every coarsening of a type-λ composition except (n), by inclusion.  It
/// contains C_λ and the two share a homotopy type; they can differ when λ
/// has a repeated part and at least three parts, as for (1,1,3).
CompositionPoset coarsening_poset(const NumberPartition& lambda);
/// Just the elements of C_λ, ordered by (size, mask).
std::vector<MergedSet> c_lambda_elements(const NumberPartition& lambda);

/// Subcomplex of the boundary of the simplex on vertices {1..n-1} spanned by
/// the partial-sum sets of type-λ compositions.  Vertex ids are the
/// positions themselves.
struct DeltaComplex {
  int ambient = 0;
  SimplicialComplex complex;

  /// Composition whose partial-sum set is `face`.
  [[nodiscard]] Composition label(const SimplicialComplex::Face& face) const;
};
DeltaComplex delta_lambda_complex(const NumberPartition& lambda);

/// For every face σ: the join of the labels of the ambient facets
/// [n-1] \ {i} containing σ equals the label of σ.
bool facet_labels_join_to_face_labels(const DeltaComplex& delta);

/// Face poset of δ_λ pushed through σ -> ∩{facets ⊇ σ}, compared with C_λ
/// up to order reversal.
struct ClosureReductionReport {
  Poset face_poset;
  ClosureImage image;
  bool image_isomorphic_to_clambda = false;
  HomologyResult face_poset_homology;
  HomologyResult clambda_homology;

  [[nodiscard]] bool homology_equal() const { return face_poset_homology == clambda_homology; }
  [[nodiscard]] bool ok() const { return image_isomorphic_to_clambda && homology_equal(); }
};
ClosureReductionReport verify_closure_reduction(const NumberPartition& lambda);

}  // namespace polystrata
