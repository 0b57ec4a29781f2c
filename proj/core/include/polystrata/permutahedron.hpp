#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polystrata/compositions.hpp"
#include "polystrata/homology.hpp"
#include "polystrata/poset.hpp"

namespace polystrata {

inline constexpr int kMaxPermutahedronRank = 6;

/// Ordered sequence of disjoint nonempty blocks covering {1..t}, with at
/// least two blocks.  Blocks are kept sorted internally.
class OrderedSetPartition {
 public:
  OrderedSetPartition(int ground, std::vector<std::vector<int>> blocks);

  [[nodiscard]] int ground() const { return ground_; }
  [[nodiscard]] const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  /// "1 2|3".
  [[nodiscard]] std::string to_string() const;
  /// Block sums of `parts` (parts[i-1] sits at position i).
  [[nodiscard]] Composition block_sums(const std::vector<int>& parts) const;
  /// Relabels ground elements by `perm` (perm[i-1] is the image of i).
  [[nodiscard]] OrderedSetPartition relabeled(const std::vector<int>& perm) const;

  auto operator<=>(const OrderedSetPartition& other) const = default;

 private:
  int ground_;
  std::vector<std::vector<int>> blocks_;
};

/// Proper faces of the permutahedron on {1..t}; merging adjacent blocks
/// moves up.  Element i of the poset is `faces[i]`.
struct PermutahedronFaces {
  Poset poset;
  std::vector<OrderedSetPartition> faces;
};
PermutahedronFaces permutahedron_face_poset(int t);

/// Permutations of positions carrying equal values of `reference`, as
/// adjacent transpositions of equal-valued positions, acting on the faces.
GroupAction young_subgroup_action(const PermutahedronFaces& faces, const std::vector<int>& reference);
/// Reference = parts of λ, ascending.
GroupAction young_subgroup_action(const PermutahedronFaces& faces, const NumberPartition& lambda);

struct YoungQuotientReport {
  std::vector<int> reference;
  bool applicable = false;
  std::string inapplicable_reason;
  QuotientPoset quotient;
  CompositionPoset clambda;
  std::vector<Composition> orbit_image;  // block sums of each orbit's representative
  /// Two orbits with the same block sums, when the map is not injective.
  std::optional<std::pair<std::size_t, std::size_t>> collision;
  bool isomorphic = false;
  /// Block sums as a map onto the poset of all proper coarsenings.
  bool isomorphic_to_coarsenings = false;
  std::size_t coarsening_count = 0;
  HomologyResult clambda_homology;
  /// S^{t-2} for distinct parts, zero otherwise.
  bool homology_as_expected = false;

  [[nodiscard]] bool ok() const { return applicable && isomorphic && homology_as_expected; }
};

/// Orbit poset of the faces under the Young subgroup, pushed to compositions
/// by block sums and compared with C_λ.
YoungQuotientReport verify_young_quotient(const NumberPartition& lambda);
YoungQuotientReport verify_young_quotient(const Composition& reference);

}  // namespace polystrata
