#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "polystrata/compositions.hpp"
#include "polystrata/poset.hpp"

namespace polystrata {

/// Nested merged sets A_1 ⊆ ... ⊆ A_d ⊆ [n-1], stored per position as the
/// first level at which it is merged (d + 1 if never).
class IteratedComposition {
 public:
  IteratedComposition(int n, int d, std::vector<int> thresholds);
  /// Throws InvalidInput unless levels.size() == d and the sets are nested.
  static IteratedComposition from_levels(int n, const std::vector<MergedSet>& levels);

  [[nodiscard]] int ambient() const { return n_; }
  [[nodiscard]] int depth() const { return d_; }
  [[nodiscard]] const std::vector<int>& thresholds() const { return thresholds_; }
  /// A_s for 1 <= s <= d.
  [[nodiscard]] MergedSet level(int s) const;
  [[nodiscard]] Composition composition(int s) const { return composition_from_merged_set(level(s)); }
  /// Number of blocks at level s.
  [[nodiscard]] int blocks(int s) const;
  /// "{}{1}" style: the merged positions of each level.
  [[nodiscard]] std::string to_string() const;
  /// Componentwise inclusion of every level.
  [[nodiscard]] bool leq(const IteratedComposition& other) const;

  bool operator==(const IteratedComposition& other) const = default;

 private:
  int n_;
  int d_;
  std::vector<int> thresholds_;
};

struct IteratedPoset {
  Poset poset;
  std::vector<IteratedComposition> elements;
  /// Element i -> index in product_of_chains(n-1, d+1) via
  /// position i -> d + 1 - threshold.
  std::vector<std::size_t> to_product;
};

IteratedPoset iterated_poset(int n, int d);

/// nd - Σ_s (n - blocks(s)).
int cell_dimension(const IteratedComposition& pi);

using Point = std::vector<mpq_class>;

/// Point i (in the given order) occupies slot i.  Points sharing a block of
/// level s agree in coordinate s; points in different blocks of level s but
/// the same block of level s+1 (level d+1 being one block) have strictly
/// increasing coordinate s.
bool cell_contains(const IteratedComposition& pi, const std::vector<Point>& config);
/// Membership for some relabeling of the points.
bool cell_contains_unordered(const IteratedComposition& pi, std::vector<Point> config);

/// The unique cell containing the configuration after sorting its points by
/// (x_d, ..., x_1).
IteratedComposition locate_cell(int d, std::vector<Point> config);

struct IteratedCompositionPoset {
  Poset poset;
  std::vector<IteratedComposition> elements;
};

/// Join-closure of the constant tuples over type-λ compositions.  Without
/// `include_top` the tuple with every level fully merged is dropped.
IteratedCompositionPoset c_lambda_d_poset(const NumberPartition& lambda, int d, bool include_top);

}  // namespace polystrata
