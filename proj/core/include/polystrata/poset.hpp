#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polystrata/errors.hpp"

namespace polystrata {

class SimplicialComplex;

using CoverPair = std::pair<std::size_t, std::size_t>;

/// Finite partially ordered set stored by its irredundant cover relation.
///
/// Elements are indexed 0..size()-1 and carry an opaque string label.  The
/// full strict order is derived once at construction (one bitset row per
/// element) so that comparisons are O(1).  Instances are immutable.
class Poset {
 public:
  Poset() = default;

  /// Builds from covers (lower, upper).  Throws InvalidInput if the covers
  /// contain a directed cycle, a self-loop, a duplicate, or a pair implied by
  /// a longer path.
  static Poset from_covers(std::vector<std::string> labels,
                           std::vector<CoverPair> covers);

  /// Builds from a strict-order predicate, taking the transitive reduction.
  /// The predicate must be irreflexive, antisymmetric and transitive; this is
  /// checked.
  static Poset from_order(std::vector<std::string> labels,
                          const std::function<bool(std::size_t, std::size_t)>& less);

  [[nodiscard]] std::size_t size() const { return labels_.size(); }
  [[nodiscard]] bool empty() const { return labels_.empty(); }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  [[nodiscard]] const std::string& label(std::size_t i) const { return labels_.at(i); }
  [[nodiscard]] std::optional<std::size_t> index_of(const std::string& label) const;

  /// Sorted list of cover pairs.
  [[nodiscard]] const std::vector<CoverPair>& covers() const { return covers_; }
  [[nodiscard]] const std::vector<std::size_t>& upper_covers(std::size_t i) const { return up_.at(i); }
  [[nodiscard]] const std::vector<std::size_t>& lower_covers(std::size_t i) const { return down_.at(i); }

  [[nodiscard]] bool less(std::size_t a, std::size_t b) const;
  [[nodiscard]] bool leq(std::size_t a, std::size_t b) const { return a == b || less(a, b); }
  [[nodiscard]] bool comparable(std::size_t a, std::size_t b) const { return leq(a, b) || leq(b, a); }

  /// Elements strictly above i, in increasing index order.
  [[nodiscard]] std::vector<std::size_t> strictly_above(std::size_t i) const;
  [[nodiscard]] std::size_t count_above(std::size_t i) const;
  [[nodiscard]] std::size_t count_below(std::size_t i) const;

  [[nodiscard]] std::vector<std::size_t> minimal_elements() const;
  [[nodiscard]] std::vector<std::size_t> maximal_elements() const;

  /// Length of the longest chain ending at each element (minimal elements
  /// have rank 0).
  [[nodiscard]] std::vector<std::size_t> ranks() const;
  /// Number of elements of each rank.
  [[nodiscard]] std::vector<std::size_t> rank_sizes() const;

  /// Same elements, order reversed.
  [[nodiscard]] Poset dual() const;
  /// Induced subposet on `subset` (element i of the result is subset[i]).
  [[nodiscard]] Poset induced(const std::vector<std::size_t>& subset) const;

 private:
  void build_order();

  std::vector<std::string> labels_;
  std::vector<CoverPair> covers_;
  std::vector<std::vector<std::size_t>> up_;
  std::vector<std::vector<std::size_t>> down_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> above_;  // row i, bit j set iff i < j
};

/// A group acting on a poset's element indices, given by generators.
struct GroupAction {
  std::vector<std::vector<std::size_t>> generators;

  /// Throws InvalidInput unless every generator is a permutation of
  /// [0, P.size()) mapping covers bijectively onto covers.
  void validate(const Poset& poset) const;
};

struct QuotientPoset {
  Poset poset;
  std::vector<std::size_t> orbit_of;               // element -> orbit index
  std::vector<std::vector<std::size_t>> orbits;    // sorted members
  std::vector<std::size_t> representative;         // lexicographically least label
};

struct ClosureImage {
  Poset poset;
  std::vector<std::size_t> elements;  // original indices, increasing
};

class ClosureLawViolation : public InvariantViolation {
 public:
  ClosureLawViolation(std::string law, std::size_t x, std::size_t y, const std::string& detail);
  [[nodiscard]] const std::string& law() const { return law_; }
  [[nodiscard]] std::pair<std::size_t, std::size_t> witness() const { return {x_, y_}; }

 private:
  std::string law_;
  std::size_t x_;
  std::size_t y_;
};

/// Simplicial complex of all nonempty chains.  Vertex i is element i.
SimplicialComplex order_complex(const Poset& poset);

/// Orbit poset: X <= Y iff some member of X is below some member of Y.
/// Antisymmetry of the orbit relation is checked; a violation throws
/// InvariantViolation naming a witness pair of orbits.
QuotientPoset quotient_poset(const Poset& poset, const GroupAction& action);

/// Componentwise order on {0..m-1}^k; labels "(a1,...,ak)".
Poset product_of_chains(std::size_t k, std::size_t m);

/// Checks that `f` is order preserving, inflationary and idempotent, then
/// returns the induced subposet on its image.  Throws ClosureLawViolation
/// with the first failing law ("order-preserving", "inflationary",
/// "idempotent") and a witness pair.
ClosureImage closure_image(const Poset& poset, const std::vector<std::size_t>& f);

/// Order isomorphism P -> Q (result[i] is the image of P's element i), or
/// nullopt.  Any returned map has been checked to preserve and reflect covers.
std::optional<std::vector<std::size_t>> are_isomorphic(const Poset& p, const Poset& q);

/// True if `map` is a bijection P -> Q that preserves and reflects covers.
bool is_isomorphism(const Poset& p, const Poset& q, const std::vector<std::size_t>& map);

}  // namespace polystrata
