#pragma once

#include <vector>

#include "polystrata/compositions.hpp"

namespace polystrata {

/// Disjoint nonempty index sets (1-based, ascending) with equal part sums.
struct IndexIdentity {
  std::vector<int> left;
  std::vector<int> right;

  auto operator<=>(const IndexIdentity& other) const = default;
};

/// Equal-sum pairs sharing no part value.  Each pair is reported once with
/// the lexicographically smaller side on the left; pairs are sorted.
std::vector<IndexIdentity> primitive_identities(const Composition& parts);

bool is_free_of_resonances(const Composition& parts);
bool is_free_of_resonances(const NumberPartition& lambda);

/// Every equal-sum disjoint pair, primitive or not.
std::vector<IndexIdentity> resonance_hyperplanes(const Composition& parts);

}  // namespace polystrata
