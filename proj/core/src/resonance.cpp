#include "polystrata/resonance.hpp"

#include <algorithm>
#include <set>

#include "polystrata/errors.hpp"

namespace polystrata {

namespace {

constexpr std::size_t kMaxLength = 16;

// Each index goes left, right or nowhere: 3^t assignments.
template <typename Keep>
std::vector<IndexIdentity> equal_sum_pairs(const Composition& c, Keep keep) {
  const auto& a = c.parts();
  const std::size_t t = a.size();
  if (t > kMaxLength) throw InvalidInput("resonance enumeration limited to 16 parts");
  std::vector<int> side(t, 0);
  std::vector<IndexIdentity> out;
  for (;;) {
    long left_sum = 0;
    long right_sum = 0;
    IndexIdentity id;
    for (std::size_t i = 0; i < t; ++i) {
      if (side[i] == 1) {
        left_sum += a[i];
        id.left.push_back(static_cast<int>(i) + 1);
      } else if (side[i] == 2) {
        right_sum += a[i];
        id.right.push_back(static_cast<int>(i) + 1);
      }
    }
    if (!id.left.empty() && !id.right.empty() && left_sum == right_sum && id.left < id.right && keep(id)) {
      out.push_back(std::move(id));
    }
    std::size_t k = 0;
    while (k < t && side[k] == 2) side[k++] = 0;
    if (k == t) break;
    ++side[k];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<IndexIdentity> primitive_identities(const Composition& parts) {
  const auto& a = parts.parts();
  return equal_sum_pairs(parts, [&](const IndexIdentity& id) {
    std::set<int> left_values;
    for (int i : id.left) left_values.insert(a[static_cast<std::size_t>(i - 1)]);
    return std::none_of(id.right.begin(), id.right.end(),
                        [&](int j) { return left_values.count(a[static_cast<std::size_t>(j - 1)]) > 0; });
  });
}

bool is_free_of_resonances(const Composition& parts) { return primitive_identities(parts).empty(); }

bool is_free_of_resonances(const NumberPartition& lambda) { return is_free_of_resonances(Composition(lambda.parts())); }

std::vector<IndexIdentity> resonance_hyperplanes(const Composition& parts) {
  auto out = equal_sum_pairs(parts, [](const IndexIdentity&) { return true; });
  std::vector<int> sorted = parts.parts();
  std::sort(sorted.begin(), sorted.end());
  const bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  if (out.empty() != (distinct && is_free_of_resonances(parts))) {
    throw InvariantViolation("resonance arrangement emptiness disagrees with distinctness and resonance freedom for " +
                             parts.to_string());
  }
  return out;
}

}  // namespace polystrata
