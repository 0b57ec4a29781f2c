#include "polystrata/permutahedron.hpp"

#include <algorithm>
#include <map>

#include "polystrata/errors.hpp"
#include "polystrata/resonance.hpp"

namespace polystrata {

OrderedSetPartition::OrderedSetPartition(int ground, std::vector<std::vector<int>> blocks)
    : ground_(ground), blocks_(std::move(blocks)) {
  if (blocks_.size() < 2) throw InvalidInput("ordered set partitions need at least two blocks");
  std::vector<bool> seen(static_cast<std::size_t>(std::max(ground, 0)) + 1, false);
  int covered = 0;
  for (auto& b : blocks_) {
    if (b.empty()) throw InvalidInput("ordered set partition blocks must be nonempty");
    std::sort(b.begin(), b.end());
    for (int x : b) {
      if (x < 1 || x > ground || seen[static_cast<std::size_t>(x)]) throw InvalidInput("ordered set partition blocks are not a disjoint cover");
      seen[static_cast<std::size_t>(x)] = true;
      ++covered;
    }
  }
  if (covered != ground) throw InvalidInput("ordered set partition blocks do not cover the ground set");
}

std::string OrderedSetPartition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) s += "|";
    for (std::size_t j = 0; j < blocks_[i].size(); ++j) s += (j ? " " : "") + std::to_string(blocks_[i][j]);
  }
  return s;
}

Composition OrderedSetPartition::block_sums(const std::vector<int>& parts) const {
  if (static_cast<int>(parts.size()) != ground_) throw InvalidInput("part list length differs from the ground set");
  std::vector<int> sums;
  for (const auto& b : blocks_) {
    int s = 0;
    for (int x : b) s += parts[static_cast<std::size_t>(x - 1)];
    sums.push_back(s);
  }
  return Composition(std::move(sums));
}

OrderedSetPartition OrderedSetPartition::relabeled(const std::vector<int>& perm) const {
  auto blocks = blocks_;
  for (auto& b : blocks) {
    for (int& x : b) x = perm.at(static_cast<std::size_t>(x - 1));
  }
  return OrderedSetPartition(ground_, std::move(blocks));
}

PermutahedronFaces permutahedron_face_poset(int t) {
  if (t < 2) throw InvalidInput("the permutahedron needs t >= 2");
  if (t > kMaxPermutahedronRank) throw InvalidInput("permutahedron rank limited to " + std::to_string(kMaxPermutahedronRank));
  PermutahedronFaces out;
  // Surjections {1..t} -> {0..s-1}, s >= 2, enumerated as restricted words.
  std::vector<int> word(static_cast<std::size_t>(t), 0);
  for (;;) {
    const int s = *std::max_element(word.begin(), word.end()) + 1;
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(s));
    for (int i = 0; i < t; ++i) blocks[static_cast<std::size_t>(word[static_cast<std::size_t>(i)])].push_back(i + 1);
    if (s >= 2 && std::none_of(blocks.begin(), blocks.end(), [](const auto& b) { return b.empty(); })) {
      out.faces.emplace_back(t, std::move(blocks));
    }
    std::size_t k = 0;
    while (k < word.size() && word[k] == t - 1) word[k++] = 0;
    if (k == word.size()) break;
    ++word[k];
  }
  std::sort(out.faces.begin(), out.faces.end(), [](const auto& a, const auto& b) {
    if (a.blocks().size() != b.blocks().size()) return a.blocks().size() > b.blocks().size();
    return a < b;
  });
  std::map<OrderedSetPartition, std::size_t> index;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < out.faces.size(); ++i) {
    index.emplace(out.faces[i], i);
    labels.push_back(out.faces[i].to_string());
  }
  std::vector<CoverPair> covers;
  for (std::size_t i = 0; i < out.faces.size(); ++i) {
    const auto& blocks = out.faces[i].blocks();
    if (blocks.size() < 3) continue;
    for (std::size_t j = 0; j + 1 < blocks.size(); ++j) {
      auto merged = blocks;
      merged[j].insert(merged[j].end(), merged[j + 1].begin(), merged[j + 1].end());
      merged.erase(merged.begin() + static_cast<long>(j) + 1);
      covers.emplace_back(i, index.at(OrderedSetPartition(t, std::move(merged))));
    }
  }
  std::sort(covers.begin(), covers.end());
  out.poset = Poset::from_covers(std::move(labels), std::move(covers));
  return out;
}

GroupAction young_subgroup_action(const PermutahedronFaces& faces, const std::vector<int>& reference) {
  GroupAction action;
  if (faces.faces.empty()) return action;
  const int t = faces.faces.front().ground();
  if (static_cast<int>(reference.size()) != t) throw InvalidInput("reference length differs from the permutahedron rank");
  std::map<OrderedSetPartition, std::size_t> index;
  for (std::size_t i = 0; i < faces.faces.size(); ++i) index.emplace(faces.faces[i], i);
  for (int i = 0; i < t; ++i) {
    // Next position to the right with the same value.
    int j = i + 1;
    while (j < t && reference[static_cast<std::size_t>(j)] != reference[static_cast<std::size_t>(i)]) ++j;
    if (j == t) continue;
    std::vector<int> perm(static_cast<std::size_t>(t));
    for (int x = 0; x < t; ++x) perm[static_cast<std::size_t>(x)] = x + 1;
    std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    std::vector<std::size_t> g(faces.faces.size());
    for (std::size_t k = 0; k < faces.faces.size(); ++k) g[k] = index.at(faces.faces[k].relabeled(perm));
    action.generators.push_back(std::move(g));
  }
  action.validate(faces.poset);
  return action;
}

GroupAction young_subgroup_action(const PermutahedronFaces& faces, const NumberPartition& lambda) {
  return young_subgroup_action(faces, lambda.parts());
}

YoungQuotientReport verify_young_quotient(const NumberPartition& lambda) {
  return verify_young_quotient(Composition(lambda.parts()));
}

YoungQuotientReport verify_young_quotient(const Composition& reference) {
  YoungQuotientReport report;
  report.reference = reference.parts();
  const auto identities = primitive_identities(reference);
  report.applicable = identities.empty();
  if (!report.applicable) {
    std::string w;
    for (const auto* side : {&identities.front().left, &identities.front().right}) {
      if (!w.empty()) w += "=";
      for (std::size_t i = 0; i < side->size(); ++i) {
        w += (i ? "+" : "") + std::to_string(report.reference[static_cast<std::size_t>((*side)[i] - 1)]);
      }
    }
    report.inapplicable_reason = "resonance " + w;
  }
  const int t = static_cast<int>(reference.length());
  const NumberPartition lambda = NumberPartition::type_of(reference);
  report.clambda = c_lambda_poset(lambda);
  if (t < 2) {
    report.isomorphic = report.clambda.poset.empty();
    report.clambda_homology = simplicial_homology(order_complex(report.clambda.poset));
    report.homology_as_expected = true;
    return report;
  }

  const PermutahedronFaces faces = permutahedron_face_poset(t);
  report.quotient = quotient_poset(faces.poset, young_subgroup_action(faces, report.reference));

  std::map<Composition, std::size_t> first_orbit;
  for (std::size_t o = 0; o < report.quotient.orbits.size(); ++o) {
    report.orbit_image.push_back(faces.faces[report.quotient.representative[o]].block_sums(report.reference));
    auto [it, fresh] = first_orbit.emplace(report.orbit_image.back(), o);
    if (!fresh && !report.collision) report.collision = std::pair(it->second, o);
  }

  auto block_sums_isomorphic = [&](const CompositionPoset& target) {
    if (report.collision || report.orbit_image.size() != target.compositions.size()) return false;
    std::map<Composition, std::size_t> index;
    for (std::size_t i = 0; i < target.compositions.size(); ++i) index.emplace(target.compositions[i], i);
    std::vector<std::size_t> map;
    for (const auto& c : report.orbit_image) {
      auto it = index.find(c);
      if (it == index.end()) return false;
      map.push_back(it->second);
    }
    return is_isomorphism(report.quotient.poset, target.poset, map);
  };
  report.isomorphic = block_sums_isomorphic(report.clambda);
  const CompositionPoset coarsenings = coarsening_poset(lambda);
  report.coarsening_count = coarsenings.compositions.size();
  report.isomorphic_to_coarsenings = block_sums_isomorphic(coarsenings);

  report.clambda_homology = simplicial_homology(order_complex(report.clambda.poset));
  if (lambda.has_repeated_part()) {
    report.homology_as_expected = report.clambda_homology.is_zero();
  } else {
    report.homology_as_expected = report.clambda_homology.sphere_dimension() == t - 2;
  }
  return report;
}

}  // namespace polystrata
