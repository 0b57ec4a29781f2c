#include "polystrata/compositions.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>

#include "polystrata/errors.hpp"

namespace polystrata {

namespace {

std::vector<int> parse_parts(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '(' && ch != ')') s.push_back(ch);
  }
  std::vector<int> parts;
  if (s.empty()) return parts;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t next = s.find(',', pos);
    const std::string token = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw InvalidInput("malformed part list '" + std::string(text) + "'");
    }
    if (token.size() > 6) throw InvalidInput("part too large in '" + std::string(text) + "'");
    parts.push_back(std::stoi(token));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return parts;
}

std::string join_parts(const std::vector<int>& parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw InvalidInput("composition parts must be positive");
    weight_ += p;
  }
}

Composition Composition::parse(std::string_view text) { return Composition(parse_parts(text)); }

std::vector<int> Composition::partial_sums() const {
  std::vector<int> sums;
  int s = 0;
  for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
    s += parts_[i];
    sums.push_back(s);
  }
  return sums;
}

std::string Composition::to_string() const { return parts_.empty() ? "()" : join_parts(parts_); }

NumberPartition::NumberPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  std::sort(parts_.begin(), parts_.end());
  for (int p : parts_) {
    if (p < 1) throw InvalidInput("partition parts must be positive");
    weight_ += p;
  }
}

NumberPartition NumberPartition::parse(std::string_view text) { return NumberPartition(parse_parts(text)); }

NumberPartition NumberPartition::type_of(const Composition& c) { return NumberPartition(c.parts()); }

NumberPartition NumberPartition::hook(int n, int k) {
  if (k < 1 || k > n) throw InvalidInput("hook partition needs 1 <= k <= n");
  std::vector<int> parts(static_cast<std::size_t>(n - k), 1);
  parts.push_back(k);
  return NumberPartition(std::move(parts));
}

std::vector<NumberPartition> NumberPartition::all_of(int n) {
  std::vector<NumberPartition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int min_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = min_part; p <= remaining; ++p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  if (n >= 0) rec(n, 1);
  return out;
}

std::map<int, int> NumberPartition::multiplicities() const {
  std::map<int, int> e;
  for (int p : parts_) ++e[p];
  return e;
}

bool NumberPartition::has_repeated_part() const {
  return std::adjacent_find(parts_.begin(), parts_.end()) != parts_.end();
}

std::string NumberPartition::to_string() const { return parts_.empty() ? "()" : join_parts(parts_); }

// ---------------------------------------------------------------------------

SetPartition::SetPartition(int ground, std::vector<std::vector<int>> blocks) : ground_(ground), blocks_(std::move(blocks)) {
  std::vector<bool> seen(static_cast<std::size_t>(std::max(ground, 0)) + 1, false);
  int covered = 0;
  for (auto& b : blocks_) {
    if (b.empty()) throw InvalidInput("set partition blocks must be nonempty");
    std::sort(b.begin(), b.end());
    for (int x : b) {
      if (x < 1 || x > ground) throw InvalidInput("set partition element out of range");
      if (seen[static_cast<std::size_t>(x)]) throw InvalidInput("set partition blocks overlap");
      seen[static_cast<std::size_t>(x)] = true;
      ++covered;
    }
  }
  if (covered != ground) throw InvalidInput("set partition blocks do not cover the ground set");
  std::sort(blocks_.begin(), blocks_.end());
}

SetPartition SetPartition::discrete(int ground) {
  std::vector<std::vector<int>> blocks;
  for (int i = 1; i <= ground; ++i) blocks.push_back({i});
  return SetPartition(ground, std::move(blocks));
}

SetPartition SetPartition::from_composition(const Composition& c) {
  std::vector<std::vector<int>> blocks;
  int next = 1;
  for (int p : c.parts()) {
    std::vector<int> b(static_cast<std::size_t>(p));
    std::iota(b.begin(), b.end(), next);
    next += p;
    blocks.push_back(std::move(b));
  }
  return SetPartition(c.weight(), std::move(blocks));
}

std::string SetPartition::to_string() const {
  std::string s = "|";
  for (const auto& b : blocks_) {
    for (std::size_t i = 0; i < b.size(); ++i) s += (i ? " " : "") + std::to_string(b[i]);
    s += "|";
  }
  return s;
}

SetPartition partition_join(const SetPartition& a, const SetPartition& b) {
  if (a.ground() != b.ground()) throw InvalidInput("set partitions live on different ground sets");
  const int n = a.ground();
  std::vector<int> parent(static_cast<std::size_t>(n) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (const SetPartition* p : {&a, &b}) {
    for (const auto& block : p->blocks()) {
      for (int x : block) parent[static_cast<std::size_t>(find(x))] = find(block.front());
    }
  }
  std::map<int, std::vector<int>> groups;
  for (int x = 1; x <= n; ++x) groups[find(x)].push_back(x);
  std::vector<std::vector<int>> blocks;
  for (auto& [root, members] : groups) blocks.push_back(std::move(members));
  return SetPartition(n, std::move(blocks));
}

bool is_interval_partition(const SetPartition& p) {
  for (const auto& b : p.blocks()) {
    if (b.back() - b.front() + 1 != static_cast<int>(b.size())) return false;
  }
  return true;
}

Composition composition_of(const SetPartition& p) {
  if (!is_interval_partition(p)) throw InvalidInput("set partition " + p.to_string() + " is not an interval partition");
  std::vector<int> parts;
  for (const auto& b : p.blocks()) parts.push_back(static_cast<int>(b.size()));
  return Composition(std::move(parts));
}

// ---------------------------------------------------------------------------

MergedSet MergedSet::from_positions(int ambient, const std::vector<int>& positions) {
  if (ambient < 1 || ambient > kMaxWeight) throw InvalidInput("merged set ambient out of range");
  MergedSet a{ambient, 0};
  for (int i : positions) {
    if (i < 1 || i > ambient - 1) {
      throw InvalidInput("merged position " + std::to_string(i) + " outside [1, " + std::to_string(ambient - 1) + "]");
    }
    a.mask |= std::uint64_t{1} << (i - 1);
  }
  return a;
}

std::vector<int> MergedSet::positions() const {
  std::vector<int> out;
  for (int i = 1; i < ambient; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

int MergedSet::size() const { return std::popcount(mask); }

std::uint64_t MergedSet::full_mask() const {
  return ambient <= 1 ? 0 : (ambient - 1 == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << (ambient - 1)) - 1);
}

MergedSet merged_set(const Composition& c) {
  const int n = c.weight();
  if (n < 1) throw InvalidInput("merged sets need a composition of n >= 1");
  if (n > kMaxWeight) throw InvalidInput("composition weight exceeds " + std::to_string(kMaxWeight));
  MergedSet a{n, 0};
  a.mask = a.full_mask();
  for (int p : c.partial_sums()) a.mask &= ~(std::uint64_t{1} << (p - 1));
  return a;
}

Composition composition_from_merged_set(const MergedSet& a) {
  if (a.ambient < 1 || a.ambient > kMaxWeight) throw InvalidInput("merged set ambient out of range");
  if (a.mask & ~a.full_mask()) throw InvalidInput("merged set has positions outside [n-1]");
  std::vector<int> parts;
  int run = 1;
  for (int i = 1; i < a.ambient; ++i) {
    if (a.contains(i)) {
      ++run;
    } else {
      parts.push_back(run);
      run = 1;
    }
  }
  parts.push_back(run);
  return Composition(std::move(parts));
}

std::vector<Composition> compositions_of_type(const NumberPartition& lambda) {
  std::vector<int> parts = lambda.parts();
  std::vector<Composition> out;
  do {
    out.emplace_back(parts);
  } while (std::next_permutation(parts.begin(), parts.end()));
  return out;
}

std::vector<Composition> all_compositions(int n) {
  std::vector<Composition> out;
  if (n < 1) return out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    out.push_back(composition_from_merged_set(MergedSet{n, mask}));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_coarsening(const Composition& coarse, const Composition& fine) {
  if (coarse.weight() != fine.weight()) return false;
  std::size_t j = 0;
  for (int part : coarse.parts()) {
    int acc = 0;
    while (acc < part && j < fine.length()) acc += fine.parts()[j++];
    if (acc != part) return false;
  }
  return j == fine.length();
}

// ---------------------------------------------------------------------------

std::vector<MergedSet> c_lambda_elements(const NumberPartition& lambda) {
  const int n = lambda.weight();
  if (n < 1) throw InvalidInput("C_lambda needs a partition of n >= 1");
  if (n > kMaxWeight) throw InvalidInput("partition weight exceeds " + std::to_string(kMaxWeight));
  std::set<std::uint64_t> closure;
  std::vector<std::uint64_t> generators;
  for (const auto& c : compositions_of_type(lambda)) generators.push_back(merged_set(c).mask);
  std::vector<std::uint64_t> frontier = generators;
  closure.insert(generators.begin(), generators.end());
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t a : frontier) {
      for (std::uint64_t g : generators) {
        if (closure.insert(a | g).second) next.push_back(a | g);
      }
    }
    frontier = std::move(next);
  }
  closure.erase(MergedSet{n, 0}.full_mask());

  std::vector<std::uint64_t> masks(closure.begin(), closure.end());
  std::sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
    return std::pair(std::popcount(a), a) < std::pair(std::popcount(b), b);
  });
  std::vector<MergedSet> out;
  for (std::uint64_t m : masks) out.push_back(MergedSet{n, m});
  return out;
}

CompositionPoset c_lambda_poset(const NumberPartition& lambda) {
  CompositionPoset out;
  out.merged = c_lambda_elements(lambda);
  std::vector<std::string> labels;
  for (const auto& a : out.merged) {
    out.compositions.push_back(composition_from_merged_set(a));
    labels.push_back(out.compositions.back().to_string());
  }
  out.poset = Poset::from_order(std::move(labels), [&](std::size_t a, std::size_t b) {
    return a != b && out.merged[a].subset_of(out.merged[b]);
  });
  return out;
}

CompositionPoset coarsening_poset(const NumberPartition& lambda) {
  const int n = lambda.weight();
  if (n < 1) throw InvalidInput("coarsening poset needs a partition of n >= 1");
  if (n > kMaxWeight) throw InvalidInput("partition weight exceeds " + std::to_string(kMaxWeight));
  std::set<std::uint64_t> masks;
  const std::uint64_t full = MergedSet{n, 0}.full_mask();
  for (const auto& c : compositions_of_type(lambda)) {
    // Supersets of the merged set: enumerate subsets of its complement.
    const std::uint64_t base = merged_set(c).mask;
    const std::uint64_t free = full & ~base;
    std::uint64_t extra = 0;
    do {
      if ((base | extra) != full) masks.insert(base | extra);
      extra = (extra - free) & free;
    } while (extra != 0);
  }
  std::vector<std::uint64_t> sorted(masks.begin(), masks.end());
  std::sort(sorted.begin(), sorted.end(), [](std::uint64_t a, std::uint64_t b) {
    return std::pair(std::popcount(a), a) < std::pair(std::popcount(b), b);
  });
  CompositionPoset out;
  std::vector<std::string> labels;
  for (std::uint64_t m : sorted) {
    out.merged.push_back(MergedSet{n, m});
    out.compositions.push_back(composition_from_merged_set(out.merged.back()));
    labels.push_back(out.compositions.back().to_string());
  }
  out.poset = Poset::from_order(std::move(labels), [&](std::size_t a, std::size_t b) {
    return a != b && out.merged[a].subset_of(out.merged[b]);
  });
  return out;
}

Composition DeltaComplex::label(const SimplicialComplex::Face& face) const {
  std::vector<int> parts;
  int prev = 0;
  for (std::size_t v : face) {
    parts.push_back(static_cast<int>(v) - prev);
    prev = static_cast<int>(v);
  }
  parts.push_back(ambient - prev);
  return Composition(std::move(parts));
}

DeltaComplex delta_lambda_complex(const NumberPartition& lambda) {
  const int n = lambda.weight();
  if (n < 2) throw InvalidInput("delta_lambda needs n >= 2");
  if (n > kMaxWeight) throw InvalidInput("partition weight exceeds " + std::to_string(kMaxWeight));
  std::vector<SimplicialComplex::Face> facets;
  for (const auto& c : compositions_of_type(lambda)) {
    if (c.length() < 2) continue;  // (n) has no partial sums, hence no face
    SimplicialComplex::Face f;
    for (int p : c.partial_sums()) f.push_back(static_cast<std::size_t>(p));
    facets.push_back(std::move(f));
  }
  return DeltaComplex{n, SimplicialComplex::from_facets(facets)};
}

bool facet_labels_join_to_face_labels(const DeltaComplex& delta) {
  const int n = delta.ambient;
  for (const auto& face : delta.complex.all_faces()) {
    SetPartition joined = SetPartition::discrete(n);
    for (int i = 1; i < n; ++i) {
      if (std::find(face.begin(), face.end(), static_cast<std::size_t>(i)) != face.end()) continue;
      // Ambient facet [n-1] \ {i} carries the composition with one 2 at slot i.
      joined = partition_join(joined, SetPartition::from_composition(composition_from_merged_set(MergedSet{n, std::uint64_t{1} << (i - 1)})));
    }
    if (!is_interval_partition(joined) || composition_of(joined) != delta.label(face)) return false;
  }
  return true;
}

ClosureReductionReport verify_closure_reduction(const NumberPartition& lambda) {
  ClosureReductionReport report;
  const DeltaComplex delta = delta_lambda_complex(lambda);
  const auto faces = delta.complex.all_faces();
  const auto facets = delta.complex.facets();

  std::vector<std::string> labels;
  for (const auto& f : faces) {
    std::string s = "{";
    for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
    labels.push_back(s + "}");
  }
  report.face_poset = Poset::from_order(labels, [&](std::size_t a, std::size_t b) {
    return faces[a].size() < faces[b].size() && std::includes(faces[b].begin(), faces[b].end(), faces[a].begin(), faces[a].end());
  });

  std::vector<std::size_t> f(faces.size());
  for (std::size_t i = 0; i < faces.size(); ++i) {
    std::optional<SimplicialComplex::Face> meet;
    for (const auto& facet : facets) {
      if (!std::includes(facet.begin(), facet.end(), faces[i].begin(), faces[i].end())) continue;
      if (!meet) {
        meet = facet;
      } else {
        SimplicialComplex::Face both;
        std::set_intersection(meet->begin(), meet->end(), facet.begin(), facet.end(), std::back_inserter(both));
        meet = std::move(both);
      }
    }
    const auto it = std::find(faces.begin(), faces.end(), *meet);
    f[i] = static_cast<std::size_t>(it - faces.begin());
  }
  report.image = closure_image(report.face_poset, f);

  const CompositionPoset clambda = c_lambda_poset(lambda);
  report.image_isomorphic_to_clambda = are_isomorphic(report.image.poset, clambda.poset.dual()).has_value() ||
                                       are_isomorphic(report.image.poset, clambda.poset).has_value();
  report.face_poset_homology = simplicial_homology(order_complex(report.face_poset));
  report.clambda_homology = simplicial_homology(order_complex(clambda.poset));
  return report;
}

}  // namespace polystrata
