#include "polystrata/poset.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "polystrata/homology.hpp"

namespace polystrata {

namespace {

std::string describe(const Poset& p, std::size_t i) {
  return "'" + p.label(i) + "'";
}

}  // namespace

Poset Poset::from_covers(std::vector<std::string> labels, std::vector<CoverPair> covers) {
  Poset p;
  const std::size_t n = labels.size();
  p.labels_ = std::move(labels);
  std::sort(covers.begin(), covers.end());
  if (std::adjacent_find(covers.begin(), covers.end()) != covers.end()) {
    throw InvalidInput("duplicate cover pair");
  }
  p.up_.assign(n, {});
  p.down_.assign(n, {});
  for (const auto& [lo, hi] : covers) {
    if (lo >= n || hi >= n) throw InvalidInput("cover index out of range");
    if (lo == hi) throw InvalidInput("cover relation is not irreflexive at " + p.labels_[lo]);
    p.up_[lo].push_back(hi);
    p.down_[hi].push_back(lo);
  }
  p.covers_ = std::move(covers);
  p.build_order();

  // Irredundancy: no cover (a, b) may also be reached through another
  // upper cover c of a with c < b.
  for (const auto& [lo, hi] : p.covers_) {
    for (std::size_t c : p.up_[lo]) {
      if (c != hi && p.less(c, hi)) {
        throw InvalidInput("cover (" + p.labels_[lo] + ", " + p.labels_[hi] +
                           ") is implied via " + p.labels_[c]);
      }
    }
  }
  return p;
}

Poset Poset::from_order(std::vector<std::string> labels,
                        const std::function<bool(std::size_t, std::size_t)>& less) {
  const std::size_t n = labels.size();
  const std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> above(n * words, 0);
  std::vector<std::uint64_t> below(n * words, 0);
  for (std::size_t a = 0; a < n; ++a) {
    if (less(a, a)) throw InvalidInput("order is not irreflexive at " + labels[a]);
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && less(a, b)) {
        above[a * words + b / 64] |= std::uint64_t{1} << (b % 64);
        below[b * words + a / 64] |= std::uint64_t{1} << (a % 64);
      }
    }
  }
  std::vector<CoverPair> covers;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t bits = above[a * words + w];
      while (bits) {
        const std::size_t b = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        if (above[b * words + a / 64] >> (a % 64) & 1U) {
          throw InvalidInput("order is not antisymmetric: " + labels[a] + " / " + labels[b]);
        }
        bool is_cover = true;
        for (std::size_t v = 0; v < words; ++v) {
          if (above[a * words + v] & below[b * words + v]) {
            is_cover = false;
            break;
          }
        }
        if (is_cover) covers.emplace_back(a, b);
      }
    }
  }
  Poset p = from_covers(std::move(labels), std::move(covers));
  if (p.above_ != above) throw InvalidInput("order relation is not transitive");
  return p;
}

void Poset::build_order() {
  const std::size_t n = labels_.size();
  words_ = (n + 63) / 64;
  above_.assign(n * words_, 0);

  // Kahn's algorithm; leftover vertices lie on a cycle.
  std::vector<std::size_t> indeg(n, 0);
  for (const auto& c : covers_) ++indeg[c.second];
  std::vector<std::size_t> order;
  order.reserve(n);
  std::queue<std::size_t> ready;
  for (std::size_t i = 0; i < n; ++i) {
    if (indeg[i] == 0) ready.push(i);
  }
  while (!ready.empty()) {
    const std::size_t v = ready.front();
    ready.pop();
    order.push_back(v);
    for (std::size_t w : up_[v]) {
      if (--indeg[w] == 0) ready.push(w);
    }
  }
  if (order.size() != n) {
    for (std::size_t i = 0; i < n; ++i) {
      if (indeg[i] != 0) throw InvalidInput("cover relation has a directed cycle through " + labels_[i]);
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::size_t v = *it;
    std::uint64_t* row = &above_[v * words_];
    for (std::size_t w : up_[v]) {
      row[w / 64] |= std::uint64_t{1} << (w % 64);
      const std::uint64_t* other = &above_[w * words_];
      for (std::size_t k = 0; k < words_; ++k) row[k] |= other[k];
    }
  }
}

std::optional<std::size_t> Poset::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

bool Poset::less(std::size_t a, std::size_t b) const {
  return (above_[a * words_ + b / 64] >> (b % 64)) & 1U;
}

std::vector<std::size_t> Poset::strictly_above(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t bits = above_[i * words_ + w];
    while (bits) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::size_t Poset::count_above(std::size_t i) const {
  std::size_t c = 0;
  for (std::size_t w = 0; w < words_; ++w) c += static_cast<std::size_t>(std::popcount(above_[i * words_ + w]));
  return c;
}

std::size_t Poset::count_below(std::size_t i) const {
  std::size_t c = 0;
  for (std::size_t j = 0; j < size(); ++j) c += less(j, i) ? 1 : 0;
  return c;
}

std::vector<std::size_t> Poset::minimal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (down_[i].empty()) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> Poset::maximal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (up_[i].empty()) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> Poset::ranks() const {
  const std::size_t n = size();
  std::vector<std::size_t> rank(n, 0);
  std::vector<std::size_t> indeg(n, 0);
  for (const auto& c : covers_) ++indeg[c.second];
  std::queue<std::size_t> ready;
  for (std::size_t i = 0; i < n; ++i) {
    if (indeg[i] == 0) ready.push(i);
  }
  while (!ready.empty()) {
    const std::size_t v = ready.front();
    ready.pop();
    for (std::size_t w : up_[v]) {
      rank[w] = std::max(rank[w], rank[v] + 1);
      if (--indeg[w] == 0) ready.push(w);
    }
  }
  return rank;
}

std::vector<std::size_t> Poset::rank_sizes() const {
  std::vector<std::size_t> sizes;
  for (std::size_t r : ranks()) {
    if (r >= sizes.size()) sizes.resize(r + 1, 0);
    ++sizes[r];
  }
  return sizes;
}

Poset Poset::dual() const {
  std::vector<CoverPair> flipped;
  flipped.reserve(covers_.size());
  for (const auto& [lo, hi] : covers_) flipped.emplace_back(hi, lo);
  return from_covers(labels_, std::move(flipped));
}

Poset Poset::induced(const std::vector<std::size_t>& subset) const {
  std::vector<std::string> labels;
  labels.reserve(subset.size());
  for (std::size_t i : subset) labels.push_back(labels_.at(i));
  return from_order(std::move(labels), [&](std::size_t a, std::size_t b) {
    return less(subset[a], subset[b]);
  });
}

void GroupAction::validate(const Poset& poset) const {
  const std::size_t n = poset.size();
  const std::set<CoverPair> covers(poset.covers().begin(), poset.covers().end());
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const auto& perm = generators[g];
    if (perm.size() != n) throw InvalidInput("group generator has wrong length");
    std::vector<bool> seen(n, false);
    for (std::size_t x : perm) {
      if (x >= n || seen[x]) throw InvalidInput("group generator is not a permutation");
      seen[x] = true;
    }
    for (const auto& [lo, hi] : covers) {
      if (!covers.contains({perm[lo], perm[hi]})) {
        throw InvalidInput("generator " + std::to_string(g) + " does not preserve cover (" +
                           poset.label(lo) + ", " + poset.label(hi) + ")");
      }
    }
  }
}

ClosureLawViolation::ClosureLawViolation(std::string law, std::size_t x, std::size_t y,
                                         const std::string& detail)
    : InvariantViolation("closure law '" + law + "' fails: " + detail),
      law_(std::move(law)),
      x_(x),
      y_(y) {}

SimplicialComplex order_complex(const Poset& poset) {
  std::vector<SimplicialComplex::Face> faces;
  std::vector<std::vector<std::size_t>> above(poset.size());
  for (std::size_t i = 0; i < poset.size(); ++i) above[i] = poset.strictly_above(i);

  std::vector<std::size_t> chain;
  std::function<void(std::size_t)> extend = [&](std::size_t top) {
    SimplicialComplex::Face face = chain;
    std::sort(face.begin(), face.end());
    faces.push_back(std::move(face));
    for (std::size_t next : above[top]) {
      chain.push_back(next);
      extend(next);
      chain.pop_back();
    }
  };
  for (std::size_t i = 0; i < poset.size(); ++i) {
    chain.assign(1, i);
    extend(i);
  }
  return SimplicialComplex::from_faces(std::move(faces));
}

QuotientPoset quotient_poset(const Poset& poset, const GroupAction& action) {
  action.validate(poset);
  const std::size_t n = poset.size();

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : action.generators) {
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t a = find(x);
      const std::size_t b = find(g[x]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }

  // Orbits ordered by their lexicographically least label.
  std::map<std::size_t, std::vector<std::size_t>> by_root;
  for (std::size_t x = 0; x < n; ++x) by_root[find(x)].push_back(x);
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<std::size_t> reps;
  for (auto& [root, members] : by_root) {
    const std::size_t rep = *std::min_element(members.begin(), members.end(), [&](auto a, auto b) {
      return poset.label(a) < poset.label(b);
    });
    orbits.push_back(std::move(members));
    reps.push_back(rep);
  }
  std::vector<std::size_t> perm(orbits.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](auto a, auto b) {
    return poset.label(reps[a]) < poset.label(reps[b]);
  });

  QuotientPoset q;
  q.orbit_of.assign(n, 0);
  for (std::size_t k = 0; k < perm.size(); ++k) {
    q.orbits.push_back(orbits[perm[k]]);
    q.representative.push_back(reps[perm[k]]);
    for (std::size_t x : q.orbits.back()) q.orbit_of[x] = k;
  }

  const std::size_t m = q.orbits.size();
  std::vector<std::vector<bool>> rel(m, std::vector<bool>(m, false));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b : poset.strictly_above(a)) {
      const std::size_t oa = q.orbit_of[a];
      const std::size_t ob = q.orbit_of[b];
      if (oa == ob) {
        throw InvariantViolation("orbit relation is not antisymmetric: " + poset.label(a) + " < " +
                                 poset.label(b) + " inside one orbit");
      }
      rel[oa][ob] = true;
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      if (rel[a][b] && rel[b][a]) {
        throw InvariantViolation("orbit relation is not antisymmetric: orbits of " +
                                 poset.label(q.representative[a]) + " and " +
                                 poset.label(q.representative[b]) + " are mutually below");
      }
    }
  }
  // The orbit relation may need closing under transitivity when the action
  // is not by automorphisms; ours always is, but close anyway.
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t i = 0; i < m; ++i) {
      if (!rel[i][k]) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (rel[k][j]) rel[i][j] = true;
      }
    }
  }
  std::vector<std::string> labels;
  for (std::size_t r : q.representative) labels.push_back(poset.label(r));
  q.poset = Poset::from_order(std::move(labels), [&](std::size_t a, std::size_t b) { return bool(rel[a][b]); });
  return q;
}

Poset product_of_chains(std::size_t k, std::size_t m) {
  if (m == 0) throw InvalidInput("chains must have at least one element");
  std::size_t count = 1;
  for (std::size_t i = 0; i < k; ++i) count *= m;

  auto digits = [&](std::size_t idx) {
    std::vector<std::size_t> d(k);
    for (std::size_t i = k; i-- > 0;) {
      d[i] = idx % m;
      idx /= m;
    }
    return d;
  };
  std::vector<std::string> labels;
  std::vector<CoverPair> covers;
  for (std::size_t idx = 0; idx < count; ++idx) {
    const auto d = digits(idx);
    std::string s = "(";
    for (std::size_t i = 0; i < k; ++i) s += (i ? "," : "") + std::to_string(d[i]);
    labels.push_back(s + ")");
    std::size_t stride = 1;
    for (std::size_t i = k; i-- > 0;) {
      if (d[i] + 1 < m) covers.emplace_back(idx, idx + stride);
      stride *= m;
    }
  }
  return Poset::from_covers(std::move(labels), std::move(covers));
}

ClosureImage closure_image(const Poset& poset, const std::vector<std::size_t>& f) {
  const std::size_t n = poset.size();
  if (f.size() != n) throw InvalidInput("closure map must be total on the poset");
  for (std::size_t x = 0; x < n; ++x) {
    if (f[x] >= n) throw InvalidInput("closure map leaves the poset");
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y : poset.strictly_above(x)) {
      if (!poset.leq(f[x], f[y])) {
        throw ClosureLawViolation("order-preserving", x, y,
                                  describe(poset, x) + " < " + describe(poset, y) + " but f(x)=" +
                                      describe(poset, f[x]) + " is not below f(y)=" + describe(poset, f[y]));
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (!poset.leq(x, f[x])) {
      throw ClosureLawViolation("inflationary", x, f[x],
                                "f(" + describe(poset, x) + ")=" + describe(poset, f[x]) + " is not above it");
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (f[f[x]] != f[x]) {
      throw ClosureLawViolation("idempotent", x, f[x],
                                "f(f(" + describe(poset, x) + ")) != f(" + describe(poset, x) + ")");
    }
  }
  ClosureImage img;
  std::vector<bool> in_image(n, false);
  for (std::size_t x = 0; x < n; ++x) in_image[f[x]] = true;
  for (std::size_t x = 0; x < n; ++x) {
    if (in_image[x]) img.elements.push_back(x);
  }
  img.poset = poset.induced(img.elements);
  return img;
}

bool is_isomorphism(const Poset& p, const Poset& q, const std::vector<std::size_t>& map) {
  if (p.size() != q.size() || map.size() != p.size()) return false;
  std::vector<bool> hit(q.size(), false);
  for (std::size_t x : map) {
    if (x >= q.size() || hit[x]) return false;
    hit[x] = true;
  }
  if (p.covers().size() != q.covers().size()) return false;
  std::set<CoverPair> qc(q.covers().begin(), q.covers().end());
  for (const auto& [lo, hi] : p.covers()) {
    if (!qc.contains({map[lo], map[hi]})) return false;
  }
  // Equal cover counts plus injectivity on covers gives reflection too.
  return true;
}

namespace {

// Color refinement on the Hasse diagram, seeded by rank and degree data.
// Both posets are refined together so colors are comparable.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> refine_colors(const Poset& p, const Poset& q) {
  auto seed = [](const Poset& x) {
    std::vector<std::vector<std::size_t>> s(x.size());
    const auto rank = x.ranks();
    const auto dual_rank = x.dual().ranks();
    for (std::size_t i = 0; i < x.size(); ++i) {
      s[i] = {rank[i], dual_rank[i], x.upper_covers(i).size(), x.lower_covers(i).size(),
              x.count_above(i), x.count_below(i)};
    }
    return s;
  };
  auto sp = seed(p);
  auto sq = seed(q);
  std::vector<std::size_t> cp(p.size());
  std::vector<std::size_t> cq(q.size());

  auto assign = [&](const std::vector<std::vector<std::size_t>>& a, const std::vector<std::vector<std::size_t>>& b) {
    std::map<std::vector<std::size_t>, std::size_t> ids;
    for (const auto& v : a) ids.emplace(v, 0);
    for (const auto& v : b) ids.emplace(v, 0);
    std::size_t next = 0;
    for (auto& [k, id] : ids) id = next++;
    for (std::size_t i = 0; i < a.size(); ++i) cp[i] = ids[a[i]];
    for (std::size_t i = 0; i < b.size(); ++i) cq[i] = ids[b[i]];
    return ids.size();
  };
  std::size_t classes = assign(sp, sq);
  for (;;) {
    auto step = [](const Poset& x, const std::vector<std::size_t>& c) {
      std::vector<std::vector<std::size_t>> s(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) {
        std::vector<std::size_t> up;
        std::vector<std::size_t> down;
        for (std::size_t j : x.upper_covers(i)) up.push_back(c[j]);
        for (std::size_t j : x.lower_covers(i)) down.push_back(c[j]);
        std::sort(up.begin(), up.end());
        std::sort(down.begin(), down.end());
        s[i] = {c[i], up.size()};
        s[i].insert(s[i].end(), up.begin(), up.end());
        s[i].push_back(down.size());
        s[i].insert(s[i].end(), down.begin(), down.end());
      }
      return s;
    };
    const std::size_t next = assign(step(p, cp), step(q, cq));
    if (next == classes) break;
    classes = next;
  }
  return {cp, cq};
}

}  // namespace

std::optional<std::vector<std::size_t>> are_isomorphic(const Poset& p, const Poset& q) {
  const std::size_t n = p.size();
  if (n != q.size() || p.covers().size() != q.covers().size()) return std::nullopt;
  if (p.rank_sizes() != q.rank_sizes()) return std::nullopt;
  if (n == 0) return std::vector<std::size_t>{};

  const auto [cp, cq] = refine_colors(p, q);
  {
    auto a = cp;
    auto b = cq;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  // Assign P's elements in BFS order over the Hasse diagram (undirected),
  // rarest color class first, so each new element has mapped neighbours.
  std::map<std::size_t, std::size_t> class_size;
  for (std::size_t c : cp) ++class_size[c];
  std::vector<std::size_t> order;
  std::vector<bool> queued(n, false);
  std::vector<std::size_t> seeds(n);
  std::iota(seeds.begin(), seeds.end(), 0);
  std::stable_sort(seeds.begin(), seeds.end(), [&](auto a, auto b) {
    return std::pair(class_size[cp[a]], cp[a]) < std::pair(class_size[cp[b]], cp[b]);
  });
  for (std::size_t s : seeds) {
    if (queued[s]) continue;
    std::queue<std::size_t> bfs;
    bfs.push(s);
    queued[s] = true;
    while (!bfs.empty()) {
      const std::size_t v = bfs.front();
      bfs.pop();
      order.push_back(v);
      std::vector<std::size_t> nb = p.upper_covers(v);
      nb.insert(nb.end(), p.lower_covers(v).begin(), p.lower_covers(v).end());
      std::sort(nb.begin(), nb.end());
      for (std::size_t w : nb) {
        if (!queued[w]) {
          queued[w] = true;
          bfs.push(w);
        }
      }
    }
  }

  std::map<std::size_t, std::vector<std::size_t>> q_by_color;
  for (std::size_t j = 0; j < n; ++j) q_by_color[cq[j]].push_back(j);

  std::vector<std::size_t> map(n, n);
  std::vector<std::size_t> inverse(n, n);
  std::size_t budget = 50'000'000;

  auto consistent = [&](std::size_t x, std::size_t y) {
    for (std::size_t u : p.upper_covers(x)) {
      if (map[u] != n && !std::binary_search(q.upper_covers(y).begin(), q.upper_covers(y).end(), map[u])) return false;
    }
    for (std::size_t d : p.lower_covers(x)) {
      if (map[d] != n && !std::binary_search(q.lower_covers(y).begin(), q.lower_covers(y).end(), map[d])) return false;
    }
    for (std::size_t v : q.upper_covers(y)) {
      if (inverse[v] != n && !std::binary_search(p.upper_covers(x).begin(), p.upper_covers(x).end(), inverse[v])) return false;
    }
    for (std::size_t v : q.lower_covers(y)) {
      if (inverse[v] != n && !std::binary_search(p.lower_covers(x).begin(), p.lower_covers(x).end(), inverse[v])) return false;
    }
    return true;
  };

  std::function<bool(std::size_t)> search = [&](std::size_t pos) -> bool {
    if (pos == n) return true;
    if (budget-- == 0) throw InvariantViolation("isomorphism search exceeded its step budget");
    const std::size_t x = order[pos];
    // Candidates: if x has a mapped neighbour, restrict to that neighbour's
    // covers; otherwise the whole color class.
    const std::vector<std::size_t>* pool = &q_by_color[cp[x]];
    std::vector<std::size_t> local;
    for (std::size_t u : p.upper_covers(x)) {
      if (map[u] != n) {
        local = q.lower_covers(map[u]);
        pool = &local;
        break;
      }
    }
    if (pool == &q_by_color[cp[x]]) {
      for (std::size_t d : p.lower_covers(x)) {
        if (map[d] != n) {
          local = q.upper_covers(map[d]);
          pool = &local;
          break;
        }
      }
    }
    for (std::size_t y : *pool) {
      if (inverse[y] != n || cq[y] != cp[x] || !consistent(x, y)) continue;
      map[x] = y;
      inverse[y] = x;
      if (search(pos + 1)) return true;
      map[x] = n;
      inverse[y] = n;
    }
    return false;
  };

  if (!search(0)) return std::nullopt;
  if (!is_isomorphism(p, q, map)) throw InvariantViolation("isomorphism search returned an invalid map");
  return map;
}

}  // namespace polystrata
