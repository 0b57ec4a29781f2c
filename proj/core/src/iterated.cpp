#include "polystrata/iterated.hpp"

#include <algorithm>
#include <set>

#include "polystrata/errors.hpp"

namespace polystrata {

namespace {

constexpr int kMaxCells = 1 << 16;

void check_shape(int n, int d) {
  if (n < 1 || n > kMaxWeight) throw InvalidInput("iterated compositions need 1 <= n <= " + std::to_string(kMaxWeight));
  if (d < 1) throw InvalidInput("iterated compositions need d >= 1");
}

void check_config(const IteratedComposition& pi, const std::vector<Point>& config) {
  if (static_cast<int>(config.size()) != pi.ambient()) throw InvalidInput("configuration has the wrong number of points");
  for (const auto& p : config) {
    if (static_cast<int>(p.size()) != pi.depth()) throw InvalidInput("point dimension differs from the iterated depth");
  }
}

bool sort_key_less(const Point& a, const Point& b) {
  for (std::size_t s = a.size(); s-- > 0;) {
    if (a[s] != b[s]) return a[s] < b[s];
  }
  return false;
}

}  // namespace

IteratedComposition::IteratedComposition(int n, int d, std::vector<int> thresholds)
    : n_(n), d_(d), thresholds_(std::move(thresholds)) {
  check_shape(n, d);
  if (static_cast<int>(thresholds_.size()) != n - 1) throw InvalidInput("one threshold per position of [n-1] expected");
  for (int t : thresholds_) {
    if (t < 1 || t > d + 1) throw InvalidInput("threshold out of range [1, d+1]");
  }
}

IteratedComposition IteratedComposition::from_levels(int n, const std::vector<MergedSet>& levels) {
  const int d = static_cast<int>(levels.size());
  check_shape(n, d);
  std::vector<int> thresholds(static_cast<std::size_t>(n - 1), d + 1);
  for (int s = d; s >= 1; --s) {
    const MergedSet& a = levels[static_cast<std::size_t>(s - 1)];
    if (a.ambient != n) throw InvalidInput("level ambient differs from n");
    if (a.mask & ~a.full_mask()) throw InvalidInput("level has positions outside [n-1]");
    if (s < d && !a.subset_of(levels[static_cast<std::size_t>(s)])) throw InvalidInput("levels are not nested");
    for (int i : a.positions()) thresholds[static_cast<std::size_t>(i - 1)] = s;
  }
  return IteratedComposition(n, d, std::move(thresholds));
}

MergedSet IteratedComposition::level(int s) const {
  if (s < 1 || s > d_) throw InvalidInput("level out of range");
  MergedSet a{n_, 0};
  for (std::size_t i = 0; i < thresholds_.size(); ++i) {
    if (thresholds_[i] <= s) a.mask |= std::uint64_t{1} << i;
  }
  return a;
}

int IteratedComposition::blocks(int s) const { return n_ - level(s).size(); }

std::string IteratedComposition::to_string() const {
  std::string out;
  for (int s = 1; s <= d_; ++s) {
    out += "{";
    const auto pos = level(s).positions();
    for (std::size_t i = 0; i < pos.size(); ++i) out += (i ? "," : "") + std::to_string(pos[i]);
    out += "}";
  }
  return out;
}

bool IteratedComposition::leq(const IteratedComposition& other) const {
  if (n_ != other.n_ || d_ != other.d_) return false;
  for (std::size_t i = 0; i < thresholds_.size(); ++i) {
    if (thresholds_[i] < other.thresholds_[i]) return false;
  }
  return true;
}

IteratedPoset iterated_poset(int n, int d) {
  check_shape(n, d);
  double count = 1;
  for (int i = 1; i < n; ++i) count *= d + 1;
  if (count > kMaxCells) throw InvalidInput("iterated poset too large");
  IteratedPoset out;
  // Odometer over thresholds; element order matches product_of_chains.
  std::vector<int> chain(static_cast<std::size_t>(n - 1), 0);
  for (;;) {
    std::vector<int> thresholds;
    for (int c : chain) thresholds.push_back(d + 1 - c);
    out.elements.emplace_back(n, d, std::move(thresholds));
    std::size_t k = chain.size();
    while (k > 0 && chain[k - 1] == d) chain[--k] = 0;
    if (k == 0) break;
    ++chain[k - 1];
  }
  std::vector<std::string> labels;
  for (const auto& e : out.elements) labels.push_back(e.to_string());
  std::vector<CoverPair> covers;
  for (std::size_t i = 0; i < out.elements.size(); ++i) {
    const auto& th = out.elements[i].thresholds();
    std::size_t stride = 1;
    for (std::size_t p = th.size(); p-- > 0;) {
      if (th[p] > 1) covers.emplace_back(i, i + stride);
      stride *= static_cast<std::size_t>(d + 1);
    }
  }
  std::sort(covers.begin(), covers.end());
  out.poset = Poset::from_covers(std::move(labels), std::move(covers));

  const Poset chains = product_of_chains(static_cast<std::size_t>(n - 1), static_cast<std::size_t>(d + 1));
  for (const auto& e : out.elements) {
    std::string label = "(";
    for (std::size_t i = 0; i < e.thresholds().size(); ++i) label += (i ? "," : "") + std::to_string(d + 1 - e.thresholds()[i]);
    label += ")";
    const auto idx = chains.index_of(label);
    if (!idx) throw InvariantViolation("product-of-chains element " + label + " missing");
    out.to_product.push_back(*idx);
  }
  if (!is_isomorphism(out.poset, chains, out.to_product)) {
    throw InvariantViolation("position-threshold map is not a poset isomorphism");
  }
  return out;
}

int cell_dimension(const IteratedComposition& pi) {
  int dim = pi.ambient() * pi.depth();
  for (int s = 1; s <= pi.depth(); ++s) dim -= pi.ambient() - pi.blocks(s);
  return dim;
}

bool cell_contains(const IteratedComposition& pi, const std::vector<Point>& config) {
  check_config(pi, config);
  const int n = pi.ambient();
  const int d = pi.depth();
  const auto& th = pi.thresholds();
  for (int i = 0; i + 1 < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      // First level joining i and j: the largest threshold between them.
      const int join = *std::max_element(th.begin() + i, th.begin() + j);
      for (int s = join; s <= d; ++s) {
        if (config[static_cast<std::size_t>(i)][static_cast<std::size_t>(s - 1)] != config[static_cast<std::size_t>(j)][static_cast<std::size_t>(s - 1)]) return false;
      }
      if (join >= 2 &&
          !(config[static_cast<std::size_t>(i)][static_cast<std::size_t>(join - 2)] < config[static_cast<std::size_t>(j)][static_cast<std::size_t>(join - 2)])) {
        return false;
      }
    }
  }
  return true;
}

bool cell_contains_unordered(const IteratedComposition& pi, std::vector<Point> config) {
  check_config(pi, config);
  std::stable_sort(config.begin(), config.end(), sort_key_less);
  return cell_contains(pi, config);
}

IteratedComposition locate_cell(int d, std::vector<Point> config) {
  const int n = static_cast<int>(config.size());
  check_shape(n, d);
  for (const auto& p : config) {
    if (static_cast<int>(p.size()) != d) throw InvalidInput("point dimension differs from d");
  }
  std::stable_sort(config.begin(), config.end(), sort_key_less);
  std::vector<int> thresholds;
  for (int i = 0; i + 1 < n; ++i) {
    const auto& a = config[static_cast<std::size_t>(i)];
    const auto& b = config[static_cast<std::size_t>(i + 1)];
    int s = d + 1;
    while (s > 1 && a[static_cast<std::size_t>(s - 2)] == b[static_cast<std::size_t>(s - 2)]) --s;
    thresholds.push_back(s);
  }
  IteratedComposition pi(n, d, std::move(thresholds));
  if (!cell_contains(pi, config)) throw InvariantViolation("located cell does not contain the configuration");
  return pi;
}

IteratedCompositionPoset c_lambda_d_poset(const NumberPartition& lambda, int d, bool include_top) {
  const int n = lambda.weight();
  check_shape(n, d);
  // Levels are nested unions; store each element as its tuple of masks.
  std::set<std::vector<std::uint64_t>> closure;
  std::vector<std::vector<std::uint64_t>> generators;
  for (const auto& c : compositions_of_type(lambda)) {
    generators.emplace_back(static_cast<std::size_t>(d), merged_set(c).mask);
  }
  closure.insert(generators.begin(), generators.end());
  std::vector<std::vector<std::uint64_t>> frontier = generators;
  while (!frontier.empty()) {
    std::vector<std::vector<std::uint64_t>> next;
    for (const auto& a : frontier) {
      for (const auto& g : generators) {
        std::vector<std::uint64_t> u(a.size());
        for (std::size_t s = 0; s < a.size(); ++s) u[s] = a[s] | g[s];
        if (closure.insert(u).second) next.push_back(std::move(u));
      }
    }
    frontier = std::move(next);
  }
  if (!include_top) closure.erase(std::vector<std::uint64_t>(static_cast<std::size_t>(d), MergedSet{n, 0}.full_mask()));

  IteratedCompositionPoset out;
  for (const auto& levels : closure) {
    std::vector<MergedSet> sets;
    for (std::uint64_t m : levels) sets.push_back(MergedSet{n, m});
    out.elements.push_back(IteratedComposition::from_levels(n, sets));
  }
  std::vector<std::string> labels;
  for (const auto& e : out.elements) labels.push_back(e.to_string());
  out.poset = Poset::from_order(std::move(labels), [&](std::size_t a, std::size_t b) {
    return a != b && out.elements[a].leq(out.elements[b]);
  });
  return out;
}

}  // namespace polystrata
