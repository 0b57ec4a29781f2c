#include "polystrata/strata.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "polystrata/errors.hpp"

namespace polystrata {

namespace {

constexpr int kMaxAmbient = 30;

void check_ambient(const NumberPartition& lambda, int n) {
  if (n < 0 || n > kMaxAmbient) throw InvalidInput("ambient degree must lie in [0, " + std::to_string(kMaxAmbient) + "]");
  if (lambda.weight() > n) throw InvalidInput("partition weight exceeds the ambient degree");
  if ((n - lambda.weight()) % 2 != 0) throw InvalidInput("ambient degree minus partition weight must be even");
}

std::vector<Composition> merges(const Composition& c) {
  std::vector<Composition> out;
  const auto& a = c.parts();
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    std::vector<int> parts(a.begin(), a.begin() + static_cast<long>(i));
    parts.push_back(a[i] + a[i + 1]);
    parts.insert(parts.end(), a.begin() + static_cast<long>(i) + 2, a.end());
    out.emplace_back(std::move(parts));
  }
  return out;
}

std::vector<Composition> insertions(const StratumCell& cell) {
  std::vector<Composition> out;
  if (cell.composition.weight() + 2 > cell.ambient) return out;
  const auto& a = cell.composition.parts();
  for (std::size_t s = 0; s <= a.size(); ++s) {
    std::vector<int> parts(a.begin(), a.begin() + static_cast<long>(s));
    parts.push_back(2);
    parts.insert(parts.end(), a.begin() + static_cast<long>(s), a.end());
    out.emplace_back(std::move(parts));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Coefficient of [b] in ∂[a] where b is a with one extra 2.
long insertion_sign(const Composition& a, const Composition& b, RunParity parity) {
  const auto& p = b.parts();
  std::optional<std::pair<std::size_t, std::size_t>> found;
  for (std::size_t j1 = 0; j1 < p.size();) {
    if (p[j1] != 2) {
      ++j1;
      continue;
    }
    std::size_t j2 = j1;
    while (j2 + 1 < p.size() && p[j2 + 1] == 2) ++j2;
    std::vector<int> removed = p;
    removed.erase(removed.begin() + static_cast<long>(j1));
    if (removed == a.parts()) {
      if (found) {
        throw InvariantViolation("two runs of 2's in " + b.to_string() + " both recover " + a.to_string());
      }
      found = std::pair(j1 + 1, j2 + 1);
    }
    j1 = j2 + 1;
  }
  if (!found) throw InvariantViolation(b.to_string() + " does not arise from " + a.to_string() + " by inserting a 2");
  const auto [j1, j2] = *found;
  const std::size_t length = j2 - j1 + 1;
  const bool vanishes = parity == RunParity::corrected ? length % 2 == 0 : (j2 - j1) % 2 == 0;
  if (vanishes) return 0;
  return (j1 - 1) % 2 == 0 ? 1 : -1;
}

CellCombination collect(std::map<StratumCell, long> terms) {
  CellCombination out;
  for (auto& [cell, coef] : terms) {
    if (coef != 0) out.emplace_back(cell, coef);
  }
  return out;
}

}  // namespace

int StratumCell::dimension() const {
  return static_cast<int>(composition.length()) + (ambient - composition.weight());
}

std::string StratumCell::to_string() const {
  return "(" + (composition.empty() ? std::string() : composition.to_string()) + ")@" + std::to_string(ambient);
}

std::vector<StratumCell> closure_cells(const NumberPartition& lambda, int n) {
  check_ambient(lambda, n);
  std::set<Composition> seen;
  std::vector<Composition> frontier;
  for (const auto& c : compositions_of_type(lambda)) {
    if (seen.insert(c).second) frontier.push_back(c);
  }
  while (!frontier.empty()) {
    std::vector<Composition> next;
    for (const auto& c : frontier) {
      const StratumCell source{c, n};
      auto moves = merges(c);
      for (auto& b : insertions(source)) moves.push_back(std::move(b));
      for (auto& b : moves) {
        if (StratumCell{b, n}.dimension() != source.dimension() - 1) {
          throw InvariantViolation("move from " + source.to_string() + " does not lower dimension by one");
        }
        if (seen.insert(b).second) next.push_back(std::move(b));
      }
    }
    frontier = std::move(next);
  }
  std::vector<StratumCell> cells;
  for (const auto& c : seen) cells.push_back({c, n});
  std::sort(cells.begin(), cells.end(), [](const StratumCell& a, const StratumCell& b) {
    if (a.dimension() != b.dimension()) return a.dimension() < b.dimension();
    return a.composition < b.composition;
  });
  return cells;
}

CellCombination boundary(const StratumCell& cell, RunParity parity) {
  std::map<StratumCell, long> terms;
  const auto merged = merges(cell.composition);
  for (std::size_t i = 0; i < merged.size(); ++i) {
    terms[{merged[i], cell.ambient}] += (i % 2 == 0) ? -1 : 1;  // (-1)^(i+1), 1-indexed merge position
  }
  for (const auto& b : insertions(cell)) {
    terms[{b, cell.ambient}] += insertion_sign(cell.composition, b, parity);
  }
  return collect(std::move(terms));
}

CellCombination boundary_squared(const StratumCell& cell, RunParity parity) {
  std::map<StratumCell, long> terms;
  for (const auto& [face, coef] : boundary(cell, parity)) {
    for (const auto& [face2, coef2] : boundary(face, parity)) terms[face2] += coef * coef2;
  }
  return collect(std::move(terms));
}

ChainComplex pol_chain_complex(const NumberPartition& lambda, int n, RunParity parity) {
  const auto cells = closure_cells(lambda, n);
  std::map<int, std::vector<StratumCell>> by_degree;
  for (const auto& c : cells) by_degree[c.dimension()].push_back(c);

  std::map<int, std::size_t> ranks;
  std::map<int, std::vector<std::string>> labels;
  std::map<StratumCell, std::size_t> index;
  for (const auto& [q, list] : by_degree) {
    ranks[q] = list.size();
    for (std::size_t i = 0; i < list.size(); ++i) {
      index[list[i]] = i;
      labels[q].push_back(list[i].composition.to_string());
    }
  }
  std::map<int, SparseMatrix> boundaries;
  for (const auto& [q, list] : by_degree) {
    if (!ranks.count(q - 1)) continue;
    SparseMatrix d(ranks[q - 1], list.size());
    for (std::size_t j = 0; j < list.size(); ++j) {
      for (const auto& [face, coef] : boundary(list[j], parity)) d.add(index.at(face), j, BigInt(coef));
    }
    boundaries.emplace(q, std::move(d));
  }
  return ChainComplex(std::move(ranks), std::move(boundaries), std::move(labels));
}

HomologyResult pol_homology(const NumberPartition& lambda, int n) {
  return chain_homology(pol_chain_complex(lambda, n), true);
}

Poset stratum_cell_poset(const NumberPartition& lambda, int n) {
  const auto cells = closure_cells(lambda, n);
  std::map<Composition, std::size_t> index;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    index[cells[i].composition] = i;
    labels.push_back(cells[i].composition.to_string());
  }
  std::vector<CoverPair> covers;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    auto moves = merges(cells[i].composition);
    for (auto& b : insertions(cells[i])) moves.push_back(std::move(b));
    for (const auto& b : moves) covers.emplace_back(index.at(b), i);
  }
  std::sort(covers.begin(), covers.end());
  covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
  return Poset::from_covers(std::move(labels), std::move(covers));
}

std::size_t total_cell_count(int n) {
  std::size_t count = (n % 2 == 0) ? 1 : 0;
  for (int m = n; m >= 1; m -= 2) count += std::size_t{1} << (m - 1);
  return count;
}

ComplementTable complement_cohomology(const NumberPartition& lambda, int n) {
  if (closure_cells(lambda, n).size() == total_cell_count(n)) {
    throw InvalidInput("the closure of the stratum " + lambda.to_string() + " is all of Pol^" + std::to_string(n));
  }
  const HomologyResult x = pol_homology(lambda, n);
  if (x.betti(n) != 0 || !x.torsion(n).empty()) {
    throw InvariantViolation("proper closed subset of S^" + std::to_string(n) + " has top-degree homology");
  }
  ComplementTable table;
  table.ambient = n;
  for (int q = 0; q <= n - 1; ++q) {
    table.homology.set(q, x.betti(n - q - 1), x.torsion(n - q - 2));
    table.cohomology.set(q, x.betti(n - q - 1), x.torsion(n - q - 1));
  }
  return table;
}

StabilizationReport stabilization_report(const NumberPartition& lambda, int n_min, int n_max) {
  if (n_min > n_max) throw InvalidInput("empty ambient range");
  check_ambient(lambda, n_min);
  StabilizationReport report;
  report.lambda = lambda;
  int last = n_min;
  for (int n = n_min; n <= n_max; n += 2) {
    report.columns.push_back(complement_cohomology(lambda, n));
    last = n;
  }
  for (std::size_t i = 0; i + 1 < report.columns.size(); ++i) {
    const auto& a = report.columns[i].cohomology;
    const auto& b = report.columns[i + 1].cohomology;
    std::optional<int> diff;
    for (int q = 0; q < report.columns[i + 1].ambient && !diff; ++q) {
      if (a.betti(q) != b.betti(q) || a.torsion(q) != b.torsion(q)) diff = q;
    }
    report.first_difference.push_back(diff);
  }
  report.union_poset = stratum_cell_poset(lambda, last);
  return report;
}

}  // namespace polystrata
