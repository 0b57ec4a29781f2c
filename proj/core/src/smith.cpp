#include <algorithm>
#include <numeric>
#include <utility>

#include "polystrata/errors.hpp"
#include "polystrata/homology.hpp"

namespace polystrata {

namespace {

using Dense = std::vector<std::vector<BigInt>>;

// In-place Smith reduction of a dense matrix; returns the nonzero diagonal.
std::vector<BigInt> dense_smith(Dense a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<BigInt> diag;

  auto min_abs_in = [&](std::size_t from) {
    std::pair<std::size_t, std::size_t> best{rows, cols};
    BigInt best_abs;
    for (std::size_t i = from; i < rows; ++i) {
      for (std::size_t j = from; j < cols; ++j) {
        if (sgn(a[i][j]) == 0) continue;
        BigInt v = abs(a[i][j]);
        if (best.first == rows || v < best_abs) {
          best = {i, j};
          best_abs = v;
          if (best_abs == 1) return best;
        }
      }
    }
    return best;
  };

  BigInt q;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    auto [pi, pj] = min_abs_in(t);
    if (pi == rows) break;
    std::swap(a[t], a[pi]);
    for (auto& row : a) std::swap(row[t], row[pj]);

    for (;;) {
      bool dirty = false;
      // Clear column t below the pivot.
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(a[i][t]) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        if (sgn(q) != 0) {
          for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        }
        if (sgn(a[i][t]) != 0) dirty = true;
      }
      // Clear row t right of the pivot.
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(a[t][j]) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        if (sgn(q) != 0) {
          for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        }
        if (sgn(a[t][j]) != 0) dirty = true;
      }
      if (dirty) {
        // A smaller remainder appeared in row or column t; move it to the
        // pivot position and repeat.
        std::size_t bi = t;
        std::size_t bj = t;
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (sgn(a[i][t]) != 0 && abs(a[i][t]) < abs(a[bi][bj])) { bi = i; bj = t; }
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (sgn(a[t][j]) != 0 && abs(a[t][j]) < abs(a[bi][bj])) { bi = t; bj = j; }
        }
        std::swap(a[t], a[bi]);
        for (auto& row : a) std::swap(row[t], row[bj]);
        continue;
      }
      // Row and column are clear; enforce divisibility of the rest.
      bool fixed = false;
      for (std::size_t i = t + 1; i < rows && !fixed; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (!mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
            for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
            fixed = true;
            break;
          }
        }
      }
      if (!fixed) break;
    }
    diag.push_back(abs(a[t][t]));
  }
  return diag;
}

// Normalizes any diagonal to a divisibility chain via (gcd, lcm) swaps.
std::vector<BigInt> to_divisibility_chain(std::vector<BigInt> d) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      BigInt g = gcd(d[i], d[j]);
      BigInt l = lcm(d[i], d[j]);
      d[i] = g;
      d[j] = l;
    }
  }
  return d;
}

}  // namespace

void SparseMatrix::add(std::size_t row, std::size_t col, const BigInt& value) {
  if (row >= rows || col >= cols) throw InvalidInput("sparse matrix entry out of range");
  entries.push_back({row, col, value});
}

std::vector<SparseMatrix::Entry> SparseMatrix::canonical() const {
  std::vector<Entry> e = entries;
  std::sort(e.begin(), e.end(), [](const Entry& a, const Entry& b) {
    return std::pair(a.col, a.row) < std::pair(b.col, b.row);
  });
  std::vector<Entry> out;
  for (auto& x : e) {
    if (!out.empty() && out.back().row == x.row && out.back().col == x.col) {
      out.back().value += x.value;
    } else {
      out.push_back(std::move(x));
    }
  }
  std::erase_if(out, [](const Entry& x) { return sgn(x.value) == 0; });
  return out;
}

std::vector<std::vector<BigInt>> SparseMatrix::to_dense() const {
  Dense d(rows, std::vector<BigInt>(cols, 0));
  for (const auto& e : entries) d[e.row][e.col] += e.value;
  return d;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<BigInt>>& dense) {
  SparseMatrix m(dense.size(), dense.empty() ? 0 : dense[0].size());
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i].size() != m.cols) throw InvalidInput("ragged dense matrix");
    for (std::size_t j = 0; j < m.cols; ++j) {
      if (sgn(dense[i][j]) != 0) m.add(i, j, dense[i][j]);
    }
  }
  return m;
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols != b.rows) throw InvalidInput("matrix shapes do not compose");
  std::vector<std::vector<std::pair<std::size_t, BigInt>>> a_cols(a.cols);
  for (const auto& e : a.canonical()) a_cols[e.col].emplace_back(e.row, e.value);
  SparseMatrix out(a.rows, b.cols);
  for (const auto& e : b.canonical()) {
    for (const auto& [r, v] : a_cols[e.row]) out.entries.push_back({r, e.col, v * e.value});
  }
  out.entries = out.canonical();
  return out;
}

std::vector<BigInt> smith_normal_form(const std::vector<std::vector<BigInt>>& dense) {
  for (const auto& row : dense) {
    if (!dense.empty() && row.size() != dense[0].size()) throw InvalidInput("ragged dense matrix");
  }
  return to_divisibility_chain(dense_smith(dense));
}

std::vector<BigInt> smith_normal_form(const SparseMatrix& m) {
  using Row = std::vector<std::pair<std::size_t, BigInt>>;
  std::vector<Row> rows(m.rows);
  for (auto& e : m.canonical()) rows[e.row].emplace_back(e.col, std::move(e.value));
  for (auto& r : rows) std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<std::vector<std::size_t>> col_rows(m.cols);
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (const auto& [c, v] : rows[r]) col_rows[c].push_back(r);
  }
  std::vector<bool> row_alive(m.rows, true);
  std::vector<bool> col_alive(m.cols, true);

  auto entry = [&](std::size_t r, std::size_t c) -> const BigInt* {
    const Row& row = rows[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& p, std::size_t key) { return p.first < key; });
    if (it == row.end() || it->first != c) return nullptr;
    return &it->second;
  };

  std::vector<BigInt> factors;
  std::size_t unit_pivots = 0;
  Row merged;
  bool progress = true;
  while (progress) {
    progress = false;
    std::vector<std::size_t> order;
    for (std::size_t c = 0; c < m.cols; ++c) {
      if (col_alive[c]) order.push_back(c);
    }
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return col_rows[a].size() < col_rows[b].size(); });

    for (std::size_t c : order) {
      if (!col_alive[c]) continue;
      auto& list = col_rows[c];
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
      std::erase_if(list, [&](std::size_t r) { return !row_alive[r] || entry(r, c) == nullptr; });
      if (list.empty()) {
        col_alive[c] = false;
        continue;
      }
      std::size_t pivot = m.rows;
      for (std::size_t r : list) {
        const BigInt* v = entry(r, c);
        if ((*v == 1 || *v == -1) && (pivot == m.rows || rows[r].size() < rows[pivot].size())) pivot = r;
      }
      if (pivot == m.rows) continue;

      const BigInt pv = *entry(pivot, c);
      const Row& prow = rows[pivot];
      for (std::size_t r : list) {
        if (r == pivot) continue;
        const BigInt coef = *entry(r, c) * pv;
        merged.clear();
        const Row& row = rows[r];
        std::size_t i = 0;
        std::size_t j = 0;
        while (i < row.size() || j < prow.size()) {
          if (j == prow.size() || (i < row.size() && row[i].first < prow[j].first)) {
            merged.push_back(row[i++]);
          } else if (i == row.size() || prow[j].first < row[i].first) {
            merged.emplace_back(prow[j].first, -coef * prow[j].second);
            col_rows[prow[j].first].push_back(r);
            ++j;
          } else {
            BigInt v = row[i].second - coef * prow[j].second;
            if (sgn(v) != 0) merged.emplace_back(row[i].first, std::move(v));
            ++i;
            ++j;
          }
        }
        rows[r].swap(merged);
      }
      row_alive[pivot] = false;
      col_alive[c] = false;
      rows[pivot].clear();
      list.clear();
      ++unit_pivots;
      progress = true;
    }
  }

  // Dense Smith form on what survived the unit pivots.
  std::vector<std::size_t> live_rows;
  std::vector<std::size_t> col_index(m.cols, m.cols);
  std::size_t live_cols = 0;
  for (std::size_t r = 0; r < m.rows; ++r) {
    if (!row_alive[r] || rows[r].empty()) continue;
    live_rows.push_back(r);
    for (const auto& [c, v] : rows[r]) {
      if (col_index[c] == m.cols) col_index[c] = live_cols++;
    }
  }
  factors.assign(unit_pivots, BigInt(1));
  if (!live_rows.empty()) {
    Dense rest(live_rows.size(), std::vector<BigInt>(live_cols, 0));
    for (std::size_t i = 0; i < live_rows.size(); ++i) {
      for (const auto& [c, v] : rows[live_rows[i]]) rest[i][col_index[c]] = v;
    }
    for (auto& d : to_divisibility_chain(dense_smith(std::move(rest)))) factors.push_back(std::move(d));
  }
  return factors;
}

}  // namespace polystrata
