#include "polystrata/homology.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "polystrata/errors.hpp"

namespace polystrata {

// ---------------------------------------------------------------------------
// ChainComplex

ChainComplex::ChainComplex(std::map<int, std::size_t> ranks, std::map<int, SparseMatrix> boundaries,
                           std::map<int, std::vector<std::string>> labels)
    : ranks_(std::move(ranks)), boundaries_(std::move(boundaries)), labels_(std::move(labels)) {
  std::erase_if(ranks_, [](const auto& kv) { return kv.second == 0; });
  for (const auto& [q, m] : boundaries_) {
    if (m.rows != rank(q - 1) || m.cols != rank(q)) {
      throw InvalidInput("boundary in degree " + std::to_string(q) + " has shape " + std::to_string(m.rows) + "x" +
                         std::to_string(m.cols) + ", expected " + std::to_string(rank(q - 1)) + "x" +
                         std::to_string(rank(q)));
    }
  }
  for (const auto& [q, l] : labels_) {
    if (l.size() != rank(q)) throw InvalidInput("generator labels do not match rank in degree " + std::to_string(q));
  }
  for (const auto& [q, m] : boundaries_) {
    auto below = boundaries_.find(q - 1);
    if (below == boundaries_.end()) continue;
    const SparseMatrix composite = multiply(below->second, m);
    if (composite.entries.empty()) continue;
    const std::size_t col = composite.entries.front().col;
    std::ostringstream msg;
    msg << "d∘d != 0: d(d(" << generator_label(q, col) << ")) =";
    for (const auto& e : composite.entries) {
      if (e.col == col) msg << " " << (sgn(e.value) > 0 ? "+" : "") << e.value << "*[" << generator_label(q - 2, e.row) << "]";
    }
    throw InvariantViolation(msg.str());
  }
}

std::size_t ChainComplex::rank(int q) const {
  auto it = ranks_.find(q);
  return it == ranks_.end() ? 0 : it->second;
}

SparseMatrix ChainComplex::boundary(int q) const {
  auto it = boundaries_.find(q);
  if (it != boundaries_.end()) return it->second;
  return SparseMatrix(rank(q - 1), rank(q));
}

std::string ChainComplex::generator_label(int q, std::size_t i) const {
  auto it = labels_.find(q);
  if (it != labels_.end() && i < it->second.size()) return it->second[i];
  return "deg" + std::to_string(q) + "#" + std::to_string(i);
}

std::optional<int> ChainComplex::min_degree() const {
  if (ranks_.empty()) return std::nullopt;
  return ranks_.begin()->first;
}

std::optional<int> ChainComplex::max_degree() const {
  if (ranks_.empty()) return std::nullopt;
  return ranks_.rbegin()->first;
}

long ChainComplex::euler_characteristic() const {
  long chi = 0;
  for (const auto& [q, r] : ranks_) chi += (q % 2 == 0 ? 1 : -1) * static_cast<long>(r);
  return chi;
}

// ---------------------------------------------------------------------------
// HomologyResult

void HomologyResult::set(int degree, std::size_t betti, std::vector<BigInt> torsion) {
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (torsion[i] <= 1) throw InvalidInput("torsion factors must exceed 1");
    if (i > 0 && !mpz_divisible_p(torsion[i].get_mpz_t(), torsion[i - 1].get_mpz_t())) {
      throw InvalidInput("torsion factors must form a divisibility chain");
    }
  }
  if (betti == 0 && torsion.empty()) {
    groups_.erase(degree);
    return;
  }
  groups_[degree] = HomologyGroup{degree, betti, std::move(torsion)};
}

std::size_t HomologyResult::betti(int q) const {
  auto it = groups_.find(q);
  return it == groups_.end() ? 0 : it->second.betti;
}

std::vector<BigInt> HomologyResult::torsion(int q) const {
  auto it = groups_.find(q);
  return it == groups_.end() ? std::vector<BigInt>{} : it->second.torsion;
}

std::vector<HomologyGroup> HomologyResult::groups() const {
  std::vector<HomologyGroup> out;
  for (const auto& [q, g] : groups_) out.push_back(g);
  return out;
}

long HomologyResult::euler_characteristic() const {
  long chi = 0;
  for (const auto& [q, g] : groups_) chi += (q % 2 == 0 ? 1 : -1) * static_cast<long>(g.betti);
  return chi;
}

std::optional<int> HomologyResult::sphere_dimension() const {
  if (groups_.size() != 1) return std::nullopt;
  const auto& g = groups_.begin()->second;
  if (g.betti != 1 || !g.torsion.empty()) return std::nullopt;
  return g.degree;
}

std::string HomologyResult::to_string() const {
  if (groups_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [q, g] : groups_) {
    if (!first) os << ", ";
    first = false;
    os << "H" << q << "=";
    bool term = false;
    if (g.betti > 0) {
      os << "Z";
      if (g.betti > 1) os << "^" << g.betti;
      term = true;
    }
    for (const auto& t : g.torsion) {
      os << (term ? "+" : "") << "Z/" << t;
      term = true;
    }
  }
  return os.str();
}

HomologyResult chain_homology(const ChainComplex& complex, bool reduced) {
  HomologyResult result(reduced);
  if (!complex.min_degree()) return result;
  const int lo = *complex.min_degree();
  const int hi = *complex.max_degree();

  std::map<int, std::vector<BigInt>> factors;
  for (int q = lo; q <= hi + 1; ++q) {
    const SparseMatrix d = complex.boundary(q);
    factors[q] = (d.rows == 0 || d.cols == 0) ? std::vector<BigInt>{} : smith_normal_form(d);
  }
  for (int q = lo; q <= hi; ++q) {
    const std::size_t n = complex.rank(q);
    const std::size_t rank_out = factors[q].size();
    const std::size_t rank_in = factors[q + 1].size();
    if (rank_out + rank_in > n) throw InvariantViolation("boundary ranks exceed chain rank; d∘d check bypassed?");
    std::vector<BigInt> torsion;
    for (const auto& f : factors[q + 1]) {
      if (f > 1) torsion.push_back(f);
    }
    result.set(q, n - rank_out - rank_in, std::move(torsion));
  }
  if (result.euler_characteristic() != complex.euler_characteristic()) {
    throw InvariantViolation("Euler–Poincaré identity fails: chains give " +
                             std::to_string(complex.euler_characteristic()) + ", homology gives " +
                             std::to_string(result.euler_characteristic()));
  }
  return result;
}

HomologyResult suspension_shift(const HomologyResult& h, int k) {
  HomologyResult out(h.reduced());
  for (const auto& g : h.groups()) out.set(g.degree + k, g.betti, g.torsion);
  return out;
}

// ---------------------------------------------------------------------------
// SimplicialComplex

SimplicialComplex SimplicialComplex::from_faces(std::vector<Face> faces) {
  SimplicialComplex k;
  for (auto& f : faces) {
    if (f.empty()) throw InvalidInput("the empty set is not a face");
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) throw InvalidInput("face has a repeated vertex");
    const std::size_t dim = f.size() - 1;
    if (k.faces_.size() <= dim) k.faces_.resize(dim + 1);
    k.faces_[dim].push_back(std::move(f));
  }
  for (auto& level : k.faces_) {
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
  }
  for (std::size_t dim = 1; dim < k.faces_.size(); ++dim) {
    for (const auto& f : k.faces_[dim]) {
      for (std::size_t i = 0; i < f.size(); ++i) {
        Face sub = f;
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
        if (!std::binary_search(k.faces_[dim - 1].begin(), k.faces_[dim - 1].end(), sub)) {
          throw InvalidInput("face set is not closed under taking subsets");
        }
      }
    }
  }
  return k;
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<Face>& facets) {
  std::set<Face> all;
  for (Face f : facets) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    if (f.empty()) continue;
    if (f.size() > 30) throw InvalidInput("facet too large for subset enumeration");
    const std::size_t count = std::size_t{1} << f.size();
    for (std::size_t mask = 1; mask < count; ++mask) {
      Face sub;
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (mask >> i & 1U) sub.push_back(f[i]);
      }
      all.insert(std::move(sub));
    }
  }
  return from_faces(std::vector<Face>(all.begin(), all.end()));
}

const std::vector<SimplicialComplex::Face>& SimplicialComplex::faces(int dim) const {
  static const std::vector<Face> none;
  if (dim < 0 || dim >= static_cast<int>(faces_.size())) return none;
  return faces_[static_cast<std::size_t>(dim)];
}

std::size_t SimplicialComplex::face_count() const {
  std::size_t c = 0;
  for (const auto& level : faces_) c += level.size();
  return c;
}

std::vector<SimplicialComplex::Face> SimplicialComplex::all_faces() const {
  std::vector<Face> out;
  for (const auto& level : faces_) out.insert(out.end(), level.begin(), level.end());
  return out;
}

std::vector<SimplicialComplex::Face> SimplicialComplex::facets() const {
  std::vector<Face> out;
  for (std::size_t dim = 0; dim < faces_.size(); ++dim) {
    for (const auto& f : faces_[dim]) {
      bool maximal = true;
      if (dim + 1 < faces_.size()) {
        for (const auto& g : faces_[dim + 1]) {
          if (std::includes(g.begin(), g.end(), f.begin(), f.end())) {
            maximal = false;
            break;
          }
        }
      }
      if (maximal) out.push_back(f);
    }
  }
  return out;
}

std::optional<std::size_t> SimplicialComplex::index_of(const Face& face) const {
  if (face.empty() || face.size() > faces_.size()) return std::nullopt;
  const auto& level = faces_[face.size() - 1];
  auto it = std::lower_bound(level.begin(), level.end(), face);
  if (it == level.end() || *it != face) return std::nullopt;
  return static_cast<std::size_t>(it - level.begin());
}

long SimplicialComplex::euler_characteristic() const {
  long chi = 0;
  for (std::size_t d = 0; d < faces_.size(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(faces_[d].size());
  return chi;
}

ChainComplex SimplicialComplex::chain_complex() const {
  std::map<int, std::size_t> ranks{{-1, 1}};
  std::map<int, SparseMatrix> boundaries;
  for (std::size_t d = 0; d < faces_.size(); ++d) ranks[static_cast<int>(d)] = faces_[d].size();
  if (!faces_.empty()) {
    SparseMatrix aug(1, faces_[0].size());
    for (std::size_t i = 0; i < faces_[0].size(); ++i) aug.add(0, i, 1);
    boundaries.emplace(0, std::move(aug));
  }
  for (std::size_t d = 1; d < faces_.size(); ++d) {
    SparseMatrix m(faces_[d - 1].size(), faces_[d].size());
    m.entries.reserve(faces_[d].size() * (d + 1));
    for (std::size_t j = 0; j < faces_[d].size(); ++j) {
      const Face& f = faces_[d][j];
      Face sub(f.size() - 1);
      for (std::size_t i = 0; i < f.size(); ++i) {
        std::copy(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(i), sub.begin());
        std::copy(f.begin() + static_cast<std::ptrdiff_t>(i) + 1, f.end(), sub.begin() + static_cast<std::ptrdiff_t>(i));
        const auto row = index_of(sub);
        m.entries.push_back({*row, j, BigInt(i % 2 == 0 ? 1 : -1)});
      }
    }
    boundaries.emplace(static_cast<int>(d), std::move(m));
  }
  return ChainComplex(std::move(ranks), std::move(boundaries));
}

HomologyResult simplicial_homology(const SimplicialComplex& complex) {
  return chain_homology(complex.chain_complex(), true);
}

}  // namespace polystrata
