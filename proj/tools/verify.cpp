#include "verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <regex>

#include "polystrata/errors.hpp"
#include "polystrata/hyperbolic.hpp"
#include "polystrata/iterated.hpp"
#include "polystrata/permutahedron.hpp"
#include "polystrata/resonance.hpp"
#include "polystrata/strata.hpp"

namespace polystrata::cli {

namespace {

Range bounded(const std::optional<Range>& r, Range fallback, int lo, int hi, const char* name) {
  const Range v = r.value_or(fallback);
  if (v.lo > v.hi || v.lo < lo || v.hi > hi) {
    throw InvalidInput(std::string("--") + name + " must lie within " + std::to_string(lo) + ".." + std::to_string(hi));
  }
  return v;
}

int bounded(const std::optional<int>& v, int fallback, int lo, int hi, const char* name) {
  const int x = v.value_or(fallback);
  if (x < lo || x > hi) {
    throw InvalidInput(std::string("--") + name + " must lie within " + std::to_string(lo) + ".." + std::to_string(hi));
  }
  return x;
}

// Multisets of `t` parts from 1..max_part, ascending.
std::vector<NumberPartition> multisets(int t, int max_part) {
  std::vector<NumberPartition> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int min_part) {
    if (static_cast<int>(cur.size()) == t) {
      out.emplace_back(cur);
      return;
    }
    for (int p = min_part; p <= max_part; ++p) {
      cur.push_back(p);
      rec(p);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

std::vector<NumberPartition> parse_lambdas(const std::vector<std::string>& texts) {
  std::vector<NumberPartition> out;
  for (const auto& s : texts) out.push_back(NumberPartition::parse(s));
  return out;
}

VerificationReport hook_suite(const VerifyOptions& o) {
  VerificationReport r{"hook", {}};
  const Range ns = bounded(o.n, {2, 12}, 2, 14, "n");
  const Range ks = bounded(o.k, {2, 12}, 2, 14, "k");
  for (int n = ns.lo; n <= ns.hi; ++n) {
    for (int k = ks.lo; k <= std::min(ks.hi, n); ++k) {
      const auto lambda = NumberPartition::hook(n, k);
      const auto prediction = hook_prediction(n, k).compactification;
      const auto h = hyp_homology(lambda).result;
      r.cases.push_back({"n=" + std::to_string(n) + " k=" + std::to_string(k), prediction.to_string(), h.to_string(), prediction.matches(h)});
    }
  }
  return r;
}

VerificationReport resonance_free_suite(const VerifyOptions& o) {
  VerificationReport r{"resonance-free", {}};
  const int max_weight = bounded(o.max_weight, 12, 1, 14, "max-weight");
  for (int n = 1; n <= max_weight; ++n) {
    for (const auto& lambda : NumberPartition::all_of(n)) {
      const auto prediction = resonance_free_prediction(lambda);
      if (prediction.kind == Prediction::Kind::none) continue;
      const auto h = hyp_homology(lambda).result;
      r.cases.push_back({lambda.to_string(), prediction.to_string(), h.to_string(), prediction.matches(h)});
    }
  }
  return r;
}

VerificationReport young_suite(const VerifyOptions& o) {
  VerificationReport r{"young-quotient", {}};
  const Range ts = bounded(o.t, {2, 5}, 2, kMaxPermutahedronRank, "t");
  const int max_part = bounded(o.max_part, 9, 1, 20, "max-part");
  std::vector<NumberPartition> cases;
  for (int t = ts.lo; t <= ts.hi; ++t) {
    for (auto& lambda : multisets(t, max_part)) {
      if (is_free_of_resonances(lambda)) cases.push_back(std::move(lambda));
    }
  }
  auto extras = o.lambdas.empty() ? parse_lambdas({"6,9,11,12,13", "3,5,6,7"}) : parse_lambdas(o.lambdas);
  for (auto& lambda : extras) {
    if (std::find(cases.begin(), cases.end(), lambda) == cases.end()) cases.push_back(std::move(lambda));
  }
  for (const auto& lambda : cases) {
    const auto rep = verify_young_quotient(lambda);
    const int t = static_cast<int>(lambda.length());
    std::string expected = "L_t/H ~ C_lambda, ";
    expected += lambda.has_repeated_part() ? "acyclic" : "S^" + std::to_string(t - 2);
    std::string computed;
    if (!rep.applicable) {
      computed = "inapplicable: " + rep.inapplicable_reason;
    } else {
      computed = rep.isomorphic ? "isomorphic" : "not isomorphic (" + std::to_string(rep.quotient.poset.size()) + " orbits, " +
                                                     std::to_string(rep.clambda.poset.size()) + " in C_lambda; onto coarsenings: " +
                                                     (rep.isomorphic_to_coarsenings ? "yes" : "no") + ")";
      computed += ", " + rep.clambda_homology.to_string();
    }
    r.cases.push_back({lambda.to_string(), expected, computed, rep.ok()});
  }
  return r;
}

VerificationReport iterated_suite(const VerifyOptions& o) {
  VerificationReport r{"iterated-product", {}};
  const Range ns = bounded(o.n, {2, 6}, 1, 8, "n");
  const Range ds = bounded(o.d, {1, 3}, 1, 4, "d");
  for (int n = ns.lo; n <= ns.hi; ++n) {
    for (int d = ds.lo; d <= ds.hi; ++d) {
      const auto it = iterated_poset(n, d);
      std::size_t expected = 1;
      for (int i = 1; i < n; ++i) expected *= static_cast<std::size_t>(d + 1);
      const auto chains = product_of_chains(static_cast<std::size_t>(n - 1), static_cast<std::size_t>(d + 1));
      const bool iso = are_isomorphic(it.poset, chains).has_value();
      r.cases.push_back({"n=" + std::to_string(n) + " d=" + std::to_string(d),
                         std::to_string(expected) + " elements, product of chains",
                         std::to_string(it.poset.size()) + " elements, " + (iso ? "isomorphic" : "not isomorphic"),
                         iso && it.poset.size() == expected});
    }
  }
  return r;
}

std::string identities_text(const Composition& c) {
  std::string s;
  for (const auto& id : primitive_identities(c)) {
    if (!s.empty()) s += "; ";
    for (const auto* side : {&id.left, &id.right}) {
      if (side == &id.right) s += "=";
      for (std::size_t i = 0; i < side->size(); ++i) s += (i ? "+" : "") + std::to_string(c.parts()[static_cast<std::size_t>((*side)[i] - 1)]);
    }
  }
  return s.empty() ? "none" : s;
}

VerificationReport machine_table_suite() {
  VerificationReport r{"machine-table", {}};
  auto order_complex_homology = [](const NumberPartition& l) {
    return simplicial_homology(order_complex(c_lambda_poset(l).poset));
  };
  for (int n = 5; n <= 9; ++n) {
    std::vector<int> parts(static_cast<std::size_t>(n - 4), 1);
    parts.insert(parts.end(), {2, 2});
    const NumberPartition l(parts);
    const auto h = order_complex_homology(l);
    r.cases.push_back({l.to_string(), "0", h.to_string(), h.is_zero()});
  }
  for (int n = 7; n <= 11; ++n) {
    std::vector<int> parts(static_cast<std::size_t>(n - 6), 1);
    parts.insert(parts.end(), {3, 3});
    const NumberPartition l(parts);
    const auto h = order_complex_homology(l);
    r.cases.push_back({l.to_string(), "0", h.to_string(), h.is_zero()});
  }
  {
    const Composition c({1, 2, 3, 5});
    const auto ids = identities_text(c);
    r.cases.push_back({"identities 1,2,3,5", "1+2=3; 2+3=5", ids, ids == "1+2=3; 2+3=5"});
    HomologyResult expected;
    expected.set(2, 3);
    const auto h = order_complex_homology(NumberPartition({1, 2, 3, 5}));
    r.cases.push_back({"1,2,3,5", expected.to_string(), h.to_string(), h == expected});
  }
  {
    const Composition c({1, 2, 4, 7});
    const auto ids = identities_text(c);
    r.cases.push_back({"identities 1,2,4,7", "1+2+4=7", ids, ids == "1+2+4=7"});
    HomologyResult expected;
    expected.set(1, 1);
    expected.set(2, 1);
    const auto h = order_complex_homology(NumberPartition({1, 2, 4, 7}));
    r.cases.push_back({"1,2,4,7", expected.to_string(), h.to_string(), h == expected});
  }
  return r;
}

std::string combination_text(const CellCombination& c) {
  if (c.empty()) return "0";
  std::string s;
  for (const auto& [cell, coef] : c) {
    s += (coef < 0 ? (s.empty() ? "-" : " - ") : (s.empty() ? "" : " + "));
    if (std::labs(coef) != 1) s += std::to_string(std::labs(coef)) + "*";
    s += "[" + cell.composition.to_string() + "]";
  }
  return s;
}

VerificationReport d_squared_suite(const VerifyOptions& o) {
  VerificationReport r{"d-squared", {}};
  const Range ls = bounded(o.l, {0, 6}, 0, 8, "l");
  const int n_max = bounded(o.n_max, 10, 0, 12, "n-max");
  for (int l = ls.lo; l <= ls.hi; ++l) {
    for (const auto& lambda : NumberPartition::all_of(l)) {
      for (int n = l; n <= n_max; n += 2) {
        std::string computed = "0";
        for (const auto& cell : closure_cells(lambda, n)) {
          const auto sq = boundary_squared(cell);
          if (!sq.empty()) {
            computed = "dd[" + cell.composition.to_string() + "] = " + combination_text(sq);
            break;
          }
        }
        r.cases.push_back({"lambda=" + lambda.to_string() + " n=" + std::to_string(n), "0", computed, computed == "0"});
      }
    }
  }
  const StratumCell probe{Composition({1, 1}), 4};
  const auto literal = combination_text(boundary_squared(probe, RunParity::literal));
  r.cases.push_back({"literal parity dd[1,1] n=4", "-[2,2]", literal, literal == "-[2,2]"});
  return r;
}

VerificationReport backends_suite(const VerifyOptions& o) {
  VerificationReport r{"backends", {}};
  const int n_max = bounded(o.n_max, 7, 1, 9, "n-max");
  for (int n = 1; n <= n_max; ++n) {
    for (const auto& lambda : NumberPartition::all_of(n)) {
      std::string computed;
      bool agree = true;
      std::optional<HomologyResult> first;
      for (HypBackend b : {HypBackend::cells, HypBackend::order_complex, HypBackend::delta}) {
        const auto h = hyp_homology(lambda, b);
        computed += (computed.empty() ? "" : " | ") + to_string(b) + ": " + h.to_string();
        if (!first) first = h;
        agree = agree && h == *first;
      }
      r.cases.push_back({lambda.to_string(), "all backends agree", computed, agree});
    }
  }
  return r;
}

VerificationReport closure_reduction_suite(const VerifyOptions& o) {
  VerificationReport r{"closure-reduction", {}};
  const int n_max = bounded(o.n_max, 7, 2, 9, "n-max");
  for (int n = 2; n <= n_max; ++n) {
    for (const auto& lambda : NumberPartition::all_of(n)) {
      const auto rep = verify_closure_reduction(lambda);
      std::string computed = rep.image_isomorphic_to_clambda ? "isomorphic" : "not isomorphic";
      computed += ", " + rep.face_poset_homology.to_string() + " vs " + rep.clambda_homology.to_string();
      r.cases.push_back({lambda.to_string(), "image ~ C_lambda, equal homology", computed, rep.ok()});
    }
  }
  return r;
}

VerificationReport geometric_suite() {
  VerificationReport r{"geometric", {}};
  const auto elliptic = pol_homology(NumberPartition(), 2);
  r.cases.push_back({"pol () n=2", "0", elliptic.to_string(), elliptic.is_zero()});
  const auto quartic = pol_homology(NumberPartition({2}), 4);
  HomologyResult s3;
  s3.set(3, 1);
  r.cases.push_back({"pol 2 n=4", s3.to_string(), quartic.to_string(), quartic == s3});
  const auto complement = complement_cohomology(NumberPartition({2}), 2);
  r.cases.push_back({"complement 2 n=2, reduced betti_0", "1", std::to_string(complement.homology.betti(0)),
                     complement.homology.betti(0) == 1});
  return r;
}

VerificationReport stabilization_suite(const VerifyOptions& o) {
  VerificationReport r{"stabilization", {}};
  const int n_max = bounded(o.n_max, 8, 1, 14, "n-max");
  const auto lambdas = o.lambdas.empty() ? parse_lambdas({"2", "3", "1,2"}) : parse_lambdas(o.lambdas);
  for (const auto& lambda : lambdas) {
    const int l = lambda.weight();
    if (l > n_max) continue;
    const auto rep = stabilization_report(lambda, l, n_max + 2);
    for (std::size_t i = 0; i + 1 < rep.columns.size(); ++i) {
      const int n = rep.columns[i].ambient;
      const auto diff = rep.first_difference[i];
      const bool ok = !diff || *diff > n - 2;
      r.cases.push_back({"lambda=" + lambda.to_string() + " n=" + std::to_string(n) + " vs " + std::to_string(n + 2),
                         "equal in degrees <= " + std::to_string(n - 2),
                         diff ? "first difference in degree " + std::to_string(*diff) + " (" + rep.columns[i].cohomology.to_string() +
                                    " vs " + rep.columns[i + 1].cohomology.to_string() + ")"
                              : "identical",
                         ok});
    }
  }
  return r;
}

const std::map<std::string, std::string>& aliases() {
  static const std::map<std::string, std::string> table{
      {"hook", "hook"},
      {"resonance-free", "resonance-free"},
      {"young-quotient", "young-quotient"},
      {"prop-3-7", "young-quotient"},
      {"iterated-product", "iterated-product"},
      {"prop-3-11", "iterated-product"},
      {"machine-table", "machine-table"},
      {"paper-table", "machine-table"},
      {"d-squared", "d-squared"},
      {"backends", "backends"},
      {"closure-reduction", "closure-reduction"},
      {"geometric", "geometric"},
      {"stabilization", "stabilization"},
  };
  return table;
}

}  // namespace

Range Range::parse(const std::string& text) {
  static const std::regex pattern(R"(\s*(-?\d{1,6})\s*(?:\.\.\s*(-?\d{1,6})\s*)?)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw InvalidInput("malformed range '" + text + "' (expected a..b)");
  Range r{std::stoi(m[1].str()), m[2].matched ? std::stoi(m[2].str()) : std::stoi(m[1].str())};
  if (r.lo > r.hi) throw InvalidInput("empty range '" + text + "'");
  return r;
}

bool VerificationReport::passed() const {
  return std::all_of(cases.begin(), cases.end(), [](const auto& c) { return c.match; });
}

std::size_t VerificationReport::matched() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const auto& c) { return c.match; }));
}

std::vector<std::string> suite_names() {
  return {"hook", "resonance-free", "young-quotient", "iterated-product", "machine-table", "d-squared",
          "backends", "closure-reduction", "geometric", "stabilization"};
}

VerificationReport run_suite(const std::string& suite, const VerifyOptions& options) {
  const auto it = aliases().find(suite);
  if (it == aliases().end()) throw InvalidInput("unknown verification suite '" + suite + "'");
  const std::string& name = it->second;
  if (name == "hook") return hook_suite(options);
  if (name == "resonance-free") return resonance_free_suite(options);
  if (name == "young-quotient") return young_suite(options);
  if (name == "iterated-product") return iterated_suite(options);
  if (name == "machine-table") return machine_table_suite();
  if (name == "d-squared") return d_squared_suite(options);
  if (name == "backends") return backends_suite(options);
  if (name == "closure-reduction") return closure_reduction_suite(options);
  if (name == "geometric") return geometric_suite();
  return stabilization_suite(options);
}

}  // namespace polystrata::cli
