#include "polystrata/export.hpp"

#include <sstream>

#include "json.hpp"
#include "polystrata/resonance.hpp"

namespace polystrata {

namespace {

using nlohmann::json;

json bigint_json(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json groups_json(const HomologyResult& h) {
  json groups = json::array();
  for (const auto& g : h.groups()) {
    json torsion = json::array();
    for (const auto& t : g.torsion) torsion.push_back(bigint_json(t));
    groups.push_back({{"degree", g.degree}, {"betti", g.betti}, {"torsion", torsion}});
  }
  return groups;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

json identities_json(const std::vector<IndexIdentity>& ids) {
  json out = json::array();
  for (const auto& id : ids) out.push_back(json::array({id.left, id.right}));
  return out;
}

}  // namespace

std::string poset_json(const Poset& poset) {
  json covers = json::array();
  for (const auto& [a, b] : poset.covers()) covers.push_back({a, b});
  return json{{"elements", poset.labels()}, {"covers", covers}}.dump();
}

std::string poset_dot(const Poset& poset, std::string_view name) {
  std::ostringstream os;
  os << "digraph \"" << dot_escape(std::string(name)) << "\" {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (std::size_t i = 0; i < poset.size(); ++i) os << "  n" << i << " [label=\"" << dot_escape(poset.label(i)) << "\"];\n";
  for (const auto& [a, b] : poset.covers()) os << "  n" << a << " -> n" << b << " [arrowhead=none];\n";
  os << "}\n";
  return os.str();
}

std::string homology_json(const HomologyResult& h) {
  return json{{"reduced", h.reduced()}, {"groups", groups_json(h)}}.dump();
}

std::string homology_csv(const HomologyResult& h) {
  std::ostringstream os;
  os << "degree,betti,torsion\n";
  for (const auto& g : h.groups()) {
    os << g.degree << "," << g.betti << ",";
    for (std::size_t i = 0; i < g.torsion.size(); ++i) os << (i ? ";" : "") << g.torsion[i];
    os << "\n";
  }
  return os.str();
}

std::string homology_text(const HomologyResult& h) {
  if (h.is_zero()) return "0\n";
  std::ostringstream os;
  for (const auto& g : h.groups()) {
    os << "H_" << g.degree << ": ";
    bool term = false;
    if (g.betti > 0) {
      os << "Z";
      if (g.betti > 1) os << "^" << g.betti;
      term = true;
    }
    for (const auto& t : g.torsion) {
      os << (term ? " + " : "") << "Z/" << t;
      term = true;
    }
    os << "\n";
  }
  return os.str();
}

std::string complex_json(const SimplicialComplex& complex) {
  return json{{"dimension", complex.dimension()}, {"faces", complex.all_faces()}}.dump();
}

std::string complex_dot(const SimplicialComplex& complex, std::string_view name) {
  std::ostringstream os;
  os << "graph \"" << dot_escape(std::string(name)) << "\" {\n";
  if (!complex.empty()) {
    for (const auto& v : complex.faces(0)) os << "  v" << v[0] << " [label=\"" << v[0] << "\"];\n";
  }
  if (complex.dimension() >= 1) {
    for (const auto& e : complex.faces(1)) os << "  v" << e[0] << " -- v" << e[1] << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string resonance_json(const Composition& parts) {
  return json{{"parts", parts.parts()},
              {"primitive", identities_json(primitive_identities(parts))},
              {"hyperplanes", identities_json(resonance_hyperplanes(parts))}}
      .dump();
}

std::string stabilization_csv(const StabilizationReport& report) {
  std::ostringstream os;
  os << "n,degree,betti,torsion\n";
  for (const auto& col : report.columns) {
    for (int q = 0; q < col.ambient; ++q) {
      os << col.ambient << "," << q << "," << col.cohomology.betti(q) << ",";
      const auto t = col.cohomology.torsion(q);
      for (std::size_t i = 0; i < t.size(); ++i) os << (i ? ";" : "") << t[i];
      os << "\n";
    }
  }
  return os.str();
}

std::string stabilization_json(const StabilizationReport& report) {
  json columns = json::array();
  for (const auto& col : report.columns) {
    columns.push_back({{"n", col.ambient}, {"cohomology", groups_json(col.cohomology)}, {"homology", groups_json(col.homology)}});
  }
  json diffs = json::array();
  for (const auto& d : report.first_difference) diffs.push_back(d ? json(*d) : json(nullptr));
  return json{{"lambda", report.lambda.parts()},
              {"columns", columns},
              {"first_difference", diffs},
              {"union_poset", json::parse(poset_json(report.union_poset))}}
      .dump();
}

}  // namespace polystrata
