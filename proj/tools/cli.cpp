#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "polystrata/errors.hpp"
#include "polystrata/export.hpp"
#include "polystrata/hyperbolic.hpp"
#include "polystrata/iterated.hpp"
#include "polystrata/permutahedron.hpp"
#include "polystrata/polyspace.hpp"
#include "polystrata/resonance.hpp"
#include "polystrata/strata.hpp"
#include "verify.hpp"

namespace polystrata::cli {

namespace {

using nlohmann::json;

struct Globals {
  std::string format = "text";
  bool quiet = false;
};

std::string render_homology(const HomologyResult& h, const std::string& format) {
  if (format == "json") return homology_json(h);
  if (format == "csv") return homology_csv(h);
  if (format == "text") return homology_text(h);
  throw InvalidInput("format '" + format + "' is not available for homology tables");
}

void print(std::ostream& out, const std::string& text) {
  out << text;
  if (text.empty() || text.back() != '\n') out << '\n';
}

json prediction_json(const Prediction& p) {
  json j;
  switch (p.kind) {
    case Prediction::Kind::sphere:
      j["kind"] = "sphere";
      j["dimension"] = p.dimension;
      break;
    case Prediction::Kind::point:
      j["kind"] = "point";
      break;
    case Prediction::Kind::none:
      j["kind"] = "none";
      j["reason"] = p.reason;
      break;
  }
  j["source"] = p.source;
  j["matches"] = nullptr;
  return j;
}

bool is_hook(const NumberPartition& lambda) {
  const auto& parts = lambda.parts();
  if (parts.empty() || parts.back() < 2) return false;
  return std::all_of(parts.begin(), parts.end() - 1, [](int p) { return p == 1; });
}

std::vector<Prediction> predictions_for(const NumberPartition& lambda) {
  std::vector<Prediction> out;
  if (is_hook(lambda)) out.push_back(hook_prediction(lambda.weight(), lambda.parts().back()).compactification);
  const auto free = resonance_free_prediction(lambda);
  if (free.kind != Prediction::Kind::none || out.empty()) out.push_back(free);
  return out;
}

std::string identity_text(const Composition& c, const IndexIdentity& id) {
  std::string s;
  for (const auto* side : {&id.left, &id.right}) {
    if (side == &id.right) s += "=";
    for (std::size_t i = 0; i < side->size(); ++i) {
      s += (i ? "+" : "") + std::to_string(c.parts()[static_cast<std::size_t>((*side)[i] - 1)]);
    }
  }
  return s;
}

std::string complement_text(const ComplementTable& t) {
  std::string s = "reduced homology of the complement:\n" + homology_text(t.homology);
  if (s.back() != '\n') s += '\n';
  s += "reduced cohomology of the complement:\n" + homology_text(t.cohomology);
  return s;
}

std::string complement_csv(const ComplementTable& t) {
  std::ostringstream s;
  s << "kind,degree,betti,torsion\n";
  for (const auto& [kind, h] : {std::pair{"homology", &t.homology}, std::pair{"cohomology", &t.cohomology}}) {
    for (const auto& g : h->groups()) {
      s << kind << ',' << g.degree << ',' << g.betti << ',';
      for (std::size_t i = 0; i < g.torsion.size(); ++i) s << (i ? ";" : "") << g.torsion[i].get_str();
      s << '\n';
    }
  }
  return s.str();
}

std::string verification_text(const VerificationReport& r, bool quiet) {
  std::ostringstream s;
  if (!quiet) {
    for (const auto& c : r.cases) {
      s << (c.match ? "PASS " : "FAIL ") << c.input << ": expected " << c.expected << ", computed " << c.computed << '\n';
    }
  }
  s << r.suite << ": " << r.matched() << "/" << r.cases.size() << " matched, " << (r.passed() ? "PASS" : "FAIL") << '\n';
  return s.str();
}

std::string verification_json(const VerificationReport& r) {
  json j;
  j["suite"] = r.suite;
  j["passed"] = r.passed();
  j["cases"] = json::array();
  for (const auto& c : r.cases) {
    j["cases"].push_back({{"input", c.input}, {"expected", c.expected}, {"computed", c.computed}, {"match", c.match}});
  }
  return j.dump(2);
}

std::string verification_csv(const VerificationReport& r) {
  auto quote = [](const std::string& x) {
    std::string q = "\"";
    for (char ch : x) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  };
  std::string s = "input,expected,computed,match\n";
  for (const auto& c : r.cases) {
    s += quote(c.input) + "," + quote(c.expected) + "," + quote(c.computed) + "," + (c.match ? "true" : "false") + "\n";
  }
  return s;
}

void require_parity(const NumberPartition& lambda, int n) {
  if (n < lambda.weight() || (n - lambda.weight()) % 2 != 0) {
    throw InvalidInput("n must be at least |lambda| = " + std::to_string(lambda.weight()) + " with n - |lambda| even");
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Homology of root-multiplicity strata of real polynomials", "polystrata"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json", "csv", "dot"}));
  app.add_flag("--quiet,-q", g.quiet, "Print only summaries");

  std::function<int()> action;
  std::string lambda_text;
  std::optional<int> n;

  // hyp
  auto* hyp = app.add_subcommand("hyp", "Homology of a compactified hyperbolic stratum");
  std::string backend_text;
  double budget = kDefaultFaceBudget;
  hyp->add_option("--lambda,-l", lambda_text, "Partition, e.g. 1,1,2")->required();
  hyp->add_option("--backend", backend_text, "cells, order-complex or delta (default: all that fit)");
  hyp->add_option("--budget", budget, "Face budget for the order-complex backend")->check(CLI::PositiveNumber);
  hyp->callback([&] {
    action = [&] {
      const auto lambda = NumberPartition::parse(lambda_text);
      if (!backend_text.empty()) {
        const auto b = parse_backend(backend_text);
        if (!b) throw InvalidInput("unknown backend '" + backend_text + "'");
        print(out, render_homology(hyp_homology(lambda, *b), g.format));
        return 0;
      }
      const auto report = hyp_homology(lambda, budget);
      const auto predictions = predictions_for(lambda);
      if (g.format == "json") {
        json j;
        j["lambda"] = lambda.parts();
        j["homology"] = json::parse(homology_json(report.result));
        j["backends"] = json::object();
        for (const auto& [b, h] : report.per_backend) j["backends"][to_string(b)] = json::parse(homology_json(h));
        j["skipped"] = json::array();
        for (auto b : report.skipped) j["skipped"].push_back(to_string(b));
        j["predictions"] = json::array();
        for (const auto& p : predictions) {
          auto pj = prediction_json(p);
          if (p.kind != Prediction::Kind::none) pj["matches"] = p.matches(report.result);
          j["predictions"].push_back(pj);
        }
        print(out, j.dump(2));
        return 0;
      }
      print(out, render_homology(report.result, g.format));
      if (!g.quiet) {
        std::string ran;
        for (auto b : report.ran) ran += (ran.empty() ? "" : ", ") + to_string(b);
        err << "backends agree: " << ran << '\n';
        for (auto b : report.skipped) err << "skipped " << to_string(b) << " (over the face budget)\n";
        for (const auto& p : predictions) {
          err << "prediction: " << p.to_string();
          if (p.kind != Prediction::Kind::none) err << (p.matches(report.result) ? " (matches)" : " (MISMATCH)");
          err << '\n';
        }
      }
      return 0;
    };
  });

  // pol
  auto* pol = app.add_subcommand("pol", "Homology of a compactified closed stratum of degree-n polynomials");
  pol->add_option("--lambda,-l", lambda_text, "Partition of the real-root multiplicities (may be empty)")->required();
  std::string sign_rule = "corrected";
  pol->add_option("--n,-n", n, "Degree")->required();
  pol->add_option("--sign-rule", sign_rule, "Run sign rule for the boundary: corrected or literal")
      ->check(CLI::IsMember({"corrected", "literal"}));
  pol->callback([&] {
    action = [&] {
      const auto lambda = NumberPartition::parse(lambda_text);
      require_parity(lambda, *n);
      const auto rule = sign_rule == "literal" ? RunParity::literal : RunParity::corrected;
      print(out, render_homology(chain_homology(pol_chain_complex(lambda, *n, rule), true), g.format));
      return 0;
    };
  });

  // order-complex
  auto* oc = app.add_subcommand("order-complex", "Homology of the order complex of C_lambda");
  oc->add_option("--lambda,-l", lambda_text)->required();
  oc->callback([&] {
    action = [&] {
      const auto lambda = NumberPartition::parse(lambda_text);
      print(out, render_homology(simplicial_homology(order_complex(c_lambda_poset(lambda).poset)), g.format));
      return 0;
    };
  });

  // delta
  auto* delta = app.add_subcommand("delta", "Homology of the simplicial complex spanned by type-lambda faces");
  delta->add_option("--lambda,-l", lambda_text)->required();
  delta->callback([&] {
    action = [&] {
      const auto lambda = NumberPartition::parse(lambda_text);
      print(out, render_homology(simplicial_homology(delta_lambda_complex(lambda).complex), g.format));
      return 0;
    };
  });

  // complement
  auto* complement = app.add_subcommand("complement", "Reduced (co)homology of the complement of a closed stratum");
  complement->add_option("--lambda,-l", lambda_text)->required();
  complement->add_option("--n,-n", n)->required();
  complement->callback([&] {
    action = [&] {
      const auto lambda = NumberPartition::parse(lambda_text);
      require_parity(lambda, *n);
      const auto t = complement_cohomology(lambda, *n);
      if (g.format == "json") {
        json j{{"n", t.ambient},
               {"homology", json::parse(homology_json(t.homology))},
               {"cohomology", json::parse(homology_json(t.cohomology))}};
        print(out, j.dump(2));
      } else if (g.format == "csv") {
        print(out, complement_csv(t));
      } else if (g.format == "text") {
        print(out, complement_text(t));
      } else {
        throw InvalidInput("format '" + g.format + "' is not available for complement tables");
      }
      return 0;
    };
  });

  // stabilization
  auto* stab = app.add_subcommand("stabilization", "Complement cohomology across degrees n, n+2, ...");
  std::optional<int> n_min;
  int n_max = 8;
  stab->add_option("--lambda,-l", lambda_text)->required();
  stab->add_option("--n-min", n_min, "Smallest degree (default |lambda|)");
  stab->add_option("--n-max", n_max, "Largest degree");
  stab->callback([&] {
    action = [&] {
      const auto lambda = NumberPartition::parse(lambda_text);
      const int lo = n_min.value_or(lambda.weight());
      require_parity(lambda, lo);
      if (n_max < lo) throw InvalidInput("--n-max is below --n-min");
      const auto report = stabilization_report(lambda, lo, n_max);
      if (g.format == "json") {
        print(out, stabilization_json(report));
      } else if (g.format == "csv") {
        print(out, stabilization_csv(report));
      } else if (g.format == "dot") {
        print(out, poset_dot(report.union_poset, "union"));
      } else {
        for (std::size_t i = 0; i < report.columns.size(); ++i) {
          out << "n=" << report.columns[i].ambient << ":\n";
          print(out, homology_text(report.columns[i].cohomology));
          if (i < report.first_difference.size()) {
            const auto& d = report.first_difference[i];
            out << "  vs n=" << report.columns[i + 1].ambient << ": "
                << (d ? "first difference in degree " + std::to_string(*d) : std::string("identical")) << '\n';
          }
        }
      }
      return 0;
    };
  });

  // resonance
  auto* resonance = app.add_subcommand("resonance", "Partition identities among parts");
  std::string parts_text;
  resonance->add_option("--parts,-p", parts_text, "Composition, e.g. 1,2,3,5")->required();
  resonance->callback([&] {
    action = [&] {
      const auto parts = Composition::parse(parts_text);
      if (g.format == "json") {
        print(out, resonance_json(parts));
        return 0;
      }
      if (g.format != "text") throw InvalidInput("format '" + g.format + "' is not available for resonance output");
      const auto primitive = primitive_identities(parts);
      const auto hyperplanes = resonance_hyperplanes(parts);
      out << "free of resonances: " << (primitive.empty() ? "yes" : "no") << '\n';
      out << "primitive identities:";
      for (const auto& id : primitive) out << ' ' << identity_text(parts, id);
      out << "\nhyperplanes: " << hyperplanes.size() << '\n';
      if (!g.quiet) {
        for (const auto& id : hyperplanes) out << "  " << identity_text(parts, id) << '\n';
      }
      return 0;
    };
  });

  // normalize
  auto* normalize = app.add_subcommand("normalize", "Affine normal form of a monic polynomial");
  std::string coefficients_text;
  std::string factored_text;
  auto* coeff_opt = normalize->add_option("--coefficients,-c", coefficients_text, "Ascending coefficients ending in 1");
  auto* fact_opt = normalize->add_option("--factored,-f", factored_text, "Factored form, e.g. \"(x-1)^2 (x^2+1)\"");
  coeff_opt->excludes(fact_opt);
  normalize->callback([&] {
    action = [&] {
      if (coefficients_text.empty() && factored_text.empty()) throw InvalidInput("give --coefficients or --factored");
      const auto f = factored_text.empty() ? MonicPolynomial::parse(coefficients_text) : FactoredPolynomial::parse(factored_text).expand();
      const auto r = affine_normalize(f);
      if (g.format == "json") {
        json j{{"coefficients", r.g.coefficients}, {"rho", r.rho}, {"gamma", r.gamma}};
        print(out, j.dump(2));
      } else if (g.format == "text") {
        std::ostringstream s;
        s.precision(17);
        s << "g: " << r.g.to_string() << "\nrho: " << r.rho << "\ngamma: " << r.gamma << '\n';
        print(out, s.str());
      } else {
        throw InvalidInput("format '" + g.format + "' is not available for normalization");
      }
      return 0;
    };
  });

  // cell
  auto* cell = app.add_subcommand("cell", "Cell of a factored polynomial");
  std::optional<int> stabilize_to;
  cell->add_option("--factored,-f", factored_text)->required();
  cell->add_option("--stabilize-to", stabilize_to, "Multiply by (x^2+1)^k to reach this degree");
  cell->callback([&] {
    action = [&] {
      auto f = FactoredPolynomial::parse(factored_text);
      if (stabilize_to) f = stabilize(f, *stabilize_to);
      const auto c = cell_of(f);
      if (g.format == "json") {
        json j{{"polynomial", f.to_string()}, {"composition", c.composition.parts()}, {"n", c.ambient}, {"dimension", c.dimension()}};
        print(out, j.dump(2));
      } else if (g.format == "text") {
        out << "polynomial: " << f.to_string() << "\ncell: " << c.to_string() << "\ndimension: " << c.dimension() << '\n';
      } else {
        throw InvalidInput("format '" + g.format + "' is not available for cells");
      }
      return 0;
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  VerifyOptions vo;
  std::string n_range, k_range, l_range, t_range, d_range;
  std::vector<std::string> suites = suite_names();
  suites.insert(suites.end(), {"prop-3-7", "prop-3-11", "paper-table"});
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suites));
  verify->add_option("--n", n_range, "Range a..b");
  verify->add_option("--k", k_range, "Range a..b");
  verify->add_option("--l", l_range, "Range a..b");
  verify->add_option("--t", t_range, "Range a..b");
  verify->add_option("--d", d_range, "Range a..b");
  verify->add_option("--n-max", vo.n_max);
  verify->add_option("--max-weight", vo.max_weight);
  verify->add_option("--max-part", vo.max_part);
  verify->add_option("--lambda", vo.lambdas, "Extra partitions (repeatable)");
  verify->callback([&] {
    action = [&] {
      auto range = [](const std::string& s) { return s.empty() ? std::optional<Range>() : Range::parse(s); };
      vo.n = range(n_range);
      vo.k = range(k_range);
      vo.l = range(l_range);
      vo.t = range(t_range);
      vo.d = range(d_range);
      const auto report = run_suite(suite, vo);
      if (g.format == "json") {
        print(out, verification_json(report));
      } else if (g.format == "csv") {
        print(out, verification_csv(report));
      } else if (g.format == "text") {
        print(out, verification_text(report, g.quiet));
      } else {
        throw InvalidInput("format '" + g.format + "' is not available for verification reports");
      }
      return report.passed() ? 0 : 1;
    };
  });

  // export
  auto* exp = app.add_subcommand("export", "Write a poset or complex as DOT or JSON");
  std::string object;
  std::string output;
  std::optional<int> t, d;
  bool include_top = false;
  exp->add_option("object", object, "Object to export")
      ->required()
      ->check(CLI::IsMember({"clambda", "coarsenings", "delta", "closure-poset", "permutahedron", "iterated", "iterated-lambda"}));
  exp->add_option("--lambda,-l", lambda_text);
  exp->add_option("--n,-n", n);
  exp->add_option("--t", t);
  exp->add_option("--d", d);
  exp->add_flag("--include-top", include_top, "Keep the fully merged tuple (iterated-lambda)");
  exp->add_option("--output,-o", output, "Write to this file instead of standard output");
  exp->callback([&] {
    action = [&] {
      const std::string format = g.format == "text" ? "dot" : g.format;
      if (format != "dot" && format != "json") throw InvalidInput("export supports dot and json");
      auto need = [](bool present, const char* what) {
        if (!present) throw InvalidInput(std::string("export needs ") + what);
      };
      auto poset_out = [&](const Poset& p, const char* name) { return format == "dot" ? poset_dot(p, name) : poset_json(p); };
      std::string text;
      if (object == "clambda" || object == "coarsenings" || object == "delta") {
        need(!lambda_text.empty(), "--lambda");
        const auto lambda = NumberPartition::parse(lambda_text);
        if (object == "clambda") text = poset_out(c_lambda_poset(lambda).poset, "clambda");
        if (object == "coarsenings") text = poset_out(coarsening_poset(lambda).poset, "coarsenings");
        if (object == "delta") {
          const auto complex = delta_lambda_complex(lambda).complex;
          text = format == "dot" ? complex_dot(complex, "delta") : complex_json(complex);
        }
      } else if (object == "closure-poset") {
        need(!lambda_text.empty() && n.has_value(), "--lambda and --n");
        const auto lambda = NumberPartition::parse(lambda_text);
        require_parity(lambda, *n);
        text = poset_out(stratum_cell_poset(lambda, *n), "closure");
      } else if (object == "permutahedron") {
        need(t.has_value(), "--t");
        text = poset_out(permutahedron_face_poset(*t).poset, "permutahedron");
      } else if (object == "iterated") {
        need(n.has_value() && d.has_value(), "--n and --d");
        text = poset_out(iterated_poset(*n, *d).poset, "iterated");
      } else {
        need(!lambda_text.empty() && d.has_value(), "--lambda and --d");
        text = poset_out(c_lambda_d_poset(NumberPartition::parse(lambda_text), *d, include_top).poset, "iterated_lambda");
      }
      if (output.empty()) {
        print(out, text);
      } else {
        std::ofstream file(output, std::ios::binary);
        if (!file) throw InvalidInput("cannot open '" + output + "' for writing");
        file << text;
        if (text.empty() || text.back() != '\n') file << '\n';
        if (!file) throw InvalidInput("failed writing '" + output + "'");
      }
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  try {
    return action ? action() : 2;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const InvariantViolation& e) {
    err << "invariant failure: " << e.what() << '\n';
    return 3;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace polystrata::cli
