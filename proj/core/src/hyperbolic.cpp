#include "polystrata/hyperbolic.hpp"

#include "polystrata/errors.hpp"
#include "polystrata/resonance.hpp"
#include "polystrata/strata.hpp"

namespace polystrata {

std::string to_string(HypBackend backend) {
  switch (backend) {
    case HypBackend::cells: return "cells";
    case HypBackend::order_complex: return "order-complex";
    case HypBackend::delta: return "delta";
  }
  return "?";
}

std::optional<HypBackend> parse_backend(std::string_view name) {
  if (name == "cells") return HypBackend::cells;
  if (name == "order-complex") return HypBackend::order_complex;
  if (name == "delta") return HypBackend::delta;
  return std::nullopt;
}

HomologyResult hyp_homology(const NumberPartition& lambda, HypBackend backend) {
  const int n = lambda.weight();
  if (n < 1) throw InvalidInput("hyperbolic strata need n >= 1");
  switch (backend) {
    case HypBackend::cells:
      return pol_homology(lambda, n);
    case HypBackend::order_complex:
      return suspension_shift(simplicial_homology(order_complex(c_lambda_poset(lambda).poset)), 2);
    case HypBackend::delta:
      if (n < 2) return suspension_shift(simplicial_homology(SimplicialComplex()), 2);
      return suspension_shift(simplicial_homology(delta_lambda_complex(lambda).complex), 2);
  }
  throw InvalidInput("unknown backend");
}

double order_complex_face_estimate(const NumberPartition& lambda) {
  const auto elements = c_lambda_elements(lambda);
  // Elements are sorted by size, so every subset precedes its supersets.
  std::vector<double> ending_at(elements.size(), 1.0);
  double total = 0;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (elements[j].mask != elements[i].mask && elements[j].subset_of(elements[i])) ending_at[i] += ending_at[j];
    }
    total += ending_at[i];
  }
  return total;
}

HypReport hyp_homology(const NumberPartition& lambda, double face_budget) {
  HypReport report;
  for (HypBackend b : {HypBackend::cells, HypBackend::order_complex, HypBackend::delta}) {
    if (b == HypBackend::order_complex && order_complex_face_estimate(lambda) > face_budget) {
      report.skipped.push_back(b);
      continue;
    }
    report.per_backend.emplace(b, hyp_homology(lambda, b));
    report.ran.push_back(b);
  }
  const HomologyResult& first = report.per_backend.begin()->second;
  for (const auto& [b, h] : report.per_backend) {
    if (h == first) continue;
    std::string msg = "homology backends disagree for " + lambda.to_string() + ":";
    for (const auto& [b2, h2] : report.per_backend) msg += "\n  " + to_string(b2) + ": " + h2.to_string();
    throw InvariantViolation(msg);
  }
  report.result = first;
  return report;
}

std::string Prediction::to_string() const {
  switch (kind) {
    case Kind::sphere: return "S^" + std::to_string(dimension);
    case Kind::point: return "point";
    case Kind::none: return "no prediction";
  }
  return "?";
}

bool Prediction::matches(const HomologyResult& h) const {
  switch (kind) {
    case Kind::sphere: return h.sphere_dimension() == dimension;
    case Kind::point: return h.is_zero();
    case Kind::none: return false;
  }
  return false;
}

HookPrediction hook_prediction(int n, int k) {
  if (k < 2 || k > n) throw InvalidInput("hook prediction needs 2 <= k <= n");
  HookPrediction p;
  auto& c = p.compactification;
  if (n % k == 1) {
    c = {Prediction::Kind::sphere, 2 * (n - 1) / k, "hook, n = 1 mod k", ""};
  } else if (n % k == 0) {
    c = {Prediction::Kind::sphere, 2 * n / k - 1, "hook, n = 0 mod k", ""};
  } else {
    c = {Prediction::Kind::point, 0, "hook, n != 0,1 mod k", ""};
  }
  p.order_complex = c;
  if (c.kind == Prediction::Kind::sphere) p.order_complex.dimension = c.dimension - 2;
  return p;
}

Prediction resonance_free_prediction(const NumberPartition& lambda) {
  const auto identities = primitive_identities(Composition(lambda.parts()));
  if (!identities.empty()) {
    const auto& a = lambda.parts();
    std::string witness;
    for (const auto* side : {&identities.front().left, &identities.front().right}) {
      if (!witness.empty()) witness += " = ";
      for (std::size_t i = 0; i < side->size(); ++i) {
        witness += (i ? "+" : "") + std::to_string(a[static_cast<std::size_t>((*side)[i] - 1)]);
      }
    }
    return {Prediction::Kind::none, 0, "", "resonance " + witness};
  }
  if (lambda.has_repeated_part()) return {Prediction::Kind::point, 0, "resonance-free, repeated part", ""};
  return {Prediction::Kind::sphere, static_cast<int>(lambda.length()), "resonance-free, distinct parts", ""};
}

}  // namespace polystrata
