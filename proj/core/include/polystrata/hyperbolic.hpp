#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polystrata/compositions.hpp"
#include "polystrata/homology.hpp"

namespace polystrata {

enum class HypBackend { cells, order_complex, delta };

std::string to_string(HypBackend backend);
/// "cells", "order-complex", "delta".
std::optional<HypBackend> parse_backend(std::string_view name);

/// Reduced homology of the one-point compactification of the closure of
/// the hyperbolic stratum of type λ, computed by one backend.
HomologyResult hyp_homology(const NumberPartition& lambda, HypBackend backend);

/// Faces of the order complex of C_λ (chains, the empty chain excluded).
double order_complex_face_estimate(const NumberPartition& lambda);

inline constexpr double kDefaultFaceBudget = 250000;

struct HypReport {
  HomologyResult result;
  std::vector<HypBackend> ran;
  std::vector<HypBackend> skipped;  // over the face budget
  std::map<HypBackend, HomologyResult> per_backend;
};

/// Runs every backend whose complex fits `face_budget` (cells and delta
/// always run) and throws InvariantViolation, listing every table, if they
/// disagree.
HypReport hyp_homology(const NumberPartition& lambda, double face_budget = kDefaultFaceBudget);

struct Prediction {
  enum class Kind { sphere, point, none };
  Kind kind = Kind::none;
  int dimension = 0;   // of the sphere, when kind == sphere
  std::string source;  // which case of which statement fired
  std::string reason;  // for Kind::none

  [[nodiscard]] std::string to_string() const;
  /// True if reduced homology is Z in `dimension` only (sphere) or zero (point).
  [[nodiscard]] bool matches(const HomologyResult& h) const;
};

struct HookPrediction {
  Prediction compactification;
  Prediction order_complex;  // two degrees lower
};

/// λ = (1^{n-k}, k), 2 <= k <= n.
HookPrediction hook_prediction(int n, int k);

/// Sphere of dimension t (all parts distinct) or point (a repeated part);
/// no prediction if λ has a primitive partition identity.
Prediction resonance_free_prediction(const NumberPartition& lambda);

}  // namespace polystrata
