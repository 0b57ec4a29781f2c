#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polystrata/compositions.hpp"
#include "polystrata/homology.hpp"
#include "polystrata/poset.hpp"

namespace polystrata {

/// Cell of the stratification of monic degree-n polynomials: real roots with
/// multiplicities `composition` (in root order) times an elliptic factor of
/// degree n - weight.
struct StratumCell {
  Composition composition;
  int ambient = 0;

  /// length + (ambient - weight).
  [[nodiscard]] int dimension() const;
  [[nodiscard]] std::string to_string() const;

  auto operator<=>(const StratumCell& other) const = default;
};

/// Sign convention for inserting a 2 into a run of 2's.  `corrected` kills
/// the term when the run has even length; `literal` kills it when the run
/// length is odd and exists only to reproduce the failure of d∘d = 0.
enum class RunParity { corrected, literal };

using CellCombination = std::vector<std::pair<StratumCell, long>>;

/// Every cell in the closure of the type-λ cells of Pol^n, sorted by
/// (dimension, composition).
std::vector<StratumCell> closure_cells(const NumberPartition& lambda, int n);

/// Cellular boundary with zero terms dropped, sorted by cell.
CellCombination boundary(const StratumCell& cell, RunParity parity = RunParity::corrected);
/// ∂∂ of one cell, zero terms dropped.
CellCombination boundary_squared(const StratumCell& cell, RunParity parity = RunParity::corrected);

/// Cells graded by dimension.  Throws InvariantViolation if d∘d != 0.
ChainComplex pol_chain_complex(const NumberPartition& lambda, int n, RunParity parity = RunParity::corrected);

/// Reduced homology of the one-point compactification of the closure.
HomologyResult pol_homology(const NumberPartition& lambda, int n);

/// Closure cells ordered by the face relation (labels are compositions).
Poset stratum_cell_poset(const NumberPartition& lambda, int n);

/// Number of cells of Pol^n.
std::size_t total_cell_count(int n);

struct ComplementTable {
  int ambient = 0;
  HomologyResult homology{true};    // reduced homology of the complement
  HomologyResult cohomology{true};  // reduced cohomology of the complement
};

/// Alexander duality in S^n.  Throws InvalidInput when the closure is all
/// of Pol^n.
ComplementTable complement_cohomology(const NumberPartition& lambda, int n);

struct StabilizationReport {
  NumberPartition lambda;
  std::vector<ComplementTable> columns;  // ambient n_min, n_min + 2, ...
  /// For each consecutive pair of columns, the lowest cohomological degree
  /// where they differ (nullopt when identical).
  std::vector<std::optional<int>> first_difference;
  /// Compositions of weight <= the largest ambient, ordered by closure.
  Poset union_poset;
};

StabilizationReport stabilization_report(const NumberPartition& lambda, int n_min, int n_max);

}  // namespace polystrata
