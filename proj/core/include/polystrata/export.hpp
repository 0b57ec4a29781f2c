#pragma once

#include <string>
#include <string_view>

#include "polystrata/compositions.hpp"
#include "polystrata/homology.hpp"
#include "polystrata/poset.hpp"
#include "polystrata/strata.hpp"

namespace polystrata {

// All writers produce canonical, byte-stable output.

/// {"elements":[labels...],"covers":[[lower,upper],...]}
std::string poset_json(const Poset& poset);
/// Hasse diagram, bottom to top.
std::string poset_dot(const Poset& poset, std::string_view name = "poset");

/// {"reduced":true,"groups":[{"degree":q,"betti":b,"torsion":[...]}]}
/// listing nonzero groups only.
std::string homology_json(const HomologyResult& h);
/// Header "degree,betti,torsion"; torsion factors joined by ';'.
std::string homology_csv(const HomologyResult& h);
/// One line per nonzero group, "H_q: Z^b + Z/t", or "0".
std::string homology_text(const HomologyResult& h);

/// {"dimension":d,"faces":[[v...],...]}
std::string complex_json(const SimplicialComplex& complex);
std::string complex_dot(const SimplicialComplex& complex, std::string_view name = "complex");

/// {"parts":[...],"primitive":[[[i...],[j...]],...],"hyperplanes":[...]}
std::string resonance_json(const Composition& parts);

/// Columns n, degree, betti, torsion (reduced cohomology of the complement).
std::string stabilization_csv(const StabilizationReport& report);
std::string stabilization_json(const StabilizationReport& report);

}  // namespace polystrata
