#pragma once

#include <optional>
#include <vector>

#include "torfib/contraction.hpp"
#include "torfib/stratum.hpp"

namespace torfib {

// Color-compatible contraction between colored pairs: the induced vertex
// map f satisfies sigma(v) = sigma'(f(v)) on positive-genus vertices.
struct StratumSpecialization {
  Contraction contraction;
  Coloring sourceColoring;
  Coloring targetColoring;

  const std::vector<int>& contracted_edges() const { return contraction.contractedEdges; }
  bool is_isomorphism() const { return contraction.is_identity(); }
};

// Coloring induced on a contraction target; nullopt when some fiber mixes
// colors on positive-genus vertices.
std::optional<Coloring> induced_coloring(const Contraction& c, const Coloring& src);

// Convenience: contract + induce in one step. Throws when incompatible.
StratumSpecialization specialize(const ColoredStratum& s, const std::vector<int>& edges);

// All specializations from a onto b, one representative per class modulo
// automorphisms of b (equivalently, one per contracted edge subset whose
// colored quotient is isomorphic to b). Returns {} when none exist.
std::vector<StratumSpecialization> specializations_between(const ColoredStratum& a,
                                                           const ColoredStratum& b);

// A family of specializations out of one base pair.
struct SStructure {
  ColoredStratum base;
  std::vector<StratumSpecialization> maps;
};

struct GenericStructureResult {
  SStructure generic;                // structure on the contracted base
  StratumSpecialization factoring;   // base -> generic base
};

// The coarsest structure the given one factors through: contract exactly
// the edges contracted by every member map. The returned structure admits
// no further factoring except isomorphisms.
GenericStructureResult generic_structure(const SStructure& s);

bool is_generic(const SStructure& s);

// Canonical form of a structure: colored tree with each edge labeled by
// the subset of member maps contracting it. Two structures agree exactly
// when an isomorphism of bases commutes with all member maps.
std::string structure_canonical_form(const SStructure& s);

}  // namespace torfib
