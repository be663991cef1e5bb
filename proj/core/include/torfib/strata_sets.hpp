#pragma once

#include <string>
#include <vector>

#include "torfib/specialization.hpp"
#include "torfib/stratum.hpp"

namespace torfib {

// All strata (T, sigma) for ordered part genera, up to isomorphism of the
// colored tree, sorted by canonical form. `dedupUnordered` additionally
// quotients by permutations of equal parts. Throws when the parts do not
// sum to g or some part is < 1.
std::vector<ColoredStratum> enumerate_strata(Genus g, const std::vector<Genus>& parts,
                                             bool dedupUnordered = false);

// Strata admitting no nontrivial outgoing specialization; these index the
// irreducible components of the fiber product.
std::vector<ColoredStratum> irreducible_components(Genus g, const std::vector<Genus>& parts);

// Containment DAG of the strata. reach[i] lists the strata j != i whose
// closures contain stratum i (one color-compatible contraction away, which
// is already transitively closed); covers is its transitive reduction.
struct StrataPoset {
  std::vector<ColoredStratum> strata;
  std::vector<std::vector<int>> reach;
  std::vector<std::pair<int, int>> covers;
  std::vector<bool> component;   // maximal elements
  std::vector<bool> inStrataY;   // admits a generic structure over components

  int index_of(const std::string& canonical) const;
};

StrataPoset strata_poset(Genus g, const std::vector<Genus>& parts);

// Generic S-structures over the given member strata (all members must share
// total genus and part tuple); the bases these structures live on realize
// the fiber product of the member closures as a disjoint union. Deduplicated
// by structure canonical form, sorted.
std::vector<SStructure> fiber_product_decomposition(const std::vector<ColoredStratum>& members);

}  // namespace torfib
