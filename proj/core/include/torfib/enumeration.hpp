#pragma once

#include <optional>
#include <vector>

#include "torfib/stable_tree.hpp"

namespace torfib {

// All stable trees of total genus g up to isomorphism, sorted by canonical
// form. Terminates without a vertex bound: genus-0 vertices need valence
// >= 3 and leaves positive genus, so |V| <= max(1, 2g-2). Throws for g < 1.
std::vector<StableTree> enumerate_stable_trees(Genus g,
                                               std::optional<int> maxVertices = std::nullopt);

// Unlabeled tree shapes on n vertices up to isomorphism (ids "v0", "v1", ...).
std::vector<StableTree> enumerate_tree_shapes(int n);

}  // namespace torfib
