#pragma once

#include <string>
#include <vector>

#include "torfib/stable_tree.hpp"

namespace torfib {

// Centroid-rooted AHU encoding of a labeled tree. Two trees get equal
// encodings exactly when an isomorphism matches vertex labels and edge
// labels. Labels are free-form strings; pass empty edge labels when only
// vertex decorations matter.
std::string canonical_form_labeled(const StableTree& t,
                                   const std::vector<std::string>& vertexLabels,
                                   const std::vector<std::string>& edgeLabels);

// Genus-labeled canonical form; throws on an invalid tree.
std::string canonical_form(const StableTree& t);

}  // namespace torfib
