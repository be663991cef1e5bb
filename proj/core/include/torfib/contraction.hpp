#pragma once

#include <vector>

#include "torfib/stable_tree.hpp"

namespace torfib {

// Edge contraction of a stable tree. Fibers of the vertex map are the
// connected subtrees spanned by the contracted edges; their genera add.
struct Contraction {
  StableTree source;
  StableTree target;
  std::vector<int> contractedEdges;  // sorted source edge indices
  std::vector<int> vertexMap;        // source vertex -> target vertex
  std::vector<int> edgeMap;          // source edge -> target edge, -1 if contracted
  std::vector<int> targetEdgeOrigin; // target edge -> source edge

  bool is_identity() const { return contractedEdges.empty(); }
};

// Contracts the given edge subset; throws on unknown edge ids. The target
// of a stable tree is again stable, since 2g-2+n sums under vertex merge.
Contraction contract(const StableTree& t, const std::vector<int>& edges);

}  // namespace torfib
