#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace torfib {

using Genus = std::int64_t;

// Oriented edge of a tree: an edge index plus the side holding the source
// vertex. Coincides with the half-edge sitting at the source, so the node
// chart z_e of the plumbing modules is indexed by this type as well.
struct OrientedEdge {
  int edge = -1;
  int side = 0;

  int code() const { return edge * 2 + side; }
  static OrientedEdge from_code(int c) { return {c / 2, c % 2}; }
  OrientedEdge reversed() const { return {edge, side ^ 1}; }

  auto operator<=>(const OrientedEdge&) const = default;
};

struct TreeVertex {
  std::string id;
  Genus genus = 0;
};

// Genus-labeled tree with half-edge structure: the dual graph of a
// compact-type curve. Vertices carry component genera; each edge is a node
// of the curve, its two half-edges being the branch preimages.
//
// Values are immutable after construction and cheap to copy at the scales
// handled here.
class StableTree {
 public:
  StableTree() = default;
  StableTree(std::vector<TreeVertex> vertices, std::vector<std::array<int, 2>> edges);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const TreeVertex& vertex(int v) const { return vertices_.at(v); }
  const std::vector<TreeVertex>& vertices() const { return vertices_; }
  const std::array<int, 2>& edge(int e) const { return edges_.at(e); }
  const std::vector<std::array<int, 2>>& edges() const { return edges_; }

  Genus genus_of(int v) const { return vertices_.at(v).genus; }
  Genus total_genus() const;

  // -1 when absent.
  int find_vertex(const std::string& id) const;

  int source(OrientedEdge e) const { return edges_.at(e.edge)[e.side]; }
  int target(OrientedEdge e) const { return edges_.at(e.edge)[e.side ^ 1]; }

  // E_v: oriented edges with source v, ascending edge index.
  const std::vector<OrientedEdge>& out_edges(int v) const { return out_.at(v); }
  int valence(int v) const { return static_cast<int>(out_.at(v).size()); }

  std::string half_edge_id(OrientedEdge e) const;

  // Unique simple path between two vertices, as oriented edges pointing
  // from `from` towards `to`. Empty when from == to. Requires a connected
  // acyclic graph.
  std::vector<OrientedEdge> path(int from, int to) const;
  std::vector<int> distances_from(int v) const;

  std::vector<int> positive_genus_vertices() const;

 private:
  std::vector<TreeVertex> vertices_;
  std::vector<std::array<int, 2>> edges_;
  std::vector<std::vector<OrientedEdge>> out_;
};

// Convenience builder from (id, genus) pairs and id-named edges.
StableTree tree_from_lists(const std::vector<std::pair<std::string, Genus>>& vertices,
                           const std::vector<std::pair<std::string, std::string>>& edges);

struct ValidationIssue {
  std::string code;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  std::string summary() const;
};

// Report-style check of the stable-tree axioms: connected, acyclic,
// every vertex satisfies 2g(v) - 2 + n(v) > 0, genera nonnegative.
ValidationReport validate(const StableTree& t);

// Throws std::invalid_argument with the report summary when invalid.
void require_valid(const StableTree& t);

}  // namespace torfib
