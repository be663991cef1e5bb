#include "torfib/stable_tree.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace torfib {

StableTree::StableTree(std::vector<TreeVertex> vertices, std::vector<std::array<int, 2>> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  const int n = vertex_count();
  for (const auto& e : edges_) {
    if (e[0] < 0 || e[0] >= n || e[1] < 0 || e[1] >= n)
      throw std::invalid_argument("edge endpoint out of range");
  }
  out_.assign(n, {});
  for (int e = 0; e < edge_count(); ++e) {
    out_[edges_[e][0]].push_back(OrientedEdge{e, 0});
    out_[edges_[e][1]].push_back(OrientedEdge{e, 1});
  }
}

Genus StableTree::total_genus() const {
  Genus g = 0;
  for (const auto& v : vertices_) g += v.genus;
  return g;
}

int StableTree::find_vertex(const std::string& id) const {
  for (int v = 0; v < vertex_count(); ++v)
    if (vertices_[v].id == id) return v;
  return -1;
}

std::string StableTree::half_edge_id(OrientedEdge e) const {
  return std::to_string(e.edge) + ":" + std::to_string(e.side);
}

std::vector<OrientedEdge> StableTree::path(int from, int to) const {
  if (from == to) return {};
  std::vector<OrientedEdge> parentStep(vertex_count(), OrientedEdge{});
  std::vector<int> seen(vertex_count(), 0);
  std::deque<int> queue{from};
  seen[from] = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (v == to) break;
    for (OrientedEdge oe : out_[v]) {
      int w = target(oe);
      if (!seen[w]) {
        seen[w] = 1;
        parentStep[w] = oe;
        queue.push_back(w);
      }
    }
  }
  if (!seen[to]) throw std::invalid_argument("path: vertices not connected");
  std::vector<OrientedEdge> rev;
  for (int v = to; v != from;) {
    OrientedEdge step = parentStep[v];
    rev.push_back(step);
    v = source(step);
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

std::vector<int> StableTree::distances_from(int v) const {
  std::vector<int> dist(vertex_count(), -1);
  std::deque<int> queue{v};
  dist[v] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (OrientedEdge oe : out_[u]) {
      int w = target(oe);
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<int> StableTree::positive_genus_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < vertex_count(); ++v)
    if (vertices_[v].genus > 0) out.push_back(v);
  return out;
}

StableTree tree_from_lists(const std::vector<std::pair<std::string, Genus>>& vertices,
                           const std::vector<std::pair<std::string, std::string>>& edges) {
  std::vector<TreeVertex> vs;
  vs.reserve(vertices.size());
  for (const auto& [id, g] : vertices) vs.push_back({id, g});
  auto index = [&](const std::string& id) {
    for (int v = 0; v < static_cast<int>(vs.size()); ++v)
      if (vs[v].id == id) return v;
    throw std::invalid_argument("unknown vertex id: " + id);
  };
  std::vector<std::array<int, 2>> es;
  es.reserve(edges.size());
  for (const auto& [a, b] : edges) es.push_back({index(a), index(b)});
  return StableTree(std::move(vs), std::move(es));
}

std::string ValidationReport::summary() const {
  if (ok()) return "valid";
  std::ostringstream os;
  for (size_t i = 0; i < issues.size(); ++i) {
    if (i) os << "; ";
    os << issues[i].code << ": " << issues[i].detail;
  }
  return os.str();
}

ValidationReport validate(const StableTree& t) {
  ValidationReport rep;
  const int n = t.vertex_count();
  if (n == 0) {
    rep.issues.push_back({"EMPTY", "tree has no vertices"});
    return rep;
  }

  for (int v = 0; v < n; ++v) {
    if (t.genus_of(v) < 0)
      rep.issues.push_back({"NEGATIVE_GENUS", "vertex " + t.vertex(v).id});
  }
  for (int v = 0; v < n; ++v) {
    for (int w = v + 1; w < n; ++w) {
      if (t.vertex(v).id == t.vertex(w).id)
        rep.issues.push_back({"DUPLICATE_ID", "vertex id " + t.vertex(v).id});
    }
  }

  // b1 = 0 via union-find; self-loops and multi-edges both close cycles.
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  bool cyclic = false;
  for (int e = 0; e < t.edge_count(); ++e) {
    int a = root(t.edge(e)[0]), b = root(t.edge(e)[1]);
    if (a == b) {
      cyclic = true;
      continue;
    }
    parent[a] = b;
  }
  if (cyclic) rep.issues.push_back({"HAS_CYCLE", "underlying graph is not acyclic"});
  int components = 0;
  for (int v = 0; v < n; ++v)
    if (root(v) == v) ++components;
  if (components != 1)
    rep.issues.push_back({"NOT_CONNECTED", std::to_string(components) + " components"});

  for (int v = 0; v < n; ++v) {
    if (2 * t.genus_of(v) - 2 + t.valence(v) <= 0)
      rep.issues.push_back(
          {"UNSTABLE_VERTEX", "vertex " + t.vertex(v).id + " has 2g-2+n = " +
                                  std::to_string(2 * t.genus_of(v) - 2 + t.valence(v))});
  }
  return rep;
}

void require_valid(const StableTree& t) {
  auto rep = validate(t);
  if (!rep.ok()) throw std::invalid_argument("invalid stable tree: " + rep.summary());
}

}  // namespace torfib
