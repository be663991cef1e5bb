#include "torfib/contraction.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace torfib {

Contraction contract(const StableTree& t, const std::vector<int>& edges) {
  std::set<int> chosen;
  for (int e : edges) {
    if (e < 0 || e >= t.edge_count())
      throw std::invalid_argument("contract: unknown edge id " + std::to_string(e));
    chosen.insert(e);
  }

  const int n = t.vertex_count();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int e : chosen) {
    int a = root(t.edge(e)[0]), b = root(t.edge(e)[1]);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }

  // Target vertices ordered by smallest source member; merged ids take the
  // lexicographically smallest member id, genera add over the fiber.
  std::map<int, int> fiberIndex;
  std::vector<int> vertexMap(n, -1);
  std::vector<TreeVertex> targetVerts;
  for (int v = 0; v < n; ++v) {
    int r = root(v);
    auto it = fiberIndex.find(r);
    if (it == fiberIndex.end()) {
      it = fiberIndex.emplace(r, static_cast<int>(targetVerts.size())).first;
      targetVerts.push_back({t.vertex(v).id, 0});
    }
    vertexMap[v] = it->second;
    targetVerts[it->second].genus += t.genus_of(v);
    if (t.vertex(v).id < targetVerts[it->second].id) targetVerts[it->second].id = t.vertex(v).id;
  }

  std::vector<std::array<int, 2>> targetEdges;
  std::vector<int> edgeMap(t.edge_count(), -1);
  std::vector<int> origin;
  for (int e = 0; e < t.edge_count(); ++e) {
    if (chosen.count(e)) continue;
    edgeMap[e] = static_cast<int>(targetEdges.size());
    origin.push_back(e);
    targetEdges.push_back({vertexMap[t.edge(e)[0]], vertexMap[t.edge(e)[1]]});
  }

  Contraction c;
  c.source = t;
  c.target = StableTree(std::move(targetVerts), std::move(targetEdges));
  c.contractedEdges.assign(chosen.begin(), chosen.end());
  c.vertexMap = std::move(vertexMap);
  c.edgeMap = std::move(edgeMap);
  c.targetEdgeOrigin = std::move(origin);
  return c;
}

}  // namespace torfib
