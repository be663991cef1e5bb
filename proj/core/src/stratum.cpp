#include "torfib/stratum.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "torfib/canonical.hpp"

namespace torfib {

int Coloring::color(int v) const {
  auto it = colorOf.find(v);
  return it == colorOf.end() ? 0 : it->second;
}

ValidationReport validate_coloring(const StableTree& t, const Coloring& c) {
  ValidationReport rep;
  const int k = c.k();
  if (k < 1) rep.issues.push_back({"NO_PARTS", "coloring needs k >= 1 parts"});
  for (Genus p : c.parts)
    if (p < 1) rep.issues.push_back({"BAD_PART", "part genera must be >= 1"});

  std::vector<Genus> sums(k, 0);
  for (const auto& [v, col] : c.colorOf) {
    if (v < 0 || v >= t.vertex_count()) {
      rep.issues.push_back({"UNKNOWN_VERTEX", "colored vertex index " + std::to_string(v)});
      continue;
    }
    if (t.genus_of(v) <= 0)
      rep.issues.push_back({"COLORED_GENUS_ZERO", "vertex " + t.vertex(v).id});
    if (col < 1 || col > k) {
      rep.issues.push_back({"BAD_COLOR", "vertex " + t.vertex(v).id});
      continue;
    }
    sums[col - 1] += t.genus_of(v);
  }
  for (int v : t.positive_genus_vertices())
    if (!c.colorOf.count(v))
      rep.issues.push_back({"UNCOLORED_VERTEX", "positive-genus vertex " + t.vertex(v).id});
  for (int j = 0; j < k; ++j)
    if (sums[j] != c.parts[j] && rep.ok())
      rep.issues.push_back({"PART_SUM", "color " + std::to_string(j + 1) + " sums to " +
                                            std::to_string(sums[j]) + ", expected " +
                                            std::to_string(c.parts[j])});
  return rep;
}

std::vector<int> CriticalPath::edge_set() const {
  std::vector<int> out;
  out.reserve(steps.size());
  for (OrientedEdge oe : steps) out.push_back(oe.edge);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CriticalPath> critical_paths(const StableTree& t, const Coloring& c) {
  auto rep = validate_coloring(t, c);
  if (!rep.ok()) throw std::invalid_argument("invalid coloring: " + rep.summary());

  std::vector<int> pos = t.positive_genus_vertices();
  std::vector<CriticalPath> out;
  for (size_t a = 0; a < pos.size(); ++a) {
    for (size_t b = a + 1; b < pos.size(); ++b) {
      int u = pos[a], w = pos[b];
      if (c.color(u) == c.color(w)) continue;
      std::vector<OrientedEdge> steps = t.path(u, w);
      bool interiorGenusZero = true;
      std::vector<int> verts{u};
      for (size_t i = 0; i < steps.size(); ++i) {
        int mid = t.target(steps[i]);
        verts.push_back(mid);
        if (i + 1 < steps.size() && t.genus_of(mid) > 0) interiorGenusZero = false;
      }
      if (!interiorGenusZero) continue;
      out.push_back({std::move(verts), std::move(steps)});
    }
  }
  std::sort(out.begin(), out.end(), [](const CriticalPath& x, const CriticalPath& y) {
    if (x.steps.size() != y.steps.size()) return x.steps.size() < y.steps.size();
    return x.vertices < y.vertices;
  });
  return out;
}

StratumValidity stratum_validity(const StableTree& t, const Coloring& c) {
  std::set<int> covered;
  for (const CriticalPath& p : critical_paths(t, c))
    for (OrientedEdge oe : p.steps) covered.insert(oe.edge);
  for (int e = 0; e < t.edge_count(); ++e) {
    if (!covered.count(e)) return {false, e};
  }
  return {true, std::nullopt};
}

std::string stratum_canonical_form(const StableTree& t, const Coloring& c) {
  std::vector<std::string> labels;
  labels.reserve(t.vertex_count());
  for (int v = 0; v < t.vertex_count(); ++v)
    labels.push_back(std::to_string(t.genus_of(v)) + "|" + std::to_string(c.color(v)));
  return canonical_form_labeled(t, labels, {});
}

ColoredStratum ColoredStratum::make_unchecked(StableTree t, Coloring c) {
  require_valid(t);
  auto rep = validate_coloring(t, c);
  if (!rep.ok()) throw std::invalid_argument("invalid coloring: " + rep.summary());
  ColoredStratum s;
  s.criticalPaths = critical_paths(t, c);
  s.canonical = stratum_canonical_form(t, c);
  s.tree = std::move(t);
  s.coloring = std::move(c);
  return s;
}

ColoredStratum ColoredStratum::make(StableTree t, Coloring c) {
  ColoredStratum s = make_unchecked(std::move(t), std::move(c));
  auto sv = stratum_validity(s.tree, s.coloring);
  if (!sv.valid)
    throw std::invalid_argument("not a stratum: edge " + std::to_string(*sv.uncoveredEdge) +
                                " lies on no critical path");
  return s;
}

bool is_valid_stratum(const ColoredStratum& s) {
  return stratum_validity(s.tree, s.coloring).valid;
}

}  // namespace torfib
