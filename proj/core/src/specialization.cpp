#include "torfib/specialization.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "torfib/canonical.hpp"

namespace torfib {

std::optional<Coloring> induced_coloring(const Contraction& c, const Coloring& src) {
  Coloring out;
  out.parts = src.parts;
  for (const auto& [v, col] : src.colorOf) {
    int w = c.vertexMap.at(v);
    auto it = out.colorOf.find(w);
    if (it != out.colorOf.end() && it->second != col) return std::nullopt;
    out.colorOf[w] = col;
  }
  return out;
}

StratumSpecialization specialize(const ColoredStratum& s, const std::vector<int>& edges) {
  Contraction c = contract(s.tree, edges);
  auto induced = induced_coloring(c, s.coloring);
  if (!induced)
    throw std::invalid_argument("specialize: contraction merges differently colored vertices");
  return {std::move(c), s.coloring, std::move(*induced)};
}

std::vector<StratumSpecialization> specializations_between(const ColoredStratum& a,
                                                           const ColoredStratum& b) {
  std::vector<StratumSpecialization> out;
  if (a.coloring.parts != b.coloring.parts) return out;
  int drop = a.tree.edge_count() - b.tree.edge_count();
  if (drop < 0) return out;

  const int m = a.tree.edge_count();
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    if (__builtin_popcount(mask) != drop) continue;
    std::vector<int> edges;
    for (int e = 0; e < m; ++e)
      if (mask & (1u << e)) edges.push_back(e);
    Contraction c = contract(a.tree, edges);
    auto induced = induced_coloring(c, a.coloring);
    if (!induced) continue;
    if (stratum_canonical_form(c.target, *induced) != b.canonical) continue;
    out.push_back({std::move(c), a.coloring, std::move(*induced)});
  }
  return out;
}

GenericStructureResult generic_structure(const SStructure& s) {
  if (s.maps.empty())
    throw std::invalid_argument("generic_structure: structure has no member maps");
  std::set<int> acc(s.maps[0].contracted_edges().begin(), s.maps[0].contracted_edges().end());
  for (size_t i = 1; i < s.maps.size(); ++i) {
    std::set<int> next;
    for (int e : s.maps[i].contracted_edges())
      if (acc.count(e)) next.insert(e);
    acc = std::move(next);
  }
  std::vector<int> common(acc.begin(), acc.end());

  StratumSpecialization phi = specialize(s.base, common);
  ColoredStratum newBase =
      ColoredStratum::make_unchecked(phi.contraction.target, phi.targetColoring);

  // Member maps descend: each contracts the image of its old set minus the
  // common part.
  SStructure generic;
  std::vector<StratumSpecialization> maps;
  for (const StratumSpecialization& m : s.maps) {
    std::vector<int> residual;
    for (int e : m.contracted_edges()) {
      int img = phi.contraction.edgeMap.at(e);
      if (img >= 0) residual.push_back(img);
    }
    maps.push_back(specialize(newBase, residual));
  }
  generic.base = std::move(newBase);
  generic.maps = std::move(maps);
  return {std::move(generic), std::move(phi)};
}

bool is_generic(const SStructure& s) {
  if (s.maps.empty())
    throw std::invalid_argument("is_generic: structure has no member maps");
  std::set<int> acc(s.maps[0].contracted_edges().begin(), s.maps[0].contracted_edges().end());
  for (size_t i = 1; i < s.maps.size() && !acc.empty(); ++i) {
    std::set<int> next;
    for (int e : s.maps[i].contracted_edges())
      if (acc.count(e)) next.insert(e);
    acc = std::move(next);
  }
  return acc.empty();
}

std::string structure_canonical_form(const SStructure& s) {
  const StableTree& t = s.base.tree;
  std::vector<std::string> vlabels;
  for (int v = 0; v < t.vertex_count(); ++v)
    vlabels.push_back(std::to_string(t.genus_of(v)) + "|" +
                      std::to_string(s.base.coloring.color(v)));
  std::vector<std::string> elabels(t.edge_count());
  for (int e = 0; e < t.edge_count(); ++e) {
    std::string bits;
    for (const StratumSpecialization& m : s.maps) {
      const auto& ce = m.contracted_edges();
      bits += std::binary_search(ce.begin(), ce.end(), e) ? '1' : '0';
    }
    elabels[e] = bits;
  }
  return canonical_form_labeled(t, vlabels, elabels);
}

}  // namespace torfib
