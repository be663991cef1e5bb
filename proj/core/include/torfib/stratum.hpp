#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "torfib/stable_tree.hpp"

namespace torfib {

// k-coloring of the positive-genus vertices. Colors are 1-based indices
// into `parts`; the vertices of color j must have genera summing to
// parts[j-1]. Genus-0 vertices carry no color.
struct Coloring {
  std::vector<Genus> parts;
  std::map<int, int> colorOf;  // vertex index -> color in 1..k

  int k() const { return static_cast<int>(parts.size()); }
  int color(int v) const;  // 0 for uncolored vertices
};

ValidationReport validate_coloring(const StableTree& t, const Coloring& c);

// Simple path whose end vertices have positive genus and different colors
// and whose interior vertices all have genus 0.
struct CriticalPath {
  std::vector<int> vertices;        // v_0, ..., v_r
  std::vector<OrientedEdge> steps;  // oriented along the path, size r

  std::vector<int> edge_set() const;
};

// All critical paths of (T, sigma), deterministically ordered by
// (length, vertex sequence). Throws on an invalid coloring.
std::vector<CriticalPath> critical_paths(const StableTree& t, const Coloring& c);

struct StratumValidity {
  bool valid = false;
  std::optional<int> uncoveredEdge;  // witness when invalid
};

// A pair (T, sigma) indexes a stratum exactly when every edge of T lies on
// some critical path.
StratumValidity stratum_validity(const StableTree& t, const Coloring& c);

// Canonical form of the colored tree; labels are "genus|color".
std::string stratum_canonical_form(const StableTree& t, const Coloring& c);

// Validated stratum index with cached critical paths and canonical form.
struct ColoredStratum {
  StableTree tree;
  Coloring coloring;
  std::vector<CriticalPath> criticalPaths;
  std::string canonical;

  // Validates tree + coloring and the coverage criterion; throws otherwise.
  static ColoredStratum make(StableTree t, Coloring c);
  // Validates tree + coloring only; coverage left to the caller.
  static ColoredStratum make_unchecked(StableTree t, Coloring c);
};

bool is_valid_stratum(const ColoredStratum& s);

}  // namespace torfib
