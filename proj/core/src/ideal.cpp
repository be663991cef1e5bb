#include "torfib/ideal.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "torfib/contraction.hpp"
#include "torfib/specialization.hpp"

namespace torfib {

SquareFreeIdeal local_ring(const ColoredStratum& s) {
  auto sv = stratum_validity(s.tree, s.coloring);
  if (!sv.valid)
    throw std::invalid_argument("local_ring: not a stratum, uncovered edge " +
                                std::to_string(*sv.uncoveredEdge));

  SquareFreeIdeal ideal;
  for (int e = 0; e < s.tree.edge_count(); ++e) ideal.vars.push_back(e);
  for (const CriticalPath& p : s.criticalPaths) ideal.gens.push_back(p.edge_set());

  // Critical-path supports are automatically an antichain; minimalize and
  // dedup anyway so the type invariant never depends on that fact.
  std::sort(ideal.gens.begin(), ideal.gens.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return a.size() != b.size() ? a.size() < b.size() : a < b;
            });
  std::vector<std::vector<int>> minimal;
  for (const auto& g : ideal.gens) {
    bool contained = false;
    for (const auto& m : minimal)
      if (std::includes(g.begin(), g.end(), m.begin(), m.end())) contained = true;
    if (!contained) minimal.push_back(g);
  }
  ideal.gens = std::move(minimal);

  ideal.dimX = 0;
  for (int v = 0; v < s.tree.vertex_count(); ++v)
    ideal.dimX += 3 * s.tree.genus_of(v) - 3 + s.tree.valence(v);
  return ideal;
}

bool is_radical_squarefree(const std::vector<std::vector<int>>& rawGens) {
  for (const auto& g : rawGens) {
    std::set<int> seen;
    for (int v : g)
      if (!seen.insert(v).second) return false;
  }
  return true;
}

bool monomial_membership(const SquareFreeIdeal& ideal, const Monomial& m) {
  for (const auto& [var, exp] : m.exps) {
    if (exp < 1) throw std::invalid_argument("monomial exponents must be >= 1");
    if (!std::binary_search(ideal.vars.begin(), ideal.vars.end(), var))
      throw std::invalid_argument("unknown variable s_" + std::to_string(var));
  }
  for (const auto& g : ideal.gens) {
    bool divides = true;
    for (int v : g)
      if (!m.exps.count(v)) divides = false;
    if (divides) return true;
  }
  return false;
}

namespace {

bool covers_all(const std::set<int>& w, const std::vector<std::vector<int>>& gens) {
  for (const auto& g : gens) {
    bool hit = false;
    for (int v : g)
      if (w.count(v)) hit = true;
    if (!hit) return false;
  }
  return true;
}

bool is_minimal_cover(const std::set<int>& w, const std::vector<std::vector<int>>& gens) {
  for (int drop : w) {
    std::set<int> smaller(w);
    smaller.erase(drop);
    if (covers_all(smaller, gens)) return false;
  }
  return true;
}

}  // namespace

std::vector<std::vector<int>> minimal_primes(const SquareFreeIdeal& ideal) {
  if (ideal.gens.empty()) return {{}};

  std::set<std::vector<int>> covers;
  std::set<int> current;
  // Branch on the elements of the first uncovered generator; prune branches
  // already dominated by a recorded cover.
  std::function<void()> grow = [&]() {
    const std::vector<int>* uncovered = nullptr;
    for (const auto& g : ideal.gens) {
      bool hit = false;
      for (int v : g)
        if (current.count(v)) hit = true;
      if (!hit) {
        uncovered = &g;
        break;
      }
    }
    if (!uncovered) {
      if (is_minimal_cover(current, ideal.gens))
        covers.insert(std::vector<int>(current.begin(), current.end()));
      return;
    }
    for (int v : *uncovered) {
      current.insert(v);
      grow();
      current.erase(v);
    }
  };
  grow();

  return std::vector<std::vector<int>>(covers.begin(), covers.end());
}

std::vector<MinimalPrime> minimal_primes_at(const ColoredStratum& s) {
  Genus g = s.tree.total_genus();
  std::vector<MinimalPrime> out;
  for (auto& w : minimal_primes(local_ring(s))) {
    std::int64_t dim = 3 * g - 3 - static_cast<std::int64_t>(w.size());
    out.push_back({std::move(w), dim});
  }
  return out;
}

std::vector<std::pair<MinimalPrime, ColoredStratum>> components_through_point(
    const ColoredStratum& s) {
  std::vector<std::pair<MinimalPrime, ColoredStratum>> out;
  for (const MinimalPrime& prime : minimal_primes_at(s)) {
    std::set<int> keep(prime.vars.begin(), prime.vars.end());
    std::vector<int> drop;
    for (int e = 0; e < s.tree.edge_count(); ++e)
      if (!keep.count(e)) drop.push_back(e);
    StratumSpecialization phi = specialize(s, drop);  // throws if colors mix
    ColoredStratum comp = ColoredStratum::make(phi.contraction.target, phi.targetColoring);
    out.push_back({prime, std::move(comp)});
  }
  return out;
}

}  // namespace torfib
