#include "torfib/strata_sets.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "torfib/enumeration.hpp"

namespace torfib {

namespace {

void check_parts(Genus g, const std::vector<Genus>& parts) {
  if (parts.empty()) throw std::invalid_argument("parts must be nonempty");
  Genus sum = 0;
  for (Genus p : parts) {
    if (p < 1) throw std::invalid_argument("part genera must be >= 1");
    sum += p;
  }
  if (sum != g)
    throw std::invalid_argument("parts sum to " + std::to_string(sum) + ", expected " +
                                std::to_string(g));
}

// Permutations of {1..k} moving colors only between equal parts.
std::vector<std::vector<int>> part_preserving_permutations(const std::vector<Genus>& parts) {
  const int k = static_cast<int>(parts.size());
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int j = 0; j < k; ++j)
      if (parts[perm[j]] != parts[j]) ok = false;
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::string unordered_key(const ColoredStratum& s,
                          const std::vector<std::vector<int>>& perms) {
  std::string best;
  for (const auto& perm : perms) {
    Coloring c;
    c.parts = s.coloring.parts;
    for (const auto& [v, col] : s.coloring.colorOf) {
      // col-1 indexed slot moves to position perm^{-1}; relabel directly.
      for (int j = 0; j < static_cast<int>(perm.size()); ++j)
        if (perm[j] == col - 1) c.colorOf[v] = j + 1;
    }
    std::string key = stratum_canonical_form(s.tree, c);
    if (best.empty() || key < best) best = key;
  }
  return best;
}

}  // namespace

std::vector<ColoredStratum> enumerate_strata(Genus g, const std::vector<Genus>& parts,
                                             bool dedupUnordered) {
  check_parts(g, parts);
  const int k = static_cast<int>(parts.size());

  std::map<std::string, ColoredStratum> found;
  auto perms = dedupUnordered ? part_preserving_permutations(parts)
                              : std::vector<std::vector<int>>{};

  for (const StableTree& t : enumerate_stable_trees(g)) {
    std::vector<int> pos = t.positive_genus_vertices();
    std::vector<int> colors(pos.size(), 0);
    std::vector<Genus> remaining(parts);

    std::function<void(size_t)> assign = [&](size_t i) {
      if (i == pos.size()) {
        for (Genus r : remaining)
          if (r != 0) return;
        Coloring c;
        c.parts = parts;
        for (size_t j = 0; j < pos.size(); ++j) c.colorOf[pos[j]] = colors[j];
        if (!stratum_validity(t, c).valid) return;
        ColoredStratum s = ColoredStratum::make_unchecked(t, c);
        std::string key = dedupUnordered ? unordered_key(s, perms) : s.canonical;
        found.emplace(std::move(key), std::move(s));
        return;
      }
      Genus gv = t.genus_of(pos[i]);
      for (int col = 1; col <= k; ++col) {
        if (remaining[col - 1] < gv) continue;
        remaining[col - 1] -= gv;
        colors[i] = col;
        assign(i + 1);
        remaining[col - 1] += gv;
      }
    };
    assign(0);
  }

  std::vector<ColoredStratum> out;
  out.reserve(found.size());
  for (auto& [key, s] : found) out.push_back(std::move(s));
  std::sort(out.begin(), out.end(),
            [](const ColoredStratum& a, const ColoredStratum& b) { return a.canonical < b.canonical; });
  return out;
}

namespace {

// Valid strata reachable from s by one nonempty color-compatible
// contraction, as canonical forms with their contracted edge subsets.
std::vector<std::pair<std::vector<int>, std::string>> valid_contractions(const ColoredStratum& s) {
  std::vector<std::pair<std::vector<int>, std::string>> out;
  const int m = s.tree.edge_count();
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> edges;
    for (int e = 0; e < m; ++e)
      if (mask & (1u << e)) edges.push_back(e);
    Contraction c = contract(s.tree, edges);
    auto induced = induced_coloring(c, s.coloring);
    if (!induced) continue;
    if (!stratum_validity(c.target, *induced).valid) continue;
    out.push_back({std::move(edges), stratum_canonical_form(c.target, *induced)});
  }
  return out;
}

}  // namespace

std::vector<ColoredStratum> irreducible_components(Genus g, const std::vector<Genus>& parts) {
  std::vector<ColoredStratum> out;
  for (ColoredStratum& s : enumerate_strata(g, parts)) {
    if (valid_contractions(s).empty()) out.push_back(std::move(s));
  }
  return out;
}

int StrataPoset::index_of(const std::string& canonical) const {
  for (size_t i = 0; i < strata.size(); ++i)
    if (strata[i].canonical == canonical) return static_cast<int>(i);
  return -1;
}

StrataPoset strata_poset(Genus g, const std::vector<Genus>& parts) {
  StrataPoset p;
  p.strata = enumerate_strata(g, parts);
  const int n = static_cast<int>(p.strata.size());
  p.reach.assign(n, {});

  for (int i = 0; i < n; ++i) {
    std::set<int> above;
    for (const auto& [edges, key] : valid_contractions(p.strata[i])) {
      int j = p.index_of(key);
      if (j < 0) throw std::logic_error("contracted stratum missing from enumeration");
      above.insert(j);
    }
    p.reach[i].assign(above.begin(), above.end());
  }

  // Transitive reduction: drop i->j when i->m->j exists.
  std::vector<std::set<int>> reach(n);
  for (int i = 0; i < n; ++i) reach[i] = std::set<int>(p.reach[i].begin(), p.reach[i].end());
  for (int i = 0; i < n; ++i) {
    for (int j : p.reach[i]) {
      bool redundant = false;
      for (int m : p.reach[i]) {
        if (m != j && reach[m].count(j)) redundant = true;
      }
      if (!redundant) p.covers.push_back({i, j});
    }
  }

  p.component.assign(n, false);
  for (int i = 0; i < n; ++i) p.component[i] = p.reach[i].empty();

  // Membership in the closed-strata family: take the components above i and
  // ask for one specialization choice per component with empty common
  // contracted set.
  p.inStrataY.assign(n, false);
  for (int i = 0; i < n; ++i) {
    if (p.component[i]) {
      p.inStrataY[i] = true;
      continue;
    }
    std::vector<int> comps;
    for (int j : p.reach[i])
      if (p.component[j]) comps.push_back(j);
    if (comps.empty()) continue;

    std::vector<std::vector<std::vector<int>>> choices;  // per component: contracted sets
    bool feasible = true;
    for (int j : comps) {
      std::vector<std::vector<int>> sets;
      for (const auto& [edges, key] : valid_contractions(p.strata[i]))
        if (key == p.strata[j].canonical) sets.push_back(edges);
      if (sets.empty()) feasible = false;
      choices.push_back(std::move(sets));
    }
    if (!feasible) continue;

    std::function<bool(size_t, std::set<int>)> pick = [&](size_t idx, std::set<int> common) {
      if (common.empty()) return true;
      if (idx == choices.size()) return false;
      for (const auto& set : choices[idx]) {
        std::set<int> next;
        for (int e : set)
          if (common.count(e)) next.insert(e);
        if (pick(idx + 1, std::move(next))) return true;
      }
      return false;
    };
    std::set<int> all;
    for (int e = 0; e < p.strata[i].tree.edge_count(); ++e) all.insert(e);
    p.inStrataY[i] = pick(0, std::move(all));
  }
  return p;
}

std::vector<SStructure> fiber_product_decomposition(const std::vector<ColoredStratum>& members) {
  if (members.empty()) throw std::invalid_argument("fiber product over empty member set");
  Genus g = members[0].tree.total_genus();
  for (const ColoredStratum& z : members) {
    if (z.tree.total_genus() != g || z.coloring.parts != members[0].coloring.parts)
      throw std::invalid_argument("fiber product members disagree on (g, parts)");
  }

  std::map<std::string, SStructure> found;
  for (const ColoredStratum& base : enumerate_strata(g, members[0].coloring.parts)) {
    std::vector<std::vector<StratumSpecialization>> perMember;
    bool any = true;
    for (const ColoredStratum& z : members) {
      auto maps = specializations_between(base, z);
      if (maps.empty()) {
        any = false;
        break;
      }
      perMember.push_back(std::move(maps));
    }
    if (!any) continue;

    std::vector<size_t> pick(perMember.size(), 0);
    std::function<void(size_t)> sweep = [&](size_t idx) {
      if (idx == perMember.size()) {
        SStructure s;
        s.base = base;
        for (size_t i = 0; i < perMember.size(); ++i) s.maps.push_back(perMember[i][pick[i]]);
        if (!is_generic(s)) return;
        found.emplace(structure_canonical_form(s), std::move(s));
        return;
      }
      for (pick[idx] = 0; pick[idx] < perMember[idx].size(); ++pick[idx]) sweep(idx + 1);
    };
    sweep(0);
  }

  std::vector<SStructure> out;
  out.reserve(found.size());
  for (auto& [key, s] : found) out.push_back(std::move(s));
  return out;
}

}  // namespace torfib
