#include "torfib/enumeration.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "torfib/canonical.hpp"

namespace torfib {

namespace {

std::vector<std::string> constant_labels(int n) { return std::vector<std::string>(n, "*"); }

StableTree shape_with_extra_leaf(const StableTree& t, int attach) {
  std::vector<TreeVertex> vs = t.vertices();
  vs.push_back({"v" + std::to_string(vs.size()), 0});
  std::vector<std::array<int, 2>> es = t.edges();
  es.push_back({attach, static_cast<int>(vs.size()) - 1});
  return StableTree(std::move(vs), std::move(es));
}

}  // namespace

std::vector<StableTree> enumerate_tree_shapes(int n) {
  if (n < 1) return {};
  std::vector<StableTree> cur;
  cur.push_back(StableTree({{"v0", 0}}, {}));
  for (int size = 2; size <= n; ++size) {
    std::map<std::string, StableTree> next;
    for (const StableTree& t : cur) {
      for (int v = 0; v < t.vertex_count(); ++v) {
        StableTree grown = shape_with_extra_leaf(t, v);
        std::string key =
            canonical_form_labeled(grown, constant_labels(grown.vertex_count()), {});
        next.emplace(std::move(key), std::move(grown));
      }
    }
    cur.clear();
    for (auto& [key, t] : next) cur.push_back(std::move(t));
  }
  return cur;
}

std::vector<StableTree> enumerate_stable_trees(Genus g, std::optional<int> maxVertices) {
  if (g < 1) throw std::invalid_argument("enumerate_stable_trees: genus must be >= 1");

  long long bound = (g >= 2) ? 2 * static_cast<long long>(g) - 2 : 1;
  if (maxVertices) bound = std::min<long long>(bound, *maxVertices);
  if (bound < 1) return {};

  std::map<std::string, StableTree> found;
  for (int n = 1; n <= bound; ++n) {
    for (const StableTree& shape : enumerate_tree_shapes(n)) {
      // Genus assignments on this shape: genus 0 needs valence >= 3,
      // every other vertex needs genus >= 1 to be stable.
      std::vector<Genus> genera(n, 0);
      std::vector<int> mustBePositive(n, 0);
      int positiveRequired = 0;
      for (int v = 0; v < n; ++v) {
        mustBePositive[v] = (shape.valence(v) < 3) ? 1 : 0;
        positiveRequired += mustBePositive[v];
      }
      if (positiveRequired > g) continue;

      std::function<void(int, Genus)> assign = [&](int v, Genus remaining) {
        int need = 0;
        for (int w = v; w < n; ++w) need += mustBePositive[w];
        if (remaining < need) return;
        if (v == n) {
          if (remaining != 0) return;
          std::vector<TreeVertex> vs = shape.vertices();
          for (int w = 0; w < n; ++w) vs[w].genus = genera[w];
          StableTree t(std::move(vs), shape.edges());
          if (!validate(t).ok()) return;
          found.emplace(canonical_form(t), std::move(t));
          return;
        }
        Genus lo = mustBePositive[v] ? 1 : 0;
        for (Genus x = lo; x <= remaining; ++x) {
          genera[v] = x;
          assign(v + 1, remaining - x);
        }
        genera[v] = 0;
      };
      assign(0, g);
    }
  }

  std::vector<StableTree> out;
  out.reserve(found.size());
  for (auto& [key, t] : found) out.push_back(std::move(t));
  return out;
}

}  // namespace torfib
