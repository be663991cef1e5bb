#include "torfib/canonical.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace torfib {

namespace {

// Centroids: vertices minimizing the largest component after removal.
// A tree has one or two of them; two are always adjacent.
std::vector<int> centroids(const StableTree& t) {
  const int n = t.vertex_count();
  if (n == 1) return {0};
  std::vector<int> sub(n, 1), best(n, n);
  std::function<void(int, int)> sizes = [&](int v, int parent) {
    for (OrientedEdge oe : t.out_edges(v)) {
      int w = t.target(oe);
      if (w == parent) continue;
      sizes(w, v);
      sub[v] += sub[w];
    }
  };
  sizes(0, -1);
  std::function<void(int, int, int)> walk = [&](int v, int parent, int above) {
    int worst = above;
    for (OrientedEdge oe : t.out_edges(v)) {
      int w = t.target(oe);
      if (w == parent) continue;
      worst = std::max(worst, sub[w]);
    }
    best[v] = worst;
    for (OrientedEdge oe : t.out_edges(v)) {
      int w = t.target(oe);
      if (w == parent) continue;
      walk(w, v, n - sub[w]);
    }
  };
  walk(0, -1, 0);
  int opt = *std::min_element(best.begin(), best.end());
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (best[v] == opt) out.push_back(v);
  return out;
}

}  // namespace

std::string canonical_form_labeled(const StableTree& t,
                                   const std::vector<std::string>& vertexLabels,
                                   const std::vector<std::string>& edgeLabels) {
  if (t.vertex_count() == 0) throw std::invalid_argument("canonical form of empty tree");
  auto vlabel = [&](int v) -> std::string {
    return v < static_cast<int>(vertexLabels.size()) ? vertexLabels[v] : std::string();
  };
  auto elabel = [&](int e) -> std::string {
    return e < static_cast<int>(edgeLabels.size()) ? edgeLabels[e] : std::string();
  };

  std::function<std::string(int, int)> encode = [&](int v, int parent) -> std::string {
    std::vector<std::string> kids;
    for (OrientedEdge oe : t.out_edges(v)) {
      int w = t.target(oe);
      if (w == parent) continue;
      kids.push_back("{" + elabel(oe.edge) + "}" + encode(w, v));
    }
    std::sort(kids.begin(), kids.end());
    std::string out = "(" + vlabel(v);
    for (const auto& k : kids) out += k;
    out += ")";
    return out;
  };

  std::vector<int> cs = centroids(t);
  if (cs.size() == 1) return encode(cs[0], -1);

  // Bicentroid: root at the central edge, order the halves canonically.
  int a = cs[0], b = cs[1];
  int mid = -1;
  for (OrientedEdge oe : t.out_edges(a))
    if (t.target(oe) == b) mid = oe.edge;
  if (mid < 0) throw std::logic_error("bicentroid vertices not adjacent");
  std::string ea = encode(a, b), eb = encode(b, a);
  if (eb < ea) std::swap(ea, eb);
  return "<" + elabel(mid) + "|" + ea + "#" + eb + ">";
}

std::string canonical_form(const StableTree& t) {
  require_valid(t);
  std::vector<std::string> labels;
  labels.reserve(t.vertex_count());
  for (int v = 0; v < t.vertex_count(); ++v) labels.push_back(std::to_string(t.genus_of(v)));
  return canonical_form_labeled(t, labels, {});
}

}  // namespace torfib
