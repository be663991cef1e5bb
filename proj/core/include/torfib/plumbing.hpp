#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "torfib/jets.hpp"
#include "torfib/stable_tree.hpp"

namespace torfib {

struct PlumbingOptions {
  int rMax = 3;        // depth of the transition recursion
  int sCap = 4;        // total-degree accuracy of every series
  int zTop = 4;        // Taylor depth kept on holomorphic jets
  int omegaIndex = 1;  // which seed differential the xi symbols belong to

  static PlumbingOptions for_order(int rMax) {
    return PlumbingOptions{rMax, rMax + 1, rMax + 1, 1};
  }
};

// Formal expansion engine for the standard plumbing of a stable tree. A
// seed differential lives on one positive-genus vertex (the omega vertex);
// the engine expands its extension across the plumbed curve order by order
// in the smoothing variables, entirely over the exact symbolic field.
//
// Vertex-form series returned by eta/path_sum carry exactly one kernel
// atom (a b[e;n] or K[e] symbol) per monomial; those atoms stand for
// global differentials on the base component and are consumed by the
// period functionals.
class PlumbingEngine {
 public:
  PlumbingEngine(StableTree tree, int omegaVertex, NodePositions positions, PlumbingOptions opt);

  const StableTree& tree() const { return tree_; }
  int omega_vertex() const { return omega_; }
  const PlumbingOptions& options() const { return opt_; }

  // Inductive jets of the extension in the node chart of e. Order 0 is the
  // seed restriction, order r integrates the pulled-back previous order
  // against the regular kernels.
  const EdgeJet& xi(OrientedEdge e, int r);

  // Correction differential of order r on the component of v, as a
  // vertex-form series.
  const SSeries& eta(int v, int r);

  // Sum of the corrections through options().rMax.
  SSeries eta_total(int v);

  // Closed-form leading part of eta(v, rPrime): signed sum over length-
  // rPrime walks from v ending at the omega vertex of s(l) * b(z, q_first)
  // * beta(l) * xi(last). Exact; zero when rPrime < dist(v, omega).
  SSeries path_sum_leading(int v, int rPrime);

  // Same walk sum one level down, for the xi jets (regular-kernel leading
  // coefficients instead of the global b atoms).
  EdgeJet path_sum_leading_xi(OrientedEdge e, int rPrime);

  // Period functionals on vertex forms: B_j replaces each kernel atom by
  // the matching period symbol; every A-period of a kernel atom vanishes.
  SSeries b_period(const SSeries& vertexForm, int j) const;
  SSeries a_period(const SSeries& vertexForm, int i) const;

  const KernelJet& regular_kernel(int v, OrientedEdge e, OrientedEdge e2);

  int distance(int a, int b) const { return dist_.at(a).at(b); }
  std::vector<int> geodesic_edges(int a, int b) const;
  SMono geodesic_monomial(int a, int b) const;

 private:
  SymPoly beta_factor(int vertex, OrientedEdge in, OrientedEdge out) const;

  StableTree tree_;
  int omega_;
  NodePositions pos_;
  PlumbingOptions opt_;
  std::vector<std::vector<int>> dist_;
  std::map<std::pair<int, int>, EdgeJet> xiMemo_;
  std::map<std::pair<int, int>, SSeries> etaMemo_;
  std::map<std::tuple<int, int, int>, std::unique_ptr<KernelJet>> kernels_;
};

struct RefinementOrder {
  int rPrime = 0;
  bool belowDistance = false;      // this order sits below the graph distance
  bool zeroOk = false;             // identically zero when below distance
  bool leadingMatches = false;     // degree-rPrime part equals the walk sum
  bool lowOrderClean = false;      // nothing visible below degree rPrime + 1
  bool remainderDivisible = false; // remainder divisible by the geodesic monomial
  SSeries pathSum;
  SSeries remainder;               // eta - pathSum

  bool ok() const {
    return belowDistance ? zeroOk : (leadingMatches && lowOrderClean && remainderDivisible);
  }
};

struct RefinementReport {
  int vertex = -1;
  int omegaVertex = -1;
  int distance = 0;
  int rMax = 0;
  std::vector<int> geodesicEdges;
  std::vector<RefinementOrder> orders;
  bool pass = false;
};

// Order-by-order check of the leading-term structure of the corrections at
// v for a seed differential at omegaVertex: identical vanishing below the
// graph distance r, exact symbolic equality with the walk sum at each
// order, and a remainder divisible by the geodesic monomial of total
// degree >= order + 1. Throws when v == omegaVertex or the truncation
// cannot decide an order.
RefinementReport verify_refinement(const StableTree& t, int v, int omegaVertex, int rMax,
                                   std::optional<NodePositions> positions = std::nullopt);

// Block of the degenerating period matrix pairing the seed differentials
// nu_i of diffVertex with the B-cycles of cycleVertex.
struct PeriodBlock {
  int cycleVertex = -1;  // v: carries the cycles B_j
  int diffVertex = -1;   // v': carries the differentials nu_i
  std::vector<int> geodesicEdges;
  int rows = 0;  // g(v')
  int cols = 0;  // g(v)
  std::vector<SSeries> entries;  // row-major

  const SSeries& entry(int i, int j) const;  // 1-based
};

// Throws when v == vPrime (diagonal blocks are out of scope) or either
// vertex has genus 0.
PeriodBlock period_block(const StableTree& t, int v, int vPrime, int rMax, int sTrunc,
                         std::optional<NodePositions> positions = std::nullopt);

}  // namespace torfib
