#include "torfib/plumbing.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <tuple>

namespace torfib {

PlumbingEngine::PlumbingEngine(StableTree tree, int omegaVertex, NodePositions positions,
                               PlumbingOptions opt)
    : tree_(std::move(tree)), omega_(omegaVertex), pos_(std::move(positions)), opt_(opt) {
  if (omega_ < 0 || omega_ >= tree_.vertex_count())
    throw std::invalid_argument("omega vertex out of range");
  if (tree_.genus_of(omega_) < 1)
    throw std::invalid_argument("seed differentials need a positive-genus vertex");
  for (int v = 0; v < tree_.vertex_count(); ++v) {
    if (tree_.genus_of(v) > 0) continue;
    std::set<Rat> seen;
    for (OrientedEdge oe : tree_.out_edges(v)) {
      if (!pos_.has(oe))
        throw std::invalid_argument("missing node position on rational vertex " +
                                    tree_.vertex(v).id);
      if (!seen.insert(pos_.at(oe)).second)
        throw std::invalid_argument("coincident node positions on rational vertex " +
                                    tree_.vertex(v).id);
    }
  }
  dist_.reserve(tree_.vertex_count());
  for (int v = 0; v < tree_.vertex_count(); ++v) dist_.push_back(tree_.distances_from(v));
}

const KernelJet& PlumbingEngine::regular_kernel(int v, OrientedEdge e, OrientedEdge e2) {
  auto key = std::make_tuple(v, e.code(), e2.code());
  auto it = kernels_.find(key);
  if (it != kernels_.end()) return *it->second;

  std::unique_ptr<KernelJet> k;
  if (tree_.genus_of(v) > 0) {
    k = std::make_unique<SymbolicRegularKernel>(v, e, e2);
  } else if (e.code() == e2.code()) {
    // Centered charts make the diagonal regular part vanish on a rational
    // component.
    k = std::make_unique<ZeroKernel>();
  } else {
    k = std::make_unique<RationalCauchyKernel>(pos_.at(e) - pos_.at(e2));
  }
  return *kernels_.emplace(key, std::move(k)).first->second;
}

const EdgeJet& PlumbingEngine::xi(OrientedEdge e, int r) {
  auto key = std::make_pair(e.code(), r);
  auto it = xiMemo_.find(key);
  if (it != xiMemo_.end()) return it->second;

  EdgeJet out = EdgeJet::zero(e, true, tree_.edge_count());
  if (r == 0) {
    if (tree_.source(e) == omega_) {
      out = EdgeJet(e, true, tree_.edge_count(), kExactOrder, opt_.zTop, 0);
      for (int a = 0; a <= opt_.zTop; ++a)
        out.add(SMono(tree_.edge_count()), a,
                SymPoly::symbol(sym::xi_jet(opt_.omegaIndex, e.code(), a)));
    }
  } else {
    int v = tree_.source(e);
    for (OrientedEdge e2 : tree_.out_edges(v)) {
      const EdgeJet& prev = xi(e2.reversed(), r - 1);
      if (prev.exactly_zero()) continue;
      EdgeJet pulled = pullback_transition(prev);
      out += residue_integrate(regular_kernel(v, e, e2), e, pulled, opt_.zTop);
    }
  }
  return xiMemo_.emplace(key, std::move(out)).first->second;
}

const SSeries& PlumbingEngine::eta(int v, int r) {
  if (r < 1) throw std::invalid_argument("eta orders start at 1");
  auto key = std::make_pair(v, r);
  auto it = etaMemo_.find(key);
  if (it != etaMemo_.end()) return it->second;

  SSeries out(tree_.edge_count());
  for (OrientedEdge e : tree_.out_edges(v)) {
    const EdgeJet& prev = xi(e.reversed(), r - 1);
    if (prev.exactly_zero()) continue;
    EdgeJet pulled = pullback_transition(prev);
    SSeries part(tree_.edge_count(), pulled.s_cap());
    for (const auto& [mk, c] : pulled.terms()) {
      const auto& [mono, n] = mk;
      if (n >= 0) continue;
      int zetaPow = -n - 1;
      SymPoly atom;
      if (zetaPow == 0) {
        atom = SymPoly::symbol(sym::form_k(e.code()));
      } else {
        atom = SymPoly::symbol(sym::form_b(e.code(), zetaPow - 1));
        atom.divide(Rat(zetaPow));
      }
      part.add(mono, atom * c);
    }
    out += part;
  }
  return etaMemo_.emplace(key, std::move(out)).first->second;
}

SSeries PlumbingEngine::eta_total(int v) {
  SSeries out(tree_.edge_count());
  for (int r = 1; r <= opt_.rMax; ++r) out += eta(v, r);
  // Orders beyond rMax only contribute at total degree > rMax.
  out.restrict_cap(opt_.rMax);
  return out;
}

SymPoly PlumbingEngine::beta_factor(int vertex, OrientedEdge in, OrientedEdge out) const {
  if (tree_.genus_of(vertex) > 0)
    return SymPoly::symbol(sym::beta_jet(vertex, in.code(), out.code(), 0, 0));
  if (in.code() == out.code()) return SymPoly();  // diagonal regular part vanishes
  Rat d = pos_.at(in) - pos_.at(out);
  return SymPoly::rational(Rat(1) / (d * d));
}

SSeries PlumbingEngine::path_sum_leading(int v, int rPrime) {
  SSeries out(tree_.edge_count());
  if (rPrime < 1 || rPrime < distance(v, omega_)) return out;

  const auto& distToOmega = dist_;
  std::vector<OrientedEdge> walk;
  SymPoly weight = SymPoly::rational(1);

  std::function<void(int, SymPoly)> grow = [&](int at, SymPoly acc) {
    int steps = static_cast<int>(walk.size());
    int remaining = rPrime - steps;
    int d = distToOmega[at][omega_];
    if (d > remaining || (remaining - d) % 2 != 0) return;
    if (remaining == 0) {
      // at == omega_ here by the pruning above.
      OrientedEdge last = walk.back();
      SymPoly term = acc * SymPoly::symbol(sym::xi_jet(opt_.omegaIndex, last.reversed().code(), 0));
      term = term * SymPoly::symbol(sym::form_b(walk.front().code(), 0));
      if (rPrime % 2) term = -term;
      SMono mono(tree_.edge_count());
      for (OrientedEdge oe : walk) mono.exp[oe.edge] += 1;
      out.add(mono, term);
      return;
    }
    for (OrientedEdge next : tree_.out_edges(at)) {
      SymPoly step = acc;
      if (steps > 0) {
        SymPoly beta = beta_factor(at, walk.back().reversed(), next);
        if (beta.is_zero()) continue;
        step = step * beta;
      }
      walk.push_back(next);
      grow(tree_.target(next), std::move(step));
      walk.pop_back();
    }
  };
  grow(v, weight);
  return out;
}

EdgeJet PlumbingEngine::path_sum_leading_xi(OrientedEdge e, int rPrime) {
  const int v = tree_.source(e);
  EdgeJet out(e, true, tree_.edge_count(), kExactOrder, opt_.zTop, rPrime);
  if (rPrime < 1 || rPrime < distance(v, omega_)) return out;

  std::vector<OrientedEdge> walk;
  std::function<void(int, SymPoly)> grow = [&](int at, SymPoly acc) {
    int steps = static_cast<int>(walk.size());
    int remaining = rPrime - steps;
    int d = dist_[at][omega_];
    if (d > remaining || (remaining - d) % 2 != 0) return;
    if (remaining == 0) {
      OrientedEdge last = walk.back();
      SymPoly term = acc * SymPoly::symbol(sym::xi_jet(opt_.omegaIndex, last.reversed().code(), 0));
      if (rPrime % 2) term = -term;
      SMono mono(tree_.edge_count());
      for (OrientedEdge oe : walk) mono.exp[oe.edge] += 1;
      const KernelJet& lead = regular_kernel(v, e, walk.front());
      for (int a = 0; a <= opt_.zTop; ++a) {
        SymPoly c = lead.coeff(a, 1);  // the z-jet of the regular bidifferential
        if (c.is_zero()) continue;
        out.add(mono, a, c * term);
      }
      return;
    }
    for (OrientedEdge next : tree_.out_edges(at)) {
      SymPoly step = acc;
      if (steps > 0) {
        SymPoly beta = beta_factor(at, walk.back().reversed(), next);
        if (beta.is_zero()) continue;
        step = step * beta;
      }
      walk.push_back(next);
      grow(tree_.target(next), std::move(step));
      walk.pop_back();
    }
  };
  grow(v, SymPoly::rational(1));
  return out;
}

SSeries PlumbingEngine::b_period(const SSeries& vertexForm, int j) const {
  SSeries out(vertexForm.num_edges(), vertexForm.cap());
  for (const auto& [mono, poly] : vertexForm.terms()) {
    std::map<SymId, SymPoly> table;
    for (const auto& [m, r] : poly.terms()) {
      int atoms = 0;
      for (const auto& [id, pow] : m.factors) {
        if (!sym::is_form_atom(id)) continue;
        atoms += pow;
        const SymbolData& d = sym::data(id);
        if (d.kind == SymKind::FormB)
          table[id] = SymPoly::symbol(sym::b_period(j, d.idx[0], d.idx[1]));
        else
          table[id] = SymPoly::symbol(sym::b_kappa(j, d.idx[0]));
      }
      if (atoms != 1)
        throw std::logic_error("b_period: series is not a vertex form (atom count != 1)");
    }
    out.add(mono, poly.substituted(table));
  }
  return out;
}

SSeries PlumbingEngine::a_period(const SSeries& vertexForm, int) const {
  // Kernel atoms are A-normalized, so every monomial dies.
  return SSeries(vertexForm.num_edges(), vertexForm.cap());
}

std::vector<int> PlumbingEngine::geodesic_edges(int a, int b) const {
  std::vector<int> out;
  for (OrientedEdge oe : tree_.path(a, b)) out.push_back(oe.edge);
  return out;
}

SMono PlumbingEngine::geodesic_monomial(int a, int b) const {
  SMono m(tree_.edge_count());
  for (int e : geodesic_edges(a, b)) m.exp[e] += 1;
  return m;
}

RefinementReport verify_refinement(const StableTree& t, int v, int omegaVertex, int rMax,
                                   std::optional<NodePositions> positions) {
  if (v == omegaVertex)
    throw std::invalid_argument("verify_refinement: the two vertices must differ");
  NodePositions pos = positions ? *positions : default_node_positions(t);
  PlumbingEngine eng(t, omegaVertex, std::move(pos), PlumbingOptions::for_order(rMax));

  RefinementReport rep;
  rep.vertex = v;
  rep.omegaVertex = omegaVertex;
  rep.distance = eng.distance(v, omegaVertex);
  rep.rMax = rMax;
  rep.geodesicEdges = eng.geodesic_edges(v, omegaVertex);
  SMono geo = eng.geodesic_monomial(v, omegaVertex);

  bool pass = true;
  for (int rp = 1; rp <= rMax; ++rp) {
    RefinementOrder ord;
    ord.rPrime = rp;
    const SSeries& E = eng.eta(v, rp);
    if (rp < rep.distance) {
      ord.belowDistance = true;
      ord.zeroOk = E.exactly_zero();
      ord.pathSum = SSeries(t.edge_count());
      ord.remainder = E;
    } else {
      if (E.cap() < rp) throw truncation_error("truncation too shallow to decide order " +
                                               std::to_string(rp));
      ord.pathSum = eng.path_sum_leading(v, rp);
      ord.remainder = E - ord.pathSum;
      ord.leadingMatches = E.component(rp).same_terms(ord.pathSum.component(rp));
      ord.lowOrderClean = ord.remainder.min_visible_degree() > rp;
      ord.remainderDivisible = ord.remainder.divisible_by(geo) && E.divisible_by(geo);
    }
    pass = pass && ord.ok();
    rep.orders.push_back(std::move(ord));
  }
  rep.pass = pass;
  return rep;
}

const SSeries& PeriodBlock::entry(int i, int j) const {
  if (i < 1 || i > rows || j < 1 || j > cols)
    throw std::out_of_range("period block entry out of range");
  return entries.at(static_cast<size_t>(i - 1) * cols + (j - 1));
}

PeriodBlock period_block(const StableTree& t, int v, int vPrime, int rMax, int sTrunc,
                         std::optional<NodePositions> positions) {
  if (v == vPrime)
    throw std::invalid_argument("period_block: diagonal blocks are out of scope");
  if (t.genus_of(v) < 1 || t.genus_of(vPrime) < 1)
    throw std::invalid_argument("period_block: both vertices need positive genus");

  NodePositions pos = positions ? *positions : default_node_positions(t);
  PeriodBlock block;
  block.cycleVertex = v;
  block.diffVertex = vPrime;
  block.rows = static_cast<int>(t.genus_of(vPrime));
  block.cols = static_cast<int>(t.genus_of(v));

  PlumbingOptions opt;
  opt.rMax = rMax;
  opt.sCap = sTrunc;
  opt.zTop = sTrunc;
  for (int i = 1; i <= block.rows; ++i) {
    opt.omegaIndex = i;
    PlumbingEngine eng(t, vPrime, pos, opt);
    if (i == 1) block.geodesicEdges = eng.geodesic_edges(v, vPrime);
    SSeries total = eng.eta_total(v);
    total.restrict_cap(std::min(rMax, sTrunc));
    for (int j = 1; j <= block.cols; ++j) block.entries.push_back(eng.b_period(total, j));
  }
  return block;
}

}  // namespace torfib
