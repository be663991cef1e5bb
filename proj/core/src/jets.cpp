#include "torfib/jets.hpp"

#include <algorithm>
#include <sstream>

namespace torfib {

void EdgeJet::add(const SMono& m, int zPow, const SymPoly& c) {
  if (static_cast<int>(m.exp.size()) != numEdges_)
    throw std::invalid_argument("jet arity mismatch");
  if (c.is_zero()) return;
  if (m.degree() > sCap_ || zPow > zTop_) return;
  auto key = std::make_pair(m, zPow);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

EdgeJet& EdgeJet::operator+=(const EdgeJet& o) {
  if (o.chart_ != chart_ || o.form_ != form_ || o.numEdges_ != numEdges_)
    throw std::invalid_argument("jet sum: incompatible charts");
  sCap_ = std::min(sCap_, o.sCap_);
  zTop_ = std::min(zTop_, o.zTop_);
  sMin_ = std::min(sMin_, o.sMin_);
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first.first.degree() > sCap_ || it->first.second > zTop_)
      it = terms_.erase(it);
    else
      ++it;
  }
  for (const auto& [key, c] : o.terms_) add(key.first, key.second, c);
  return *this;
}

EdgeJet& EdgeJet::scale(const SymPoly& c) {
  std::map<std::pair<SMono, int>, SymPoly> out;
  for (auto& [key, v] : terms_) {
    SymPoly w = v * c;
    if (!w.is_zero()) out.emplace(key, std::move(w));
  }
  terms_ = std::move(out);
  return *this;
}

SymPoly EdgeJet::coefficient(const SMono& m, int zPow) const {
  auto it = terms_.find({m, zPow});
  return it == terms_.end() ? SymPoly() : it->second;
}

int EdgeJet::min_z_order() const {
  int best = kExactOrder;
  for (const auto& [key, c] : terms_) best = std::min(best, key.second);
  return best;
}

SSeries EdgeJet::constant_term() const {
  SSeries out(numEdges_, sCap_);
  for (const auto& [key, c] : terms_)
    if (key.second == 0) out.add(key.first, c);
  return out;
}

std::string EdgeJet::text(const StableTree* tree) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << key.first.text() << "*z^" << key.second << "*(" << c.text(tree) << ")";
  }
  if (form_) os << " dz";
  return os.str();
}

EdgeJet pullback_transition(const EdgeJet& jet) {
  if (!jet.is_form())
    throw std::invalid_argument("pullback_transition expects a differential jet");
  const int edgeVar = jet.chart().edge;
  int sCap = std::min(saturating_add(jet.s_cap(), 1),
                      saturating_add(jet.s_min(), saturating_add(jet.z_top(), 1)));
  EdgeJet out(jet.chart().reversed(), true, jet.num_edges(), sCap, kExactOrder,
              saturating_add(jet.s_min(), 1));
  for (const auto& [key, c] : jet.terms()) {
    const auto& [m, n] = key;
    SMono shifted = m.plus(SMono::unit(jet.num_edges(), edgeVar, n + 1));
    SymPoly neg = -c;
    out.add(shifted, -n - 2, neg);
  }
  return out;
}

EdgeJet residue_integrate(const KernelJet& kernel, OrientedEdge outChart, const EdgeJet& integrand,
                          int zTopOut) {
  if (!integrand.is_form())
    throw std::invalid_argument("residue_integrate expects a differential integrand");
  EdgeJet out(outChart, true, integrand.num_edges(), integrand.s_cap(), zTopOut,
              integrand.s_min());
  for (const auto& [key, c] : integrand.terms()) {
    const auto& [m, n] = key;
    if (n >= 0) continue;  // holomorphic part has no residue
    int zetaPow = -n - 1;
    if (zetaPow > kernel.max_zeta_order())
      throw truncation_error("pole order " + std::to_string(-n) +
                             " exceeds kernel jet truncation");
    for (int a = 0; a <= zTopOut; ++a) {
      SymPoly k = kernel.coeff(a, zetaPow);
      if (k.is_zero()) continue;
      out.add(m, a, k * c);
    }
  }
  return out;
}

RationalCauchyKernel::RationalCauchyKernel(Rat delta) : delta_(std::move(delta)) {
  if (delta_ == 0) throw std::invalid_argument("coincident node positions on a rational vertex");
}

SymPoly RationalCauchyKernel::coeff(int zPow, int zetaPow) const {
  // 1/(delta + z - zeta) = sum_k (zeta - z)^k / delta^{k+1}.
  Rat num(binomial(zPow + zetaPow, zPow));
  if (zPow % 2) num = -num;
  Rat den = 1;
  for (int i = 0; i < zPow + zetaPow + 1; ++i) den *= delta_;
  return SymPoly::rational(num / den);
}

SymPoly SymbolicRegularKernel::coeff(int zPow, int zetaPow) const {
  if (zetaPow == 0) return SymPoly::symbol(sym::kappa_jet(v_, e_, e2_, zPow));
  SymPoly p = SymPoly::symbol(sym::beta_jet(v_, e_, e2_, zPow, zetaPow - 1));
  p.divide(Rat(zetaPow));
  return p;
}

SymPoly TableKernel::coeff(int zPow, int zetaPow) const {
  auto it = table_.find({zPow, zetaPow});
  return it == table_.end() ? SymPoly() : it->second;
}

const Rat& NodePositions::at(OrientedEdge e) const {
  auto it = q.find(e.code());
  if (it == q.end())
    throw std::invalid_argument("no node position for half-edge " + std::to_string(e.edge) + ":" +
                                std::to_string(e.side));
  return it->second;
}

NodePositions default_node_positions(const StableTree& t) {
  NodePositions pos;
  for (int v = 0; v < t.vertex_count(); ++v) {
    if (t.genus_of(v) > 0) continue;
    int next = 0;
    for (OrientedEdge oe : t.out_edges(v)) pos.q[oe.code()] = Rat(next++);
  }
  return pos;
}

}  // namespace torfib
