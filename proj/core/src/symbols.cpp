#include "torfib/symbols.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace torfib {

namespace {

struct Registry {
  std::map<std::tuple<SymKind, std::array<int, 5>, std::string>, SymId> index;
  std::vector<SymbolData> data;

  SymId intern(SymKind kind, std::array<int, 5> idx, std::string name = {}) {
    auto key = std::make_tuple(kind, idx, name);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    SymId id = static_cast<SymId>(data.size());
    data.push_back({kind, idx, std::move(name)});
    index.emplace(std::move(key), id);
    return id;
  }
};

Registry& registry() {
  static Registry r;
  return r;
}

std::string edge_name(int code, const StableTree* tree) {
  OrientedEdge oe = OrientedEdge::from_code(code);
  if (tree) return tree->half_edge_id(oe);
  return std::to_string(oe.edge) + ":" + std::to_string(oe.side);
}

std::string vertex_name(int v, const StableTree* tree) {
  if (tree && v >= 0 && v < tree->vertex_count()) return tree->vertex(v).id;
  return "#" + std::to_string(v);
}

}  // namespace

namespace sym {

SymId named(const std::string& name) {
  return registry().intern(SymKind::Named, {-1, -1, -1, -1, -1}, name);
}
SymId beta_jet(int v, int eCode, int e2Code, int a, int m) {
  return registry().intern(SymKind::BetaJet, {v, eCode, e2Code, a, m});
}
SymId kappa_jet(int v, int eCode, int e2Code, int a) {
  return registry().intern(SymKind::KappaJet, {v, eCode, e2Code, a, -1});
}
SymId xi_jet(int omegaIndex, int eCode, int a) {
  return registry().intern(SymKind::XiJet, {omegaIndex, eCode, a, -1, -1});
}
SymId form_b(int eCode, int n) {
  return registry().intern(SymKind::FormB, {eCode, n, -1, -1, -1});
}
SymId form_k(int eCode) {
  return registry().intern(SymKind::FormK, {eCode, -1, -1, -1, -1});
}
SymId b_period(int j, int eCode, int n) {
  return registry().intern(SymKind::BPeriod, {j, eCode, n, -1, -1});
}
SymId b_kappa(int j, int eCode) {
  return registry().intern(SymKind::BKappa, {j, eCode, -1, -1, -1});
}
const SymbolData& data(SymId id) { return registry().data.at(id); }
bool is_form_atom(SymId id) {
  SymKind k = data(id).kind;
  return k == SymKind::FormB || k == SymKind::FormK;
}

}  // namespace sym

std::string symbol_name(SymId id, const StableTree* tree) {
  const SymbolData& d = sym::data(id);
  std::ostringstream os;
  switch (d.kind) {
    case SymKind::Named:
      os << d.name;
      break;
    case SymKind::BetaJet:
      os << "beta[" << vertex_name(d.idx[0], tree) << ";" << edge_name(d.idx[1], tree) << ","
         << edge_name(d.idx[2], tree);
      if (d.idx[3] != 0 || d.idx[4] != 0) os << ";" << d.idx[3] << "," << d.idx[4];
      os << "]";
      break;
    case SymKind::KappaJet:
      os << "kappa[" << vertex_name(d.idx[0], tree) << ";" << edge_name(d.idx[1], tree) << ","
         << edge_name(d.idx[2], tree);
      if (d.idx[3] != 0) os << ";" << d.idx[3];
      os << "]";
      break;
    case SymKind::XiJet:
      os << "xi[";
      if (d.idx[0] != 1) os << "i" << d.idx[0] << ";";
      os << edge_name(d.idx[1], tree);
      if (d.idx[2] != 0) os << ";" << d.idx[2];
      os << "]";
      break;
    case SymKind::FormB:
      os << "b[" << edge_name(d.idx[0], tree);
      if (d.idx[1] != 0) os << ";" << d.idx[1];
      os << "]";
      break;
    case SymKind::FormK:
      os << "K[" << edge_name(d.idx[0], tree) << "]";
      break;
    case SymKind::BPeriod:
      os << "B[" << d.idx[0] << ";" << edge_name(d.idx[1], tree);
      if (d.idx[2] != 0) os << ";" << d.idx[2];
      os << "]";
      break;
    case SymKind::BKappa:
      os << "BK[" << d.idx[0] << ";" << edge_name(d.idx[1], tree) << "]";
      break;
  }
  return os.str();
}

SymPoly SymPoly::rational(const Rat& r) {
  SymPoly p;
  if (r != 0) p.terms_[SymMono{}] = r;
  return p;
}

SymPoly SymPoly::symbol(SymId id, int power) {
  if (power < 1) throw std::invalid_argument("symbol power must be >= 1");
  SymPoly p;
  SymMono m;
  m.factors.push_back({id, power});
  p.terms_[m] = 1;
  return p;
}

bool SymPoly::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rat SymPoly::rational_value() const {
  if (terms_.empty()) return 0;
  if (!is_rational()) throw std::logic_error("polynomial is not a plain rational");
  return terms_.begin()->second;
}

void SymPoly::insert(const SymMono& m, const Rat& r) {
  if (r == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, r);
  } else {
    it->second += r;
    if (it->second == 0) terms_.erase(it);
  }
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
  for (const auto& [m, r] : o.terms_) insert(m, r);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
  for (const auto& [m, r] : o.terms_) insert(m, -r);
  return *this;
}

SymPoly SymPoly::operator-() const {
  SymPoly out;
  for (const auto& [m, r] : terms_) out.terms_.emplace(m, -r);
  return out;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
  SymPoly out;
  for (const auto& [ma, ra] : a.terms_) {
    for (const auto& [mb, rb] : b.terms_) {
      SymMono prod;
      auto ia = ma.factors.begin(), ib = mb.factors.begin();
      while (ia != ma.factors.end() || ib != mb.factors.end()) {
        if (ib == mb.factors.end() || (ia != ma.factors.end() && ia->first < ib->first)) {
          prod.factors.push_back(*ia++);
        } else if (ia == ma.factors.end() || ib->first < ia->first) {
          prod.factors.push_back(*ib++);
        } else {
          prod.factors.push_back({ia->first, ia->second + ib->second});
          ++ia;
          ++ib;
        }
      }
      out.insert(prod, ra * rb);
    }
  }
  return out;
}

SymPoly& SymPoly::scale(const Rat& r) {
  if (r == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= r;
  return *this;
}

SymPoly& SymPoly::divide(const Rat& r) {
  if (r == 0) throw std::invalid_argument("division by zero");
  for (auto& [m, c] : terms_) c /= r;
  return *this;
}

SymPoly SymPoly::substituted(const std::map<SymId, SymPoly>& table) const {
  SymPoly out;
  for (const auto& [m, r] : terms_) {
    SymPoly term = SymPoly::rational(r);
    for (const auto& [id, pow] : m.factors) {
      auto it = table.find(id);
      SymPoly base = (it != table.end()) ? it->second : SymPoly::symbol(id);
      for (int i = 0; i < pow; ++i) term = term * base;
    }
    out += term;
  }
  return out;
}

std::string SymPoly::text(const StableTree* tree) const {
  if (terms_.empty()) return "0";
  std::vector<std::string> rendered;
  for (const auto& [m, r] : terms_) {
    std::vector<std::string> factors;
    for (const auto& [id, pow] : m.factors) {
      std::string f = symbol_name(id, tree);
      if (pow != 1) f += "^" + std::to_string(pow);
      factors.push_back(std::move(f));
    }
    std::sort(factors.begin(), factors.end());
    std::ostringstream os;
    os << "(" << rat_to_string(r) << ")";
    for (const auto& f : factors) os << "*" << f;
    rendered.push_back(os.str());
  }
  std::sort(rendered.begin(), rendered.end());
  std::string out;
  for (size_t i = 0; i < rendered.size(); ++i) {
    if (i) out += " + ";
    out += rendered[i];
  }
  return out;
}

}  // namespace torfib
