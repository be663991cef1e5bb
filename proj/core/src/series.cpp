#include "torfib/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace torfib {

SMono SMono::unit(int numEdges, int edge, int power) {
  SMono m(numEdges);
  m.exp.at(edge) = power;
  return m;
}

int SMono::degree() const {
  int d = 0;
  for (int e : exp) d += e;
  return d;
}

bool SMono::nonnegative() const {
  for (int e : exp)
    if (e < 0) return false;
  return true;
}

bool SMono::divisible_by(const SMono& m) const {
  if (exp.size() != m.exp.size()) return false;
  for (size_t i = 0; i < exp.size(); ++i)
    if (exp[i] < m.exp[i]) return false;
  return true;
}

SMono SMono::plus(const SMono& m) const {
  if (exp.size() != m.exp.size()) throw std::invalid_argument("monomial arity mismatch");
  SMono out(static_cast<int>(exp.size()));
  for (size_t i = 0; i < exp.size(); ++i) out.exp[i] = exp[i] + m.exp[i];
  return out;
}

std::string SMono::text() const {
  std::ostringstream os;
  bool any = false;
  for (size_t i = 0; i < exp.size(); ++i) {
    if (exp[i] == 0) continue;
    if (any) os << "*";
    os << "s[" << i << "]";
    if (exp[i] != 1) os << "^" << exp[i];
    any = true;
  }
  return any ? os.str() : "1";
}

void SSeries::restrict_cap(int cap) { cap_ = std::min(cap_, cap); }

void SSeries::add(const SMono& m, const SymPoly& c) {
  if (static_cast<int>(m.exp.size()) != numEdges_)
    throw std::invalid_argument("series arity mismatch");
  if (c.is_zero()) return;
  if (m.degree() > cap_) return;  // beyond the accuracy contract
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SSeries& SSeries::operator+=(const SSeries& o) {
  if (numEdges_ != o.numEdges_) throw std::invalid_argument("series arity mismatch");
  cap_ = std::min(cap_, o.cap_);
  // Re-apply the cap to existing terms.
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first.degree() > cap_)
      it = terms_.erase(it);
    else
      ++it;
  }
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

SSeries& SSeries::operator-=(const SSeries& o) {
  SSeries neg = o;
  for (auto& [m, c] : neg.terms_) c = -c;
  return *this += neg;
}

SSeries& SSeries::scale(const SymPoly& c) {
  std::map<SMono, SymPoly> out;
  for (auto& [m, v] : terms_) {
    SymPoly w = v * c;
    if (!w.is_zero()) out.emplace(m, std::move(w));
  }
  terms_ = std::move(out);
  return *this;
}

SSeries SSeries::shifted(const SMono& m, const SymPoly& c) const {
  SSeries out(numEdges_, saturating_add(cap_, m.degree()));
  for (const auto& [mm, v] : terms_) out.add(mm.plus(m), v * c);
  return out;
}

SymPoly SSeries::coefficient(const SMono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? SymPoly() : it->second;
}

SSeries SSeries::component(int degree) const {
  SSeries out(numEdges_, kExactOrder);
  if (degree > cap_) throw std::logic_error("component beyond series accuracy");
  for (const auto& [m, c] : terms_)
    if (m.degree() == degree) out.add(m, c);
  return out;
}

int SSeries::min_visible_degree() const {
  int best = kExactOrder;
  for (const auto& [m, c] : terms_) best = std::min(best, m.degree());
  return best;
}

bool SSeries::divisible_by(const SMono& m) const {
  for (const auto& [mm, c] : terms_)
    if (!mm.divisible_by(m)) return false;
  return true;
}

std::string SSeries::text(const StableTree* tree) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<SMono, std::string>> lines;
  for (const auto& [m, c] : terms_) lines.push_back({m, c.text(tree)});
  std::sort(lines.begin(), lines.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    return a.first < b.first;
  });
  std::ostringstream os;
  for (size_t i = 0; i < lines.size(); ++i) {
    if (i) os << " + ";
    os << lines[i].first.text() << "*(" << lines[i].second << ")";
  }
  return os.str();
}

}  // namespace torfib
