#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "torfib/rational.hpp"
#include "torfib/stable_tree.hpp"

namespace torfib {

using SymId = int;

// Symbol families of the coefficient field. Oriented edges are stored as
// codes; the printer renders them as half-edge ids ("3:0").
//
//   BetaJet(v, e, e', a, m)  [z^a zeta^m] of the regular bidifferential
//                            jet at vertex v between charts e and e'
//   KappaJet(v, e, e', a)    [z^a zeta^0] of the 2-pi-i-scaled regular
//                            Cauchy kernel at v (constant-in-zeta part)
//   XiJet(i, e, a)           z^a Taylor coefficient of the i-th seed
//                            differential restricted to chart e
//   FormB(e, n)              the differential (1/n!) d^n_zeta b(z, .) at
//                            the node of e, z global on the source of e
//   FormK(e)                 the differential 2-pi-i K(z, q_e), z global
//   BPeriod(j, e, n)         B_j-period of FormB(e, n)
//   BKappa(j, e)             B_j-period of FormK(e)
//   Named                    free-form symbol for tests and examples
enum class SymKind : int { Named, BetaJet, KappaJet, XiJet, FormB, FormK, BPeriod, BKappa };

struct SymbolData {
  SymKind kind = SymKind::Named;
  std::array<int, 5> idx{-1, -1, -1, -1, -1};
  std::string name;
};

// Process-global interning table; ids are stable within a run.
namespace sym {
SymId named(const std::string& name);
SymId beta_jet(int v, int eCode, int e2Code, int a, int m);
SymId kappa_jet(int v, int eCode, int e2Code, int a);
SymId xi_jet(int omegaIndex, int eCode, int a);
SymId form_b(int eCode, int n);
SymId form_k(int eCode);
SymId b_period(int j, int eCode, int n);
SymId b_kappa(int j, int eCode);
const SymbolData& data(SymId id);
bool is_form_atom(SymId id);
}  // namespace sym

// Rendered name; vertex and edge indices are resolved through the tree
// when one is supplied.
std::string symbol_name(SymId id, const StableTree* tree = nullptr);

// Monomial in symbols: sorted (symbol, exponent) pairs, exponents >= 1.
struct SymMono {
  std::vector<std::pair<SymId, int>> factors;
  auto operator<=>(const SymMono&) const = default;
  bool empty() const { return factors.empty(); }
};

// Sparse polynomial over the exact rationals in interned symbols. The
// coefficient "field" of every series in the plumbing modules: division is
// only ever by rationals, and a nonzero polynomial is a unit in the ambient
// fraction field.
class SymPoly {
 public:
  SymPoly() = default;

  static SymPoly rational(const Rat& r);
  static SymPoly symbol(SymId id, int power = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  Rat rational_value() const;  // throws unless monomial-free

  SymPoly& operator+=(const SymPoly& o);
  SymPoly& operator-=(const SymPoly& o);
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
  SymPoly operator-() const;

  SymPoly& scale(const Rat& r);
  SymPoly& divide(const Rat& r);  // throws on zero divisor

  bool operator==(const SymPoly& o) const { return terms_ == o.terms_; }

  const std::map<SymMono, Rat>& terms() const { return terms_; }

  // Substitute whole symbols by polynomials (used by the period functionals).
  SymPoly substituted(const std::map<SymId, SymPoly>& table) const;

  // Canonical text, deterministic across runs: terms sorted by rendered
  // monomial, factors sorted by rendered symbol name.
  std::string text(const StableTree* tree = nullptr) const;

 private:
  void insert(const SymMono& m, const Rat& r);
  std::map<SymMono, Rat> terms_;
};

}  // namespace torfib
