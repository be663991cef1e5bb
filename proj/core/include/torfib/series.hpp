#pragma once

#include <limits>
#include <map>
#include <string>
#include <vector>

#include "torfib/symbols.hpp"

namespace torfib {

// Sentinel accuracy for series known exactly at every order.
inline constexpr int kExactOrder = std::numeric_limits<int>::max() / 4;

inline int saturating_add(int a, int b) {
  if (a >= kExactOrder || b >= kExactOrder) return kExactOrder;
  return a + b;
}

// Exponent vector over the edge variables s_0, ..., s_{m-1}. Individual
// entries may go negative inside transition substitutions; genuine series
// only ever hold nonnegative exponents.
struct SMono {
  std::vector<int> exp;

  explicit SMono(int numEdges = 0) : exp(numEdges, 0) {}
  static SMono unit(int numEdges, int edge, int power = 1);

  int degree() const;
  bool nonnegative() const;
  bool divisible_by(const SMono& m) const;
  SMono plus(const SMono& m) const;

  auto operator<=>(const SMono&) const = default;
  std::string text() const;  // "s[0]^2*s[3]", "1" when trivial
};

// Truncated multivariate power series in the smoothing variables with
// SymPoly coefficients. `cap` is the accuracy contract: coefficients of
// total degree <= cap are exactly the stored ones, higher degrees are
// unknown and never stored.
class SSeries {
 public:
  explicit SSeries(int numEdges = 0, int cap = kExactOrder) : numEdges_(numEdges), cap_(cap) {}

  int num_edges() const { return numEdges_; }
  int cap() const { return cap_; }
  void restrict_cap(int cap);

  bool visible_zero() const { return terms_.empty(); }
  bool exactly_zero() const { return terms_.empty() && cap_ >= kExactOrder; }

  void add(const SMono& m, const SymPoly& c);
  SSeries& operator+=(const SSeries& o);
  SSeries& operator-=(const SSeries& o);
  friend SSeries operator+(SSeries a, const SSeries& b) { return a += b; }
  friend SSeries operator-(SSeries a, const SSeries& b) { return a -= b; }

  SSeries& scale(const SymPoly& c);
  SSeries shifted(const SMono& m, const SymPoly& c) const;  // multiply by c*s^m

  SymPoly coefficient(const SMono& m) const;
  SSeries component(int degree) const;  // homogeneous part, exact
  int min_visible_degree() const;       // kExactOrder when empty

  bool divisible_by(const SMono& m) const;  // every visible term
  bool same_terms(const SSeries& o) const { return terms_ == o.terms_; }

  const std::map<SMono, SymPoly>& terms() const { return terms_; }

  std::string text(const StableTree* tree = nullptr) const;

 private:
  int numEdges_;
  int cap_;
  std::map<SMono, SymPoly> terms_;
};

}  // namespace torfib
