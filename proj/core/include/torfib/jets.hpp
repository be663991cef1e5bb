#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>

#include "torfib/series.hpp"

namespace torfib {

struct truncation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Laurent jet in one node chart z_e whose coefficients are truncated series
// in the smoothing variables. Accuracy contract: the stored coefficient at
// (s-monomial M, z-power n) is exact whenever deg(M) <= sCap and n <= zTop;
// every term, stored or not, has total s-degree >= sMin. Pole orders are
// always exact.
class EdgeJet {
 public:
  EdgeJet() = default;
  EdgeJet(OrientedEdge chart, bool form, int numEdges, int sCap = kExactOrder,
          int zTop = kExactOrder, int sMin = kExactOrder)
      : chart_(chart), form_(form), numEdges_(numEdges), sCap_(sCap), zTop_(zTop), sMin_(sMin) {}

  static EdgeJet zero(OrientedEdge chart, bool form, int numEdges) {
    return EdgeJet(chart, form, numEdges);
  }

  OrientedEdge chart() const { return chart_; }
  bool is_form() const { return form_; }
  int num_edges() const { return numEdges_; }
  int s_cap() const { return sCap_; }
  int z_top() const { return zTop_; }
  int s_min() const { return sMin_; }

  bool visible_zero() const { return terms_.empty(); }
  bool exactly_zero() const {
    return terms_.empty() && sCap_ >= kExactOrder && zTop_ >= kExactOrder;
  }

  void add(const SMono& m, int zPow, const SymPoly& c);
  EdgeJet& operator+=(const EdgeJet& o);  // same chart required
  EdgeJet& scale(const SymPoly& c);
  void restrict_s_cap(int cap);

  SymPoly coefficient(const SMono& m, int zPow) const;
  int min_z_order() const;  // kExactOrder when empty

  // The z^0 row as a scalar series (the node value of the jet).
  SSeries constant_term() const;

  const std::map<std::pair<SMono, int>, SymPoly>& terms() const { return terms_; }

  std::string text(const StableTree* tree = nullptr) const;

 private:
  OrientedEdge chart_{};
  bool form_ = true;
  int numEdges_ = 0;
  int sCap_ = kExactOrder;
  int zTop_ = kExactOrder;
  int sMin_ = kExactOrder;
  std::map<std::pair<SMono, int>, SymPoly> terms_;
};

// Chart transition across the node of |f|: a differential jet in z_f maps
// to one in z_{-f} under z_f = s_|f| / z_{-f}, so z^n dz becomes
// -s^{n+1} z^{-n-2} dz. Requires a form jet.
EdgeJet pullback_transition(const EdgeJet& jetAtF);

// Double jet of a 2-pi-i-scaled kernel: coeff(a, m) is the coefficient of
// z^a zeta^m. Coefficients are produced on demand; max_zeta_order bounds
// the available zeta depth for table-backed kernels.
class KernelJet {
 public:
  virtual ~KernelJet() = default;
  virtual SymPoly coeff(int zPow, int zetaPow) const = 0;
  virtual int max_zeta_order() const { return kExactOrder; }
};

// Contour integral against the kernel: 2-pi-i times the zeta^{-1}
// coefficient of kernel * integrand, with the 2-pi-i already absorbed in
// the kernel normalization. Only pole terms of the integrand contribute.
// Throws truncation_error when a pole reaches past the kernel's zeta depth.
EdgeJet residue_integrate(const KernelJet& kernel, OrientedEdge outChart, const EdgeJet& integrand,
                          int zTopOut);

// Identically zero kernel (the diagonal regular part on a rational vertex).
class ZeroKernel final : public KernelJet {
 public:
  SymPoly coeff(int, int) const override { return {}; }
};

// Regular Cauchy kernel on a rational component in centered charts:
// 2-pi-i K(z, zeta) = 1 / (delta + z - zeta) with delta = q_e - q_{e'} != 0.
class RationalCauchyKernel final : public KernelJet {
 public:
  explicit RationalCauchyKernel(Rat delta);
  SymPoly coeff(int zPow, int zetaPow) const override;

 private:
  Rat delta_;
};

// Kernel at a positive-genus vertex: constant-in-zeta row carried by kappa
// symbols, higher rows by jets of the regular bidifferential.
class SymbolicRegularKernel final : public KernelJet {
 public:
  SymbolicRegularKernel(int vertex, OrientedEdge e, OrientedEdge e2)
      : v_(vertex), e_(e.code()), e2_(e2.code()) {}
  SymPoly coeff(int zPow, int zetaPow) const override;

 private:
  int v_, e_, e2_;
};

// Finite-depth kernel from an explicit coefficient table (tests, examples).
class TableKernel final : public KernelJet {
 public:
  TableKernel(std::map<std::pair<int, int>, SymPoly> table, int maxZeta)
      : table_(std::move(table)), maxZeta_(maxZeta) {}
  SymPoly coeff(int zPow, int zetaPow) const override;
  int max_zeta_order() const override { return maxZeta_; }

 private:
  std::map<std::pair<int, int>, SymPoly> table_;
  int maxZeta_;
};

// Node positions q_e of the charts on rational components; keys are
// oriented-edge codes. Positive-genus vertices need no entries.
struct NodePositions {
  std::map<int, Rat> q;

  const Rat& at(OrientedEdge e) const;
  bool has(OrientedEdge e) const { return q.count(e.code()) > 0; }
};

// Distinct small integers 0, 1, 2, ... per rational component, assigned in
// edge order.
NodePositions default_node_positions(const StableTree& t);

}  // namespace torfib
