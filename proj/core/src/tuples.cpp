#include "torfib/tuples.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace torfib {

Genus PartTuple::total() const {
  Genus g = 0;
  for (Genus p : parts) g += p;
  return g;
}

PartTuple make_part_tuple(std::vector<Genus> parts) {
  if (parts.empty()) throw std::invalid_argument("part tuple must be nonempty");
  for (Genus p : parts)
    if (p < 1) throw std::invalid_argument("part genera must be >= 1");
  std::sort(parts.begin(), parts.end());
  return {std::move(parts)};
}

Genus codim(const PartTuple& t) {
  Genus d = 0;
  for (size_t i = 0; i < t.parts.size(); ++i)
    for (size_t j = i + 1; j < t.parts.size(); ++j) d += t.parts[i] * t.parts[j];
  return d;
}

const char* to_string(VanishingClass c) {
  switch (c) {
    case VanishingClass::PossiblyNonzero: return "POSSIBLY_NONZERO";
    case VanishingClass::VanishesTautological: return "VANISHES_TAUTOLOGICAL";
    case VanishingClass::VanishesDimension: return "VANISHES_DIMENSION";
  }
  return "?";
}

VanishingClass classify(const PartTuple& t) {
  Genus g = t.total();
  Genus d = codim(t);
  if (d <= 2 * g - 3) return VanishingClass::PossiblyNonzero;
  if (d <= 3 * g - 3) return VanishingClass::VanishesTautological;
  return VanishingClass::VanishesDimension;
}

std::vector<PartTuple> enumerate_nonvanishing(Genus g) {
  if (g < 2) throw std::invalid_argument("enumerate_nonvanishing: g must be >= 2");
  const Genus bound = 2 * g - 3;
  std::vector<PartTuple> out;
  std::vector<Genus> cur;

  // Descending partitions with at least two parts; prune once the partial
  // codimension exceeds the bound, since adding parts only increases it.
  std::function<void(Genus, Genus, Genus)> rec = [&](Genus remaining, Genus maxPart, Genus d) {
    if (d > bound) return;
    if (remaining == 0) {
      if (cur.size() >= 2) {
        std::vector<Genus> parts(cur.rbegin(), cur.rend());
        out.push_back({std::move(parts)});
      }
      return;
    }
    Genus assigned = 0;
    for (Genus p : cur) assigned += p;
    for (Genus p = std::min(remaining, maxPart); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p, d + p * assigned);
      cur.pop_back();
    }
  };
  rec(g, g, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PartTuple> nonvanishing_closed_form(Genus g) {
  std::set<PartTuple> acc;
  auto add = [&](std::vector<Genus> parts) {
    for (Genus p : parts)
      if (p < 1) return;
    acc.insert(make_part_tuple(std::move(parts)));
  };
  add({1, g - 1});
  add({1, 1, g - 2});
  add({2, g - 2});
  if (g == 6) add({3, 3});
  return std::vector<PartTuple>(acc.begin(), acc.end());
}

RankLedger rank_ledger(const ColoredStratum& s, const PartTuple& t) {
  Genus g = s.tree.total_genus();
  if (g != t.total())
    throw std::invalid_argument("rank_ledger: stratum genus " + std::to_string(g) +
                                " does not match tuple total " + std::to_string(t.total()));
  RankLedger r;
  r.productNormalRank = codim(t);
  r.stratumEdges = s.tree.edge_count();
  r.stratumDim = 3 * g - 3 - r.stratumEdges;
  r.expectedDim = 3 * g - 3 - r.productNormalRank;
  r.excess = r.productNormalRank - r.stratumEdges;
  return r;
}

std::int64_t specialization_normal_rank(const StratumSpecialization& phi) {
  return phi.contraction.source.edge_count() - phi.contraction.target.edge_count();
}

}  // namespace torfib
