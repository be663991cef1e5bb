#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "torfib/specialization.hpp"
#include "torfib/stratum.hpp"

namespace torfib {

// Sorted tuple (g_1 <= ... <= g_k) of positive genera.
struct PartTuple {
  std::vector<Genus> parts;

  Genus total() const;
  auto operator<=>(const PartTuple&) const = default;
};

// Sorts and validates; throws on parts < 1 or an empty tuple.
PartTuple make_part_tuple(std::vector<Genus> parts);

// Codimension of the product locus: sum_{i<j} g_i g_j.
Genus codim(const PartTuple& t);

enum class VanishingClass {
  PossiblyNonzero,       // d <= 2g-3
  VanishesTautological,  // 2g-3 < d <= 3g-3
  VanishesDimension,     // d > 3g-3
};

const char* to_string(VanishingClass c);

VanishingClass classify(const PartTuple& t);

// All tuples with k >= 2 parts summing to g whose pullback class survives
// the tautological vanishing bound (d <= 2g-3). Sorted. Requires g >= 2.
std::vector<PartTuple> enumerate_nonvanishing(Genus g);

// The closed form the sweep must reproduce: {(1,g-1), (1,1,g-2), (2,g-2)}
// restricted to all-positive entries, plus (3,3) exactly at g = 6.
std::vector<PartTuple> nonvanishing_closed_form(Genus g);

// Rank bookkeeping for the excess-intersection ledger of one stratum.
struct RankLedger {
  Genus productNormalRank = 0;     // rank of the product-locus normal bundle: d
  std::int64_t stratumEdges = 0;   // |E(T)|
  std::int64_t stratumDim = 0;     // 3g - 3 - |E(T)|
  std::int64_t expectedDim = 0;    // 3g - 3 - d
  std::int64_t excess = 0;         // d - |E(T)|
};

// Throws when the stratum total genus disagrees with the tuple.
RankLedger rank_ledger(const ColoredStratum& s, const PartTuple& t);

// Rank of the normal bundle along a specialization: |E(T)| - |E(T')|.
std::int64_t specialization_normal_rank(const StratumSpecialization& phi);

}  // namespace torfib
