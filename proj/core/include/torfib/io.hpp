#pragma once

#include <string>
#include <vector>

#include "torfib/ideal.hpp"
#include "torfib/plumbing.hpp"
#include "torfib/strata_sets.hpp"
#include "torfib/stratum.hpp"
#include "torfib/tuples.hpp"

namespace torfib {

// JSON layouts (canonical: sorted keys, no insignificant whitespace):
//   tree     {"edges":[["a","b"],...],"vertices":[{"genus":1,"id":"a"},...]}
//   stratum  tree + {"coloring":{"a":1,...},"parts":[1,3]}
//   ideal    {"dimX":5,"gens":[[0],[1,2]],"vars":[0,1,2]}
// Half-edge ids derive from edge positions as "edgeIndex:side". Parsers
// throw std::invalid_argument with a description on malformed input.

std::string tree_to_json(const StableTree& t);
StableTree tree_from_json(const std::string& text);

std::string stratum_to_json(const ColoredStratum& s);
ColoredStratum stratum_from_json(const std::string& text);

std::string tree_to_dot(const StableTree& t, const Coloring* coloring = nullptr,
                        const std::string& name = "T");

std::string strata_to_json(const std::vector<ColoredStratum>& strata);
std::string strata_to_dot(const std::vector<ColoredStratum>& strata);

std::string ideal_to_json(const SquareFreeIdeal& ideal);

struct LoadedIdeal {
  std::vector<int> vars;
  std::vector<std::vector<int>> gens;  // raw, possibly with repeated variables
  std::int64_t dimX = 0;
};
LoadedIdeal ideal_from_json(const std::string& text);

// Full local-ring report: generators, primes, component dimensions,
// reducedness verdict.
std::string local_ring_report_json(const ColoredStratum& s);

std::string poset_to_json(const StrataPoset& p);
std::string poset_to_dot(const StrataPoset& p);

std::string series_to_json(const SSeries& s, const StableTree& t);
std::string refinement_to_text(const RefinementReport& r, const StableTree& t);
std::string refinement_to_json(const RefinementReport& r, const StableTree& t);

std::string tuples_table_tsv(Genus gMax);
std::string tuples_table_json(Genus gMax);

}  // namespace torfib
