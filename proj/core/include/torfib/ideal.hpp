#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "torfib/stratum.hpp"

namespace torfib {

// Square-free monomial ideal in the smoothing variables s_e, e in E(T).
// Generators are edge subsets (supports of the critical-path monomials),
// kept as a minimal antichain. dimX counts the remaining free coordinates
// sum_v (3 g(v) - 3 + n(v)) of the ambient local ring.
struct SquareFreeIdeal {
  std::vector<int> vars;               // ambient variable set: sorted edge indices
  std::vector<std::vector<int>> gens;  // sorted supports, antichain
  std::int64_t dimX = 0;
};

// Local model of the fiber product at a stratum: one generator per
// critical path. Throws when (T, sigma) is not a valid stratum.
SquareFreeIdeal local_ring(const ColoredStratum& s);

// True when no raw generator repeats a variable. Generators produced by
// local_ring are square-free by construction; this guards external input.
bool is_radical_squarefree(const std::vector<std::vector<int>>& rawGens);

// Monomial as exponent map over the ideal's variables.
struct Monomial {
  std::map<int, int> exps;  // variable -> exponent >= 1
};

// Membership in a monomial ideal: some generator divides the monomial.
// Throws on exponents < 1 or variables outside the ambient set.
bool monomial_membership(const SquareFreeIdeal& ideal, const Monomial& m);

// Minimal primes (s_e : e in W) of the ideal: W ranges over the minimal
// vertex covers of the generator hypergraph. The zero ideal has the single
// prime W = {} (the whole space). Output sorted.
std::vector<std::vector<int>> minimal_primes(const SquareFreeIdeal& ideal);

// A minimal prime W singled out at a stratum, with the dimension
// 3g - 3 - |W| of the corresponding component.
struct MinimalPrime {
  std::vector<int> vars;
  std::int64_t componentDim = 0;
};

std::vector<MinimalPrime> minimal_primes_at(const ColoredStratum& s);

// For each minimal prime W, the stratum obtained by contracting the edges
// outside W with the induced coloring; the results are the irreducible
// components through the point. Throws when a contraction is not
// color-compatible or the result fails the stratum criterion, which would
// signal an internal inconsistency.
std::vector<std::pair<MinimalPrime, ColoredStratum>> components_through_point(
    const ColoredStratum& s);

}  // namespace torfib
