#pragma once

#include <vector>

#include "lelongkit/poly.hpp"

namespace lk {

struct GroebnerBasis {
  std::vector<MultiPoly> generators;
  MonomialOrder order;
  bool reduced = false;
};

struct DivisionResult {
  std::vector<MultiPoly> quotients;  // one per divisor
  MultiPoly remainder;
};

// Multivariate division: p = sum quotients[j]*divisors[j] + remainder, with no
// remainder term divisible by any divisor's leading term. Divisor selection is
// first-in-list-order, so remainders are reproducible even when the divisor
// list is not a Groebner basis.
DivisionResult divide(const MultiPoly& p, const std::vector<MultiPoly>& divisors,
                      const MonomialOrder& order);

// Buchberger's algorithm with the coprime-leading-term and chain pair
// criteria, normal selection strategy (smallest lcm first). Throws BudgetError
// when pair_budget S-polynomial reductions are exhausted.
GroebnerBasis buchberger(std::vector<MultiPoly> generators,
                         const MonomialOrder& order, long pair_budget = 100000);

// The unique reduced basis: monic, auto-reduced, sorted by leading term.
GroebnerBasis reduce_basis(GroebnerBasis basis);

MultiPoly normal_form(const MultiPoly& p, const GroebnerBasis& basis);

// deg of the normal form (kDegZero when p reduces to 0).
int deg_V(const MultiPoly& p, const GroebnerBasis& basis);

// Monomial divisibility e | f (componentwise <=).
bool expo_divides(const Expo& e, const Expo& f);
Expo expo_lcm(const Expo& a, const Expo& b);

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g,
                       const MonomialOrder& order);

}  // namespace lk
