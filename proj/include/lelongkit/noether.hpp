#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lelongkit/groebner.hpp"
#include "lelongkit/poly.hpp"

namespace lk {

enum class NoetherFailure {
  None,
  WrongGeneratorCount,
  NotMonicInY,
  DegreeConditionViolated,
};

std::string to_string(NoetherFailure f);

// Coordinates split as x = variables 0..m-1, y_j = variable m+j-1. A valid
// presentation has, for each j, a generator g_j that is monic in y_j of
// y-degree d_j, depends only on (x, y_1, ..., y_j), and whose every other
// term g_{jk} * y_j^k satisfies deg(g_{jk}) + k <= d_j.
struct NoetherReport {
  std::vector<std::vector<Rat>> linear_map;  // identity when unchanged
  int split_m = 0;
  std::vector<MultiPoly> g_list;
  std::vector<int> d_list;
  bool verdict = false;
  NoetherFailure failure = NoetherFailure::None;
  int failing_index = -1;  // which g_j violated, when verdict is false
  std::optional<Rat> growth_A;
  bool irreducibility_assumed = true;
};

NoetherReport check_noether(const std::vector<MultiPoly>& g_list, int split_m);

// Searches for a rational linear change of coordinates bringing the ideal
// into the presentation above: eliminate the last variable with a generic
// integer row, recurse on the elimination ideal, lift, and verify. The
// identity map is tried first; random retries are seeded and bounded.
NoetherReport find_noether(const std::vector<MultiPoly>& generators,
                           unsigned seed, int budget = 40);

// Explicit constant A with ||y|| <= A(1 + ||x||) on the zero set, assembled
// from per-level coefficient bounds 2*max_k C_k^{1/(d-k)} (C_k = sum of
// absolute values of the coefficients of g_{jk}) and the chain composition
// A = A_1(1 + A_2) + A_2.
Rat growth_constant(const std::vector<MultiPoly>& g_list, int split_m);

// Covering degree: product of the d_j.
long deg_of_v(const std::vector<int>& d_list);

// Number of distinct roots of y -> P(x0, y) for a plane curve, decided
// exactly (degree of the squarefree part of the fiber polynomial).
int fiber_count(const MultiPoly& P, const CRat& x0);

// True when the fiber over x0 is regular: full y-degree and squarefree.
bool fiber_regular(const MultiPoly& P, const CRat& x0);

struct MassCheckReport {
  long deg_v = 0;
  int samples_used = 0;
  int samples_skipped = 0;  // hit the branch locus, resampled
  bool all_fibers_match = false;
  std::vector<int> counts;
  std::string mass_symbolic;  // e.g. "4*(2*pi)^1"
};

// Samples random rational base points, counts fiber points exactly, and
// checks the count is constantly deg(V); the report carries the implied
// Monge-Ampere mass deg(V)*(2*pi)^1 symbolically.
MassCheckReport mass_check(const MultiPoly& P, int samples, unsigned seed);

}  // namespace lk
