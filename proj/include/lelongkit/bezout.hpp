#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "lelongkit/poly.hpp"
#include "lelongkit/univariate.hpp"

namespace lk {

// Resultant eliminating one variable: determinant of the exact Sylvester
// matrix (p's coefficient rows first), fraction-free Bareiss elimination over
// polynomial entries. Res of (y - a, y - b) in y is a - b.
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, int var);

struct InfinityPoint {
  std::string descriptor;  // projective point, e.g. "[0:1:0]" ([t:x:y])
  UPoly factor;            // factor of gcd of the leading forms (local coord)
  bool chart_x = true;     // dehomogenized at x = 1; false: at y = 1
  std::complex<double> approx;
  CRat exact;
  bool has_exact = false;
  int multiplicity = 0;
};

struct ProjectiveReport {
  long total = 0;  // deg(p1) * deg(p2)
  std::vector<InfinityPoint> infinity_points;
  long infinity_multiplicity_total = 0;
  bool common_component = false;  // resultant vanished identically
  long affine_estimate = 0;       // total - infinity multiplicities
};

// Projective intersection count with the points at infinity: common zeros of
// the two leading forms on the line at infinity, each with the multiplicity
// read off by eliminating the homogenizing variable in a chart containing
// the point and taking the root order of the local parameter.
ProjectiveReport projective_bezout(const MultiPoly& p1, const MultiPoly& p2);

struct OracleReport {
  int distinct_count = 0;
  long resultant_degree = 0;  // x-degree of Res_y (multiplicity-weighted)
  bool resultant_squarefree = false;
  bool finite = true;  // false: resultant identically zero
};

// Exact-squarefree + numeric-roots solution counter: distinct affine common
// zeros of the pair.
OracleReport count_solutions(const MultiPoly& p1, const MultiPoly& p2);

struct RouteInfo {
  std::string description;
  Rat bound;
  bool exact = true;
};

struct BezoutReport {
  std::vector<RouteInfo> routes;  // the two chain orderings
  Rat affine_bound;
  bool bound_exact = true;
  ProjectiveReport projective;
  OracleReport oracle;
  bool consistent = false;
  std::vector<std::string> caveats;
};

// Chain bound deg(p_first) * deg_L(p_second on V(p_first)) in both orders,
// plus the projective cross-check and the counting oracle.
BezoutReport affine_bezout(const MultiPoly& p1, const MultiPoly& p2,
                           unsigned seed);

// deg_L of q on the curve; brings the curve into Noether form first when
// needed (seeded search) and moves q by the same coordinate change.
Rat lelong_on_curve(const MultiPoly& curve, const MultiPoly& q, unsigned seed,
                    bool* exact = nullptr);

struct ChainLevel {
  enum class Rule { AmbientDegree, LelongOnCurve, UserSupplied };
  MultiPoly poly;
  Rule rule = Rule::AmbientDegree;
  std::optional<Rat> user_degree;
};

// Product of per-level degrees; empty chain is 1. LelongOnCurve levels use
// the previous level's curve (plane polynomials only); higher-dimensional
// levels must be UserSupplied.
Rat chain_product(const std::vector<ChainLevel>& levels, unsigned seed = 0);

}  // namespace lk
