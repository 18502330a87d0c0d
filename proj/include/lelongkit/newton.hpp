#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "lelongkit/poly.hpp"
#include "lelongkit/univariate.hpp"

namespace lk {

// Lattice point of the transformed support: a = t-exponent, b = s-exponent.
struct LatticePoint {
  int a = 0;
  int b = 0;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

struct LowerSegment {
  LatticePoint from;  // smaller a
  LatticePoint to;    // larger a
  Rat slope;          // (to.b - from.b) / (to.a - from.a)
  int width = 0;      // to.a - from.a
  Rat gamma;          // branch growth exponent of y vs x: 1 + slope
};

struct NewtonPolygon {
  std::vector<LatticePoint> support;        // sorted by (a, b)
  std::vector<LowerSegment> lower_segments;  // slopes strictly increasing
};

// Transform of a plane curve P(x, y): each term a_jk x^j y^k becomes
// a_jk s^(deg P - j - k) t^k, i.e. P_tilde(s, t) = s^deg(P) P(1/s, t/s).
// Variables of the result: index 0 = s, index 1 = t.
std::pair<MultiPoly, NewtonPolygon> polygon_at_infinity(const MultiPoly& P);

// Lower convex hull of a set of lattice points, left-to-right (exact integer
// monotone chain; collinear interior points are not vertices).
std::vector<LatticePoint> lower_hull(std::vector<LatticePoint> pts);

// (gamma, width) per lower segment, left to right.
std::vector<std::pair<Rat, int>> leading_exponents(const MultiPoly& P);

// Terms of P_tilde lying on the segment, as a polynomial in the leading
// coefficient c (substitute t = c * s^(-slope), divide out the s power):
// e(c) = sum over segment points of coeff(a, b) * c^a.
UPoly edge_polynomial(const MultiPoly& P_tilde, const LowerSegment& seg);

struct BranchRoot {
  UPoly factor;          // squarefree factor of the edge polynomial
  int multiplicity = 1;  // its multiplicity in the edge polynomial
  std::complex<double> approx;  // numeric location of one root of the factor
  CRat exact;            // set when the factor is linear
  bool has_exact = false;
};

struct BranchEntry {
  Rat gamma;
  int width = 0;
  int segment_index = 0;
  UPoly edge_poly;               // with the common c-power divided out
  std::vector<BranchRoot> roots;  // all distinct nonzero leading coefficients
};

struct BranchSet {
  std::vector<BranchEntry> entries;
  int total = 0;  // sum of widths
  bool matches_y_degree = false;
};

BranchSet branch_set(const MultiPoly& P);

struct SeriesTerm {
  Rat exponent;  // of x; strictly decreasing down the series
  std::complex<double> coeff;
};

struct PuiseuxSeries {
  std::vector<SeriesTerm> terms;
  bool exact = false;       // the series terminated: the prefix is the branch
  bool degenerate = false;  // leading root stayed multiple after one
                            // polygon-refinement level; not extended further
  double residual = 0.0;    // |P(x0, prefix(x0))| / scale at x0 = 10^3
};

// Numeric continuation y = x^gamma (c0 + ...) of one branch at infinity,
// Newton-style term by term, up to depth terms.
PuiseuxSeries extend_series(const MultiPoly& P, const Rat& gamma,
                            std::complex<double> c0, int depth);

// Renderings of the polygon (t-exponent horizontal, s-exponent vertical).
std::string polygon_ascii(const NewtonPolygon& np);
std::string polygon_svg(const NewtonPolygon& np);

}  // namespace lk
