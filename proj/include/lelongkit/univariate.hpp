#pragma once

#include <complex>
#include <vector>

#include "lelongkit/poly.hpp"
#include "lelongkit/rational.hpp"

namespace lk {

// Dense univariate polynomial over the Gaussian rationals; coefficient of
// x^k at index k. Normalized: no trailing zero coefficients (zero poly is {}).
using UPoly = std::vector<CRat>;

UPoly up_trim(UPoly p);
UPoly up_from_multipoly(const MultiPoly& p, int var);
MultiPoly up_to_multipoly(const UPoly& p, int arity, int var,
                          std::vector<std::string> names = {});

inline bool up_is_zero(const UPoly& p) { return p.empty(); }
inline int up_degree(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly up_add(const UPoly& a, const UPoly& b);
UPoly up_sub(const UPoly& a, const UPoly& b);
UPoly up_mul(const UPoly& a, const UPoly& b);
UPoly up_scale(const UPoly& a, const CRat& c);
UPoly up_derivative(const UPoly& a);
CRat up_eval(const UPoly& a, const CRat& x);
std::complex<double> up_eval(const UPoly& a, std::complex<double> x);

// Euclidean division a = q*b + r with deg r < deg b.
std::pair<UPoly, UPoly> up_divmod(const UPoly& a, const UPoly& b);
// Exact division; throws AnalysisError if the remainder is nonzero.
UPoly up_div_exact(const UPoly& a, const UPoly& b);

// Monic gcd (gcd of zero polys is zero).
UPoly up_gcd(UPoly a, UPoly b);
UPoly up_monic(UPoly a);

// Multiplicity of the root x = 0 (lowest nonzero coefficient index).
int up_valuation_at_zero(const UPoly& a);

// Yun squarefree decomposition: returns factors f_1, f_2, ... with
// a = lc * prod f_i^i, each f_i squarefree and pairwise coprime (f_i may be 1).
std::vector<UPoly> up_squarefree_decomposition(const UPoly& a);
// Squarefree part: product of the f_i.
UPoly up_squarefree_part(const UPoly& a);

// Largest k with f^k | a (f nonconstant).
int up_factor_multiplicity(const UPoly& a, const UPoly& f);

std::vector<std::complex<double>> up_to_complex(const UPoly& a);

}  // namespace lk
