#include "lelongkit/bezout.hpp"

#include <algorithm>
#include <cmath>

#include "lelongkit/error.hpp"
#include "lelongkit/groebner.hpp"
#include "lelongkit/lelong.hpp"
#include "lelongkit/noether.hpp"
#include "lelongkit/roots.hpp"

namespace lk {

namespace {

// Exact division of multivariate polynomials (throws when inexact).
MultiPoly mp_div_exact(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return a;
  auto res = divide(a, {b}, MonomialOrder::paper(a.arity()));
  if (!res.remainder.is_zero())
    throw AnalysisError("inexact polynomial division in Bareiss elimination");
  return res.quotients[0];
}

MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> m, int arity,
                              const std::vector<std::string>& names) {
  int n = static_cast<int>(m.size());
  if (n == 0) return MultiPoly::constant(arity, crat_one(), names);
  MultiPoly prev = MultiPoly::constant(arity, crat_one(), names);
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r)
        if (!m[r][k].is_zero()) {
          pivot = r;
          break;
        }
      if (pivot < 0) return MultiPoly::zero(arity, names);
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        m[i][j] = mp_div_exact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      m[i][k] = MultiPoly::zero(arity, names);
    }
    prev = m[k][k];
  }
  MultiPoly det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

MultiPoly mp_pow(const MultiPoly& p, int e) {
  MultiPoly r = MultiPoly::constant(p.arity(), crat_one(), p.names());
  for (int k = 0; k < e; ++k) r = r * p;
  return r;
}

}  // namespace

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, int var) {
  if (p.is_zero() || q.is_zero())
    throw InputError("resultant of the zero polynomial");
  if (p.arity() != q.arity()) throw InputError("arity mismatch in resultant");
  int m = p.degree_in(var), n = q.degree_in(var);
  if (m == kDegZero) m = 0;
  if (n == kDegZero) n = 0;
  if (m == 0 && n == 0)
    throw AnalysisError("neither polynomial involves the eliminated variable");
  if (n == 0) return mp_pow(q, m);
  if (m == 0) return mp_pow(p, n);

  auto pc = p.coeffs_in(var);  // index k = coefficient of var^k
  auto qc = q.coeffs_in(var);
  int size = m + n;
  std::vector<std::vector<MultiPoly>> mat(
      size, std::vector<MultiPoly>(size, MultiPoly::zero(p.arity(), p.names())));
  // p's coefficients fill the first n rows (descending powers).
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) mat[r][r + k] = pc[m - k];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) mat[n + r][r + k] = qc[n - k];
  return bareiss_determinant(std::move(mat), p.arity(), p.names());
}

OracleReport count_solutions(const MultiPoly& p1, const MultiPoly& p2) {
  if (p1.arity() != 2 || p2.arity() != 2)
    throw InputError("solution counting needs two plane polynomials");
  OracleReport rep;
  MultiPoly r = resultant(p1, p2, 1);  // eliminate y
  if (r.is_zero()) {
    rep.finite = false;
    return rep;
  }
  if (!r.depends_on(0)) {
    // Nonzero constant resultant: no affine solutions, unless neither input
    // involved y at all (degenerate; caller guards).
    rep.distinct_count = 0;
    rep.resultant_degree = 0;
    rep.resultant_squarefree = true;
    return rep;
  }
  UPoly rx = up_from_multipoly(r, 0);
  rep.resultant_degree = up_degree(rx);
  UPoly sf = up_squarefree_part(rx);
  rep.resultant_squarefree = (up_degree(sf) == up_degree(rx));

  auto xs = find_roots(sf);
  // Fiber counting at each base root: distinct common y-roots of both fibers.
  auto fiber = [](const MultiPoly& p, std::complex<double> x0) {
    auto cs = p.coeffs_in(1);
    std::vector<std::complex<double>> out;
    for (const auto& c : cs) out.push_back(c.eval({x0, 0.0}));
    while (!out.empty() && std::abs(out.back()) == 0.0) out.pop_back();
    return out;
  };
  int total = 0;
  for (const auto& x0 : xs) {
    auto f1 = fiber(p1, x0);
    auto f2 = fiber(p2, x0);
    // Use the fiber that genuinely depends on y for the root finding and
    // check membership against the other.
    const auto* lead = &f1;
    const auto* check = &f2;
    if (f1.size() <= 1) {
      std::swap(lead, check);
    }
    if (lead->size() <= 1) continue;  // neither depends on y here
    std::vector<std::complex<double>> ys;
    try {
      ys = find_roots(*lead);
    } catch (const BudgetError&) {
      continue;
    }
    double scale = 0;
    for (const auto& c : *check) scale = std::max(scale, std::abs(c));
    std::vector<std::complex<double>> common;
    for (const auto& y : ys) {
      std::complex<double> v = 0;
      for (auto it = check->rbegin(); it != check->rend(); ++it)
        v = v * y + *it;
      double bound = 1e-6 * std::max(1.0, scale) *
                     std::pow(std::max(1.0, std::abs(y)),
                              static_cast<double>(check->size()));
      if (check->size() <= 1) {
        // Other polynomial is constant in y at x0; a zero constant accepts.
        if (scale < 1e-9) common.push_back(y);
      } else if (std::abs(v) < bound) {
        common.push_back(y);
      }
    }
    total += count_distinct(common, 1e-6);
  }
  rep.distinct_count = total;
  return rep;
}

namespace {

// Roots at infinity in a chart: for each squarefree factor of the gcd of the
// dehomogenized leading forms, the intersection multiplicity from the order
// of the factor in the resultant that eliminates the homogenizing variable.
void infinity_points_in_chart(const MultiPoly& p1, const MultiPoly& p2,
                              bool chart_x, ProjectiveReport& rep) {
  MultiPoly h1 = p1.leading_homogeneous_part();
  MultiPoly h2 = p2.leading_homogeneous_part();
  int uvar = chart_x ? 1 : 0;  // local coordinate on the line at infinity
  int fixed = chart_x ? 0 : 1;
  UPoly f1 = up_from_multipoly(h1.partial_eval(fixed, crat_one()), uvar);
  UPoly f2 = up_from_multipoly(h2.partial_eval(fixed, crat_one()), uvar);
  if (up_is_zero(f1) || up_is_zero(f2)) return;
  UPoly g = up_gcd(f1, f2);
  if (up_degree(g) < 1) return;
  if (!chart_x) {
    // Only the point missed by the x-chart: u = x/y = 0.
    if (up_valuation_at_zero(g) < 1) return;
    g = UPoly{crat_zero(), crat_one()};  // the factor u
  }

  // Homogenize (new variable t appended: index 2) and pass to the chart.
  MultiPoly a = p1.homogenize("t").partial_eval(fixed, crat_one());
  MultiPoly b = p2.homogenize("t").partial_eval(fixed, crat_one());
  MultiPoly rt = resultant(a, b, 2);  // eliminate t
  UPoly ru = up_from_multipoly(rt.partial_eval(fixed, crat_one()), uvar);
  if (up_is_zero(ru)) {
    rep.common_component = true;
    return;
  }

  for (const auto& [fac, sq_mult] : [&] {
    std::vector<std::pair<UPoly, int>> out;
    auto dec = up_squarefree_decomposition(g);
    for (size_t i = 0; i < dec.size(); ++i)
      if (up_degree(dec[i]) >= 1) out.push_back({dec[i], static_cast<int>(i + 1)});
    return out;
  }()) {
    (void)sq_mult;
    int mult = up_factor_multiplicity(ru, fac);
    std::vector<std::pair<std::complex<double>, bool>> locs;
    CRat exact;
    if (up_degree(fac) == 1) {
      exact = -(fac[0] / fac[1]);
      locs.push_back({exact.to_complex(), true});
    } else {
      for (const auto& z : find_roots(fac)) locs.push_back({z, false});
      std::sort(locs.begin(), locs.end(), [](const auto& x, const auto& y) {
        if (std::abs(x.first.real() - y.first.real()) > 1e-9)
          return x.first.real() < y.first.real();
        return x.first.imag() < y.first.imag();
      });
    }
    for (const auto& [z, has_exact] : locs) {
      InfinityPoint pt;
      pt.factor = fac;
      pt.chart_x = chart_x;
      pt.approx = z;
      pt.has_exact = has_exact;
      if (has_exact) pt.exact = exact;
      pt.multiplicity = mult;
      // Descriptor [t:x:y].
      if (!chart_x) {
        pt.descriptor = "[0:0:1]";
      } else if (has_exact) {
        pt.descriptor = "[0:1:" + crat_to_string(exact) + "]";
      } else {
        char buf[64];
        std::snprintf(buf, sizeof buf, "[0:1:%.6g%+.6gi]", z.real(), z.imag());
        pt.descriptor = buf;
      }
      rep.infinity_points.push_back(std::move(pt));
      rep.infinity_multiplicity_total += mult;
    }
  }
}

}  // namespace

ProjectiveReport projective_bezout(const MultiPoly& p1, const MultiPoly& p2) {
  if (p1.arity() != 2 || p2.arity() != 2)
    throw InputError("projective count needs two plane polynomials");
  if (p1.is_zero() || p2.is_zero())
    throw InputError("zero polynomial in intersection");
  ProjectiveReport rep;
  rep.total = static_cast<long>(p1.degree()) * p2.degree();
  infinity_points_in_chart(p1, p2, true, rep);
  infinity_points_in_chart(p1, p2, false, rep);
  rep.affine_estimate = rep.total - rep.infinity_multiplicity_total;
  return rep;
}

Rat lelong_on_curve(const MultiPoly& curve, const MultiPoly& q, unsigned seed,
                    bool* exact) {
  NoetherReport chk = check_noether({curve}, 1);
  MultiPoly c = curve, p = q;
  if (!chk.verdict) {
    NoetherReport found = find_noether({curve}, seed);
    c = found.g_list[0];
    p = q.subst_linear(found.linear_map);
  }
  LelongReport rep = lelong_degree(p, c);
  if (exact) *exact = rep.value_exact;
  return rep.value;
}

BezoutReport affine_bezout(const MultiPoly& p1, const MultiPoly& p2,
                           unsigned seed) {
  if (p1.is_constant() || p2.is_constant())
    throw InputError("Bezout bound needs two nonconstant polynomials");
  BezoutReport rep;

  auto route = [&](const MultiPoly& first, const MultiPoly& second,
                   const std::string& label) {
    RouteInfo info;
    info.description = label;
    try {
      bool exact = true;
      Rat lel = lelong_on_curve(first, second, seed, &exact);
      info.bound = Rat(first.degree()) * lel;
      info.exact = exact;
    } catch (const Error& e) {
      info.exact = false;
      info.bound = Rat(first.degree()) * Rat(second.degree());
      rep.caveats.push_back(std::string("route fallback (") + e.what() + ")");
    }
    return info;
  };
  rep.routes.push_back(route(p1, p2, "deg(p1) * deg_L(p2 on V(p1))"));
  rep.routes.push_back(route(p2, p1, "deg(p2) * deg_L(p1 on V(p2))"));
  if (rep.routes[0].exact && rep.routes[1].exact &&
      rep.routes[0].bound != rep.routes[1].bound)
    rep.caveats.push_back("route_disagreement");
  rep.affine_bound = rep.routes[0].exact ? rep.routes[0].bound
                                         : rep.routes[1].bound;
  rep.bound_exact = rep.routes[0].exact || rep.routes[1].exact;

  rep.projective = projective_bezout(p1, p2);
  rep.oracle = count_solutions(p1, p2);
  if (!rep.oracle.finite || rep.projective.common_component) {
    rep.caveats.push_back("non_finite_intersection");
    rep.consistent = false;
    return rep;
  }
  rep.consistent = Rat(rep.oracle.distinct_count) <= rep.affine_bound;
  // When every intersection is simple the projective count minus infinity
  // multiplicities must equal the number of affine points.
  if (rep.oracle.resultant_squarefree &&
      rep.projective.affine_estimate != rep.oracle.distinct_count &&
      rep.oracle.distinct_count == rep.oracle.resultant_degree)
    rep.consistent = false;
  return rep;
}

Rat chain_product(const std::vector<ChainLevel>& levels, unsigned seed) {
  Rat product(1);
  const MultiPoly* prev = nullptr;
  for (const auto& lv : levels) {
    switch (lv.rule) {
      case ChainLevel::Rule::AmbientDegree:
        product *= Rat(lv.poly.degree());
        break;
      case ChainLevel::Rule::UserSupplied:
        if (!lv.user_degree)
          throw InputError("user_supplied level without a degree");
        product *= *lv.user_degree;
        break;
      case ChainLevel::Rule::LelongOnCurve: {
        if (!prev || prev->arity() != 2)
          throw InputError(
              "lelong_on_curve level needs a preceding plane curve; supply "
              "degrees for higher-dimensional levels");
        product *= lelong_on_curve(*prev, lv.poly, seed);
        break;
      }
    }
    prev = &lv.poly;
  }
  return product;
}

}  // namespace lk
