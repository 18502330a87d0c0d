#include "lelongkit/lelong.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "lelongkit/error.hpp"
#include "lelongkit/groebner.hpp"
#include "lelongkit/noether.hpp"
#include "lelongkit/roots.hpp"
#include "lelongkit/univariate.hpp"

namespace lk {

std::string to_string(LelongMethod m) {
  switch (m) {
    case LelongMethod::ClosedFormDOverDeg: return "closed_form_d_over_deg";
    case LelongMethod::BranchAverage: return "branch_average";
    case LelongMethod::XPolynomialRule: return "x_polynomial_rule";
  }
  return "unknown";
}

std::string to_string(BranchLimit l) {
  switch (l) {
    case BranchLimit::BoundedBelow: return "bounded_below";
    case BranchLimit::TendsToZero: return "tends_to_zero";
    case BranchLimit::Unbounded: return "unbounded";
  }
  return "unknown";
}

namespace {

// Scaling by a nonzero constant does not change the curve; normalize so the
// top y coefficient is 1 whenever it is constant.
MultiPoly normalize_curve(const MultiPoly& P) {
  if (P.arity() != 2 || P.is_zero()) return P;
  int dy = P.degree_in(1);
  if (dy == kDegZero || dy < 1) return P;
  MultiPoly lead = P.coeffs_in(1)[dy];
  if (!lead.is_constant()) return P;
  CRat c = lead.constant_value();
  if (c == crat_one()) return P;
  return P.scale(c.inv());
}

MultiPoly require_noether_curve(const MultiPoly& P) {
  if (P.arity() != 2) throw InputError("curve must be a plane polynomial");
  MultiPoly n = normalize_curve(P);
  NoetherReport rep = check_noether({n}, 1);
  if (!rep.verdict)
    throw AnalysisError("curve is not in Noether form (" +
                        to_string(rep.failure) + ")");
  return n;
}

// Largest k with a nonzero pure x^k term; kDegZero when none exists.
int pure_x_degree(const MultiPoly& P) {
  int d = kDegZero;
  for (const auto& [e, c] : P.terms())
    if (e[1] == 0) d = std::max(d, e[0]);
  return d;
}

// y-precedence graded order: leading term of a Noether curve is y^deg.
MonomialOrder curve_order() { return MonomialOrder::paper({1, 0}); }

MultiPoly reduce_mod_curve(const MultiPoly& q, const MultiPoly& P) {
  GroebnerBasis gb{{P}, curve_order(), true};
  return normal_form(q, gb);
}

void add_caveat(std::vector<std::string>* caveats, const std::string& c) {
  if (!caveats) return;
  if (std::find(caveats->begin(), caveats->end(), c) == caveats->end())
    caveats->push_back(c);
}

// Growth exponent of q along the numeric series of one branch: substitute
// y(x) into q and take the largest exponent with a surviving coefficient.
struct SeriesExponent {
  bool resolved = false;
  Rat exponent;
  double coeff_abs = 0.0;
  Rat valid_floor;  // expansion is unreliable at or below this exponent
  double residual = 0.0;
  bool degenerate = false;
};

SeriesExponent series_exponent(const MultiPoly& q, const MultiPoly& P,
                               const Rat& gamma, std::complex<double> c0,
                               int depth) {
  SeriesExponent out;
  PuiseuxSeries ser = extend_series(P, gamma, c0, depth);
  out.residual = ser.residual;
  out.degenerate = ser.degenerate;

  // q(x, y(x)) as a sparse exponent -> coefficient map.
  std::map<Rat, std::complex<double>> expansion;
  Rat eta_last = ser.terms.back().exponent;
  bool floor_set = false;
  for (const auto& [e, c] : q.terms()) {
    // Truncation validity: the first dropped series term would contribute at
    // exponent a + (b-1)*gamma + eta_last.
    if (e[1] >= 1 && !ser.exact) {
      Rat fl = Rat(e[0]) + Rat(e[1] - 1) * gamma + eta_last;
      if (!floor_set || fl > out.valid_floor) {
        out.valid_floor = fl;
        floor_set = true;
      }
    }
    // y(x)^b, expanded exactly over the prefix.
    std::map<Rat, std::complex<double>> pw;
    pw[Rat(0)] = 1.0;
    for (int k = 0; k < e[1]; ++k) {
      std::map<Rat, std::complex<double>> next;
      for (const auto& [ea, ca] : pw)
        for (const auto& t : ser.terms) next[ea + t.exponent] += ca * t.coeff;
      pw = std::move(next);
    }
    for (const auto& [ea, ca] : pw)
      expansion[ea + Rat(e[0])] += ca * c.to_complex();
  }
  if (!floor_set) out.valid_floor = eta_last - 1000000;  // pure-x q: all valid

  double mx = 0;
  for (const auto& [ea, ca] : expansion) mx = std::max(mx, std::abs(ca));
  for (auto it = expansion.rbegin(); it != expansion.rend(); ++it) {
    if (std::abs(it->second) <= 1e-7 * mx) continue;
    if (!ser.exact && !(it->first > out.valid_floor)) break;  // unreliable
    out.resolved = true;
    out.exponent = it->first;
    out.coeff_abs = std::abs(it->second);
    return out;
  }
  return out;
}

}  // namespace

std::vector<BranchExponent> branch_exponents(const MultiPoly& q,
                                             const MultiPoly& P,
                                             std::vector<std::string>* caveats) {
  BranchSet bs = branch_set(P);
  std::vector<BranchExponent> out;
  for (const auto& entry : bs.entries) {
    const Rat& gamma = entry.gamma;
    if (gamma < 0) add_caveat(caveats, "negative_branch_present");

    // Candidate growth exponent and its leading coefficient in c.
    Rat cand;
    bool have = false;
    for (const auto& [e, c] : q.terms()) {
      Rat ex = Rat(e[0]) + Rat(e[1]) * gamma;
      if (!have || ex > cand) {
        cand = ex;
        have = true;
      }
    }
    if (!have) throw InputError("q is the zero polynomial");
    int max_b = 0;
    for (const auto& [e, c] : q.terms())
      if (Rat(e[0]) + Rat(e[1]) * gamma == cand) max_b = std::max(max_b, e[1]);
    UPoly phi(max_b + 1, crat_zero());
    for (const auto& [e, c] : q.terms())
      if (Rat(e[0]) + Rat(e[1]) * gamma == cand) phi[e[1]] = c;
    phi = up_trim(std::move(phi));

    std::vector<UPoly> seen_factors;
    for (const auto& root : entry.roots) {
      // Each squarefree factor is handled once, covering all of its roots.
      bool seen = false;
      for (const auto& f : seen_factors)
        if (f == root.factor) seen = true;
      if (seen) continue;
      seen_factors.push_back(root.factor);
      UPoly g = up_gcd(phi, root.factor);
      int cancelled_roots = up_degree(g);
      if (cancelled_roots < up_degree(root.factor)) {
        // Roots of factor/g keep the candidate exponent.
        BranchExponent be;
        be.gamma = gamma;
        be.weight = (up_degree(root.factor) - cancelled_roots) *
                    root.multiplicity;
        be.exponent = cand;
        be.exact = true;
        // Leading coefficient along a representative non-cancelling root.
        std::complex<double> rep = root.approx;
        if (cancelled_roots > 0) {
          for (const auto& z : find_roots(up_div_exact(root.factor, g))) {
            rep = z;
            break;
          }
        }
        be.coeff_abs = std::abs(up_eval(phi, rep));
        out.push_back(std::move(be));
      }
      if (cancelled_roots > 0) {
        add_caveat(caveats, "cancellation_numeric");
        for (const auto& z : find_roots(g)) {
          BranchExponent be;
          be.gamma = gamma;
          be.weight = root.multiplicity;
          SeriesExponent se = series_exponent(q, P, gamma, z, 12);
          if (se.resolved) {
            be.exponent = se.exponent;
            be.exact = false;
            be.coeff_abs = se.coeff_abs;
            be.error_bar = std::max(se.residual, 1e-12);
          } else {
            be.bracketed = true;
            be.lower = se.valid_floor;
            be.upper = cand;
            be.exponent = se.valid_floor;  // conservative
            be.exact = false;
            add_caveat(caveats, se.degenerate ? "degenerate_branch"
                                              : "cancellation_unresolved");
          }
          out.push_back(std::move(be));
        }
      }
    }
  }
  return out;
}

LelongReport lelong_degree_y(const MultiPoly& P_in) {
  MultiPoly P = require_noether_curve(P_in);
  LelongReport rep;
  int deg = P.degree();
  int d = pure_x_degree(P);
  if (d == kDegZero) {
    rep.caveats.push_back("reducibility_suspected");
  } else {
    rep.has_closed_form = true;
    rep.closed_form = make_rat(d, deg);
  }

  Rat weighted(0);
  int total = 0;
  for (const auto& [gamma, width] : leading_exponents(P)) {
    BranchExponent be;
    be.gamma = gamma;
    be.weight = width;
    be.exponent = gamma;  // q = y grows like x^gamma on the branch
    be.exact = true;
    if (gamma < 0) add_caveat(&rep.caveats, "negative_branch_present");
    weighted += gamma * width;
    total += width;
    rep.per_branch.push_back(std::move(be));
  }
  rep.branch_average = weighted / deg;
  (void)total;

  if (rep.has_closed_form && rep.closed_form != rep.branch_average)
    rep.caveats.push_back("route_disagreement");
  rep.value = rep.has_closed_form ? rep.closed_form : rep.branch_average;
  rep.method = rep.has_closed_form ? LelongMethod::ClosedFormDOverDeg
                                   : LelongMethod::BranchAverage;
  rep.mass_symbolic =
      rat_to_string(rep.value * deg) + "*(2*pi)^1";
  return rep;
}

LelongReport lelong_degree(const MultiPoly& q, const MultiPoly& P_in) {
  MultiPoly P = require_noether_curve(P_in);
  MultiPoly r = reduce_mod_curve(q, P);
  if (r.is_zero())
    throw AnalysisError("q vanishes identically on the curve");
  LelongReport rep;
  int deg = P.degree();

  if (!r.depends_on(1)) {
    // q is (congruent to) a polynomial in x alone.
    rep.method = LelongMethod::XPolynomialRule;
    rep.value = Rat(r.degree());
    rep.value_exact = true;
    rep.per_branch = branch_exponents(r, P, &rep.caveats);
    rep.mass_symbolic = rat_to_string(rep.value * deg) + "*(2*pi)^1";
    return rep;
  }

  rep.method = LelongMethod::BranchAverage;
  rep.per_branch = branch_exponents(r, P, &rep.caveats);
  Rat weighted(0);
  double err = 0.0;
  bool exact = true;
  for (const auto& be : rep.per_branch) {
    weighted += be.exponent * be.weight;
    if (!be.exact) {
      exact = false;
      err += be.error_bar * be.weight;
    }
  }
  rep.branch_average = weighted / deg;
  rep.value = rep.branch_average;
  rep.value_exact = exact;
  rep.error_bar = err / deg;
  rep.mass_symbolic = rat_to_string(rep.value * deg) + "*(2*pi)^1";
  return rep;
}

BalayageReport classify_balayage(const MultiPoly& q, const MultiPoly& P_in) {
  MultiPoly P = require_noether_curve(P_in);
  MultiPoly r = reduce_mod_curve(q, P);
  if (r.is_zero())
    throw AnalysisError("q vanishes identically on the curve");
  BalayageReport rep;
  rep.safe = true;
  std::vector<std::string> caveats;
  for (const auto& be : branch_exponents(r, P, &caveats)) {
    BalayageReport::Entry e;
    e.gamma = be.gamma;
    e.weight = be.weight;
    e.exponent = be.exponent;
    if (be.exponent > 0) {
      e.limit = BranchLimit::Unbounded;
    } else if (be.exponent == 0 && be.coeff_abs > 1e-12) {
      e.limit = BranchLimit::BoundedBelow;
    } else {
      e.limit = BranchLimit::TendsToZero;
      rep.safe = false;
    }
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

MovingReport moving_invariance(const MultiPoly& q, const MultiPoly& P,
                               const std::vector<Rat>& t_values) {
  MovingReport rep;
  rep.base = lelong_degree(q, P).value;
  rep.all_match = true;
  for (const Rat& t : t_values) {
    MultiPoly moved = P - MultiPoly::constant(P.arity(), CRat(t), P.names());
    MovingReport::Entry e;
    e.t = t;
    e.value = lelong_degree(q, moved).value;
    e.matches = (e.value == rep.base);
    if (!e.matches) rep.all_match = false;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

}  // namespace lk
