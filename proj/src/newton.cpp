#include "lelongkit/newton.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "lelongkit/error.hpp"
#include "lelongkit/roots.hpp"

namespace lk {

namespace {

long cross(const LatticePoint& o, const LatticePoint& p,
           const LatticePoint& q) {
  return static_cast<long>(p.a - o.a) * (q.b - o.b) -
         static_cast<long>(p.b - o.b) * (q.a - o.a);
}

bool on_segment(const LowerSegment& s, int a, int b) {
  if (a < s.from.a || a > s.to.a) return false;
  // Collinearity: (a - a1)(b2 - b1) == (b - b1)(a2 - a1).
  return static_cast<long>(a - s.from.a) * (s.to.b - s.from.b) ==
         static_cast<long>(b - s.from.b) * (s.to.a - s.from.a);
}

}  // namespace

std::vector<LatticePoint> lower_hull(std::vector<LatticePoint> pts) {
  std::sort(pts.begin(), pts.end(), [](const auto& p, const auto& q) {
    return p.a != q.a ? p.a < q.a : p.b < q.b;
  });
  // Keep only the lowest point in each column; a vertical left edge is not a
  // lower segment.
  std::vector<LatticePoint> cols;
  for (const auto& p : pts)
    if (cols.empty() || cols.back().a != p.a) cols.push_back(p);
  std::vector<LatticePoint> hull;
  for (const auto& p : cols) {
    while (hull.size() >= 2 &&
           cross(hull[hull.size() - 2], hull.back(), p) <= 0)
      hull.pop_back();
    hull.push_back(p);
  }
  return hull;
}

std::pair<MultiPoly, NewtonPolygon> polygon_at_infinity(const MultiPoly& P) {
  if (P.arity() != 2)
    throw InputError("Newton polygon at infinity needs a plane curve");
  if (P.is_zero()) throw InputError("zero polynomial has no Newton polygon");
  int d = P.degree();
  MultiPoly pt = MultiPoly::zero(2, {"s", "t"});
  for (const auto& [e, c] : P.terms()) {
    Expo ne = {d - e[0] - e[1], e[1]};
    pt.set_coeff(ne, c);
  }

  NewtonPolygon np;
  for (const auto& [e, c] : pt.terms()) np.support.push_back({e[1], e[0]});
  std::sort(np.support.begin(), np.support.end(),
            [](const auto& p, const auto& q) {
              return p.a != q.a ? p.a < q.a : p.b < q.b;
            });
  auto hull = lower_hull(np.support);
  for (size_t i = 0; i + 1 < hull.size(); ++i) {
    LowerSegment seg;
    seg.from = hull[i];
    seg.to = hull[i + 1];
    seg.width = seg.to.a - seg.from.a;
    seg.slope = make_rat(seg.to.b - seg.from.b, seg.width);
    seg.gamma = 1 + seg.slope;
    np.lower_segments.push_back(std::move(seg));
  }
  return {std::move(pt), std::move(np)};
}

std::vector<std::pair<Rat, int>> leading_exponents(const MultiPoly& P) {
  auto [pt, np] = polygon_at_infinity(P);
  std::vector<std::pair<Rat, int>> out;
  for (const auto& s : np.lower_segments) out.push_back({s.gamma, s.width});
  return out;
}

UPoly edge_polynomial(const MultiPoly& P_tilde, const LowerSegment& seg) {
  UPoly e(seg.to.a + 1, crat_zero());
  bool endpoints = false;
  for (const auto& [ex, c] : P_tilde.terms()) {
    int a = ex[1], b = ex[0];
    if (on_segment(seg, a, b)) {
      e[a] = c;
      if (a == seg.from.a || a == seg.to.a) endpoints = true;
    }
  }
  e = up_trim(std::move(e));
  if (!endpoints || up_degree(e) != seg.to.a)
    throw AnalysisError("segment is not a lower segment of this polygon");
  return e;
}

BranchSet branch_set(const MultiPoly& P) {
  auto [pt, np] = polygon_at_infinity(P);
  BranchSet bs;
  for (size_t i = 0; i < np.lower_segments.size(); ++i) {
    const auto& seg = np.lower_segments[i];
    BranchEntry entry;
    entry.gamma = seg.gamma;
    entry.width = seg.width;
    entry.segment_index = static_cast<int>(i);
    entry.edge_poly = edge_polynomial(pt, seg);

    // Strip the common power of c; remaining roots are the nonzero leading
    // coefficients, multiplicities found exactly.
    UPoly reduced(entry.edge_poly.begin() + seg.from.a, entry.edge_poly.end());
    auto factors = up_squarefree_decomposition(reduced);
    for (size_t m = 0; m < factors.size(); ++m) {
      const UPoly& f = factors[m];
      if (up_degree(f) < 1) continue;
      std::vector<BranchRoot> roots;
      if (up_degree(f) == 1) {
        BranchRoot r;
        r.factor = f;
        r.multiplicity = static_cast<int>(m + 1);
        r.exact = -(f[0] / f[1]);
        r.has_exact = true;
        r.approx = r.exact.to_complex();
        roots.push_back(std::move(r));
      } else {
        for (const auto& z : find_roots(f)) {
          BranchRoot r;
          r.factor = f;
          r.multiplicity = static_cast<int>(m + 1);
          r.approx = z;
          roots.push_back(std::move(r));
        }
      }
      std::sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) {
        if (std::abs(x.approx.real() - y.approx.real()) > 1e-9)
          return x.approx.real() < y.approx.real();
        return x.approx.imag() < y.approx.imag();
      });
      for (auto& r : roots) entry.roots.push_back(std::move(r));
    }
    bs.total += entry.width;
    bs.entries.push_back(std::move(entry));
  }
  bs.matches_y_degree = (bs.total == P.degree_in(1));
  return bs;
}

namespace {

// Sparse series polynomial: (s-exponent, power of the current unknown) ->
// complex coefficient. s-exponents are exact rationals; coefficients numeric.
using SKey = std::pair<Rat, int>;
using SMap = std::map<SKey, std::complex<double>>;

void smap_add(SMap& m, const SKey& k, std::complex<double> v) {
  auto it = m.find(k);
  if (it == m.end()) {
    m[k] = v;
  } else {
    it->second += v;
    if (std::abs(it->second) == 0.0) m.erase(it);
  }
}

void smap_prune(SMap& m) {
  double mx = 0;
  for (const auto& [k, v] : m) mx = std::max(mx, std::abs(v));
  for (auto it = m.begin(); it != m.end();) {
    if (std::abs(it->second) < 1e-12 * mx)
      it = m.erase(it);
    else
      ++it;
  }
}

// Substitute unknown = s^delta * (c + next_unknown).
SMap smap_substitute(const SMap& m, const Rat& delta, std::complex<double> c) {
  SMap out;
  for (const auto& [k, v] : m) {
    int a = k.second;
    // Binomial expansion of (c + u)^a.
    std::complex<double> binom_c = 1.0;  // binom(a, j) * c^(a-j), built up
    std::vector<std::complex<double>> row(a + 1);
    row[a] = 1.0;
    for (int j = a - 1; j >= 0; --j)
      row[j] = row[j + 1] * c * (static_cast<double>(j + 1) /
                                 static_cast<double>(a - j));
    (void)binom_c;
    Rat b = k.first + delta * a;
    for (int j = 0; j <= a; ++j) {
      if (std::abs(row[j]) == 0.0) continue;
      smap_add(out, {b, j}, v * row[j]);
    }
  }
  smap_prune(out);
  return out;
}

struct RatPoint {
  int a;
  Rat b;
};

// Lower hull over points with rational heights; returns hull vertices.
std::vector<RatPoint> rat_lower_hull(std::vector<RatPoint> pts) {
  std::sort(pts.begin(), pts.end(), [](const RatPoint& p, const RatPoint& q) {
    return p.a != q.a ? p.a < q.a : p.b < q.b;
  });
  std::vector<RatPoint> cols;
  for (auto& p : pts)
    if (cols.empty() || cols.back().a != p.a) cols.push_back(p);
  std::vector<RatPoint> hull;
  auto crossr = [](const RatPoint& o, const RatPoint& p, const RatPoint& q) {
    return Rat(p.a - o.a) * (q.b - o.b) - (p.b - o.b) * Rat(q.a - o.a);
  };
  for (auto& p : cols) {
    while (hull.size() >= 2 && crossr(hull[hull.size() - 2], hull.back(), p) <= 0)
      hull.pop_back();
    hull.push_back(p);
  }
  return hull;
}

}  // namespace

PuiseuxSeries extend_series(const MultiPoly& P, const Rat& gamma,
                            std::complex<double> c0, int depth) {
  if (depth < 1) throw InputError("series depth must be at least 1");
  auto [pt, np] = polygon_at_infinity(P);

  SMap m;
  for (const auto& [e, c] : pt.terms())
    smap_add(m, {Rat(e[0]), e[1]}, c.to_complex());

  PuiseuxSeries out;
  Rat gamma_prime = Rat(1) - gamma;  // t ~ c0 s^gamma', with t = y/x, s = 1/x
  Rat rho = gamma_prime;             // accumulated s-exponent
  out.terms.push_back({gamma, c0});
  m = smap_substitute(m, gamma_prime, c0);

  bool refined = false;
  while (static_cast<int>(out.terms.size()) < depth) {
    // Newton step: the next correction u satisfies, to leading order,
    // coef(sigma1) * u + coef(sigma0) = 0 with u ~ c1 * s^(sigma0 - sigma1).
    const Rat* sigma0 = nullptr;
    const Rat* sigma1 = nullptr;
    std::complex<double> co0, co1;
    for (const auto& [k, v] : m) {
      if (k.second == 0 && (!sigma0 || k.first < *sigma0)) {
        sigma0 = &k.first;
        co0 = v;
      }
      if (k.second == 1 && (!sigma1 || k.first < *sigma1)) {
        sigma1 = &k.first;
        co1 = v;
      }
    }
    if (!sigma0) {
      out.exact = true;
      break;
    }
    Rat delta;
    std::complex<double> c1;
    bool newton_ok = sigma1 && std::abs(co1) > 1e-12 &&
                     (delta = *sigma0 - *sigma1) > 0;
    if (newton_ok) {
      c1 = -co0 / co1;
    } else {
      // Multiple leading root: one level of polygon refinement, then back to
      // Newton steps. Deeper degeneracy is reported, not resolved.
      if (refined) {
        out.degenerate = true;
        break;
      }
      refined = true;
      std::vector<RatPoint> pts;
      for (const auto& [k, v] : m) pts.push_back({k.second, k.first});
      auto hull = rat_lower_hull(std::move(pts));
      bool found = false;
      for (size_t i = 0; i + 1 < hull.size() && !found; ++i) {
        Rat d2 = -(hull[i + 1].b - hull[i].b) / Rat(hull[i + 1].a - hull[i].a);
        if (d2 <= 0) continue;
        // Edge polynomial of the refinement segment, numeric roots.
        std::vector<std::complex<double>> ec(hull[i + 1].a + 1, 0.0);
        for (const auto& [k, v] : m) {
          if (k.second < hull[i].a || k.second > hull[i + 1].a) continue;
          if (k.first == hull[i].b - d2 * Rat(k.second - hull[i].a))
            ec[k.second] = v;
        }
        while (!ec.empty() && std::abs(ec.back()) == 0.0) ec.pop_back();
        int val = 0;
        while (val < static_cast<int>(ec.size()) && std::abs(ec[val]) == 0.0)
          ++val;
        std::vector<std::complex<double>> shifted(ec.begin() + val, ec.end());
        auto rts = find_roots(shifted);
        if (rts.empty()) continue;
        std::sort(rts.begin(), rts.end(), [](auto x, auto y) {
          if (std::abs(x.real() - y.real()) > 1e-9) return x.real() < y.real();
          return x.imag() < y.imag();
        });
        delta = d2;
        c1 = rts.front();
        found = true;
      }
      if (!found) {
        out.degenerate = true;
        break;
      }
    }
    rho += delta;
    out.terms.push_back({Rat(1) - rho, c1});
    m = smap_substitute(m, delta, c1);
  }

  // Residual of the numeric prefix on the original curve at x0 = 10^3.
  double x0 = 1e3;
  std::complex<double> y0 = 0.0;
  for (const auto& t : out.terms)
    y0 += t.coeff * std::pow(x0, t.exponent.get_d());
  double scale = 0.0;
  std::complex<double> value = 0.0;
  for (const auto& [e, c] : P.terms()) {
    std::complex<double> term =
        c.to_complex() * std::pow(x0, e[0]) * std::pow(y0, e[1]);
    value += term;
    scale += std::abs(term);
  }
  out.residual = scale > 0 ? std::abs(value) / scale : 0.0;
  return out;
}

std::string polygon_ascii(const NewtonPolygon& np) {
  int amax = 0, bmax = 0;
  for (const auto& p : np.support) {
    amax = std::max(amax, p.a);
    bmax = std::max(bmax, p.b);
  }
  auto hull_vertex = [&](int a, int b) {
    for (const auto& s : np.lower_segments)
      if ((s.from.a == a && s.from.b == b) || (s.to.a == a && s.to.b == b))
        return true;
    return false;
  };
  std::ostringstream os;
  for (int b = bmax; b >= 0; --b) {
    os << (b % 5 == 0 ? std::to_string(b) : " ");
    os << " |";
    for (int a = 0; a <= amax; ++a) {
      bool sup = false;
      for (const auto& p : np.support)
        if (p.a == a && p.b == b) sup = true;
      os << ' ' << (hull_vertex(a, b) ? '@' : (sup ? '*' : '.'));
    }
    os << '\n';
  }
  os << "  +";
  for (int a = 0; a <= amax; ++a) os << "--";
  os << "  (t ->, s ^; @ = lower-hull vertex)\n";
  return os.str();
}

std::string polygon_svg(const NewtonPolygon& np) {
  int amax = 1, bmax = 1;
  for (const auto& p : np.support) {
    amax = std::max(amax, p.a);
    bmax = std::max(bmax, p.b);
  }
  const int unit = 40, margin = 50;
  int w = margin * 2 + unit * amax, h = margin * 2 + unit * bmax;
  auto X = [&](int a) { return margin + unit * a; };
  auto Y = [&](int b) { return h - margin - unit * b; };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
     << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
  os << "  <rect width=\"" << w << "\" height=\"" << h
     << "\" fill=\"white\"/>\n";
  // Axes: t-exponent horizontal, s-exponent vertical.
  os << "  <line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(amax)
     << "\" y2=\"" << Y(0) << "\" stroke=\"#888\"/>\n";
  os << "  <line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(0)
     << "\" y2=\"" << Y(bmax) << "\" stroke=\"#888\"/>\n";
  os << "  <text x=\"" << X(amax) + 8 << "\" y=\"" << Y(0) + 4
     << "\" font-size=\"14\">t</text>\n";
  os << "  <text x=\"" << X(0) - 4 << "\" y=\"" << Y(bmax) - 8
     << "\" font-size=\"14\">s</text>\n";
  for (const auto& p : np.support)
    os << "  <circle cx=\"" << X(p.a) << "\" cy=\"" << Y(p.b)
       << "\" r=\"4\" fill=\"#333\"/>\n";
  for (const auto& s : np.lower_segments) {
    os << "  <line class=\"lower-segment\" x1=\"" << X(s.from.a) << "\" y1=\""
       << Y(s.from.b) << "\" x2=\"" << X(s.to.a) << "\" y2=\"" << Y(s.to.b)
       << "\" stroke=\"#c0392b\" stroke-width=\"3\"/>\n";
    int mx = (X(s.from.a) + X(s.to.a)) / 2;
    int my = (Y(s.from.b) + Y(s.to.b)) / 2;
    os << "  <text x=\"" << mx + 6 << "\" y=\"" << my - 6
       << "\" font-size=\"12\" fill=\"#c0392b\">slope "
       << rat_to_string(s.slope) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace lk
