#include "lelongkit/univariate.hpp"

#include <algorithm>

namespace lk {

UPoly up_trim(UPoly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

UPoly up_from_multipoly(const MultiPoly& p, int var) {
  for (int v = 0; v < p.arity(); ++v)
    if (v != var && p.depends_on(v))
      throw AnalysisError("polynomial is not univariate in the chosen variable");
  int d = p.degree_in(var);
  if (d == kDegZero) return {};
  UPoly u(d + 1, crat_zero());
  for (const auto& [e, c] : p.terms()) u[e[var]] = c;
  return up_trim(std::move(u));
}

MultiPoly up_to_multipoly(const UPoly& p, int arity, int var,
                          std::vector<std::string> names) {
  MultiPoly r = MultiPoly::zero(arity, std::move(names));
  for (size_t k = 0; k < p.size(); ++k) {
    if (p[k].is_zero()) continue;
    Expo e(arity, 0);
    e[var] = static_cast<int>(k);
    r.set_coeff(e, p[k]);
  }
  return r;
}

UPoly up_add(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), crat_zero());
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return up_trim(std::move(r));
}

UPoly up_sub(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), crat_zero());
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return up_trim(std::move(r));
}

UPoly up_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, crat_zero());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return up_trim(std::move(r));
}

UPoly up_scale(const UPoly& a, const CRat& c) {
  if (c.is_zero()) return {};
  UPoly r = a;
  for (auto& x : r) x *= c;
  return r;
}

UPoly up_derivative(const UPoly& a) {
  if (a.size() <= 1) return {};
  UPoly r(a.size() - 1, crat_zero());
  for (size_t k = 1; k < a.size(); ++k)
    r[k - 1] = a[k] * CRat(make_rat(static_cast<long>(k)));
  return up_trim(std::move(r));
}

CRat up_eval(const UPoly& a, const CRat& x) {
  CRat r = crat_zero();
  for (auto it = a.rbegin(); it != a.rend(); ++it) r = r * x + *it;
  return r;
}

std::complex<double> up_eval(const UPoly& a, std::complex<double> x) {
  std::complex<double> r = 0.0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) r = r * x + it->to_complex();
  return r;
}

std::pair<UPoly, UPoly> up_divmod(const UPoly& a, const UPoly& b) {
  if (b.empty()) throw AnalysisError("univariate division by zero");
  UPoly rem = a;
  if (a.size() < b.size()) return {{}, rem};
  UPoly quot(a.size() - b.size() + 1, crat_zero());
  CRat lead_inv = b.back().inv();
  for (int k = static_cast<int>(rem.size()) - 1;
       k >= static_cast<int>(b.size()) - 1; --k) {
    if (rem[k].is_zero()) continue;
    CRat q = rem[k] * lead_inv;
    int shift = k - (static_cast<int>(b.size()) - 1);
    quot[shift] = q;
    for (size_t j = 0; j < b.size(); ++j)
      rem[shift + j] -= q * b[j];
  }
  return {up_trim(std::move(quot)), up_trim(std::move(rem))};
}

UPoly up_div_exact(const UPoly& a, const UPoly& b) {
  auto [q, r] = up_divmod(a, b);
  if (!r.empty()) throw AnalysisError("inexact univariate division");
  return q;
}

UPoly up_monic(UPoly a) {
  if (a.empty()) return a;
  CRat inv = a.back().inv();
  for (auto& c : a) c *= inv;
  return a;
}

UPoly up_gcd(UPoly a, UPoly b) {
  while (!b.empty()) {
    auto [q, r] = up_divmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return up_monic(std::move(a));
}

int up_valuation_at_zero(const UPoly& a) {
  for (size_t k = 0; k < a.size(); ++k)
    if (!a[k].is_zero()) return static_cast<int>(k);
  return -1;  // zero polynomial
}

std::vector<UPoly> up_squarefree_decomposition(const UPoly& a) {
  // Yun's algorithm (characteristic zero).
  std::vector<UPoly> out;
  if (up_degree(a) < 1) return out;
  UPoly ap = up_derivative(a);
  UPoly g = up_gcd(a, ap);
  UPoly w = up_div_exact(a, g);
  UPoly y = up_div_exact(ap, g);
  UPoly z = up_sub(y, up_derivative(w));
  while (!(up_degree(w) == 0)) {
    UPoly f = up_gcd(w, z);
    out.push_back(f);
    w = up_div_exact(w, f);
    z = up_div_exact(z, f);
    z = up_sub(z, up_derivative(w));
  }
  return out;
}

UPoly up_squarefree_part(const UPoly& a) {
  if (up_degree(a) < 1) return up_monic(a);
  UPoly g = up_gcd(a, up_derivative(a));
  return up_monic(up_div_exact(a, g));
}

int up_factor_multiplicity(const UPoly& a, const UPoly& f) {
  if (up_degree(f) < 1) throw AnalysisError("multiplicity of constant factor");
  int k = 0;
  UPoly cur = a;
  while (true) {
    auto [q, r] = up_divmod(cur, f);
    if (!r.empty()) break;
    ++k;
    cur = std::move(q);
    if (cur.empty()) break;
  }
  return k;
}

std::vector<std::complex<double>> up_to_complex(const UPoly& a) {
  std::vector<std::complex<double>> r;
  r.reserve(a.size());
  for (const auto& c : a) r.push_back(c.to_complex());
  return r;
}

}  // namespace lk
