#include "lelongkit/noether.hpp"

#include <random>

#include "lelongkit/error.hpp"
#include "lelongkit/univariate.hpp"

namespace lk {

std::string to_string(NoetherFailure f) {
  switch (f) {
    case NoetherFailure::None: return "none";
    case NoetherFailure::WrongGeneratorCount: return "wrong_generator_count";
    case NoetherFailure::NotMonicInY: return "not_monic_in_y";
    case NoetherFailure::DegreeConditionViolated:
      return "degree_condition_violated";
  }
  return "unknown";
}

NoetherReport check_noether(const std::vector<MultiPoly>& g_list, int split_m) {
  if (g_list.empty()) throw InputError("empty generator list");
  int n = g_list[0].arity();
  for (const auto& g : g_list)
    if (g.arity() != n) throw InputError("mixed arities in generator list");
  if (split_m < 1 || split_m >= n)
    throw InputError("split must satisfy 1 <= m < N");

  NoetherReport rep;
  rep.split_m = split_m;
  rep.g_list = g_list;
  rep.linear_map.assign(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i) rep.linear_map[i][i] = 1;

  if (static_cast<int>(g_list.size()) != n - split_m) {
    rep.failure = NoetherFailure::WrongGeneratorCount;
    return rep;
  }

  for (int j = 0; j < n - split_m; ++j) {
    const MultiPoly& g = g_list[j];
    int v = split_m + j;
    int d = g.degree_in(v);
    auto fail = [&](NoetherFailure f) {
      rep.failure = f;
      rep.failing_index = j;
    };
    if (d <= 0 || d == kDegZero) {
      fail(NoetherFailure::NotMonicInY);
      return rep;
    }
    for (const auto& [e, c] : g.terms()) {
      // Triangular structure: g_j lives in C[x, y_1, ..., y_j].
      for (int w = v + 1; w < n; ++w) {
        if (e[w] > 0) {
          fail(NoetherFailure::DegreeConditionViolated);
          return rep;
        }
      }
      if (e[v] == d) {
        // Monic of full y_j-degree: the y_j^d coefficient is the constant 1.
        if (total_degree(e) != d || c != crat_one()) {
          fail(NoetherFailure::NotMonicInY);
          return rep;
        }
      } else if (total_degree(e) > d) {
        // Term g_{jk} y_j^k needs deg(g_{jk}) + k <= d.
        fail(NoetherFailure::DegreeConditionViolated);
        return rep;
      }
    }
    rep.d_list.push_back(d);
  }
  rep.verdict = true;
  try {
    rep.growth_A = growth_constant(g_list, split_m);
  } catch (const Error&) {
    // growth constant is best-effort in a report
  }
  return rep;
}

namespace {

// Smallest rational of granularity 1/16 whose e-th power is >= c (c >= 0).
Rat root_upper_bound(const Rat& c, int e) {
  if (c <= 0) return Rat(0);
  mpz_class num = c.get_num(), den = c.get_den();
  mpz_class sixteen_e;
  mpz_ui_pow_ui(sixteen_e.get_mpz_t(), 16, e);
  mpz_class target = num * sixteen_e;  // need n^e * den >= target
  auto ok = [&](long n) {
    mpz_class ne;
    mpz_ui_pow_ui(ne.get_mpz_t(), static_cast<unsigned long>(n), e);
    return ne * den >= target;
  };
  long hi = 16;
  while (!ok(hi)) hi *= 2;
  long lo = 0;
  while (lo + 1 < hi) {
    long mid = lo + (hi - lo) / 2;
    if (ok(mid))
      hi = mid;
    else
      lo = mid;
  }
  return make_rat(hi, 16);
}

Rat coeff_abs_bound(const CRat& c) { return rat_abs(c.re) + rat_abs(c.im); }

std::vector<std::vector<Rat>> identity_matrix(int n) {
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

std::vector<std::vector<Rat>> mat_mul(const std::vector<std::vector<Rat>>& a,
                                      const std::vector<std::vector<Rat>>& b) {
  int n = static_cast<int>(a.size());
  std::vector<std::vector<Rat>> r(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

struct Solution {
  int m;
  std::vector<std::vector<Rat>> map;  // n x n
  std::vector<MultiPoly> gs;
};

Solution solve_noether(const std::vector<MultiPoly>& gens, std::mt19937& rng,
                       int& budget) {
  int n = gens[0].arity();
  GroebnerBasis gb = buchberger(gens, MonomialOrder::paper(n));
  for (const auto& g : gb.generators)
    if (g.is_constant())
      throw AnalysisError("ideal is the whole ring (1 lies in the ideal)");
  if (n < 2)
    throw AnalysisError(
        "variety is zero-dimensional; no split with m >= 1 exists");

  // Work with a minimal-degree element; its top homogeneous part drives the
  // genericity condition.
  const MultiPoly* f = &gb.generators[0];
  for (const auto& g : gb.generators)
    if (g.degree() < f->degree()) f = &g;
  MultiPoly fhat = f->leading_homogeneous_part();

  std::uniform_int_distribution<int> small(-9, 9);
  std::uniform_int_distribution<int> positive(1, 9);
  bool tried_identity = false;
  while (true) {
    if (--budget < 0) throw BudgetError("Noether search budget exhausted");
    std::vector<CRat> c(n, crat_zero());
    if (!tried_identity) {
      tried_identity = true;
      c[n - 1] = crat_one();
    } else {
      for (int i = 0; i + 1 < n; ++i) c[i] = CRat(make_rat(small(rng)));
      c[n - 1] = CRat(make_rat(positive(rng)));
    }
    CRat top = fhat.eval(c);
    if (top.is_zero()) continue;  // non-generic direction

    // z_i = w_i + c_i w_n (i < n), z_n = c_n w_n: identity with last column c.
    auto L = identity_matrix(n);
    for (int i = 0; i < n; ++i) L[i][n - 1] = c[i].re;
    std::vector<MultiPoly> moved;
    moved.reserve(gb.generators.size());
    for (const auto& g : gb.generators) moved.push_back(g.subst_linear(L));
    MultiPoly gtilde = f->subst_linear(L).scale(top.inv());

    // Elimination ideal in the first n-1 variables.
    GroebnerBasis egb =
        buchberger(moved, MonomialOrder::eliminating(n, n - 1));
    std::vector<MultiPoly> j0;
    for (const auto& g : egb.generators)
      if (!g.depends_on(n - 1)) j0.push_back(g.drop_var(n - 1));

    if (j0.empty()) return {n - 1, L, {gtilde}};

    Solution inner;
    try {
      inner = solve_noether(j0, rng, budget);
    } catch (const AnalysisError&) {
      continue;  // bad direction (e.g. collapsed to dimension 0); retry
    }
    // Lift the inner map to n variables (fixing the last coordinate).
    auto lifted = identity_matrix(n);
    for (int i = 0; i + 1 < n; ++i)
      for (int j = 0; j + 1 < n; ++j) lifted[i][j] = inner.map[i][j];
    Solution out;
    out.m = inner.m;
    out.map = mat_mul(L, lifted);
    for (const auto& g : inner.gs) {
      MultiPoly padded = g.pad_vars(n, gens[0].names());
      out.gs.push_back(std::move(padded));
    }
    out.gs.push_back(gtilde.subst_linear(lifted));
    return out;
  }
}

}  // namespace

NoetherReport find_noether(const std::vector<MultiPoly>& generators,
                           unsigned seed, int budget) {
  std::vector<MultiPoly> gens;
  for (const auto& g : generators)
    if (!g.is_zero()) gens.push_back(g);
  if (gens.empty()) throw InputError("no nonzero generators");
  int n = gens[0].arity();
  if (n < 2) throw InputError("need at least two variables");

  // Accept the input as-is when it already has the right shape.
  int direct_m = n - static_cast<int>(gens.size());
  if (direct_m >= 1) {
    NoetherReport direct = check_noether(gens, direct_m);
    if (direct.verdict) return direct;
  }

  std::mt19937 rng(seed);
  NoetherReport last;
  bool have_last = false;
  while (budget > 0) {
    Solution sol;
    try {
      sol = solve_noether(gens, rng, budget);
    } catch (const BudgetError&) {
      break;
    }
    NoetherReport rep = check_noether(sol.gs, sol.m);
    rep.linear_map = sol.map;
    if (rep.verdict) return rep;
    last = rep;
    have_last = true;
  }
  if (have_last)
    throw BudgetError("Noether search budget exhausted; last failure: " +
                      to_string(last.failure));
  throw BudgetError("Noether search budget exhausted");
}

Rat growth_constant(const std::vector<MultiPoly>& g_list, int split_m) {
  if (g_list.empty()) throw InputError("empty generator list");
  int n = g_list[0].arity();
  Rat acc(0);
  for (int j = static_cast<int>(g_list.size()) - 1; j >= 0; --j) {
    const MultiPoly& g = g_list[j];
    int v = split_m + j;
    int d = g.degree_in(v);
    if (d <= 0 || d == kDegZero)
      throw AnalysisError("generator is not monic in its y variable");
    // C_k bounds the k-th coefficient polynomial on the unit polydisc slope:
    // |g_{jk}(x)| <= C_k (1 + ||x||)^{d-k}.
    std::vector<Rat> c_bounds(d, Rat(0));
    for (const auto& [e, c] : g.terms()) {
      if (e[v] == d) continue;
      c_bounds[e[v]] += coeff_abs_bound(c);
    }
    Rat level(0);
    for (int k = 0; k < d; ++k) {
      if (c_bounds[k] == 0) continue;
      Rat r = root_upper_bound(c_bounds[k], d - k);
      if (r > level) level = r;
    }
    level *= 2;
    acc = level * (1 + acc) + acc;
  }
  (void)n;
  return acc;
}

long deg_of_v(const std::vector<int>& d_list) {
  long p = 1;
  for (int d : d_list) p *= d;
  return p;
}

namespace {

UPoly fiber_poly(const MultiPoly& P, const CRat& x0) {
  if (P.arity() != 2) throw InputError("fiber counting needs a plane curve");
  return up_from_multipoly(P.partial_eval(0, x0), 1);
}

}  // namespace

int fiber_count(const MultiPoly& P, const CRat& x0) {
  UPoly q = fiber_poly(P, x0);
  if (up_degree(q) < 1) return 0;
  return up_degree(up_squarefree_part(q));
}

bool fiber_regular(const MultiPoly& P, const CRat& x0) {
  UPoly q = fiber_poly(P, x0);
  if (up_degree(q) != P.degree_in(1)) return false;
  if (up_degree(q) < 1) return false;
  return up_degree(up_gcd(q, up_derivative(q))) == 0;
}

MassCheckReport mass_check(const MultiPoly& P, int samples, unsigned seed) {
  if (P.arity() != 2) throw InputError("mass check needs a plane curve");
  int degy = P.degree_in(1);
  if (degy < 1) throw AnalysisError("curve has no y term; not monic in y");
  MassCheckReport rep;
  rep.deg_v = degy;
  rep.mass_symbolic = std::to_string(degy) + "*(2*pi)^1";

  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-50, 50);
  std::uniform_int_distribution<int> den(1, 8);
  int attempts = 0;
  while (rep.samples_used < samples) {
    if (++attempts > samples * 20 + 100)
      throw BudgetError("could not find enough regular base points");
    CRat x0(make_rat(num(rng), den(rng)), make_rat(num(rng), den(rng)));
    if (!fiber_regular(P, x0)) {
      ++rep.samples_skipped;
      continue;
    }
    rep.counts.push_back(fiber_count(P, x0));
    ++rep.samples_used;
  }
  rep.all_fibers_match = true;
  for (int c : rep.counts)
    if (c != degy) rep.all_fibers_match = false;
  return rep;
}

}  // namespace lk
