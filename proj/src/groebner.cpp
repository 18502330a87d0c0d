#include "lelongkit/groebner.hpp"

#include <algorithm>
#include <set>

#include "lelongkit/error.hpp"

namespace lk {

bool expo_divides(const Expo& e, const Expo& f) {
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] > f[i]) return false;
  return true;
}

Expo expo_lcm(const Expo& a, const Expo& b) {
  Expo r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

namespace {

Expo expo_sub(const Expo& a, const Expo& b) {
  Expo r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

bool expo_coprime(const Expo& a, const Expo& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

}  // namespace

DivisionResult divide(const MultiPoly& p, const std::vector<MultiPoly>& divisors,
                      const MonomialOrder& order) {
  if (divisors.empty()) throw AnalysisError("division by an empty divisor list");
  std::vector<std::pair<Expo, CRat>> lts;
  lts.reserve(divisors.size());
  for (const auto& f : divisors) {
    if (f.is_zero()) throw AnalysisError("zero divisor in division");
    if (f.arity() != p.arity()) throw InputError("arity mismatch in division");
    lts.push_back(f.leading_term(order));
  }

  DivisionResult res;
  res.quotients.assign(divisors.size(),
                       MultiPoly::zero(p.arity(), p.names()));
  res.remainder = MultiPoly::zero(p.arity(), p.names());
  MultiPoly work = p;
  while (!work.is_zero()) {
    auto [e, c] = work.leading_term(order);
    bool stepped = false;
    for (size_t j = 0; j < divisors.size(); ++j) {
      if (!expo_divides(lts[j].first, e)) continue;
      MultiPoly q = MultiPoly::monomial(p.arity(), expo_sub(e, lts[j].first),
                                        c / lts[j].second, p.names());
      res.quotients[j] = res.quotients[j] + q;
      work = work - q * divisors[j];
      stepped = true;
      break;
    }
    if (!stepped) {
      MultiPoly t = MultiPoly::monomial(p.arity(), e, c, p.names());
      res.remainder = res.remainder + t;
      work = work - t;
    }
  }
  return res;
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g,
                       const MonomialOrder& order) {
  auto [ef, cf] = f.leading_term(order);
  auto [eg, cg] = g.leading_term(order);
  Expo l = expo_lcm(ef, eg);
  MultiPoly mf = MultiPoly::monomial(f.arity(), expo_sub(l, ef), cf.inv(),
                                     f.names());
  MultiPoly mg = MultiPoly::monomial(g.arity(), expo_sub(l, eg), cg.inv(),
                                     g.names());
  return mf * f - mg * g;
}

GroebnerBasis buchberger(std::vector<MultiPoly> generators,
                         const MonomialOrder& order, long pair_budget) {
  std::vector<MultiPoly> basis;
  for (auto& g : generators)
    if (!g.is_zero()) basis.push_back(std::move(g));
  if (basis.empty()) throw InputError("no nonzero generators");

  // Pair queue keyed by lcm of leading terms (normal selection strategy):
  // smallest lcm in the monomial order is processed first.
  struct Pair {
    Expo lcm;
    size_t i, j;
  };
  auto cmp = [&order](const Pair& a, const Pair& b) {
    Ordering o = compare(order, a.lcm, b.lcm);
    if (o != Ordering::Equal) return o == Ordering::Less;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::vector<Pair> queue;
  auto push_pairs_for = [&](size_t k) {
    auto ltk = basis[k].leading_term(order).first;
    for (size_t i = 0; i < k; ++i) {
      auto lti = basis[i].leading_term(order).first;
      if (expo_coprime(lti, ltk)) continue;  // S-poly reduces to zero
      queue.push_back({expo_lcm(lti, ltk), i, k});
    }
  };
  for (size_t k = 0; k < basis.size(); ++k) push_pairs_for(k);

  long used = 0;
  while (!queue.empty()) {
    auto it = std::min_element(queue.begin(), queue.end(), cmp);
    Pair pr = *it;
    queue.erase(it);

    // Chain criterion: skip when some other basis element's leading term
    // divides the lcm and both sub-pairs are no longer pending.
    auto pending = [&](size_t a, size_t b) {
      if (a > b) std::swap(a, b);
      for (const auto& q : queue)
        if (q.i == a && q.j == b) return true;
      return false;
    };
    bool skip = false;
    for (size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!expo_divides(basis[k].leading_term(order).first, pr.lcm)) continue;
      if (!pending(pr.i, k) && !pending(pr.j, k)) skip = true;
    }
    if (skip) continue;

    if (++used > pair_budget)
      throw BudgetError("Groebner pair budget exhausted");
    MultiPoly s = s_polynomial(basis[pr.i], basis[pr.j], order);
    if (s.is_zero()) continue;
    MultiPoly r = divide(s, basis, order).remainder;
    if (r.is_zero()) continue;
    basis.push_back(r);
    push_pairs_for(basis.size() - 1);
  }

  GroebnerBasis out;
  out.generators = std::move(basis);
  out.order = order;
  out.reduced = false;
  return reduce_basis(std::move(out));
}

GroebnerBasis reduce_basis(GroebnerBasis basis) {
  const MonomialOrder& order = basis.order;
  std::vector<MultiPoly> gens;
  for (auto& g : basis.generators)
    if (!g.is_zero()) gens.push_back(std::move(g));

  // Minimize: drop any generator whose leading term another one divides.
  std::vector<bool> keep(gens.size(), true);
  for (size_t i = 0; i < gens.size(); ++i) {
    if (!keep[i]) continue;
    Expo lti = gens[i].leading_term(order).first;
    for (size_t j = 0; j < gens.size(); ++j) {
      if (i == j || !keep[j]) continue;
      Expo ltj = gens[j].leading_term(order).first;
      if (expo_divides(ltj, lti) &&
          !(lti == ltj && j > i)) {  // equal LTs: keep the earlier one
        keep[i] = false;
        break;
      }
    }
  }
  std::vector<MultiPoly> minimal;
  for (size_t i = 0; i < gens.size(); ++i)
    if (keep[i]) minimal.push_back(std::move(gens[i]));

  // Fully reduce each generator against the others and scale monic.
  std::vector<MultiPoly> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MultiPoly> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    MultiPoly r = others.empty()
                      ? minimal[i]
                      : divide(minimal[i], others, order).remainder;
    if (r.is_zero()) continue;
    reduced.push_back(r.scale(r.leading_term(order).second.inv()));
  }

  std::sort(reduced.begin(), reduced.end(),
            [&order](const MultiPoly& a, const MultiPoly& b) {
              return compare(order, a.leading_term(order).first,
                             b.leading_term(order).first) == Ordering::Less;
            });
  basis.generators = std::move(reduced);
  basis.reduced = true;
  return basis;
}

MultiPoly normal_form(const MultiPoly& p, const GroebnerBasis& basis) {
  if (p.is_zero()) return p;
  return divide(p, basis.generators, basis.order).remainder;
}

int deg_V(const MultiPoly& p, const GroebnerBasis& basis) {
  return normal_form(p, basis).degree();
}

}  // namespace lk
