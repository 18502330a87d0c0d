#include "lelongkit/roots.hpp"

#include <algorithm>
#include <cmath>

#include "lelongkit/error.hpp"

namespace lk {

namespace {

template <typename F>
using C = std::complex<F>;

template <typename F>
C<F> horner(const std::vector<C<F>>& a, C<F> x) {
  C<F> r = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) r = r * x + *it;
  return r;
}

// One Aberth-Ehrlich pass at floating type F. Returns the max residual scale
// ratio over all roots.
template <typename F>
bool aberth(const std::vector<C<F>>& coeffs, std::vector<C<F>>& z,
            const RootOptions& opts) {
  int n = static_cast<int>(coeffs.size()) - 1;
  std::vector<C<F>> dcoeffs(n);
  for (int k = 1; k <= n; ++k) dcoeffs[k - 1] = coeffs[k] * F(k);

  F cmax = 0;
  for (const auto& c : coeffs) cmax = std::max(cmax, std::abs(c));

  std::vector<bool> done(n, false);
  for (int iter = 0; iter < opts.max_iterations; ++iter) {
    bool moved = false;
    for (int i = 0; i < n; ++i) {
      if (done[i]) continue;
      C<F> p = horner(coeffs, z[i]);
      F scale = cmax * std::pow(std::max(F(1), std::abs(z[i])), F(n));
      if (std::abs(p) <= F(opts.residual_factor) * scale * F(0.01)) {
        done[i] = true;
        continue;
      }
      C<F> dp = horner(dcoeffs, z[i]);
      C<F> ratio;
      if (std::abs(dp) > F(0)) {
        ratio = p / dp;
      } else {
        ratio = std::pow(C<F>(F(0.5), F(0.3)), iter % 7 + 1);
      }
      C<F> sum = 0;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        C<F> diff = z[i] - z[j];
        if (std::abs(diff) < F(1e-300)) diff = C<F>(F(1e-300), F(0));
        sum += C<F>(F(1)) / diff;
      }
      C<F> denom = C<F>(F(1)) - ratio * sum;
      C<F> step = std::abs(denom) > F(1e-300) ? ratio / denom : ratio;
      z[i] -= step;
      if (std::abs(step) > F(1e-14) * std::max(F(1), std::abs(z[i])))
        moved = true;
    }
    if (!moved) break;
  }
  // Certify residuals.
  for (int i = 0; i < n; ++i) {
    F scale = cmax * std::pow(std::max(F(1), std::abs(z[i])), F(n));
    if (!(std::abs(horner(coeffs, z[i])) < F(opts.residual_factor) * scale))
      return false;
  }
  return true;
}

template <typename F>
std::vector<C<F>> initial_guesses(const std::vector<C<F>>& coeffs) {
  int n = static_cast<int>(coeffs.size()) - 1;
  // Cauchy-style radius from coefficient magnitudes.
  F an = std::abs(coeffs[n]);
  F r = 0;
  for (int k = 0; k < n; ++k)
    r = std::max(r, std::pow(std::abs(coeffs[k]) / an, F(1) / F(n - k)));
  r = F(2) * r + F(0.5);
  std::vector<C<F>> z(n);
  const F pi = std::acos(F(-1));
  for (int i = 0; i < n; ++i) {
    // Perturbed circle: irrational-ish phase offset avoids symmetric stalls.
    F theta = F(2) * pi * F(i) / F(n) + F(0.4);
    z[i] = r * std::polar(F(1), theta) * (F(1) + F(0.01) * F(i) / F(n + 1));
  }
  return z;
}

}  // namespace

std::vector<std::complex<double>> find_roots(
    const std::vector<std::complex<double>>& coeffs_in,
    const RootOptions& opts) {
  std::vector<std::complex<double>> coeffs = coeffs_in;
  while (!coeffs.empty() && std::abs(coeffs.back()) == 0.0) coeffs.pop_back();
  if (coeffs.size() <= 1) return {};
  int n = static_cast<int>(coeffs.size()) - 1;
  if (n == 1) return {-coeffs[0] / coeffs[1]};

  // Strip roots at the origin exactly.
  int val = 0;
  while (val < n && std::abs(coeffs[val]) == 0.0) ++val;
  if (val > 0) {
    std::vector<std::complex<double>> shifted(coeffs.begin() + val,
                                              coeffs.end());
    auto roots = find_roots(shifted, opts);
    roots.insert(roots.end(), val, std::complex<double>(0.0, 0.0));
    return roots;
  }

  auto z = initial_guesses(coeffs);
  if (aberth(coeffs, z, opts)) return z;

  // Escalate to long double.
  std::vector<std::complex<long double>> lc(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i)
    lc[i] = std::complex<long double>(coeffs[i].real(), coeffs[i].imag());
  auto lz = initial_guesses(lc);
  if (!aberth(lc, lz, opts))
    throw BudgetError("root finding failed residual certification");
  std::vector<std::complex<double>> out(lz.size());
  for (size_t i = 0; i < lz.size(); ++i)
    out[i] = std::complex<double>(static_cast<double>(lz[i].real()),
                                  static_cast<double>(lz[i].imag()));
  return out;
}

std::vector<std::complex<double>> find_roots(const UPoly& p,
                                             const RootOptions& opts) {
  return find_roots(up_to_complex(p), opts);
}

int count_distinct(const std::vector<std::complex<double>>& pts,
                   double rel_radius) {
  double scale = 1.0;
  for (const auto& p : pts) scale = std::max(scale, std::abs(p));
  std::vector<std::complex<double>> reps;
  for (const auto& p : pts) {
    bool found = false;
    for (const auto& r : reps) {
      if (std::abs(p - r) <= rel_radius * scale) {
        found = true;
        break;
      }
    }
    if (!found) reps.push_back(p);
  }
  return static_cast<int>(reps.size());
}

}  // namespace lk
