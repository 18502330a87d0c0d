#pragma once

#include <complex>
#include <vector>

#include "lelongkit/univariate.hpp"

namespace lk {

struct RootOptions {
  int max_iterations = 400;
  // Residual acceptance: |p(z)| < residual_factor * max|coeff| * max(1,|z|)^deg
  double residual_factor = 1e-10;
  double cluster_radius = 1e-6;  // relative, for distinct-root counting
};

// Aberth-Ehrlich simultaneous iteration on a complex-coefficient polynomial.
// Returns all deg(p) roots. Throws BudgetError when residual certification
// fails even after escalating the working precision.
std::vector<std::complex<double>> find_roots(
    const std::vector<std::complex<double>>& coeffs,
    const RootOptions& opts = {});

std::vector<std::complex<double>> find_roots(const UPoly& p,
                                             const RootOptions& opts = {});

// Number of distinct values among the points, clustering at relative radius.
int count_distinct(const std::vector<std::complex<double>>& pts,
                   double rel_radius = 1e-6);

}  // namespace lk
