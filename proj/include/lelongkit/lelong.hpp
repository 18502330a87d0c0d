#pragma once

#include <string>
#include <vector>

#include "lelongkit/newton.hpp"
#include "lelongkit/poly.hpp"

namespace lk {

enum class LelongMethod {
  ClosedFormDOverDeg,  // pure-x witness degree over deg(P)
  BranchAverage,       // width-weighted average of branch growth exponents
  XPolynomialRule,     // q in C[x]: value = deg(q)
};

std::string to_string(LelongMethod m);

// Growth exponent of q along one cluster of branches (same gamma, same edge
// factor). weight counts branches in the cluster (factor degree times
// multiplicity, or the sub-cluster that does / does not cancel).
struct BranchExponent {
  Rat gamma;
  int weight = 0;
  Rat exponent;         // growth exponent of q on these branches
  bool exact = true;    // false when a numeric series supplied the exponent
  bool bracketed = false;
  Rat lower, upper;     // only when bracketed
  double coeff_abs = 0.0;  // |leading coefficient| of q along the branch
  double error_bar = 0.0;
};

struct LelongReport {
  Rat value;
  bool value_exact = true;
  double error_bar = 0.0;
  LelongMethod method = LelongMethod::BranchAverage;
  bool has_closed_form = false;
  Rat closed_form;      // d / deg(P) when a pure-x term exists
  Rat branch_average;   // (sum width * exponent) / deg(P)
  std::vector<BranchExponent> per_branch;
  std::vector<std::string> caveats;  // negative_branch_present,
                                     // reducibility_suspected,
                                     // cancellation_numeric, route_disagreement
  std::string mass_symbolic;  // value * deg(P) * (2*pi)^1
};

// deg_L of the coordinate y on the curve P(x, y) = 0, by both the pure-x
// closed form and the branch average; the two must agree.
LelongReport lelong_degree_y(const MultiPoly& P);

// deg_L of an arbitrary q on the curve; q is normal-formed mod <P> first.
// Cancellation of the candidate leading coefficient at a branch is decided
// exactly (gcd with the edge factor) and resolved by numeric series extension.
LelongReport lelong_degree(const MultiPoly& q, const MultiPoly& P);

enum class BranchLimit { BoundedBelow, TendsToZero, Unbounded };

std::string to_string(BranchLimit l);

struct BalayageReport {
  struct Entry {
    Rat gamma;
    int weight;
    Rat exponent;
    BranchLimit limit;
  };
  std::vector<Entry> entries;
  bool safe = false;  // log-truncation is safe: no branch sends q to 0
};

// Classifies |q| along every branch at infinity: exponent > 0 unbounded,
// = 0 bounded with nonzero limit, < 0 tends to zero.
BalayageReport classify_balayage(const MultiPoly& q, const MultiPoly& P);

struct MovingReport {
  Rat base;
  struct Entry {
    Rat t;
    Rat value;
    bool matches;
  };
  std::vector<Entry> entries;
  bool all_match = false;
};

// deg_L(q) on the moved curves P - t; mismatches flag non-generic t values.
MovingReport moving_invariance(const MultiPoly& q, const MultiPoly& P,
                               const std::vector<Rat>& t_values);

// Shared machinery: per-branch growth exponents of q (already normal-formed)
// on the curve P. Appends caveat strings when set.
std::vector<BranchExponent> branch_exponents(const MultiPoly& q,
                                             const MultiPoly& P,
                                             std::vector<std::string>* caveats);

}  // namespace lk
