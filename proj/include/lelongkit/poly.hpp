#pragma once

#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lelongkit/error.hpp"
#include "lelongkit/rational.hpp"

namespace lk {

// Exponent vector of a monomial; one entry per variable.
using Expo = std::vector<int>;

inline int total_degree(const Expo& e) {
  int s = 0;
  for (int x : e) s += x;
  return s;
}

// Degree of the zero polynomial. A sentinel far from any real degree so
// accidental arithmetic on it is loud.
inline constexpr int kDegZero = std::numeric_limits<int>::min();

enum class OrderKind {
  // Graded order with lexicographic tie-break, as the grevlex definition is
  // printed in most course notes we follow: |a|<|b|, else the first index
  // (in precedence order) where they differ decides, smaller exponent loses.
  PaperGraded,
  // Textbook graded reverse lexicographic: |a|<|b|, else the last differing
  // index decides, larger exponent loses.
  Grevlex,
  // Block order eliminating one variable: compare its exponent first, then
  // PaperGraded on the full vector. Internal, used for elimination ideals.
  Elimination,
};

struct MonomialOrder {
  OrderKind kind = OrderKind::PaperGraded;
  // Variable precedence, most significant first; perm[i] is a variable index.
  std::vector<int> perm;
  int elim_var = -1;  // only for Elimination

  static MonomialOrder paper(int arity);
  static MonomialOrder paper(std::vector<int> precedence);
  static MonomialOrder grevlex(int arity);
  static MonomialOrder grevlex(std::vector<int> precedence);
  static MonomialOrder eliminating(int arity, int var);
};

enum class Ordering { Less = -1, Equal = 0, Greater = 1 };

Ordering compare(const MonomialOrder& order, const Expo& a, const Expo& b);

// Sparse multivariate polynomial over the Gaussian rationals, keyed by
// exponent vector. Immutable in spirit: all operations return new values.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(int arity, std::vector<std::string> names = {});

  static MultiPoly zero(int arity, std::vector<std::string> names = {});
  static MultiPoly constant(int arity, CRat c,
                            std::vector<std::string> names = {});
  static MultiPoly variable(int arity, int var,
                            std::vector<std::string> names = {});
  static MultiPoly monomial(int arity, Expo e, CRat c,
                            std::vector<std::string> names = {});

  int arity() const { return arity_; }
  const std::vector<std::string>& names() const { return names_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  CRat constant_value() const;  // requires is_constant()
  size_t term_count() const { return terms_.size(); }

  const std::map<Expo, CRat>& terms() const { return terms_; }
  CRat coeff(const Expo& e) const;
  void set_coeff(const Expo& e, const CRat& c);  // builder helper; drops zeros

  int degree() const;               // kDegZero for 0
  int degree_in(int var) const;     // kDegZero for 0
  bool depends_on(int var) const;
  bool is_real() const;             // all coefficients have zero imaginary part

  // Ring operations.
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) {
    return !(a == b);
  }
  MultiPoly scale(const CRat& c) const;

  // p(L(z)): substitute each variable by the linear form given by its row of
  // the matrix. The matrix must be square (arity x arity) and invertible.
  MultiPoly subst_linear(const std::vector<std::vector<Rat>>& matrix) const;

  // Substitute one variable by a constant; the variable stays in the arity
  // with exponent zero everywhere.
  MultiPoly partial_eval(int var, const CRat& value) const;

  // Substitute one variable by another polynomial of the same arity.
  MultiPoly subst_var(int var, const MultiPoly& value) const;

  std::map<int, MultiPoly> homogeneous_parts() const;
  MultiPoly homogeneous_part(int deg) const;
  MultiPoly leading_homogeneous_part() const;  // p-hat; zero poly for 0

  // Adds a fresh variable (appended last) and homogenizes to total degree.
  MultiPoly homogenize(const std::string& new_var) const;
  // Substitutes value for var and removes the variable from the arity.
  MultiPoly dehomogenize(int var, const CRat& value = crat_one()) const;
  MultiPoly drop_var(int var) const;   // requires degree_in(var) == 0
  MultiPoly pad_vars(int new_arity, std::vector<std::string> names) const;

  // Coefficients with respect to one variable, as polynomials in the rest
  // (same arity, exponent 0 in var). Index k = coefficient of var^k.
  std::vector<MultiPoly> coeffs_in(int var) const;
  MultiPoly derivative(int var) const;

  CRat eval(const std::vector<CRat>& point) const;
  std::complex<double> eval(const std::vector<std::complex<double>>& pt) const;

  // Leading term with respect to an order; throws on the zero polynomial.
  std::pair<Expo, CRat> leading_term(const MonomialOrder& order) const;

  // Terms sorted descending in the given order.
  std::vector<std::pair<Expo, CRat>> sorted_terms(
      const MonomialOrder& order) const;

 private:
  int arity_ = 0;
  std::vector<std::string> names_;
  std::map<Expo, CRat> terms_;  // no zero coefficients stored

  void check_arity(const MultiPoly& other) const;
};

std::vector<std::string> default_names(int arity);

// Exact inverse of a square rational matrix; throws AnalysisError if singular.
std::vector<std::vector<Rat>> invert_matrix(
    const std::vector<std::vector<Rat>>& m);

}  // namespace lk
