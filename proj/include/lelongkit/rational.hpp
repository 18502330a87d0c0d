#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lk {

// Exact rational scalar. mpq_class keeps gcd-reduced, positive-denominator
// canonical form as long as values are built through arithmetic or make_rat.
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat rat_from_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

inline double to_double(const Rat& r) { return r.get_d(); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

// Gaussian rational re + im*i. Exact field; the imaginary part shows up in
// branch leading coefficients (edge-polynomial roots like +/-i) and in
// complex sample points.
struct CRat {
  Rat re{0};
  Rat im{0};

  CRat() = default;
  CRat(Rat r) : re(std::move(r)) {}  // NOLINT: implicit by design
  CRat(long n) : re(make_rat(n)) {}  // NOLINT
  CRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  friend CRat operator+(const CRat& a, const CRat& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend CRat operator-(const CRat& a, const CRat& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend CRat operator-(const CRat& a) { return {-a.re, -a.im}; }
  friend CRat operator*(const CRat& a, const CRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  CRat inv() const {
    Rat n = re * re + im * im;
    if (n == 0) throw std::domain_error("division by zero");
    return {re / n, -im / n};
  }
  friend CRat operator/(const CRat& a, const CRat& b) { return a * b.inv(); }
  CRat& operator+=(const CRat& o) { re += o.re; im += o.im; return *this; }
  CRat& operator-=(const CRat& o) { re -= o.re; im -= o.im; return *this; }
  CRat& operator*=(const CRat& o) { return *this = *this * o; }
  friend bool operator==(const CRat& a, const CRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const CRat& a, const CRat& b) { return !(a == b); }

  CRat conj() const { return {re, -im}; }
  Rat norm() const { return re * re + im * im; }  // |z|^2

  std::complex<double> to_complex() const {
    return {re.get_d(), im.get_d()};
  }
};

inline const CRat& crat_zero() {
  static const CRat z{};
  return z;
}
inline const CRat& crat_one() {
  static const CRat o{make_rat(1)};
  return o;
}
inline CRat crat_i() { return CRat{make_rat(0), make_rat(1)}; }

std::string rat_to_string(const Rat& r);
std::string crat_to_string(const CRat& c);

}  // namespace lk
