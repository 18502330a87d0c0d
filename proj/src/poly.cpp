#include "lelongkit/poly.hpp"

#include <algorithm>
#include <sstream>

namespace lk {

std::string rat_to_string(const Rat& r) { return r.get_str(); }

std::string crat_to_string(const CRat& c) {
  if (c.im == 0) return rat_to_string(c.re);
  std::ostringstream os;
  std::string im;
  if (c.im == 1)
    im = "i";
  else if (c.im == -1)
    im = "-i";
  else
    im = rat_to_string(c.im) + "*i";
  if (c.re == 0) return im;
  os << rat_to_string(c.re);
  if (c.im > 0)
    os << "+" << im;
  else
    os << im;  // im already carries the sign
  return os.str();
}

std::vector<std::string> default_names(int arity) {
  std::vector<std::string> names;
  names.reserve(arity);
  for (int i = 0; i < arity; ++i) names.push_back("z" + std::to_string(i + 1));
  return names;
}

MonomialOrder MonomialOrder::paper(int arity) {
  MonomialOrder o;
  o.kind = OrderKind::PaperGraded;
  for (int i = 0; i < arity; ++i) o.perm.push_back(i);
  return o;
}

MonomialOrder MonomialOrder::paper(std::vector<int> precedence) {
  MonomialOrder o;
  o.kind = OrderKind::PaperGraded;
  o.perm = std::move(precedence);
  return o;
}

MonomialOrder MonomialOrder::grevlex(int arity) {
  MonomialOrder o = paper(arity);
  o.kind = OrderKind::Grevlex;
  return o;
}

MonomialOrder MonomialOrder::grevlex(std::vector<int> precedence) {
  MonomialOrder o = paper(std::move(precedence));
  o.kind = OrderKind::Grevlex;
  return o;
}

MonomialOrder MonomialOrder::eliminating(int arity, int var) {
  MonomialOrder o = paper(arity);
  o.kind = OrderKind::Elimination;
  o.elim_var = var;
  return o;
}

Ordering compare(const MonomialOrder& order, const Expo& a, const Expo& b) {
  if (a.size() != b.size())
    throw InputError("monomial comparison with mismatched arity");
  if (order.kind == OrderKind::Elimination) {
    int v = order.elim_var;
    if (a[v] != b[v]) return a[v] < b[v] ? Ordering::Less : Ordering::Greater;
  }
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db ? Ordering::Less : Ordering::Greater;
  switch (order.kind) {
    case OrderKind::PaperGraded:
    case OrderKind::Elimination:
      for (int v : order.perm) {
        if (a[v] != b[v])
          return a[v] < b[v] ? Ordering::Less : Ordering::Greater;
      }
      return Ordering::Equal;
    case OrderKind::Grevlex:
      for (auto it = order.perm.rbegin(); it != order.perm.rend(); ++it) {
        int v = *it;
        if (a[v] != b[v])
          return a[v] > b[v] ? Ordering::Less : Ordering::Greater;
      }
      return Ordering::Equal;
  }
  return Ordering::Equal;
}

MultiPoly::MultiPoly(int arity, std::vector<std::string> names)
    : arity_(arity), names_(std::move(names)) {
  if (names_.empty()) names_ = default_names(arity_);
  if (static_cast<int>(names_.size()) != arity_)
    throw InputError("variable name count does not match arity");
}

MultiPoly MultiPoly::zero(int arity, std::vector<std::string> names) {
  return MultiPoly(arity, std::move(names));
}

MultiPoly MultiPoly::constant(int arity, CRat c,
                              std::vector<std::string> names) {
  MultiPoly p(arity, std::move(names));
  if (!c.is_zero()) p.terms_[Expo(arity, 0)] = std::move(c);
  return p;
}

MultiPoly MultiPoly::variable(int arity, int var,
                              std::vector<std::string> names) {
  Expo e(arity, 0);
  e.at(var) = 1;
  return monomial(arity, std::move(e), crat_one(), std::move(names));
}

MultiPoly MultiPoly::monomial(int arity, Expo e, CRat c,
                              std::vector<std::string> names) {
  MultiPoly p(arity, std::move(names));
  if (static_cast<int>(e.size()) != arity)
    throw InputError("exponent vector length does not match arity");
  if (!c.is_zero()) p.terms_[std::move(e)] = std::move(c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

CRat MultiPoly::constant_value() const {
  if (terms_.empty()) return crat_zero();
  if (!is_constant()) throw AnalysisError("polynomial is not constant");
  return terms_.begin()->second;
}

CRat MultiPoly::coeff(const Expo& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? crat_zero() : it->second;
}

void MultiPoly::set_coeff(const Expo& e, const CRat& c) {
  if (static_cast<int>(e.size()) != arity_)
    throw InputError("exponent vector length does not match arity");
  if (c.is_zero())
    terms_.erase(e);
  else
    terms_[e] = c;
}

int MultiPoly::degree() const {
  if (terms_.empty()) return kDegZero;
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

int MultiPoly::degree_in(int var) const {
  if (terms_.empty()) return kDegZero;
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

bool MultiPoly::depends_on(int var) const {
  for (const auto& [e, c] : terms_)
    if (e[var] > 0) return true;
  return false;
}

bool MultiPoly::is_real() const {
  for (const auto& [e, c] : terms_)
    if (c.im != 0) return false;
  return true;
}

void MultiPoly::check_arity(const MultiPoly& other) const {
  if (arity_ != other.arity_)
    throw InputError("polynomial arity mismatch");
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  a.check_arity(b);
  MultiPoly r = a;
  for (const auto& [e, c] : b.terms_) {
    auto it = r.terms_.find(e);
    if (it == r.terms_.end()) {
      r.terms_[e] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) r.terms_.erase(it);
    }
  }
  return r;
}

MultiPoly operator-(const MultiPoly& a) {
  MultiPoly r = a;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  return a + (-b);
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_arity(b);
  MultiPoly r(a.arity_, a.names_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Expo e(a.arity_);
      for (int i = 0; i < a.arity_; ++i) e[i] = ea[i] + eb[i];
      auto it = r.terms_.find(e);
      if (it == r.terms_.end()) {
        CRat c = ca * cb;
        if (!c.is_zero()) r.terms_[std::move(e)] = std::move(c);
      } else {
        it->second += ca * cb;
        if (it->second.is_zero()) r.terms_.erase(it);
      }
    }
  }
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return a.arity_ == b.arity_ && a.terms_ == b.terms_;
}

MultiPoly MultiPoly::scale(const CRat& c) const {
  if (c.is_zero()) return zero(arity_, names_);
  MultiPoly r = *this;
  for (auto& [e, v] : r.terms_) v *= c;
  return r;
}

MultiPoly MultiPoly::subst_linear(
    const std::vector<std::vector<Rat>>& matrix) const {
  if (static_cast<int>(matrix.size()) != arity_)
    throw InputError("substitution matrix has wrong size");
  invert_matrix(matrix);  // throws if singular
  // Linear forms for each variable.
  std::vector<MultiPoly> forms;
  forms.reserve(arity_);
  for (int v = 0; v < arity_; ++v) {
    if (static_cast<int>(matrix[v].size()) != arity_)
      throw InputError("substitution matrix has wrong size");
    MultiPoly f = zero(arity_, names_);
    for (int k = 0; k < arity_; ++k) {
      if (matrix[v][k] != 0) {
        Expo e(arity_, 0);
        e[k] = 1;
        f.terms_[std::move(e)] = CRat(matrix[v][k]);
      }
    }
    forms.push_back(std::move(f));
  }
  MultiPoly r = zero(arity_, names_);
  for (const auto& [e, c] : terms_) {
    MultiPoly term = constant(arity_, c, names_);
    for (int v = 0; v < arity_; ++v)
      for (int k = 0; k < e[v]; ++k) term = term * forms[v];
    r = r + term;
  }
  return r;
}

MultiPoly MultiPoly::partial_eval(int var, const CRat& value) const {
  MultiPoly r = zero(arity_, names_);
  for (const auto& [e, c] : terms_) {
    CRat v = c;
    for (int k = 0; k < e[var]; ++k) v *= value;
    if (v.is_zero()) continue;
    Expo ne = e;
    ne[var] = 0;
    auto it = r.terms_.find(ne);
    if (it == r.terms_.end()) {
      r.terms_[std::move(ne)] = std::move(v);
    } else {
      it->second += v;
      if (it->second.is_zero()) r.terms_.erase(it);
    }
  }
  return r;
}

MultiPoly MultiPoly::subst_var(int var, const MultiPoly& value) const {
  check_arity(value);
  MultiPoly r = zero(arity_, names_);
  for (const auto& [e, c] : terms_) {
    Expo ne = e;
    ne[var] = 0;
    MultiPoly term = monomial(arity_, std::move(ne), c, names_);
    for (int k = 0; k < e[var]; ++k) term = term * value;
    r = r + term;
  }
  return r;
}

std::map<int, MultiPoly> MultiPoly::homogeneous_parts() const {
  std::map<int, MultiPoly> parts;
  for (const auto& [e, c] : terms_) {
    int d = total_degree(e);
    auto it = parts.find(d);
    if (it == parts.end())
      it = parts.emplace(d, zero(arity_, names_)).first;
    it->second.terms_[e] = c;
  }
  return parts;
}

MultiPoly MultiPoly::homogeneous_part(int deg) const {
  MultiPoly r = zero(arity_, names_);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) == deg) r.terms_[e] = c;
  return r;
}

MultiPoly MultiPoly::leading_homogeneous_part() const {
  if (terms_.empty()) return *this;
  return homogeneous_part(degree());
}

MultiPoly MultiPoly::homogenize(const std::string& new_var) const {
  std::vector<std::string> names = names_;
  names.push_back(new_var);
  MultiPoly r(arity_ + 1, std::move(names));
  int d = degree();
  if (terms_.empty()) return r;
  for (const auto& [e, c] : terms_) {
    Expo ne = e;
    ne.push_back(d - total_degree(e));
    r.terms_[std::move(ne)] = c;
  }
  return r;
}

MultiPoly MultiPoly::dehomogenize(int var, const CRat& value) const {
  return partial_eval(var, value).drop_var(var);
}

MultiPoly MultiPoly::drop_var(int var) const {
  if (depends_on(var))
    throw AnalysisError("cannot drop variable the polynomial depends on");
  std::vector<std::string> names;
  for (int i = 0; i < arity_; ++i)
    if (i != var) names.push_back(names_[i]);
  MultiPoly r(arity_ - 1, std::move(names));
  for (const auto& [e, c] : terms_) {
    Expo ne;
    ne.reserve(arity_ - 1);
    for (int i = 0; i < arity_; ++i)
      if (i != var) ne.push_back(e[i]);
    r.terms_[std::move(ne)] = c;
  }
  return r;
}

MultiPoly MultiPoly::pad_vars(int new_arity,
                              std::vector<std::string> names) const {
  if (new_arity < arity_) throw InputError("pad_vars cannot shrink arity");
  MultiPoly r(new_arity, std::move(names));
  for (const auto& [e, c] : terms_) {
    Expo ne = e;
    ne.resize(new_arity, 0);
    r.terms_[std::move(ne)] = c;
  }
  return r;
}

std::vector<MultiPoly> MultiPoly::coeffs_in(int var) const {
  int d = degree_in(var);
  if (d == kDegZero) d = 0;
  std::vector<MultiPoly> cs(d + 1, zero(arity_, names_));
  for (const auto& [e, c] : terms_) {
    Expo ne = e;
    int k = ne[var];
    ne[var] = 0;
    cs[k].terms_[std::move(ne)] = c;
  }
  return cs;
}

MultiPoly MultiPoly::derivative(int var) const {
  MultiPoly r = zero(arity_, names_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Expo ne = e;
    ne[var] -= 1;
    r.terms_[std::move(ne)] = c * CRat(make_rat(e[var]));
  }
  return r;
}

CRat MultiPoly::eval(const std::vector<CRat>& point) const {
  if (static_cast<int>(point.size()) != arity_)
    throw InputError("evaluation point has wrong arity");
  CRat sum = crat_zero();
  for (const auto& [e, c] : terms_) {
    CRat t = c;
    for (int v = 0; v < arity_; ++v)
      for (int k = 0; k < e[v]; ++k) t *= point[v];
    sum += t;
  }
  return sum;
}

std::complex<double> MultiPoly::eval(
    const std::vector<std::complex<double>>& pt) const {
  if (static_cast<int>(pt.size()) != arity_)
    throw InputError("evaluation point has wrong arity");
  std::complex<double> sum = 0.0;
  for (const auto& [e, c] : terms_) {
    std::complex<double> t = c.to_complex();
    for (int v = 0; v < arity_; ++v)
      for (int k = 0; k < e[v]; ++k) t *= pt[v];
    sum += t;
  }
  return sum;
}

std::pair<Expo, CRat> MultiPoly::leading_term(
    const MonomialOrder& order) const {
  if (terms_.empty())
    throw AnalysisError("leading term of the zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
    if (compare(order, best->first, it->first) == Ordering::Less) best = it;
  }
  return {best->first, best->second};
}

std::vector<std::pair<Expo, CRat>> MultiPoly::sorted_terms(
    const MonomialOrder& order) const {
  std::vector<std::pair<Expo, CRat>> ts(terms_.begin(), terms_.end());
  std::sort(ts.begin(), ts.end(), [&](const auto& a, const auto& b) {
    return compare(order, a.first, b.first) == Ordering::Greater;
  });
  return ts;
}

std::vector<std::vector<Rat>> invert_matrix(
    const std::vector<std::vector<Rat>>& m) {
  int n = static_cast<int>(m.size());
  std::vector<std::vector<Rat>> a = m;
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(m[i].size()) != n)
      throw InputError("matrix is not square");
    inv[i][i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw AnalysisError("matrix is singular");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    Rat p = a[col][col];
    for (int j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rat f = a[r][col];
      for (int j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace lk
