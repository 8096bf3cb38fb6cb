#pragma once

#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mpgerm/error.hpp"
#include "mpgerm/monomial.hpp"
#include "mpgerm/rational.hpp"

namespace mpgerm {

enum class VarRole { base, corank, auxiliary };

inline bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

/// Ordered list of distinct variable names, each tagged with a role.
class VarSet {
 public:
  using Ptr = std::shared_ptr<const VarSet>;

  VarSet(std::vector<std::string> names, std::vector<VarRole> roles)
      : names_(std::move(names)), roles_(std::move(roles)) {
    if (names_.size() != roles_.size()) throw DomainError("VarSet: names/roles length mismatch");
    if (names_.size() > kMaxVars) throw DomainError("VarSet: at most 32 variables");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (!is_identifier(names_[i])) throw DomainError("VarSet: invalid name '" + names_[i] + "'");
      for (std::size_t j = 0; j < i; ++j)
        if (names_[i] == names_[j]) throw DomainError("VarSet: duplicate name '" + names_[i] + "'");
    }
  }

  static Ptr make(std::vector<std::string> names, std::vector<VarRole> roles) {
    return std::make_shared<const VarSet>(std::move(names), std::move(roles));
  }
  /// All variables auxiliary.
  static Ptr make(std::vector<std::string> names) {
    std::vector<VarRole> roles(names.size(), VarRole::auxiliary);
    return make(std::move(names), std::move(roles));
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  VarRole role(std::size_t i) const { return roles_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<VarRole>& roles() const { return roles_; }

  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }
  std::size_t require(const std::string& name) const {
    auto i = index_of(name);
    if (!i) throw DomainError("unknown variable '" + name + "'");
    return *i;
  }

  /// A new set with extra variables appended.
  Ptr extended(const std::vector<std::string>& extra, VarRole role) const {
    auto names = names_;
    auto roles = roles_;
    for (const auto& e : extra) {
      names.push_back(e);
      roles.push_back(role);
    }
    return make(std::move(names), std::move(roles));
  }

  bool operator==(const VarSet& o) const { return names_ == o.names_ && roles_ == o.roles_; }

 private:
  std::vector<std::string> names_;
  std::vector<VarRole> roles_;
};

inline bool same_vars(const VarSet::Ptr& a, const VarSet::Ptr& b) {
  return a == b || (a && b && a->names() == b->names());
}

/// Sparse multivariate polynomial with exact rational coefficients. Terms
/// are kept in a map keyed by exponent vector; zero coefficients are never
/// stored, so equal polynomials have equal term maps.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  explicit MultiPoly(VarSet::Ptr vars) : vars_(std::move(vars)) {
    if (!vars_) throw DomainError("MultiPoly: null VarSet");
  }

  static MultiPoly constant(VarSet::Ptr vars, const Rational& c) {
    MultiPoly p(std::move(vars));
    p.add_term(Monomial(p.nvars()), c);
    return p;
  }
  static MultiPoly variable(VarSet::Ptr vars, std::size_t i) {
    MultiPoly p(std::move(vars));
    p.add_term(Monomial::variable(p.nvars(), i), 1);
    return p;
  }
  static MultiPoly variable(VarSet::Ptr vars, const std::string& name) {
    std::size_t i = vars->require(name);
    return variable(std::move(vars), i);
  }
  static MultiPoly monomial(VarSet::Ptr vars, const Monomial& m, const Rational& c = 1) {
    MultiPoly p(std::move(vars));
    p.add_term(m, c);
    return p;
  }

  const VarSet& vars() const { return *vars_; }
  const VarSet::Ptr& var_ptr() const { return vars_; }
  std::size_t nvars() const { return vars_->size(); }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// -1 for the zero polynomial.
  int total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree()));
    return d;
  }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  Rational constant_term() const { return coefficient(Monomial(nvars())); }

  /// Adds c*m, dropping the term if it cancels.
  void add_term(const Monomial& m, const Rational& c) {
    if (m.size() != nvars()) throw DomainError("monomial length does not match variable list");
    if (c == 0) return;
    Rational v = c;
    v.canonicalize();
    auto [it, inserted] = terms_.try_emplace(m, std::move(v));
    if (!inserted) {
      it->second += c;
      it->second.canonicalize();
      if (it->second == 0) terms_.erase(it);
    }
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  MultiPoly& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [m, c] : terms_) c *= s;
    }
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(MultiPoly a) { return a *= Rational(-1); }
  friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
  friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_same(b);
    MultiPoly r(a.vars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  MultiPoly pow(unsigned e) const {
    MultiPoly r = constant(vars_, 1);
    MultiPoly b = *this;
    while (e) {
      if (e & 1u) r *= b;
      e >>= 1u;
      if (e) b *= b;
    }
    return r;
  }

  bool operator==(const MultiPoly& o) const {
    return same_vars(vars_, o.vars_) && terms_ == o.terms_;
  }

  void check_same(const MultiPoly& o) const {
    if (!same_vars(vars_, o.vars_)) throw VarSetMismatch("operands use different variable lists");
  }

 private:
  VarSet::Ptr vars_;
  TermMap terms_;
};

/// Ring homomorphism: variable i of `p` is sent to images[i], all of which
/// live over `target`.
inline MultiPoly map_variables(const MultiPoly& p, const VarSet::Ptr& target,
                               const std::vector<MultiPoly>& images) {
  if (images.size() != p.nvars()) throw DomainError("map_variables: wrong number of images");
  for (const auto& im : images)
    if (!same_vars(im.var_ptr(), target)) throw VarSetMismatch("map_variables: image over wrong variables");
  MultiPoly result(target);
  // Cache powers, since the same variable power recurs across terms.
  std::vector<std::map<unsigned, MultiPoly>> powers(images.size());
  auto power = [&](std::size_t i, unsigned e) -> const MultiPoly& {
    auto it = powers[i].find(e);
    if (it == powers[i].end()) it = powers[i].emplace(e, images[i].pow(e)).first;
    return it->second;
  };
  for (const auto& [m, c] : p.terms()) {
    MultiPoly t = MultiPoly::constant(target, c);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) t *= power(i, m[i]);
    result += t;
  }
  return result;
}

/// Substitutes the bound variables (by name) within the same variable list.
inline MultiPoly substitute(const MultiPoly& p, const std::map<std::string, MultiPoly>& bindings) {
  std::vector<MultiPoly> images;
  images.reserve(p.nvars());
  for (std::size_t i = 0; i < p.nvars(); ++i) images.push_back(MultiPoly::variable(p.var_ptr(), i));
  for (const auto& [name, val] : bindings) {
    std::size_t i = p.vars().require(name);
    if (!same_vars(val.var_ptr(), p.var_ptr()))
      throw VarSetMismatch("substitute: binding for '" + name + "' uses a different variable list");
    images[i] = val;
  }
  return map_variables(p, p.var_ptr(), images);
}

/// Re-expresses `p` over a variable list containing all of its variables.
inline MultiPoly embed(const MultiPoly& p, const VarSet::Ptr& target) {
  MultiPoly r(target);
  std::vector<std::size_t> idx(p.nvars());
  for (std::size_t i = 0; i < p.nvars(); ++i) idx[i] = target->require(p.vars().name(i));
  for (const auto& [m, c] : p.terms()) {
    Monomial t(target->size());
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) t.set(idx[i], m[i]);
    r.add_term(t, c);
  }
  return r;
}

/// Formal partial derivative with respect to variable index v.
inline MultiPoly derivative(const MultiPoly& p, std::size_t v) {
  if (v >= p.nvars()) throw DomainError("derivative: variable index out of range");
  MultiPoly r(p.var_ptr());
  for (const auto& [m, c] : p.terms()) {
    unsigned e = m[v];
    if (e == 0) continue;
    Monomial d = m;
    d.set(v, e - 1);
    r.add_term(d, c * e);
  }
  return r;
}
inline MultiPoly derivative(const MultiPoly& p, const std::string& v) {
  return derivative(p, p.vars().require(v));
}

/// (h[y_old -> y_new] - h) / (y_new - y_old), computed term by term:
/// c*r*y_old^a*y_new^b contributes c*r*y_new^b * sum_{i<a} y_new^i y_old^(a-1-i).
inline MultiPoly divided_difference(const MultiPoly& h, std::size_t y_old, std::size_t y_new) {
  if (y_old >= h.nvars() || y_new >= h.nvars() || y_old == y_new)
    throw DomainError("divided_difference: bad variable indices");
  MultiPoly r(h.var_ptr());
  for (const auto& [m, c] : h.terms()) {
    unsigned a = m[y_old];
    if (a == 0) continue;
    unsigned b = m[y_new];
    for (unsigned i = 0; i < a; ++i) {
      Monomial t = m;
      t.set(y_old, a - 1 - i);
      t.set(y_new, b + i);
      r.add_term(t, c);
    }
  }
  return r;
}
inline MultiPoly divided_difference(const MultiPoly& h, const std::string& y_old,
                                    const std::string& y_new) {
  return divided_difference(h, h.vars().require(y_old), h.vars().require(y_new));
}

inline std::string monomial_to_string(const Monomial& m, const VarSet& vars) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i]) continue;
    if (!s.empty()) s += '*';
    s += vars.name(i);
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

/// Canonical text: terms by descending degree, then descending lex order.
inline std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Monomial, Rational>> ts(p.terms().begin(), p.terms().end());
  std::stable_sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() > b.first.degree();
    return b.first < a.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [m, c] : ts) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + '*';
      out += monomial_to_string(m, p.vars());
    }
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << to_string(p); }

}  // namespace mpgerm
