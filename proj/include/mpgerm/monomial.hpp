#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>

#include "mpgerm/error.hpp"

namespace mpgerm {

inline constexpr std::size_t kMaxVars = 32;

/// Exponent vector over a fixed-length variable list. Stored inline; the
/// total degree is cached.
class Monomial {
 public:
  using Exp = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : n_(static_cast<std::uint8_t>(nvars)) {
    if (nvars > kMaxVars) throw DomainError("too many variables (max 32)");
  }

  static Monomial variable(std::size_t nvars, std::size_t i, unsigned e = 1) {
    Monomial m(nvars);
    m.set(i, e);
    return m;
  }

  std::size_t size() const { return n_; }
  unsigned degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  Exp operator[](std::size_t i) const { return exp_[i]; }

  void set(std::size_t i, unsigned e) {
    if (e > 0xFFFFu) throw DomainError("exponent overflow");
    deg_ = deg_ - exp_[i] + e;
    exp_[i] = static_cast<Exp>(e);
  }

  bool divides(const Monomial& m) const {
    if (deg_ > m.deg_) return false;
    for (std::size_t i = 0; i < n_; ++i)
      if (exp_[i] > m.exp_[i]) return false;
    return true;
  }

  /// Supports of the two monomials are disjoint.
  bool coprime(const Monomial& m) const {
    for (std::size_t i = 0; i < n_; ++i)
      if (exp_[i] && m.exp_[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& m) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < n_; ++i) {
      unsigned e = unsigned(exp_[i]) + m.exp_[i];
      if (e > 0xFFFFu) throw DomainError("exponent overflow");
      r.exp_[i] = static_cast<Exp>(e);
    }
    r.deg_ = deg_ + m.deg_;
    return r;
  }

  /// Requires m | *this.
  Monomial operator/(const Monomial& m) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < n_; ++i) r.exp_[i] = static_cast<Exp>(exp_[i] - m.exp_[i]);
    r.deg_ = deg_ - m.deg_;
    return r;
  }

  Monomial lcm(const Monomial& m) const {
    Monomial r(n_);
    for (std::size_t i = 0; i < n_; ++i) r.set(i, std::max(exp_[i], m.exp_[i]));
    return r;
  }

  bool operator==(const Monomial& m) const {
    return n_ == m.n_ && deg_ == m.deg_ && exp_ == m.exp_;
  }

  /// Plain lexicographic comparison; used only as a canonical map key order.
  bool operator<(const Monomial& m) const {
    return std::lexicographical_compare(exp_.begin(), exp_.begin() + n_, m.exp_.begin(),
                                        m.exp_.begin() + m.n_);
  }

  std::size_t hash() const {
    std::size_t h = n_;
    for (std::size_t i = 0; i < n_; ++i) h = h * 1000003u ^ exp_[i];
    return h;
  }

 private:
  std::array<Exp, kMaxVars> exp_{};
  std::uint8_t n_ = 0;
  unsigned deg_ = 0;
};

/// Negative degree reverse lexicographic order ("ds"): lower total degree
/// is larger, so 1 is the maximum; ties are broken degrevlex-style (the
/// monomial whose last differing exponent is smaller is larger).
struct LocalOrder {
  /// Returns >0 if a > b, <0 if a < b, 0 if equal.
  static int compare(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? 1 : -1;
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  }
  static bool greater(const Monomial& a, const Monomial& b) { return compare(a, b) > 0; }
};

}  // namespace mpgerm
