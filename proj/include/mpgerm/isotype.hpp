#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mpgerm/error.hpp"
#include "mpgerm/rational.hpp"
#include "mpgerm/symrep.hpp"

namespace mpgerm {

/// One value per irreducible, in table order.
struct IsotypeVector {
  std::vector<std::pair<std::string, Rational>> entries;

  const Rational& operator[](const std::string& label) const {
    for (const auto& [l, v] : entries)
      if (l == label) return v;
    throw DomainError("no isotype '" + label + "'");
  }
  bool all_integral() const {
    for (const auto& [l, v] : entries)
      if (!is_integer(v)) return false;
    return true;
  }
};

/// Per-class fixed point data.
struct EulerOnly {
  Rational chi;
};
struct SingleDim {
  int dim = 0;       // d^sigma
  Rational betti;    // beta_{d^sigma}(M^sigma)
};
struct IcisDatum {
  int dim = 0;        // actual dimension of the fixed locus
  Rational mu_tilde;
};

namespace detail {

inline void check_width(const CharacterTable& t, std::size_t n) {
  if (n != t.class_count())
    throw DomainError("expected one value per conjugacy class (" + std::to_string(t.class_count()) +
                      "), got " + std::to_string(n));
}

inline Rational project(const CharacterTable& t, std::size_t tau, const std::vector<Rational>& b) {
  check_width(t, b.size());
  Rational s = 0;
  const auto& chi = t.irreducibles().at(tau).values;
  for (std::size_t c = 0; c < b.size(); ++c) s += t.classes()[c].size * chi[c] * b[c];
  return s / t.group_order();
}

inline Rational sign_power(int e) { return (e % 2) ? Rational(-1) : Rational(1); }

}  // namespace detail

/// x_tau = (1/|G|) sum_c |c| chi_tau(c) b_c for every irreducible.
inline IsotypeVector solve_character_system(const CharacterTable& t, const std::vector<Rational>& b) {
  IsotypeVector x;
  for (std::size_t i = 0; i < t.irreducibles().size(); ++i)
    x.entries.emplace_back(t.irreducibles()[i].label, detail::project(t, i, b));
  return x;
}

/// b_c = sum_tau x_tau chi_tau(c).
inline std::vector<Rational> evaluate_class_function(const CharacterTable& t, const IsotypeVector& x) {
  std::vector<Rational> b(t.class_count());
  for (std::size_t i = 0; i < t.irreducibles().size(); ++i)
    for (std::size_t c = 0; c < b.size(); ++c) b[c] += x.entries.at(i).second * t.irreducibles()[i].values[c];
  return b;
}

inline Rational tau_characteristic(const CharacterTable& t, const std::vector<EulerOnly>& data,
                                   std::size_t tau) {
  std::vector<Rational> b;
  for (const auto& d : data) b.push_back(d.chi);
  return detail::project(t, tau, b);
}

/// Raw single-dimension formula, no validation.
inline Rational tau_betti_single_dim_raw(const CharacterTable& t, const std::vector<SingleDim>& data,
                                         std::size_t tau, int d) {
  std::vector<Rational> b;
  for (const auto& s : data) b.push_back(detail::sign_power(d - s.dim) * s.betti);
  return detail::project(t, tau, b);
}

/// Throws InconsistentData on a non-integral or negative result.
inline Rational tau_betti_single_dim(const CharacterTable& t, const std::vector<SingleDim>& data,
                                     std::size_t tau, int d) {
  detail::check_width(t, data.size());
  if (data[0].dim != d) throw DomainError("identity-class dimension must equal d");
  Rational r = tau_betti_single_dim_raw(t, data, tau, d);
  if (!is_integer(r) || r < 0)
    throw InconsistentData("tau-Betti number " + to_string(r) + " is not a non-negative integer");
  return r;
}

inline Rational mu_tau_raw(const CharacterTable& t, const std::vector<IcisDatum>& data, std::size_t tau,
                           int d) {
  std::vector<Rational> b;
  for (const auto& s : data) b.push_back(detail::sign_power(d - s.dim) * s.mu_tilde);
  return detail::project(t, tau, b);
}

/// Throws InconsistentData on a non-integral result.
inline Rational mu_tau(const CharacterTable& t, const std::vector<IcisDatum>& data, std::size_t tau,
                       int d) {
  detail::check_width(t, data.size());
  if (data[0].dim != d) throw DomainError("identity-class dimension must equal d");
  Rational r = mu_tau_raw(t, data, tau, d);
  if (!is_integer(r)) throw InconsistentData("tau-Milnor number " + to_string(r) + " is not an integer");
  return r;
}

struct FamilyData {
  Rational mu0;                 // mu^tau(X_0)
  Rational betti_t;             // beta_d^tau(X_t)
  std::vector<Rational> locals; // mu^tau(X_t; x)
  int d = 1;
  Rational beta0_x = 0;         // beta_0^tau(X), used when d = 0
};

struct Verdict {
  bool holds = true;
  Rational difference = 0;      // left - right
  bool semicontinuous = true;
  std::string detail;
};

inline Verdict check_conservation(const FamilyData& f) {
  if (f.d < 0) throw DomainError("family dimension must be non-negative");
  Rational rhs = f.betti_t;
  for (const auto& l : f.locals) rhs += l;
  if (f.d == 0) rhs -= f.beta0_x;
  Verdict v;
  v.difference = f.mu0 - rhs;
  v.holds = v.difference == 0;
  for (const auto& l : f.locals)
    if (l > f.mu0) v.semicontinuous = false;
  v.detail = to_string(f.mu0) + " vs " + to_string(rhs);
  return v;
}

/// Fixed point data file:
///   # comment
///   tau <label>              (optional)
///   d <integer>              (family or top dimension)
///   euler <class> <chi>
///   single <class> <dim> <betti>
///   icis <class> <dim> <mu_tilde>
/// Family records for the conservation checker:
///   mu0 <value>
///   betti_t <value>
///   local <value>
///   beta0_x <value>
struct FixedPointFile {
  std::optional<std::string> tau;
  std::optional<int> d;
  std::vector<std::pair<std::string, EulerOnly>> euler;
  std::vector<std::pair<std::string, SingleDim>> single;
  std::vector<std::pair<std::string, IcisDatum>> icis;
  std::optional<FamilyData> family;
};

inline FixedPointFile parse_fixed_point_data(std::istream& in) {
  FixedPointFile f;
  FamilyData fam;
  bool have_family = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    auto fail = [&](const std::string& msg) {
      return ParseError(msg + " on line " + std::to_string(lineno), 0, lineno);
    };
    auto num = [&]() {
      std::string tok;
      if (!(ls >> tok)) throw fail("missing value");
      try {
        return parse_rational(tok);
      } catch (const ParseError&) {
        throw fail("bad value '" + tok + "'");
      }
    };
    auto integer = [&]() {
      Rational q = num();
      if (!is_integer(q) || !q.get_num().fits_sint_p()) throw fail("expected an integer");
      return static_cast<int>(q.get_num().get_si());
    };
    auto label = [&]() {
      std::string tok;
      if (!(ls >> tok)) throw fail("missing class label");
      return tok;
    };
    if (key == "tau") {
      f.tau = label();
    } else if (key == "d") {
      f.d = integer();
    } else if (key == "euler") {
      auto l = label();
      f.euler.push_back({l, EulerOnly{num()}});
    } else if (key == "single") {
      auto l = label();
      int dim = integer();
      f.single.push_back({l, SingleDim{dim, num()}});
    } else if (key == "icis") {
      auto l = label();
      int dim = integer();
      f.icis.push_back({l, IcisDatum{dim, num()}});
    } else if (key == "mu0") {
      fam.mu0 = num();
      have_family = true;
    } else if (key == "betti_t") {
      fam.betti_t = num();
      have_family = true;
    } else if (key == "local") {
      fam.locals.push_back(num());
      have_family = true;
    } else if (key == "beta0_x") {
      fam.beta0_x = num();
      have_family = true;
    } else {
      throw fail("unknown record '" + key + "'");
    }
    std::string extra;
    if (ls >> extra) throw fail("trailing text '" + extra + "'");
  }
  if (have_family) {
    fam.d = f.d.value_or(1);
    f.family = fam;
  }
  return f;
}

inline FixedPointFile load_fixed_point_data(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  return parse_fixed_point_data(in);
}

/// Orders keyed records by the table's classes; every class must appear once.
template <class T>
std::vector<T> by_class(const CharacterTable& t, const std::vector<std::pair<std::string, T>>& recs) {
  std::vector<std::optional<T>> slots(t.class_count());
  for (const auto& [label, v] : recs) {
    std::size_t i = t.class_index(label);
    if (slots[i]) throw InconsistentData("class '" + label + "' given twice");
    slots[i] = v;
  }
  std::vector<T> out;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!slots[i]) throw InconsistentData("no record for class '" + t.classes()[i].label + "'");
    out.push_back(*slots[i]);
  }
  return out;
}

}  // namespace mpgerm
