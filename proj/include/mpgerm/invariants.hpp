#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mpgerm/error.hpp"
#include "mpgerm/isotype.hpp"
#include "mpgerm/multipoint.hpp"
#include "mpgerm/symrep.hpp"

namespace mpgerm {

struct MuAlt {
  int k = 0;
  Rational formula_betti;  // sum of mu over d^sigma >= 0, beta_0 correction below zero
  Rational formula_pm;     // mu^{+0} / mu^{-0} version
  long value = 0;
};

namespace detail {

inline const MilnorData& cell_milnor(const MultiPointSpace& c) {
  if (!c.milnor) throw NotAFinite("D^" + std::to_string(c.k) + " fixed locus " + c.sigma.label() +
                                  " is not an ICIS (" + c.cls.evidence + ")");
  return *c.milnor;
}

inline long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace detail

/// mu^Alt(D^k(f)) from both closed formulas; they must agree.
inline MuAlt mu_alt_dk(const GermVerdict& v, int k) {
  auto cells = v.cells_of(k);
  if (cells.empty()) throw DomainError("multiplicity " + std::to_string(k) + " was not analysed");
  MuAlt r;
  r.k = k;
  Rational f1 = 0, f2 = 0;
  for (const auto* c : cells) {
    const auto& m = detail::cell_milnor(*c);
    const long size = class_size(c->sigma);
    const int e = c->expected_dim;
    if (e >= 0) {
      f1 += size * m.mu;
    } else {
      f1 -= size * ((e % 2) ? -1 : 1) * m.beta0;
    }
    if (e >= 0 && e % 2 == 0) f2 += size * m.mu_plus0;
    if (e > 0 && e % 2 == 1) f2 += size * m.mu_minus0;
  }
  const long kf = factorial(k);
  r.formula_betti = f1 / kf;
  r.formula_pm = f2 / kf;
  if (r.formula_betti != r.formula_pm)
    throw InternalInconsistency("mu^Alt formulas disagree for k = " + std::to_string(k) + ": " +
                                to_string(r.formula_betti) + " vs " + to_string(r.formula_pm));
  if (!is_integer(r.formula_betti))
    throw InternalInconsistency("mu^Alt for k = " + std::to_string(k) + " is not an integer: " +
                                to_string(r.formula_betti));
  r.value = to_long_checked(r.formula_betti);
  return r;
}

/// mu^tau(D^k(f)) through the isotype solver, with the table of S_k.
inline Rational mu_k_tau(const GermVerdict& v, int k, const CharacterTable& table, std::size_t tau) {
  auto cells = v.cells_of(k);
  if (cells.empty()) throw DomainError("multiplicity " + std::to_string(k) + " was not analysed");
  std::vector<std::pair<std::string, IcisDatum>> recs;
  for (const auto* c : cells) {
    const auto& m = detail::cell_milnor(*c);
    recs.push_back({c->sigma.label(), IcisDatum{c->actual_dim(), m.mu_tilde}});
  }
  auto data = by_class(table, recs);
  return mu_tau(table, data, tau, data[0].dim);
}

inline long mu_top_term(long s, long d) {
  if (s < 1 || d < 0) throw DomainError("mu_top_term: need s >= 1 and d >= 0");
  return s > d ? detail::binomial(s - 1, d) : 0;
}

struct IcssEntry {
  int r = 0;  // column
  int q = 0;  // row
  long value = 0;
  int k = 0;  // multiplicity, 0 for the top term
};

/// Positions that can carry a nonzero E-infinity entry for (n, p).
inline std::vector<std::pair<int, int>> icss_layout(int n, int p) {
  std::vector<std::pair<int, int>> out;
  int kap = kappa(n, p);
  for (int k = 2; k <= kap; ++k) out.push_back({k - 1, expected_dim(n, p, k) + 1});
  out.push_back({kap, 0});
  return out;
}

struct InvariantReport {
  int n = 0, p = 0;
  int kappa = 0;
  int d = 1;
  long s = 1;
  std::vector<MuAlt> mu_alt;  // k = 2..d
  long top_term = 0;
  long mu_I = 0;
  long nu_I = 0;
  bool degenerate = false;
  std::vector<IcssEntry> icss;
  std::map<int, long> image_betti;  // degree -> rank
  bool no_unexpected = false;
};

inline bool no_unexpected_deformations(const GermVerdict& v) {
  if (v.p % (v.p - v.n) == 0) return true;
  for (const auto& c : v.cells)
    if (c.sigma.is_identity() && c.expected_dim < 0 && c.cls.nonempty()) return false;
  return true;
}

inline InvariantReport compute_invariants(const GermVerdict& v) {
  if (!v.a_finite) throw NotAFinite("germ is not A-finite");
  InvariantReport r;
  r.n = v.n;
  r.p = v.p;
  r.kappa = v.kappa;
  r.d = v.d_of_f;
  r.s = 1;
  r.degenerate = v.p > 2 * v.n;
  r.top_term = mu_top_term(r.s, r.d);
  r.no_unexpected = no_unexpected_deformations(v);
  for (int k = 2; k <= r.d; ++k) r.mu_alt.push_back(mu_alt_dk(v, k));
  if (r.degenerate) {
    r.mu_I = r.nu_I = r.s > 1 ? r.top_term - 1 : 0;
    return r;
  }
  const int d2 = expected_dim(v.n, v.p, 2);
  long sum = 0;
  long signed_sum = 0;
  for (const auto& m : r.mu_alt) {
    sum += m.value;
    int dk = expected_dim(v.n, v.p, m.k);
    signed_sum += ((dk + m.k - 1) % 2 ? -1 : 1) * m.value;
  }
  r.mu_I = sum + r.top_term;
  r.nu_I = ((d2 + 1) % 2 ? -1 : 1) * signed_sum + ((r.d + d2) % 2 ? -1 : 1) * r.top_term;
  for (const auto& m : r.mu_alt) {
    int dk = expected_dim(v.n, v.p, m.k);
    if (m.value != 0 && dk >= 0) {
      r.icss.push_back({m.k - 1, dk + 1, m.value, m.k});
      r.image_betti[dk + m.k - 1] += m.value;
    }
  }
  if (r.top_term != 0) {
    r.icss.push_back({r.d, 0, r.top_term, 0});
    r.image_betti[r.d] += r.top_term;
  }
  return r;
}

struct MuConservationData {
  long mu_I = 0;                  // of the germ
  std::optional<long> nu_I;       // nu is checked only when given
  std::map<int, long> betti;      // beta_i(im f_t), i > 0
  std::vector<long> local_mu_I;   // mu_I(f_t; y)
  std::vector<long> local_nu_I;   // nu_I(f_t; y)
  std::optional<long> delta;      // beta_1^Alt(D^kappa(f_t)) when d_kappa = 1
};

struct MuConservationVerdict {
  Verdict mu;
  Verdict nu;
  bool integer_ratio = false;
  bool nu_checked = false;
  bool holds() const { return mu.holds && nu.holds; }
};

inline MuConservationVerdict check_mu_conservation(int n, int p, const MuConservationData& data) {
  check_dims(n, p);
  if (p > 2 * n) throw DomainError("conservation of the image Milnor number needs p <= 2n");
  const int kap = kappa(n, p);
  const int d2 = expected_dim(n, p, 2);
  const bool integer_ratio = p % (p - n) == 0;
  long delta = 0;
  if (!integer_ratio && expected_dim(n, p, kap) == 1) {
    if (!data.delta) throw DomainError("d_kappa = 1: the correction term delta must be supplied");
    delta = *data.delta;
  } else if (data.delta && *data.delta != 0) {
    throw InconsistentData("delta is only meaningful when d_kappa = 1");
  }
  if (data.local_nu_I.size() != data.local_mu_I.size() && !data.local_nu_I.empty())
    throw InconsistentData("local mu_I and nu_I lists differ in length");
  auto sgn = [](int e) { return (e % 2 + 2) % 2 ? -1L : 1L; };
  long mu_rhs = 0, nu_rhs = 0;
  for (const auto& [i, b] : data.betti) {
    if (i <= 0) throw InconsistentData("Betti numbers of the image are indexed from 1");
    if (i == kap) continue;
    mu_rhs += b;
    nu_rhs += sgn(i + d2 + 1) * b;
  }
  for (long l : data.local_mu_I) mu_rhs += l;
  for (long l : data.local_nu_I) nu_rhs += l;
  if (!integer_ratio) {
    long bk = data.betti.count(kap) ? data.betti.at(kap) : 0;
    mu_rhs += -bk + delta;
    nu_rhs -= sgn(kap + d2 + 1) * (bk - delta);
  }
  MuConservationVerdict out;
  out.integer_ratio = integer_ratio;
  out.mu.difference = data.mu_I - mu_rhs;
  out.mu.holds = out.mu.difference == 0;
  out.mu.detail = std::to_string(data.mu_I) + " vs " + std::to_string(mu_rhs);
  if (data.nu_I) {
    out.nu_checked = true;
    out.nu.difference = *data.nu_I - nu_rhs;
    out.nu.holds = out.nu.difference == 0;
    out.nu.detail = std::to_string(*data.nu_I) + " vs " + std::to_string(nu_rhs);
  }
  for (long l : data.local_mu_I)
    if (l > data.mu_I) out.mu.semicontinuous = false;
  return out;
}

/// Image family data file:
///   n <int>  p <int>  mu_I <int>  nu_I <int>   (nu_I optional)
///   betti <i> <rank>                             (repeatable)
///   local_mu_I <int>  local_nu_I <int>           (repeatable)
///   delta <int>
struct ImageFamilyFile {
  int n = 0, p = 0;
  MuConservationData data;
};

inline bool looks_like_image_family(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string key;
    if (ls >> key && (key == "mu_I" || key == "local_mu_I")) return true;
  }
  return false;
}

inline ImageFamilyFile parse_image_family(std::istream& in) {
  ImageFamilyFile f;
  bool have_n = false, have_p = false, have_mu = false;
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
    auto integer = [&]() {
      long v;
      if (!(ls >> v)) throw fail("expected an integer");
      return v;
    };
    if (key == "n") {
      f.n = static_cast<int>(integer());
      have_n = true;
    } else if (key == "p") {
      f.p = static_cast<int>(integer());
      have_p = true;
    } else if (key == "mu_I") {
      f.data.mu_I = integer();
      have_mu = true;
    } else if (key == "nu_I") {
      f.data.nu_I = integer();
    } else if (key == "betti") {
      int i = static_cast<int>(integer());
      if (f.data.betti.count(i)) throw fail("betti " + std::to_string(i) + " given twice");
      f.data.betti[i] = integer();
    } else if (key == "local_mu_I") {
      f.data.local_mu_I.push_back(integer());
    } else if (key == "local_nu_I") {
      f.data.local_nu_I.push_back(integer());
    } else if (key == "delta") {
      f.data.delta = integer();
    } else {
      throw fail("unknown record '" + key + "'");
    }
    std::string extra;
    if (ls >> extra) throw fail("trailing text '" + extra + "'");
  }
  if (!have_n || !have_p || !have_mu) throw ParseError("image family data needs n, p and mu_I", 0, lineno);
  return f;
}

}  // namespace mpgerm
