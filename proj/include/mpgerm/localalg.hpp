#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mpgerm/error.hpp"
#include "mpgerm/poly.hpp"

namespace mpgerm {

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

/// Counts reduction steps and throws ResourceLimit once `limit` is passed.
class StepBudget {
 public:
  explicit StepBudget(std::uint64_t limit = kDefaultBudget) : limit_(limit) {}
  void tick(std::uint64_t n = 1) {
    used_ += n;
    if (used_ > limit_)
      throw ResourceLimit("step budget of " + std::to_string(limit_) + " exhausted");
  }
  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

namespace detail {

struct Term {
  Monomial m;
  Rational c;
};

/// Polynomial with terms sorted by decreasing LocalOrder; front() is the
/// leading term.
struct LPoly {
  std::vector<Term> t;
  unsigned maxdeg = 0;

  bool zero() const { return t.empty(); }
  const Monomial& lm() const { return t.front().m; }
  const Rational& lc() const { return t.front().c; }
  int ecart() const { return static_cast<int>(maxdeg) - static_cast<int>(lm().degree()); }
};

inline LPoly to_local(const MultiPoly& p) {
  LPoly r;
  r.t.reserve(p.term_count());
  for (const auto& [m, c] : p.terms()) {
    r.t.push_back({m, c});
    r.maxdeg = std::max(r.maxdeg, m.degree());
  }
  std::sort(r.t.begin(), r.t.end(),
            [](const Term& a, const Term& b) { return LocalOrder::greater(a.m, b.m); });
  return r;
}

inline MultiPoly from_local(const LPoly& p, const VarSet::Ptr& vars) {
  MultiPoly r(vars);
  for (const auto& [m, c] : p.t) r.add_term(m, c);
  return r;
}

/// a - c*m*b, merging in order.
inline LPoly sub_mul(const LPoly& a, const Rational& c, const Monomial& m, const LPoly& b) {
  LPoly r;
  r.t.reserve(a.t.size() + b.t.size());
  std::size_t i = 0, j = 0;
  auto push = [&](const Monomial& mon, Rational v) {
    if (v == 0) return;
    r.maxdeg = std::max(r.maxdeg, mon.degree());
    r.t.push_back({mon, std::move(v)});
  };
  while (i < a.t.size() || j < b.t.size()) {
    if (j == b.t.size()) {
      push(a.t[i].m, a.t[i].c);
      ++i;
      continue;
    }
    Monomial mb = m * b.t[j].m;
    if (i == a.t.size()) {
      push(mb, -c * b.t[j].c);
      ++j;
      continue;
    }
    int cmp = LocalOrder::compare(a.t[i].m, mb);
    if (cmp > 0) {
      push(a.t[i].m, a.t[i].c);
      ++i;
    } else if (cmp < 0) {
      push(mb, -c * b.t[j].c);
      ++j;
    } else {
      push(mb, a.t[i].c - c * b.t[j].c);
      ++i;
      ++j;
    }
  }
  return r;
}

inline void make_monic(LPoly& p) {
  if (p.zero() || p.lc() == 1) return;
  Rational inv = 1 / p.lc();
  for (auto& term : p.t) term.c *= inv;
}

inline LPoly spoly(const LPoly& f, const LPoly& g) {
  Monomial l = f.lm().lcm(g.lm());
  LPoly lhs;
  Monomial mf = l / f.lm();
  Rational cf = 1 / f.lc();
  for (const auto& term : f.t) {
    lhs.t.push_back({mf * term.m, cf * term.c});
    lhs.maxdeg = std::max(lhs.maxdeg, lhs.t.back().m.degree());
  }
  return sub_mul(lhs, 1 / g.lc(), l / g.lm(), g);
}

/// Mora normal form with ecart-minimising selection. The result is either
/// zero or has a leading monomial outside the leading ideal of `basis`.
inline LPoly mora_nf(LPoly h, const std::vector<LPoly>& basis, StepBudget& budget) {
  std::vector<LPoly> extra;
  while (!h.zero()) {
    const LPoly* best = nullptr;
    for (const auto& g : basis)
      if (g.lm().divides(h.lm()) && (!best || g.ecart() < best->ecart())) best = &g;
    for (const auto& g : extra)
      if (g.lm().divides(h.lm()) && (!best || g.ecart() < best->ecart())) best = &g;
    if (!best) break;
    budget.tick();
    LPoly g = *best;
    if (g.ecart() > h.ecart()) extra.push_back(h);
    h = sub_mul(h, h.lc() / g.lc(), h.lm() / g.lm(), g);
  }
  return h;
}

}  // namespace detail

/// Ideal of the local ring at the origin, generated by polynomials over a
/// fixed variable list. The standard basis and derived facts are computed
/// lazily once and shared between copies.
class LocalIdeal {
 public:
  LocalIdeal(VarSet::Ptr ambient, std::vector<MultiPoly> gens,
             std::uint64_t budget = kDefaultBudget)
      : ambient_(std::move(ambient)), cache_(std::make_shared<Cache>()), budget_(budget) {
    for (auto& g : gens) {
      if (!same_vars(g.var_ptr(), ambient_))
        throw VarSetMismatch("LocalIdeal: generator over a different variable list");
      if (!g.is_zero()) gens_.push_back(std::move(g));
    }
  }

  const VarSet::Ptr& ambient() const { return ambient_; }
  const std::vector<MultiPoly>& generators() const { return gens_; }
  std::size_t nvars() const { return ambient_->size(); }
  std::uint64_t budget() const { return budget_; }

  /// Minimal standard basis (leading monomials pairwise non-dividing).
  const std::vector<MultiPoly>& standard_basis() const {
    ensure();
    return cache_->basis;
  }
  /// Minimal generators of the leading ideal.
  const std::vector<Monomial>& leading_monomials() const {
    ensure();
    return cache_->leading;
  }
  /// Reduction steps spent computing the basis.
  std::uint64_t steps_used() const {
    ensure();
    return cache_->steps;
  }

  bool contains_unit() const {
    ensure();
    return cache_->unit;
  }

  /// Mora normal form of p; zero iff p lies in the ideal.
  MultiPoly normal_form(const MultiPoly& p) const {
    if (!same_vars(p.var_ptr(), ambient_)) throw VarSetMismatch("normal_form: variable list mismatch");
    ensure();
    StepBudget b(budget_);
    return detail::from_local(detail::mora_nf(detail::to_local(p), cache_->lbasis, b), ambient_);
  }
  bool contains(const MultiPoly& p) const { return normal_form(p).is_zero(); }

  /// -1 for the unit ideal.
  int krull_dimension() const {
    ensure();
    return cache_->dim;
  }

  /// Number of standard monomials; nullopt when infinite.
  std::optional<std::uint64_t> quotient_dimension() const {
    ensure();
    return cache_->qdim;
  }

  LocalIdeal with_generators(std::vector<MultiPoly> extra) const {
    auto g = gens_;
    for (auto& e : extra) g.push_back(std::move(e));
    return LocalIdeal(ambient_, std::move(g), budget_);
  }

  /// One generator per line.
  std::string to_text() const {
    std::string s;
    for (const auto& g : gens_) s += to_string(g) + '\n';
    return s;
  }

 private:
  struct Cache {
    std::once_flag once;
    std::vector<detail::LPoly> lbasis;
    std::vector<MultiPoly> basis;
    std::vector<Monomial> leading;
    bool unit = false;
    int dim = 0;
    std::optional<std::uint64_t> qdim;
    std::uint64_t steps = 0;
  };

  void ensure() const {
    std::call_once(cache_->once, [this] { compute(*cache_); });
  }

  void compute(Cache& c) const {
    StepBudget budget(budget_);
    const std::size_t nv = nvars();
    std::vector<detail::LPoly> s;
    auto unit_found = [&] {
      detail::LPoly one;
      one.t.push_back({Monomial(nv), Rational(1)});
      s.assign(1, one);
    };
    bool unit = false;
    for (const auto& g : gens_) {
      auto lp = detail::to_local(g);
      detail::make_monic(lp);
      if (lp.lm().is_one()) {
        unit = true;
        break;
      }
      s.push_back(std::move(lp));
    }
    if (unit) {
      unit_found();
    } else {
      struct Pair {
        std::size_t i, j;
        unsigned deg;
      };
      std::vector<Pair> pairs;
      auto add_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
          if (s[i].lm().coprime(s[j].lm())) continue;
          pairs.push_back({i, j, s[i].lm().lcm(s[j].lm()).degree()});
        }
      };
      for (std::size_t j = 1; j < s.size(); ++j) add_pairs(j);
      while (!pairs.empty()) {
        auto it = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
          if (a.deg != b.deg) return a.deg < b.deg;
          if (a.j != b.j) return a.j < b.j;
          return a.i < b.i;
        });
        Pair pr = *it;
        pairs.erase(it);
        budget.tick();
        auto h = detail::mora_nf(detail::spoly(s[pr.i], s[pr.j]), s, budget);
        if (h.zero()) continue;
        detail::make_monic(h);
        if (h.lm().is_one()) {
          unit = true;
          unit_found();
          break;
        }
        s.push_back(std::move(h));
        add_pairs(s.size() - 1);
      }
    }

    // Keep one element per minimal leading monomial.
    std::vector<detail::LPoly> minimal;
    for (std::size_t i = 0; i < s.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < s.size() && !redundant; ++j) {
        if (i == j) continue;
        if (s[j].lm().divides(s[i].lm()) && (!(s[j].lm() == s[i].lm()) || j < i)) redundant = true;
      }
      if (!redundant) minimal.push_back(s[i]);
    }
    std::sort(minimal.begin(), minimal.end(), [](const detail::LPoly& a, const detail::LPoly& b) {
      return LocalOrder::greater(a.lm(), b.lm());
    });
    c.lbasis = std::move(minimal);
    for (const auto& p : c.lbasis) {
      c.basis.push_back(detail::from_local(p, ambient_));
      c.leading.push_back(p.lm());
    }
    c.unit = unit;
    c.steps = budget.used();
    c.dim = unit ? -1 : monomial_ideal_dimension(c.leading, nv);
    if (unit) {
      c.qdim = 0;
    } else if (c.dim == 0) {
      c.qdim = count_standard_monomials(c.leading, nv, budget);
    }
  }

  static int monomial_ideal_dimension(const std::vector<Monomial>& lead, std::size_t nv) {
    std::vector<std::uint32_t> supports;
    for (const auto& m : lead) {
      std::uint32_t mask = 0;
      for (std::size_t i = 0; i < nv; ++i)
        if (m[i]) mask |= 1u << i;
      supports.push_back(mask);
    }
    auto independent = [&](std::uint32_t set) {
      for (auto s : supports)
        if ((s & set) == s) return false;
      return true;
    };
    int best = 0;
    // Depth-first search over variable subsets with a size bound.
    std::vector<std::pair<std::size_t, std::uint32_t>> stack{{0, 0u}};
    while (!stack.empty()) {
      auto [i, set] = stack.back();
      stack.pop_back();
      int size = __builtin_popcount(set);
      best = std::max(best, size);
      if (i == nv || size + static_cast<int>(nv - i) <= best) continue;
      stack.push_back({i + 1, set});
      std::uint32_t with = set | (1u << i);
      if (independent(with)) stack.push_back({i + 1, with});
    }
    return best;
  }

  static std::uint64_t count_standard_monomials(const std::vector<Monomial>& lead, std::size_t nv,
                                                StepBudget& budget) {
    auto standard = [&](const Monomial& m) {
      for (const auto& l : lead)
        if (l.divides(m)) return false;
      return true;
    };
    std::vector<Monomial> layer{Monomial(nv)};
    std::uint64_t count = 0;
    while (!layer.empty()) {
      count += layer.size();
      std::set<Monomial> next;
      for (const auto& m : layer)
        for (std::size_t v = 0; v < nv; ++v) {
          Monomial t = m * Monomial::variable(nv, v);
          if (standard(t)) next.insert(t);
        }
      budget.tick(next.size());
      layer.assign(next.begin(), next.end());
    }
    return count;
  }

  VarSet::Ptr ambient_;
  std::vector<MultiPoly> gens_;
  std::shared_ptr<Cache> cache_;
  std::uint64_t budget_;
};

}  // namespace mpgerm
