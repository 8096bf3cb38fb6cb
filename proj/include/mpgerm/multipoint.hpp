#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mpgerm/error.hpp"
#include "mpgerm/icis.hpp"
#include "mpgerm/localalg.hpp"
#include "mpgerm/parse.hpp"
#include "mpgerm/poly.hpp"
#include "mpgerm/symrep.hpp"

namespace mpgerm {

inline void check_dims(int n, int p) {
  if (n < 1 || p <= n) throw DomainError("dimensions must satisfy 1 <= n < p");
}

inline int expected_dim(int n, int p, int k) { return p - k * (p - n); }

inline int expected_dim_sigma(int n, int p, int k, const Partition& lambda) {
  if (lambda.size() != k) throw DomainError("partition is not of k");
  return expected_dim(n, p, k) - k + lambda.cycles();
}

inline int kappa(int n, int p) {
  check_dims(n, p);
  return p / (p - n);
}

struct Feasibility {
  bool feasible = false;
  int kappa = 0;
  int components = 0;   // p - n + 1
  int slack = 0;        // p - kappa (p - n + 1)
  int x_needed = 0;     // (p - n + 1)(kappa - 1)
  int x_available = 0;  // n - 1
};

/// Existence of strongly contractible corank one mono-germs in (n, p).
inline Feasibility sc_dimension_feasible(int n, int p) {
  Feasibility f;
  f.kappa = kappa(n, p);
  f.components = p - n + 1;
  f.slack = p - f.kappa * f.components;
  f.x_needed = f.components * (f.kappa - 1);
  f.x_available = n - 1;
  f.feasible = f.slack >= 0;
  if (f.feasible != (f.x_needed <= f.x_available))
    throw InternalInconsistency("feasibility tests disagree");
  return f;
}

/// True when d_kappa - kappa + 1 < 0, which rules out strong contractibility.
inline bool prop_disg_check(int n, int p) {
  int k = kappa(n, p);
  return expected_dim(n, p, k) - k + 1 < 0;
}

/// Corank one mono-germ (x, h_1(x, y), ..., h_m(x, y)) with m = p - n + 1.
class GermSpec {
 public:
  GermSpec(int n, int p, std::vector<std::string> base, std::string corank,
           const std::vector<std::string>& components)
      : n_(n), p_(p) {
    check_dims(n, p);
    if (static_cast<int>(base.size()) != n - 1)
      throw DomainError("expected " + std::to_string(n - 1) + " base variables");
    auto names = base;
    names.push_back(corank);
    std::vector<VarRole> roles(base.size(), VarRole::base);
    roles.push_back(VarRole::corank);
    vars_ = VarSet::make(names, roles);
    if (static_cast<int>(components.size()) != p - n + 1)
      throw DomainError("expected " + std::to_string(p - n + 1) + " components, got " +
                        std::to_string(components.size()));
    for (const auto& c : components) comps_.push_back(parse_poly(c, vars_));
    validate();
  }

  GermSpec(int n, int p, VarSet::Ptr vars, std::vector<MultiPoly> comps)
      : n_(n), p_(p), vars_(std::move(vars)), comps_(std::move(comps)) {
    check_dims(n, p);
    if (static_cast<int>(vars_->size()) != n) throw DomainError("germ needs exactly n variables");
    if (static_cast<int>(comps_.size()) != p - n + 1) throw DomainError("wrong number of components");
    for (std::size_t i = 0; i + 1 < vars_->size(); ++i)
      if (vars_->role(i) != VarRole::base) throw DomainError("first n-1 variables must be base");
    if (vars_->role(vars_->size() - 1) != VarRole::corank) throw DomainError("last variable must be corank");
    validate();
  }

  int n() const { return n_; }
  int p() const { return p_; }
  int m() const { return p_ - n_ + 1; }
  const VarSet::Ptr& vars() const { return vars_; }
  const std::vector<MultiPoly>& components() const { return comps_; }
  std::vector<std::string> base_names() const {
    return {vars_->names().begin(), vars_->names().end() - 1};
  }
  const std::string& corank_name() const { return vars_->names().back(); }

 private:
  void validate() const {
    for (const auto& c : comps_) {
      if (!same_vars(c.var_ptr(), vars_)) throw VarSetMismatch("component over wrong variables");
      if (c.constant_term() != 0) throw DomainError("components must vanish at the origin");
    }
  }

  int n_, p_;
  VarSet::Ptr vars_;
  std::vector<MultiPoly> comps_;
};

/// Germ file:
///   # comment
///   n = 5
///   p = 8
///   base = x1 x2 x3 x4
///   corank = y
///   h1 = y^3 + x1*y
///   ...
/// The first n-1 target coordinates are the identity on the base variables.
inline GermSpec parse_germ(std::istream& in) {
  std::optional<int> n, p;
  std::optional<std::vector<std::string>> base;
  std::string corank = "y";
  std::vector<std::pair<int, std::string>> comps;
  std::vector<std::size_t> comp_lines;
  std::string line;
  std::size_t lineno = 0;
  auto trim = [](std::string s) {
    auto a = s.find_first_not_of(" \t\r");
    auto b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim(line);
    if (line.empty()) continue;
    auto fail = [&](const std::string& msg) {
      return ParseError(msg + " on line " + std::to_string(lineno), 0, lineno);
    };
    auto eq = line.find('=');
    if (eq == std::string::npos) throw fail("expected 'key = value'");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    auto integer = [&]() {
      if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos)
        throw fail("expected a positive integer");
      return std::stoi(value);
    };
    if (key == "n") {
      n = integer();
    } else if (key == "p") {
      p = integer();
    } else if (key == "base") {
      std::istringstream ls(value);
      std::vector<std::string> names;
      std::string t;
      while (ls >> t) names.push_back(t);
      base = names;
    } else if (key == "corank") {
      corank = value;
    } else if (key.size() > 1 && key[0] == 'h' &&
               key.find_first_not_of("0123456789", 1) == std::string::npos) {
      comps.push_back({std::stoi(key.substr(1)), value});
      comp_lines.push_back(lineno);
    } else {
      throw fail("unknown key '" + key + "'");
    }
  }
  if (!n || !p) throw ParseError("germ file must declare n and p", 0, lineno);
  if (!base) {
    std::vector<std::string> names;
    for (int i = 1; i < *n; ++i) names.push_back("x" + std::to_string(i));
    base = names;
  }
  for (std::size_t i = 0; i < comps.size(); ++i)
    if (comps[i].first != static_cast<int>(i) + 1)
      throw ParseError("components must be numbered h1, h2, ... in order", 0, comp_lines[i]);
  std::vector<std::string> texts;
  for (auto& c : comps) texts.push_back(c.second);
  // Re-raise polynomial errors with the line they came from.
  try {
    return GermSpec(*n, *p, *base, corank, texts);
  } catch (const ParseError& e) {
    std::size_t where = 0;
    for (std::size_t i = 0; i < texts.size(); ++i) {
      try {
        auto names = *base;
        names.push_back(corank);
        parse_poly(texts[i], VarSet::make(names));
      } catch (const ParseError&) {
        where = comp_lines[i];
        break;
      }
    }
    throw ParseError(std::string(e.what()) + (where ? " on line " + std::to_string(where) : ""),
                     e.offset(), where);
  }
}

inline GermSpec load_germ(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  return parse_germ(in);
}

inline std::string format_germ(const GermSpec& g) {
  std::ostringstream os;
  os << "n = " << g.n() << "\np = " << g.p() << "\nbase =";
  for (const auto& b : g.base_names()) os << ' ' << b;
  os << "\ncorank = " << g.corank_name() << '\n';
  for (std::size_t i = 0; i < g.components().size(); ++i)
    os << 'h' << i + 1 << " = " << to_string(g.components()[i]) << '\n';
  return os.str();
}

namespace detail {

inline std::string fresh_prefix(const GermSpec& g, const std::string& want) {
  std::string prefix = want;
  auto clash = [&](const std::string& pre) {
    for (const auto& b : g.base_names())
      if (b.rfind(pre, 0) == 0) return true;
    return false;
  };
  while (clash(prefix)) prefix += '_';
  return prefix;
}

}  // namespace detail

/// Variables x_1..x_{n-1}, y1..yk.
inline VarSet::Ptr multiple_point_vars(const GermSpec& g, int k) {
  std::vector<std::string> extra;
  std::string pre = detail::fresh_prefix(g, g.corank_name());
  for (int i = 1; i <= k; ++i) extra.push_back(pre + std::to_string(i));
  auto names = g.base_names();
  std::vector<VarRole> roles(names.size(), VarRole::base);
  for (auto& e : extra) {
    names.push_back(e);
    roles.push_back(VarRole::corank);
  }
  return VarSet::make(names, roles);
}

/// Iterated divided differences dd^j_i, 2 <= j <= k, in (x, y1..yk).
inline std::vector<MultiPoly> multiple_point_generators(const GermSpec& g, int k) {
  if (k < 2) throw DomainError("multiplicity must be at least 2");
  if (k > kMaxSymmetricDegree) throw DomainError("multiplicity above supported bound");
  auto amb = multiple_point_vars(g, k);
  const std::size_t nb = static_cast<std::size_t>(g.n() - 1);
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < nb; ++i) images.push_back(MultiPoly::variable(amb, i));
  images.push_back(MultiPoly::variable(amb, nb));
  std::vector<MultiPoly> level;
  for (const auto& h : g.components()) level.push_back(map_variables(h, amb, images));
  std::vector<MultiPoly> out;
  for (int j = 2; j <= k; ++j) {
    for (auto& d : level) {
      d = divided_difference(d, nb + static_cast<std::size_t>(j - 2), nb + static_cast<std::size_t>(j - 1));
      out.push_back(d);
    }
  }
  return out;
}

inline LocalIdeal multiple_point_equations(const GermSpec& g, int k, std::uint64_t budget = kDefaultBudget) {
  return LocalIdeal(multiple_point_vars(g, k), multiple_point_generators(g, k), budget);
}

/// D^k(f)^sigma for the canonical permutation of cycle type lambda: cycles
/// fill consecutive positions, longest first, and y_i becomes z_{cycle(i)}.
inline LocalIdeal fixed_locus_equations(const GermSpec& g, int k, const Partition& lambda,
                                        std::uint64_t budget = kDefaultBudget) {
  if (lambda.size() != k) throw DomainError("partition is not of k");
  if (lambda.is_identity()) return multiple_point_equations(g, k, budget);
  auto gens = multiple_point_generators(g, k);
  auto src = gens.front().var_ptr();
  std::string pre = detail::fresh_prefix(g, "z");
  auto names = g.base_names();
  std::vector<VarRole> roles(names.size(), VarRole::base);
  for (int c = 1; c <= lambda.cycles(); ++c) {
    names.push_back(pre + std::to_string(c));
    roles.push_back(VarRole::corank);
  }
  auto dst = VarSet::make(names, roles);
  const std::size_t nb = static_cast<std::size_t>(g.n() - 1);
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < nb; ++i) images.push_back(MultiPoly::variable(dst, i));
  for (std::size_t c = 0; c < lambda.parts.size(); ++c)
    for (int r = 0; r < lambda.parts[c]; ++r) images.push_back(MultiPoly::variable(dst, nb + c));
  std::vector<MultiPoly> sub;
  for (const auto& h : gens) sub.push_back(map_variables(h, dst, images));
  return LocalIdeal(dst, std::move(sub), budget);
}

struct MultiPointSpace {
  int k = 0;
  Partition sigma;
  LocalIdeal ideal;
  int expected_dim = 0;
  VarietyClass cls;
  std::optional<MilnorData> milnor;

  /// Dimension used in sign factors: the expected one, or 0 for isolated points.
  int actual_dim() const { return cls.kind == VarietyKind::IsolatedPoints ? 0 : expected_dim; }
};

struct AnalyzeOptions {
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = kDefaultSeed;
};

struct GermVerdict {
  int n = 0, p = 0;
  bool stable = false;
  bool a_finite = false;
  bool strongly_contractible = false;
  int d_of_f = 1;
  int kappa = 0;
  std::vector<MultiPointSpace> cells;  // by k, then partitions(k) order

  const MultiPointSpace* find(int k, const Partition& sigma) const {
    for (const auto& c : cells)
      if (c.k == k && c.sigma == sigma) return &c;
    return nullptr;
  }
  const MultiPointSpace* identity(int k) const {
    return find(k, Partition(std::vector<int>(static_cast<std::size_t>(k), 1)));
  }
  std::vector<const MultiPointSpace*> cells_of(int k) const {
    std::vector<const MultiPointSpace*> out;
    for (const auto& c : cells)
      if (c.k == k) out.push_back(&c);
    return out;
  }
};

/// Classifies D^k(f)^sigma for 2 <= k <= kappa + 1 and every cycle type and
/// derives the Marar-Mond verdicts.
inline GermVerdict analyze_germ(const GermSpec& g, const AnalyzeOptions& opt = {}) {
  GermVerdict v;
  v.n = g.n();
  v.p = g.p();
  v.kappa = kappa(g.n(), g.p());
  ChainOptions chain;
  chain.seed = opt.seed;
  const int top = v.kappa + 1;
  if (top > kMaxSymmetricDegree) throw DomainError("kappa + 1 exceeds the supported multiplicity");
  for (int k = 2; k <= top; ++k) {
    for (const auto& lambda : partitions(k)) {
      auto ideal = fixed_locus_equations(g, k, lambda, opt.budget);
      int e = expected_dim_sigma(g.n(), g.p(), k, lambda);
      auto cls = classify(ideal, e, chain);
      MultiPointSpace cell{k, lambda, std::move(ideal), e, cls, std::nullopt};
      if (cls.kind != VarietyKind::NotIcis) cell.milnor = milnor_data(cls);
      v.cells.push_back(std::move(cell));
    }
  }
  bool stable = true, afinite = true, all_smooth = true;
  for (const auto& c : v.cells) {
    const bool id = c.sigma.is_identity();
    if (c.cls.kind == VarietyKind::NotIcis) afinite = false;
    if (!id) continue;
    if (c.k <= v.kappa) {
      if (c.cls.kind != VarietyKind::Smooth && c.cls.kind != VarietyKind::Empty) stable = false;
      if (c.cls.kind != VarietyKind::Smooth) all_smooth = false;
      if (c.cls.nonempty()) v.d_of_f = std::max(v.d_of_f, c.k);
    } else if (c.cls.nonempty()) {
      stable = false;
    }
  }
  const auto* last = v.identity(top);
  v.stable = stable;
  v.a_finite = afinite;
  v.strongly_contractible = afinite && !stable && all_smooth && last->cls.nonempty();
  return v;
}

/// Strongly contractible germ for feasible (n, p). Level j = 1..kappa-1
/// gives every component a term x*y^j; the first r = p - kappa m components
/// get x*y^kappa and the rest get pure powers y^(kappa+1), y^(kappa+2), ...
inline GermSpec generate_sc_germ(int n, int p) {
  auto f = sc_dimension_feasible(n, p);
  if (!f.feasible)
    throw DomainError("no strongly contractible corank one germs for (n, p) = (" + std::to_string(n) +
                      ", " + std::to_string(p) + ")");
  const int m = f.components;
  const int r = f.slack;
  std::vector<std::string> base;
  for (int i = 1; i < n; ++i) base.push_back("x" + std::to_string(i));
  auto names = base;
  names.push_back("y");
  std::vector<VarRole> roles(base.size(), VarRole::base);
  roles.push_back(VarRole::corank);
  auto vars = VarSet::make(names, roles);
  const std::size_t ny = base.size();
  std::vector<MultiPoly> comps(static_cast<std::size_t>(m), MultiPoly(vars));
  std::size_t next_x = 0;
  auto xy = [&](int j) {
    Monomial mono(vars->size());
    mono.set(next_x++, 1);
    mono.set(ny, static_cast<unsigned>(j));
    return MultiPoly::monomial(vars, mono);
  };
  for (int j = 1; j < f.kappa; ++j)
    for (int i = 0; i < m; ++i) comps[static_cast<std::size_t>(i)] += xy(j);
  int power = f.kappa + 1;
  for (int i = 0; i < m; ++i) {
    if (i < r) {
      comps[static_cast<std::size_t>(i)] += xy(f.kappa);
    } else {
      comps[static_cast<std::size_t>(i)] += MultiPoly::monomial(vars, Monomial::variable(vars->size(), ny, power++));
    }
  }
  if (static_cast<int>(next_x) != n - 1) throw InternalInconsistency("generator used the wrong number of base variables");
  return GermSpec(n, p, vars, std::move(comps));
}

}  // namespace mpgerm
