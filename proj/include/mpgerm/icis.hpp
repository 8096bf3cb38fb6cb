#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mpgerm/error.hpp"
#include "mpgerm/linalg.hpp"
#include "mpgerm/localalg.hpp"

namespace mpgerm {

inline constexpr std::uint64_t kDefaultSeed = 20240601;
inline constexpr int kChainRetries = 8;

enum class VarietyKind { Empty, Smooth, Icis, IsolatedPoints, NotIcis };

inline const char* kind_name(VarietyKind k) {
  switch (k) {
    case VarietyKind::Empty: return "Empty";
    case VarietyKind::Smooth: return "Smooth";
    case VarietyKind::Icis: return "Icis";
    case VarietyKind::IsolatedPoints: return "IsolatedPoints";
    case VarietyKind::NotIcis: return "NotIcis";
  }
  return "?";
}

struct VarietyClass {
  VarietyKind kind = VarietyKind::NotIcis;
  int dim = -1;                // Smooth, Icis
  std::optional<long> mu;      // Icis (Smooth has mu 0)
  std::string evidence;

  bool empty() const { return kind == VarietyKind::Empty; }
  bool nonempty() const { return kind != VarietyKind::Empty; }
  bool singular() const { return kind == VarietyKind::Icis || kind == VarietyKind::NotIcis; }
};

struct MilnorData {
  long mu = 0;
  long beta0 = 0;
  long mu_plus0 = 0;
  long mu_minus0 = 0;
  long mu_tilde = 0;

  bool operator==(const MilnorData&) const = default;
};

struct ChainOptions {
  std::uint64_t seed = kDefaultSeed;
  /// Recombine generators randomly before the first attempt as well.
  bool randomize_first = false;
};

namespace detail {

/// Random integer matrix with entries in [-3, 3]. Uses the raw engine output
/// so results do not depend on the standard library's distributions.
inline RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  RationalMatrix m(rows, std::vector<Rational>(cols));
  for (auto& row : m)
    for (auto& e : row) e = static_cast<long>(rng() % 7) - 3;
  return m;
}

inline std::vector<MultiPoly> combine(const RationalMatrix& a, const std::vector<MultiPoly>& g) {
  std::vector<MultiPoly> out;
  for (const auto& row : a) {
    MultiPoly s(g.front().var_ptr());
    for (std::size_t j = 0; j < g.size(); ++j)
      if (row[j] != 0) s += row[j] * g[j];
    out.push_back(std::move(s));
  }
  return out;
}

/// Alternating sum of the chain quotients, or nullopt if one is infinite.
inline std::optional<long> le_greuel_chain(const std::vector<MultiPoly>& g, const VarSet::Ptr& vars,
                                           std::uint64_t budget) {
  const std::size_t nv = vars->size();
  std::vector<long> q;
  std::vector<std::vector<MultiPoly>> jac;
  for (std::size_t i = 0; i < g.size(); ++i) {
    std::vector<MultiPoly> row;
    for (std::size_t v = 0; v < nv; ++v) row.push_back(derivative(g[i], v));
    jac.push_back(std::move(row));
    std::vector<MultiPoly> gens(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(i));
    for (auto& m : maximal_minors(jac, nv)) gens.push_back(std::move(m));
    LocalIdeal ideal(vars, std::move(gens), budget);
    auto d = ideal.quotient_dimension();
    if (!d) return std::nullopt;
    q.push_back(static_cast<long>(*d));
  }
  long mu = 0;
  for (std::size_t i = 0; i < q.size(); ++i) mu = q[i] - mu;
  return mu;
}

/// c generators of the same ideal, if the ideal is a complete intersection
/// of codimension c and such generators are found.
inline std::optional<std::vector<MultiPoly>> ci_generators(const LocalIdeal& I, std::size_t c,
                                                           std::mt19937_64& rng) {
  const auto& g = I.generators();
  if (g.size() < c) return std::nullopt;
  if (g.size() == c) return g;
  auto generates = [&](const std::vector<MultiPoly>& cand) {
    LocalIdeal J(I.ambient(), cand, I.budget());
    for (const auto& h : g)
      if (!J.contains(h)) return false;
    return true;
  };
  for (int attempt = 0; attempt < kChainRetries; ++attempt) {
    auto cand = combine(random_matrix(rng, c, g.size()), g);
    if (generates(cand)) return cand;
  }
  return std::nullopt;
}

}  // namespace detail

/// mu = dim O / (dg/dx_1, ..., dg/dx_N). Throws DomainError for a
/// non-isolated singularity.
inline long milnor_hypersurface(const MultiPoly& g, std::uint64_t budget = kDefaultBudget) {
  std::vector<MultiPoly> jac;
  for (std::size_t v = 0; v < g.nvars(); ++v) jac.push_back(derivative(g, v));
  LocalIdeal J(g.var_ptr(), std::move(jac), budget);
  auto d = J.quotient_dimension();
  if (!d) throw DomainError("non-isolated singularity: Jacobian quotient is infinite");
  return static_cast<long>(*d);
}

/// Milnor number of an ICIS of dimension `dim`. Returns nullopt when no
/// admissible chain was found within the retry limit.
inline std::optional<long> milnor_icis(const LocalIdeal& I, int dim, const ChainOptions& opt = {}) {
  if (I.contains_unit()) throw DomainError("milnor_icis: empty germ");
  const std::size_t nv = I.nvars();
  if (dim < 0 || static_cast<std::size_t>(dim) > nv) throw DomainError("milnor_icis: bad dimension");
  if (dim == 0) {
    auto d = I.quotient_dimension();
    if (!d) return std::nullopt;
    return static_cast<long>(*d) - 1;
  }
  const std::size_t c = nv - static_cast<std::size_t>(dim);
  if (c == 0) return 0;
  std::mt19937_64 rng(opt.seed);
  auto gens = detail::ci_generators(I, c, rng);
  if (!gens) return std::nullopt;
  for (int attempt = 0; attempt <= kChainRetries; ++attempt) {
    std::vector<MultiPoly> chain = *gens;
    if (attempt > 0 || opt.randomize_first) {
      RationalMatrix a;
      do {
        a = detail::random_matrix(rng, c, c);
      } while (rank(a) != c);
      chain = detail::combine(a, *gens);
    }
    auto mu = detail::le_greuel_chain(chain, I.ambient(), I.budget());
    if (mu) return mu;
  }
  return std::nullopt;
}

/// Decides Empty / Smooth / Icis / IsolatedPoints / NotIcis for the germ at
/// the origin of V(I), given the dimension it ought to have.
inline VarietyClass classify(const LocalIdeal& I, int expected_dim, const ChainOptions& opt = {}) {
  const int nv = static_cast<int>(I.nvars());
  if (expected_dim > nv) throw DomainError("classify: expected dimension exceeds ambient dimension");
  VarietyClass out;
  if (I.contains_unit()) {
    out.kind = VarietyKind::Empty;
    out.evidence = "standard basis contains a unit";
    return out;
  }
  int kd = I.krull_dimension();
  if (expected_dim < 0) {
    if (kd == 0) {
      out.kind = VarietyKind::IsolatedPoints;
      out.dim = 0;
      out.evidence = "negative expected dimension, locus is the base point";
    } else {
      out.kind = VarietyKind::NotIcis;
      out.dim = kd;
      out.evidence = "negative expected dimension but Krull dimension " + std::to_string(kd);
    }
    return out;
  }
  if (kd != expected_dim) {
    out.kind = VarietyKind::NotIcis;
    out.dim = kd;
    out.evidence = "Krull dimension " + std::to_string(kd) + " differs from expected " +
                   std::to_string(expected_dim);
    return out;
  }
  std::size_t r = jacobian_rank_at_origin(I.generators(), I.nvars());
  if (static_cast<int>(r) == nv - expected_dim) {
    out.kind = VarietyKind::Smooth;
    out.dim = expected_dim;
    out.mu = 0;
    out.evidence = "Jacobian rank " + std::to_string(r) + " at the origin";
    return out;
  }
  auto mu = milnor_icis(I, expected_dim, opt);
  if (!mu) {
    out.kind = VarietyKind::NotIcis;
    out.dim = kd;
    out.evidence = "no admissible complete-intersection chain with finite quotients";
    return out;
  }
  out.kind = VarietyKind::Icis;
  out.dim = expected_dim;
  out.mu = *mu;
  out.evidence = "Le-Greuel chain";
  return out;
}

inline MilnorData milnor_data(const VarietyClass& cls) {
  MilnorData m;
  switch (cls.kind) {
    case VarietyKind::Empty:
      return m;
    case VarietyKind::Smooth:
    case VarietyKind::Icis:
      m.mu = cls.mu.value_or(0);
      m.beta0 = 1;
      m.mu_tilde = m.mu;
      break;
    case VarietyKind::IsolatedPoints:
      m.mu = 0;
      m.beta0 = 1;
      m.mu_tilde = -1;
      break;
    case VarietyKind::NotIcis:
      throw NotAFinite("Milnor data requested for a non-ICIS locus (" + cls.evidence + ")");
  }
  m.mu_plus0 = m.mu + m.beta0;
  m.mu_minus0 = m.mu - m.beta0;
  return m;
}

inline MilnorData milnor_data(const LocalIdeal& I, int expected_dim, const ChainOptions& opt = {}) {
  return milnor_data(classify(I, expected_dim, opt));
}

}  // namespace mpgerm
