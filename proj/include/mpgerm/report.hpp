#pragma once

#include <iomanip>
#include <sstream>
#include <string>

#include <json.hpp>

#include "mpgerm/invariants.hpp"
#include "mpgerm/isotype.hpp"
#include "mpgerm/multipoint.hpp"
#include "mpgerm/symrep.hpp"

namespace mpgerm {

using Json = nlohmann::ordered_json;

inline Json rational_json(const Rational& q) {
  if (is_integer(q) && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return to_string(q);
}

inline Json milnor_json(const MilnorData& m) {
  return Json{{"mu", m.mu},
              {"beta0", m.beta0},
              {"mu_plus0", m.mu_plus0},
              {"mu_minus0", m.mu_minus0},
              {"mu_tilde", m.mu_tilde}};
}

inline Json cell_json(const MultiPointSpace& c) {
  Json j{{"k", c.k},
         {"sigma", c.sigma.label()},
         {"expected_dim", c.expected_dim},
         {"class", kind_name(c.cls.kind)},
         {"evidence", c.cls.evidence}};
  if (c.cls.kind == VarietyKind::Smooth || c.cls.kind == VarietyKind::Icis) j["dim"] = c.cls.dim;
  if (c.milnor) j["milnor"] = milnor_json(*c.milnor);
  if (auto q = c.ideal.quotient_dimension(); q && c.cls.nonempty()) j["quotient_dim"] = *q;
  return j;
}

inline Json verdict_json(const GermVerdict& v) {
  Json cells = Json::array();
  for (const auto& c : v.cells) cells.push_back(cell_json(c));
  return Json{{"n", v.n},
              {"p", v.p},
              {"kappa", v.kappa},
              {"d_of_f", v.d_of_f},
              {"stable", v.stable},
              {"a_finite", v.a_finite},
              {"strongly_contractible", v.strongly_contractible},
              {"cells", cells}};
}

inline Json icss_json(const InvariantReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.icss) entries.push_back(Json{{"r", e.r}, {"q", e.q}, {"value", e.value}});
  return entries;
}

inline Json invariants_json(const InvariantReport& r) {
  Json alt = Json::array();
  for (const auto& m : r.mu_alt)
    alt.push_back(Json{{"k", m.k},
                       {"mu_alt", m.value},
                       {"formula_betti", rational_json(m.formula_betti)},
                       {"formula_pm", rational_json(m.formula_pm)}});
  Json betti = Json::object();
  for (const auto& [i, b] : r.image_betti) betti[std::to_string(i)] = b;
  return Json{{"s", r.s},
              {"d", r.d},
              {"mu_alt", alt},
              {"top_term", r.top_term},
              {"mu_I", r.mu_I},
              {"nu_I", r.nu_I},
              {"degenerate", r.degenerate},
              {"no_unexpected_deformations", r.no_unexpected},
              {"icss", icss_json(r)},
              {"image_betti", betti}};
}

inline std::string verdict_text(const GermVerdict& v) {
  std::ostringstream os;
  os << "germ (n, p) = (" << v.n << ", " << v.p << "), kappa = " << v.kappa << ", d(f) = " << v.d_of_f
     << "\n";
  os << "stable: " << (v.stable ? "yes" : "no") << "\n";
  os << "A-finite: " << (v.a_finite ? "yes" : "no") << "\n";
  os << "strongly contractible: " << (v.strongly_contractible ? "yes" : "no") << "\n";
  for (const auto& c : v.cells) {
    os << "  D^" << c.k << " " << std::left << std::setw(12) << c.sigma.label() << " d=" << std::right
       << std::setw(3) << c.expected_dim << "  " << kind_name(c.cls.kind);
    if (c.milnor && c.cls.nonempty()) os << "  mu=" << c.milnor->mu << " beta0=" << c.milnor->beta0;
    os << "\n";
  }
  return os.str();
}

inline std::string invariants_text(const InvariantReport& r) {
  std::ostringstream os;
  for (const auto& m : r.mu_alt) os << "mu_" << m.k << "^Alt = " << m.value << "\n";
  os << "top term = " << r.top_term << "\n";
  os << "mu_I = " << r.mu_I << "\n";
  os << "nu_I = " << r.nu_I << "\n";
  if (r.degenerate) os << "degenerate dimensions (p > 2n)\n";
  os << "no unexpected deformations: " << (r.no_unexpected ? "yes" : "no") << "\n";
  return os.str();
}

/// Grid with rows q (top to bottom) and columns r; '.' marks a possible
/// position that is zero, blanks are impossible positions.
inline std::string icss_text(const InvariantReport& r) {
  auto layout = icss_layout(r.n, r.p);
  int maxr = 0, maxq = 0;
  for (auto [c, q] : layout) {
    maxr = std::max(maxr, c);
    maxq = std::max(maxq, q);
  }
  auto value_at = [&](int c, int q) -> std::string {
    for (const auto& e : r.icss)
      if (e.r == c && e.q == q) return std::to_string(e.value);
    for (auto [lc, lq] : layout)
      if (lc == c && lq == q) return ".";
    return "";
  };
  std::ostringstream os;
  for (int q = maxq; q >= 0; --q) {
    os << std::setw(3) << q << " |";
    for (int c = 0; c <= maxr; ++c) os << std::setw(4) << value_at(c, q);
    os << "\n";
  }
  os << "    +";
  for (int c = 0; c <= maxr; ++c) os << "----";
  os << "\n     ";
  for (int c = 0; c <= maxr; ++c) os << std::setw(4) << c;
  os << "\n";
  return os.str();
}

inline std::string icss_csv(const InvariantReport& r) {
  std::ostringstream os;
  os << "r,q,value\n";
  for (const auto& e : r.icss) os << e.r << ',' << e.q << ',' << e.value << "\n";
  return os.str();
}

inline Json table_json(const CharacterTable& t) {
  Json classes = Json::array();
  for (const auto& c : t.classes()) classes.push_back(Json{{"label", c.label}, {"size", c.size}});
  Json irreps = Json::array();
  for (const auto& r : t.irreducibles()) {
    Json vals = Json::array();
    for (const auto& v : r.values) vals.push_back(rational_json(v));
    irreps.push_back(Json{{"label", r.label}, {"degree", r.degree}, {"values", vals}});
  }
  return Json{{"group", t.name()}, {"order", t.group_order()}, {"classes", classes}, {"irreducibles", irreps}};
}

inline std::string table_csv(const CharacterTable& t) {
  std::ostringstream os;
  os << "irrep";
  for (const auto& c : t.classes()) os << ",\"" << c.label << '"';
  os << "\nsize";
  for (const auto& c : t.classes()) os << ',' << c.size;
  os << "\n";
  for (const auto& r : t.irreducibles()) {
    os << '"' << r.label << '"';
    for (const auto& v : r.values) os << ',' << to_string(v);
    os << "\n";
  }
  return os.str();
}

inline Json isotype_json(const IsotypeVector& x) {
  Json j = Json::object();
  for (const auto& [l, v] : x.entries) j[l] = rational_json(v);
  return j;
}

}  // namespace mpgerm
