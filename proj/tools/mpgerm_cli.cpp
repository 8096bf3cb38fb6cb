#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mpgerm/mpgerm.hpp"

namespace {

using namespace mpgerm;

enum Exit : int {
  kOk = 0,
  kParse = 1,
  kResource = 2,
  kNotAFinite = 3,
  kInfeasible = 4,
  kInconsistent = 5,
  kViolated = 6,
  kUsage = 7,
  kInternal = 8,
};

struct RunConfig {
  std::string format = "text";
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = kDefaultSeed;
  std::string tau;
  std::string output;
};

class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw DomainError("cannot write '" + path + "'");
    }
  }
  std::ostream& os() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

void emit(const RunConfig& cfg, const std::string& text) { Sink(cfg.output).os() << text; }
void emit(const RunConfig& cfg, const Json& j) { Sink(cfg.output).os() << j.dump(2) << "\n"; }

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  return in;
}

CharacterTable table_arg(const std::string& arg) {
  if (arg.size() > 1 && (arg[0] == 'S' || arg[0] == 's') &&
      arg.find_first_not_of("0123456789", 1) == std::string::npos)
    return character_table_symmetric(std::stoi(arg.substr(1)));
  return load_character_table(arg);
}

int cmd_analyze(const RunConfig& cfg, const std::string& path, bool icss_only) {
  auto germ = load_germ(path);
  auto v = analyze_germ(germ, AnalyzeOptions{cfg.budget, cfg.seed});
  if (!v.a_finite) {
    if (cfg.format == "json") {
      emit(cfg, Json{{"verdict", verdict_json(v)}, {"invariants", nullptr}});
    } else if (cfg.format == "csv") {
      emit(cfg, std::string("a_finite\nfalse\n"));
    } else {
      emit(cfg, verdict_text(v) + "invariants undefined: germ is not A-finite\n");
    }
    return kNotAFinite;
  }
  auto r = compute_invariants(v);
  if (icss_only) {
    if (cfg.format == "json")
      emit(cfg, Json{{"n", r.n}, {"p", r.p}, {"entries", icss_json(r)}});
    else if (cfg.format == "csv")
      emit(cfg, icss_csv(r));
    else
      emit(cfg, icss_text(r));
    return kOk;
  }
  if (cfg.format == "json") {
    emit(cfg, Json{{"verdict", verdict_json(v)}, {"invariants", invariants_json(r)}});
  } else if (cfg.format == "csv") {
    std::ostringstream os;
    os << "n,p,kappa,d,stable,a_finite,strongly_contractible,mu_I,nu_I\n"
       << v.n << ',' << v.p << ',' << v.kappa << ',' << v.d_of_f << ',' << v.stable << ',' << v.a_finite
       << ',' << v.strongly_contractible << ',' << r.mu_I << ',' << r.nu_I << "\n";
    emit(cfg, os.str());
  } else {
    emit(cfg, verdict_text(v) + invariants_text(r) + "ICSS (E_1 = E_infinity):\n" + icss_text(r));
  }
  return kOk;
}

int cmd_sc_feasible(const RunConfig& cfg, int n, int p) {
  auto f = sc_dimension_feasible(n, p);
  if (cfg.format == "json") {
    emit(cfg, Json{{"n", n},
                   {"p", p},
                   {"feasible", f.feasible},
                   {"kappa", f.kappa},
                   {"components", f.components},
                   {"slack", f.slack},
                   {"x_needed", f.x_needed},
                   {"x_available", f.x_available}});
  } else if (cfg.format == "csv") {
    std::ostringstream os;
    os << "n,p,feasible,kappa,components,slack,x_needed,x_available\n"
       << n << ',' << p << ',' << f.feasible << ',' << f.kappa << ',' << f.components << ',' << f.slack
       << ',' << f.x_needed << ',' << f.x_available << "\n";
    emit(cfg, os.str());
  } else {
    std::ostringstream os;
    os << (f.feasible ? "feasible" : "infeasible") << " (n, p) = (" << n << ", " << p << ")\n"
       << "kappa = " << f.kappa << ", components = " << f.components << ", slack p - kappa*(p-n+1) = "
       << f.slack << "\n"
       << "x variables needed " << f.x_needed << ", available " << f.x_available << "\n";
    emit(cfg, os.str());
  }
  return kOk;
}

int cmd_sc_generate(const RunConfig& cfg, int n, int p) {
  if (!sc_dimension_feasible(n, p).feasible) {
    std::cerr << "error: no strongly contractible corank one germ exists for (" << n << ", " << p << ")\n";
    return kInfeasible;
  }
  auto g = generate_sc_germ(n, p);
  auto v = analyze_germ(g, AnalyzeOptions{cfg.budget, cfg.seed});
  if (!v.strongly_contractible || compute_invariants(v).mu_I != 0)
    throw InternalInconsistency("generated germ failed its self-check");
  if (cfg.format == "json")
    emit(cfg, Json{{"n", n}, {"p", p}, {"germ", format_germ(g)}, {"self_check", verdict_json(v)}});
  else
    emit(cfg, format_germ(g));
  return kOk;
}

int cmd_char_table(const RunConfig& cfg, int k) {
  auto t = character_table_symmetric(k);
  if (cfg.format == "json")
    emit(cfg, table_json(t));
  else if (cfg.format == "csv")
    emit(cfg, table_csv(t));
  else
    emit(cfg, format_character_table(t));
  return kOk;
}

int cmd_isotype(const RunConfig& cfg, const std::string& table_path, const std::string& data_path) {
  auto t = table_arg(table_path);
  auto f = load_fixed_point_data(data_path);
  std::string tau_label = !cfg.tau.empty() ? cfg.tau : f.tau.value_or("");
  std::string quantity;
  IsotypeVector out;
  auto each = [&](auto&& fn) {
    for (std::size_t i = 0; i < t.irreducibles().size(); ++i) {
      if (!tau_label.empty() && i != t.irrep_index(tau_label)) continue;
      out.entries.emplace_back(t.irreducibles()[i].label, fn(i));
    }
  };
  int kinds = !f.euler.empty() + !f.single.empty() + !f.icis.empty();
  if (kinds != 1) throw DomainError("data file must hold exactly one of euler, single or icis records");
  int d = 0;
  if (!f.euler.empty()) {
    quantity = "chi_tau";
    auto data = by_class(t, f.euler);
    each([&](std::size_t i) { return tau_characteristic(t, data, i); });
  } else if (!f.single.empty()) {
    quantity = "betti_tau";
    auto data = by_class(t, f.single);
    d = f.d.value_or(data[0].dim);
    each([&](std::size_t i) { return tau_betti_single_dim(t, data, i, d); });
  } else {
    quantity = "mu_tau";
    auto data = by_class(t, f.icis);
    d = f.d.value_or(data[0].dim);
    each([&](std::size_t i) { return mu_tau(t, data, i, d); });
  }
  auto alias = [&](const std::string& label) -> std::string {
    std::size_t i = t.irrep_index(label);
    if (t.alt_index() && *t.alt_index() == i) return "Alt";
    if (i == t.trivial_index()) return "trivial";
    return "";
  };
  if (cfg.format == "json") {
    Json values = Json::array();
    for (const auto& [l, v] : out.entries) {
      Json e{{"irrep", l}, {"value", rational_json(v)}};
      if (auto a = alias(l); !a.empty()) e["alias"] = a;
      values.push_back(e);
    }
    emit(cfg, Json{{"group", t.name()}, {"quantity", quantity}, {"d", d}, {"values", values}});
  } else if (cfg.format == "csv") {
    std::ostringstream os;
    os << "irrep,alias," << quantity << "\n";
    for (const auto& [l, v] : out.entries) os << '"' << l << "\"," << alias(l) << ',' << to_string(v) << "\n";
    emit(cfg, os.str());
  } else {
    std::ostringstream os;
    os << quantity << " over " << t.name() << "\n";
    for (const auto& [l, v] : out.entries) {
      auto a = alias(l);
      os << (a.empty() ? l : a + " " + l) << ": " << to_string(v) << "\n";
    }
    emit(cfg, os.str());
  }
  return kOk;
}

/// Ideal file: a `vars = x y z` line, an optional `dim = d` line, then one
/// generator per line.
int cmd_milnor(const RunConfig& cfg, const std::string& path) {
  auto in = open_input(path);
  VarSet::Ptr vars;
  std::optional<int> dim;
  std::vector<std::string> lines;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (auto eq = line.find('='); eq != std::string::npos) {
      std::istringstream key(line.substr(0, eq));
      std::string k;
      key >> k;
      std::istringstream rest(line.substr(eq + 1));
      if (k == "vars") {
        std::vector<std::string> names;
        for (std::string nm; rest >> nm;) names.push_back(nm);
        vars = VarSet::make(names);
      } else if (k == "dim") {
        int v;
        if (!(rest >> v)) throw ParseError("bad dim on line " + std::to_string(lineno), 0, lineno);
        dim = v;
      } else {
        throw ParseError("unknown header '" + k + "' on line " + std::to_string(lineno), 0, lineno);
      }
      continue;
    }
    lines.push_back(line);
  }
  if (!vars) throw ParseError("ideal file needs a 'vars = ...' line", 0, lineno);
  std::vector<MultiPoly> gens;
  for (const auto& l : lines) gens.push_back(parse_poly(l, vars));
  const int e = dim.value_or(static_cast<int>(vars->size()) - static_cast<int>(gens.size()));
  LocalIdeal I(vars, gens, cfg.budget);
  auto cls = classify(I, e, ChainOptions{cfg.seed});
  if (cls.kind == VarietyKind::NotIcis) {
    if (cfg.format == "json")
      emit(cfg, Json{{"class", kind_name(cls.kind)}, {"dim", cls.dim}, {"evidence", cls.evidence}});
    else
      emit(cfg, std::string(kind_name(cls.kind)) + " (" + cls.evidence + ")\n");
    return kNotAFinite;
  }
  auto m = milnor_data(cls);
  if (cfg.format == "json") {
    Json j{{"class", kind_name(cls.kind)}, {"expected_dim", e}, {"evidence", cls.evidence}};
    j["milnor"] = milnor_json(m);
    emit(cfg, j);
  } else if (cfg.format == "csv") {
    std::ostringstream os;
    os << "class,expected_dim,mu,beta0,mu_tilde\n"
       << kind_name(cls.kind) << ',' << e << ',' << m.mu << ',' << m.beta0 << ',' << m.mu_tilde << "\n";
    emit(cfg, os.str());
  } else {
    emit(cfg, std::to_string(m.mu) + "\n");
  }
  return kOk;
}

int cmd_conservation(const RunConfig& cfg, const std::string& path) {
  bool image;
  {
    auto probe = open_input(path);
    image = looks_like_image_family(probe);
  }
  auto in = open_input(path);
  Json j;
  std::ostringstream text;
  bool holds;
  if (image) {
    auto f = parse_image_family(in);
    auto v = check_mu_conservation(f.n, f.p, f.data);
    holds = v.holds();
    j = Json{{"kind", "image"},
             {"n", f.n},
             {"p", f.p},
             {"integer_ratio", v.integer_ratio},
             {"mu_holds", v.mu.holds},
             {"mu_detail", v.mu.detail},
             {"semicontinuous", v.mu.semicontinuous}};
    if (v.nu_checked) {
      j["nu_holds"] = v.nu.holds;
      j["nu_detail"] = v.nu.detail;
    }
    j["holds"] = holds;
    text << "mu_I: " << (v.mu.holds ? "conserved" : "violated") << " (" << v.mu.detail << ")\n";
    if (v.nu_checked) text << "nu_I: " << (v.nu.holds ? "conserved" : "violated") << " (" << v.nu.detail << ")\n";
  } else {
    auto f = parse_fixed_point_data(in);
    if (!f.family) throw ParseError("no family records (mu0, betti_t, local) in data file", 0, 0);
    auto v = check_conservation(*f.family);
    holds = v.holds;
    j = Json{{"kind", "tau"},
             {"tau", cfg.tau.empty() ? f.tau.value_or("") : cfg.tau},
             {"holds", v.holds},
             {"difference", rational_json(v.difference)},
             {"semicontinuous", v.semicontinuous},
             {"detail", v.detail}};
    text << "mu_tau: " << (v.holds ? "conserved" : "violated") << " (" << v.detail << ")\n"
         << "upper semi-continuous: " << (v.semicontinuous ? "yes" : "no") << "\n";
  }
  if (cfg.format == "json")
    emit(cfg, j);
  else
    emit(cfg, text.str());
  return holds ? kOk : kViolated;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mpgerm: multiple point spaces and image invariants of corank one map germs"};
  app.require_subcommand(1);
  RunConfig cfg;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "json | text | csv")
        ->check(CLI::IsMember({"json", "text", "csv"}));
    sub->add_option("--budget-steps", cfg.budget, "reduction step budget per standard basis");
    sub->add_option("--seed", cfg.seed, "seed for random recombination of generators");
    sub->add_option("--tau", cfg.tau, "irreducible representation label");
    sub->add_option("-o,--output", cfg.output, "write to this file instead of stdout");
  };
  std::string path, path2;
  int n = 0, p = 0, k = 0;

  auto* analyze = app.add_subcommand("analyze", "classify multiple point spaces and compute invariants");
  analyze->add_option("germ", path, "germ file")->required();
  auto* icss = app.add_subcommand("icss", "image computing spectral sequence table");
  icss->add_option("germ", path, "germ file")->required();
  auto* feas = app.add_subcommand("sc-feasible", "can (n, p) carry strongly contractible germs");
  auto* gen = app.add_subcommand("sc-generate", "write a strongly contractible germ for (n, p)");
  for (auto* s : {feas, gen}) {
    s->add_option("n", n)->required();
    s->add_option("p", p)->required();
  }
  auto* ct = app.add_subcommand("char-table", "character table of the symmetric group S_k");
  ct->add_option("k", k)->required();
  auto* iso = app.add_subcommand("isotype", "tau-isotypic invariants from fixed point data");
  iso->add_option("table", path, "table file or S<k>")->required();
  iso->add_option("data", path2, "fixed point data file")->required();
  auto* mil = app.add_subcommand("milnor", "Milnor number of an ideal file");
  mil->add_option("ideal", path, "ideal file")->required();
  auto* cons = app.add_subcommand("conservation-check", "check conservation on family data");
  cons->add_option("data", path, "family data file")->required();
  for (auto* s : {analyze, icss, feas, gen, ct, iso, mil, cons}) add_common(s);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*analyze) return cmd_analyze(cfg, path, false);
    if (*icss) return cmd_analyze(cfg, path, true);
    if (*feas) return cmd_sc_feasible(cfg, n, p);
    if (*gen) return cmd_sc_generate(cfg, n, p);
    if (*ct) return cmd_char_table(cfg, k);
    if (*iso) return cmd_isotype(cfg, path, path2);
    if (*mil) return cmd_milnor(cfg, path);
    if (*cons) return cmd_conservation(cfg, path);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const NotAFinite& e) {
    std::cerr << "not A-finite: " << e.what() << "\n";
    return kNotAFinite;
  } catch (const InconsistentData& e) {
    std::cerr << "inconsistent data: " << e.what() << "\n";
    return kInconsistent;
  } catch (const InternalInconsistency& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
