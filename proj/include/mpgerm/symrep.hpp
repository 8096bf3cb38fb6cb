#pragma once

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mpgerm/error.hpp"
#include "mpgerm/rational.hpp"

namespace mpgerm {

inline constexpr int kMaxSymmetricDegree = 12;

struct Partition {
  std::vector<int> parts;  // weakly decreasing, positive

  Partition() = default;
  explicit Partition(std::vector<int> p) : parts(std::move(p)) {
    if (parts.empty()) throw DomainError("empty partition");
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] <= 0) throw DomainError("partition parts must be positive");
      if (i && parts[i] > parts[i - 1]) throw DomainError("partition parts must be weakly decreasing");
    }
  }

  int size() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  int cycles() const { return static_cast<int>(parts.size()); }
  bool is_identity() const { return parts.front() == 1; }

  /// alpha[i] = number of parts equal to i (index 0 unused).
  std::vector<int> alpha() const {
    std::vector<int> a(static_cast<std::size_t>(size()) + 1, 0);
    for (int r : parts) ++a[static_cast<std::size_t>(r)];
    return a;
  }

  /// "(2,1,1)"
  std::string label() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts[i]);
    }
    return s + ")";
  }

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;
};

inline Partition parse_partition(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != '(' && c != ')' && c != ' ') s += c;
  std::vector<int> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("bad partition '" + text + "'", 0);
    parts.push_back(std::stoi(item));
  }
  if (parts.empty()) throw ParseError("bad partition '" + text + "'", 0);
  return Partition(std::move(parts));
}

inline void check_degree(int k) {
  if (k < 1 || k > kMaxSymmetricDegree)
    throw DomainError("symmetric degree must lie in 1.." + std::to_string(kMaxSymmetricDegree));
}

/// All partitions of k, lexicographically decreasing: (k) first, (1^k) last.
inline std::vector<Partition> partitions(int k) {
  check_degree(k);
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int r = std::min(rest, maxpart); r >= 1; --r) {
      cur.push_back(r);
      rec(rest - r, r);
      cur.pop_back();
    }
  };
  rec(k, k);
  return out;
}

inline long factorial(int k) {
  long f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

/// k! / z_lambda with z_lambda = prod i^alpha_i alpha_i!.
inline long class_size(const Partition& p) {
  auto a = p.alpha();
  long z = 1;
  for (std::size_t i = 1; i < a.size(); ++i)
    for (int j = 1; j <= a[i]; ++j) z *= static_cast<long>(i) * j;
  return factorial(p.size()) / z;
}

inline int sign_of_class(const Partition& p) { return ((p.size() - p.cycles()) % 2) ? -1 : 1; }

/// Murnaghan-Nakayama rule on beta-sets.
inline long mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw DomainError("mn_character: sizes differ");
  const std::size_t L = lambda.parts.size();
  std::vector<int> beta(L);
  for (std::size_t i = 0; i < L; ++i) beta[i] = lambda.parts[i] + static_cast<int>(L - 1 - i);
  std::map<std::pair<std::vector<int>, std::size_t>, long> memo;
  std::function<long(std::vector<int>, std::size_t)> rec = [&](std::vector<int> b,
                                                              std::size_t idx) -> long {
    if (idx == mu.parts.size()) return 1;
    std::sort(b.begin(), b.end());
    auto key = std::make_pair(b, idx);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int r = mu.parts[idx];
    std::set<int> present(b.begin(), b.end());
    long total = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
      int to = b[i] - r;
      if (to < 0 || present.count(to)) continue;
      int between = 0;
      for (int x : b)
        if (x > to && x < b[i]) ++between;
      auto nb = b;
      nb[i] = to;
      long v = rec(nb, idx + 1);
      total += (between % 2) ? -v : v;
    }
    memo.emplace(key, total);
    return total;
  };
  return rec(beta, 0);
}

struct ConjugacyClass {
  std::string label;
  long size = 1;
};

struct Irreducible {
  std::string label;
  long degree = 1;
  std::vector<Rational> values;  // one per class, real valued
};

/// Character table of a finite group with real character values. Class 0 is
/// the identity class.
class CharacterTable {
 public:
  CharacterTable() = default;
  CharacterTable(std::string name, long order, std::vector<ConjugacyClass> classes,
                 std::vector<Irreducible> irreps)
      : name_(std::move(name)), order_(order), classes_(std::move(classes)),
        irreps_(std::move(irreps)) {
    validate();
  }

  const std::string& name() const { return name_; }
  long group_order() const { return order_; }
  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  const std::vector<Irreducible>& irreducibles() const { return irreps_; }
  std::size_t class_count() const { return classes_.size(); }

  std::size_t class_index(const std::string& label) const {
    for (std::size_t i = 0; i < classes_.size(); ++i)
      if (classes_[i].label == label) return i;
    throw DomainError("unknown class '" + label + "'");
  }

  /// Accepts an irreducible's label, or "trivial" / "alt" / "sign" for the
  /// degree-one characters with those values.
  std::size_t irrep_index(const std::string& label) const {
    for (std::size_t i = 0; i < irreps_.size(); ++i)
      if (irreps_[i].label == label) return i;
    if (label == "trivial") return trivial_index();
    if (label == "alt" || label == "Alt" || label == "sign") {
      if (alt_) return *alt_;
      throw DomainError("table has no alternating character");
    }
    throw DomainError("unknown irreducible '" + label + "'");
  }

  std::size_t trivial_index() const {
    for (std::size_t i = 0; i < irreps_.size(); ++i) {
      bool all_one = true;
      for (const auto& v : irreps_[i].values) all_one = all_one && v == 1;
      if (all_one) return i;
    }
    throw InconsistentData("table has no trivial character");
  }

  /// Marks which irreducible is the sign character of a symmetric group.
  void set_alt(std::size_t i) { alt_ = i; }
  std::optional<std::size_t> alt_index() const { return alt_; }

  /// Row orthogonality, class sizes and degree checks. Throws InconsistentData.
  void validate() const {
    if (order_ <= 0) throw InconsistentData("group order must be positive");
    if (classes_.empty()) throw InconsistentData("no classes");
    long total = 0;
    for (const auto& c : classes_) {
      if (c.size <= 0) throw InconsistentData("class sizes must be positive");
      total += c.size;
    }
    if (total != order_) throw InconsistentData("class sizes do not sum to the group order");
    if (classes_[0].size != 1) throw InconsistentData("first class must be the identity class");
    if (irreps_.size() != classes_.size())
      throw InconsistentData("number of irreducibles differs from number of classes");
    for (const auto& r : irreps_) {
      if (r.values.size() != classes_.size())
        throw InconsistentData("irreducible '" + r.label + "' has the wrong number of values");
      if (r.values[0] != r.degree || r.degree <= 0)
        throw InconsistentData("value at the identity of '" + r.label + "' is not its degree");
    }
    for (std::size_t a = 0; a < irreps_.size(); ++a)
      for (std::size_t b = a; b < irreps_.size(); ++b) {
        Rational s = 0;
        for (std::size_t c = 0; c < classes_.size(); ++c)
          s += classes_[c].size * irreps_[a].values[c] * irreps_[b].values[c];
        if (s != (a == b ? order_ : 0))
          throw InconsistentData("row orthogonality fails for '" + irreps_[a].label + "' and '" +
                                 irreps_[b].label + "'");
      }
  }

 private:
  std::string name_;
  long order_ = 1;
  std::vector<ConjugacyClass> classes_;
  std::vector<Irreducible> irreps_;
  std::optional<std::size_t> alt_;
};

/// Classes are the partitions in increasing order, starting at (1^k);
/// irreducibles follow partitions(k), so (k) is trivial and (1^k) is sign.
inline CharacterTable character_table_symmetric(int k) {
  check_degree(k);
  auto parts = partitions(k);
  std::vector<Partition> cls(parts.rbegin(), parts.rend());
  std::vector<ConjugacyClass> classes;
  for (const auto& c : cls) classes.push_back({c.label(), class_size(c)});
  std::vector<Irreducible> irreps;
  for (const auto& l : parts) {
    Irreducible r;
    r.label = l.label();
    for (const auto& c : cls) r.values.emplace_back(mn_character(l, c));
    r.degree = to_long_checked(r.values[0]);
    irreps.push_back(std::move(r));
  }
  CharacterTable t("S" + std::to_string(k), factorial(k), std::move(classes), std::move(irreps));
  t.set_alt(parts.size() - 1);
  return t;
}

/// Character table text format:
///   # comment
///   group <name> <order>
///   classes <label>:<size> <label>:<size> ...
///   irrep <label> <value> <value> ...
/// Values are integers or a/b. The identity class comes first.
inline CharacterTable parse_character_table(std::istream& in) {
  std::string name;
  long order = 0;
  std::vector<ConjugacyClass> classes;
  std::vector<Irreducible> irreps;
  std::optional<std::size_t> alt;
  std::string line;
  std::size_t lineno = 0;
  bool have_group = false, have_classes = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    auto fail = [&](const std::string& msg) { return ParseError(msg + " on line " + std::to_string(lineno), 0, lineno); };
    if (key == "group") {
      if (!(ls >> name >> order)) throw fail("expected 'group <name> <order>'");
      have_group = true;
    } else if (key == "classes") {
      std::string tok;
      while (ls >> tok) {
        auto colon = tok.rfind(':');
        if (colon == std::string::npos || colon == 0) throw fail("expected <label>:<size>");
        try {
          classes.push_back({tok.substr(0, colon), std::stol(tok.substr(colon + 1))});
        } catch (const std::logic_error&) {
          throw fail("bad class size in '" + tok + "'");
        }
      }
      have_classes = true;
    } else if (key == "irrep") {
      Irreducible r;
      if (!(ls >> r.label)) throw fail("expected irreducible label");
      std::string tok;
      while (ls >> tok) {
        try {
          r.values.push_back(parse_rational(tok));
        } catch (const ParseError&) {
          throw fail("bad character value '" + tok + "'");
        }
      }
      if (r.values.empty()) throw fail("irreducible without values");
      if (!is_integer(r.values[0])) throw fail("degree must be an integer");
      r.degree = to_long_checked(r.values[0]);
      irreps.push_back(std::move(r));
    } else if (key == "alt") {
      std::string label;
      if (!(ls >> label)) throw fail("expected irreducible label after 'alt'");
      for (std::size_t i = 0; i < irreps.size(); ++i)
        if (irreps[i].label == label) alt = i;
      if (!alt) throw fail("unknown irreducible '" + label + "'");
    } else {
      throw fail("unknown keyword '" + key + "'");
    }
  }
  if (!have_group || !have_classes) throw ParseError("missing 'group' or 'classes' line", 0, lineno);
  CharacterTable t(name, order, std::move(classes), std::move(irreps));
  if (alt) t.set_alt(*alt);
  return t;
}

inline CharacterTable load_character_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  return parse_character_table(in);
}

inline std::string format_character_table(const CharacterTable& t) {
  std::ostringstream os;
  os << "group " << t.name() << ' ' << t.group_order() << '\n' << "classes";
  for (const auto& c : t.classes()) os << ' ' << c.label << ':' << c.size;
  os << '\n';
  for (const auto& r : t.irreducibles()) {
    os << "irrep " << r.label;
    for (const auto& v : r.values) os << ' ' << to_string(v);
    os << '\n';
  }
  if (auto a = t.alt_index()) os << "alt " << t.irreducibles()[*a].label << '\n';
  return os.str();
}

}  // namespace mpgerm
