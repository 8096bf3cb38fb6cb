#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "mpgerm/error.hpp"

namespace mpgerm {

/// Exact arbitrary-precision rational. Always kept canonical.
using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Parses "a" or "a/b" (optional sign on a). Throws ParseError on bad input
/// or zero denominator.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return ParseError("invalid rational literal '" + s + "'", 0); };
  if (s.empty()) throw bad();
  std::size_t slash = s.find('/');
  auto digits_ok = [](std::string_view d, bool allow_sign) {
    if (allow_sign && !d.empty() && (d[0] == '-' || d[0] == '+')) d.remove_prefix(1);
    if (d.empty()) return false;
    for (char c : d)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!digits_ok(num, true)) throw bad();
  Rational q;
  if (slash == std::string::npos) {
    q = Rational(Integer(num, 10));
  } else {
    std::string den = s.substr(slash + 1);
    if (!digits_ok(den, false)) throw bad();
    Integer d(den, 10);
    if (d == 0) throw ParseError("zero denominator in '" + s + "'", slash + 1);
    q = Rational(Integer(num, 10), d);
    q.canonicalize();
  }
  return q;
}

inline long to_long_checked(const Rational& q) {
  if (!is_integer(q) || !q.get_num().fits_slong_p())
    throw InconsistentData("value " + to_string(q) + " is not a machine integer");
  return q.get_num().get_si();
}

}  // namespace mpgerm
