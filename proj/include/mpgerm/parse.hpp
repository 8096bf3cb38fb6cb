#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "mpgerm/error.hpp"
#include "mpgerm/poly.hpp"

namespace mpgerm {

// Grammar:
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := ('+' | '-') unary | factor
//   factor  := primary ('^' integer)?
//   primary := integer ('/' integer)? | identifier | '(' expr ')'
// Whitespace is ignored between tokens.

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view text, VarSet::Ptr vars) : s_(text), vars_(std::move(vars)) {}

  MultiPoly parse() {
    skip_ws();
    if (pos_ == s_.size()) fail("empty expression");
    MultiPoly r = expr();
    skip_ws();
    if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_), pos_);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    MultiPoly r = term();
    for (;;) {
      if (accept('+')) {
        r += term();
      } else if (accept('-')) {
        r -= term();
      } else {
        return r;
      }
    }
  }

  MultiPoly term() {
    MultiPoly r = unary();
    while (accept('*')) r *= unary();
    return r;
  }

  MultiPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return factor();
  }

  MultiPoly factor() {
    MultiPoly base = primary();
    if (accept('^')) {
      skip_ws();
      std::string digits = read_digits();
      if (digits.empty()) fail("expected exponent");
      if (digits.size() > 5 || std::stoul(digits) > 0xFFFFu) fail("exponent too large");
      return base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  MultiPoly primary() {
    skip_ws();
    if (pos_ == s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num(read_digits(), 10);
      Rational q(num);
      std::size_t save = pos_;
      skip_ws();
      // A '/' directly after an integer literal forms a rational literal.
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        skip_ws();
        std::size_t dpos = pos_;
        std::string den = read_digits();
        if (den.empty()) fail("expected denominator");
        Integer d(den, 10);
        if (d == 0) {
          pos_ = dpos;
          fail("zero denominator");
        }
        q = Rational(num, d);
        q.canonicalize();
      } else {
        pos_ = save;
      }
      return MultiPoly::constant(vars_, q);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      auto idx = vars_->index_of(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return MultiPoly::variable(vars_, *idx);
    }
    if (c == '(') {
      ++pos_;
      MultiPoly r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  VarSet::Ptr vars_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline MultiPoly parse_poly(std::string_view text, const VarSet::Ptr& vars) {
  return detail::PolyParser(text, vars).parse();
}

}  // namespace mpgerm
