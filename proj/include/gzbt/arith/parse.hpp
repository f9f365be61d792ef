#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "gzbt/error.hpp"

namespace gzbt {

/// Parses an arithmetic expression into an element of the field `F`.
///
/// Grammar (whitespace ignored):
///   expr    := ['+'|'-'] term (('+'|'-') term)*
///   term    := unary (('*'|'/') unary)*
///   unary   := '-' unary | power
///   power   := primary ['^' ['-'] digits]
///   primary := digits | name | '(' expr ')'
/// Names are resolved through `F::symbol` (e.g. `u` in F(u), `a` for the
/// primitive element of GF(p^r)). Integers map through `F::from_mpz`.
template <class F>
class ExpressionParser {
 public:
  using Elem = typename F::Elem;

  ExpressionParser(const F& field, std::string_view text) : f_(field), s_(text) {}

  Elem parse() {
    Elem e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    raise(ErrorCode::Parse, why + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Elem expr() {
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    Elem acc = term();
    if (negate) acc = f_.neg(acc);
    for (;;) {
      if (accept('+'))
        acc = f_.add(acc, term());
      else if (accept('-'))
        acc = f_.sub(acc, term());
      else
        return acc;
    }
  }

  Elem term() {
    Elem acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = f_.mul(acc, unary());
      } else if (accept('/')) {
        Elem d = unary();
        if (f_.is_zero(d)) fail("division by zero");
        acc = f_.div(acc, d);
      } else {
        return acc;
      }
    }
  }

  Elem unary() {
    if (accept('-')) return f_.neg(unary());
    return power();
  }

  Elem power() {
    Elem base = primary();
    if (!accept('^')) return base;
    bool paren = accept('(');
    bool negative = accept('-');
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    long long e = std::stoll(std::string(s_.substr(start, pos_ - start)));
    if (paren && !accept(')')) fail("expected ')'");
    if (negative) {
      if (f_.is_zero(base)) fail("negative power of zero");
      base = f_.inv(base);
    }
    Elem r = f_.one();
    while (e) {
      if (e & 1) r = f_.mul(r, base);
      e >>= 1;
      if (e) base = f_.mul(base, base);
    }
    return r;
  }

  Elem primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Elem e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return f_.from_mpz(mpz_class(std::string(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      auto name = s_.substr(start, pos_ - start);
      if (auto v = f_.symbol(name)) return *v;
      pos_ = start;
      fail("unknown symbol '" + std::string(name) + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const F& f_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

template <class F>
typename F::Elem parse_element(const F& field, std::string_view text) {
  return ExpressionParser<F>(field, text).parse();
}

}  // namespace gzbt
