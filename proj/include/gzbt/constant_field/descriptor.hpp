#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "gzbt/arith/galois_field.hpp"
#include "gzbt/arith/parse.hpp"
#include "gzbt/arith/rational_functions.hpp"
#include "gzbt/arith/rationals.hpp"
#include "gzbt/error.hpp"

namespace gzbt {

enum class FieldKind {
  QExact,           // Q
  FqRationalFunc,   // GF(q)(u), q odd
  F2rRationalFunc,  // GF(2^r)(u)
  RealClosedModel,  // R, elements stored as exact rationals
  RealLaurentModel, // R((u)), elements stored as rational functions in u over Q
  QpClassesOnly,    // Q_p, square/norm classes of rational inputs only
};

/// Which constant field a curve lives over. Text forms accepted by `parse`:
/// `Q`, `R`, `R((u))`, `Qp(p)`, `GF(q)(u)` and `GF(p^r)(u)`.
struct ConstantFieldDescriptor {
  FieldKind kind = FieldKind::QExact;
  unsigned p = 0;  // prime: characteristic of GF(q) kinds, or the p of Q_p
  unsigned r = 1;  // GF(q) has q = p^r

  static ConstantFieldDescriptor rationals() { return {FieldKind::QExact, 0, 1}; }
  static ConstantFieldDescriptor real_closed() { return {FieldKind::RealClosedModel, 0, 1}; }
  static ConstantFieldDescriptor real_laurent() { return {FieldKind::RealLaurentModel, 0, 1}; }
  static ConstantFieldDescriptor padic(unsigned prime) {
    if (!detail::is_small_prime(prime)) raise(ErrorCode::UnsupportedField, "Q_p needs a prime p");
    return {FieldKind::QpClassesOnly, prime, 1};
  }
  static ConstantFieldDescriptor gf_function_field(unsigned prime, unsigned degree) {
    if (!detail::is_small_prime(prime)) raise(ErrorCode::UnsupportedField, "GF(q) needs a prime power q");
    if (degree == 0) raise(ErrorCode::UnsupportedField, "GF(p^r) needs r >= 1");
    return {prime == 2 ? FieldKind::F2rRationalFunc : FieldKind::FqRationalFunc, prime, degree};
  }

  unsigned long characteristic() const {
    return (kind == FieldKind::FqRationalFunc || kind == FieldKind::F2rRationalFunc) ? p : 0;
  }
  unsigned long q() const {
    unsigned long v = 1;
    for (unsigned i = 0; i < r; ++i) v *= p;
    return v;
  }
  bool element_arithmetic() const { return kind != FieldKind::QpClassesOnly; }

  std::string name() const {
    switch (kind) {
      case FieldKind::QExact: return "Q";
      case FieldKind::RealClosedModel: return "R";
      case FieldKind::RealLaurentModel: return "R((u))";
      case FieldKind::QpClassesOnly: return "Qp(" + std::to_string(p) + ")";
      case FieldKind::FqRationalFunc:
      case FieldKind::F2rRationalFunc:
        return r == 1 ? "GF(" + std::to_string(p) + ")(u)"
                      : "GF(" + std::to_string(p) + "^" + std::to_string(r) + ")(u)";
    }
    return "?";
  }

  bool operator==(const ConstantFieldDescriptor&) const = default;

  static ConstantFieldDescriptor parse(std::string_view text);
};

inline ConstantFieldDescriptor ConstantFieldDescriptor::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "Q" || s == "QQ") return rationals();
  if (s == "R" || s == "RR") return real_closed();
  if (s == "R((u))" || s == "RR((u))") return real_laurent();
  auto number = [&](std::string_view digits) -> unsigned {
    if (digits.empty() || digits.size() > 9) raise(ErrorCode::Parse, "bad number in field spec '" + s + "'");
    for (char c : digits)
      if (!std::isdigit(static_cast<unsigned char>(c))) raise(ErrorCode::Parse, "bad number in field spec '" + s + "'");
    return static_cast<unsigned>(std::stoul(std::string(digits)));
  };
  if (s.rfind("Qp(", 0) == 0 && s.back() == ')') return padic(number(std::string_view(s).substr(3, s.size() - 4)));
  if (s.rfind("GF(", 0) == 0 && s.size() > 7 && s.substr(s.size() - 3) == "(u)") {
    std::string_view inner = std::string_view(s).substr(3, s.size() - 3 - 4);
    if (inner.empty() || s[s.size() - 4] != ')') raise(ErrorCode::Parse, "bad field spec '" + s + "'");
    if (auto caret = inner.find('^'); caret != std::string_view::npos)
      return gf_function_field(number(inner.substr(0, caret)), number(inner.substr(caret + 1)));
    unsigned q = number(inner);
    for (unsigned p = 2; p <= q; ++p) {
      if (q % p) continue;
      unsigned r = 0, v = q;
      while (v % p == 0) {
        v /= p;
        ++r;
      }
      if (v != 1) break;
      return gf_function_field(p, r);
    }
    raise(ErrorCode::UnsupportedField, "GF(q) needs a prime power q, got " + std::string(inner));
  }
  raise(ErrorCode::Parse, "unknown constant field '" + std::string(text) + "'");
}

/// A constant field: its descriptor together with the exact arithmetic that
/// models it. `F` is `Rationals` for Q, R and Q_p, `RationalFunctions<GaloisField>`
/// for GF(q)(u), and `RationalFunctions<Rationals>` for R((u)).
template <class F>
struct ConstantField {
  using Arith = F;
  using Elem = typename F::Elem;

  ConstantFieldDescriptor desc;
  F arith;

  const F& operator*() const { return arith; }
  const F* operator->() const { return &arith; }

  /// Rejects element arithmetic on class-only models.
  void require_element_arithmetic() const {
    if (!desc.element_arithmetic())
      raise(ErrorCode::ElementArithmeticUnsupported, desc.name() + " supports only norm-class operations");
  }
};

using RationalConstants = ConstantField<Rationals>;
using FiniteFunctionConstants = ConstantField<RationalFunctions<GaloisField>>;
using LaurentConstants = ConstantField<RationalFunctions<Rationals>>;

inline RationalConstants make_rational_constants(const ConstantFieldDescriptor& d) {
  if (d.kind != FieldKind::QExact && d.kind != FieldKind::RealClosedModel && d.kind != FieldKind::QpClassesOnly)
    raise(ErrorCode::UnsupportedField, d.name() + " is not modelled over Q");
  return {d, Rationals{}};
}

inline FiniteFunctionConstants make_finite_function_constants(const ConstantFieldDescriptor& d) {
  if (d.kind != FieldKind::FqRationalFunc && d.kind != FieldKind::F2rRationalFunc)
    raise(ErrorCode::UnsupportedField, d.name() + " is not a rational function field over GF(q)");
  return {d, RationalFunctions<GaloisField>(GaloisField(d.p, d.r), "u")};
}

inline LaurentConstants make_laurent_constants() {
  return {ConstantFieldDescriptor::real_laurent(), RationalFunctions<Rationals>(Rationals{}, "u")};
}

/// Parses a field element in the field's text grammar. Q_p inputs are rationals.
template <class F>
typename F::Elem parse_constant(const ConstantField<F>& k, std::string_view text) {
  return parse_element(k.arith, text);
}

}  // namespace gzbt
