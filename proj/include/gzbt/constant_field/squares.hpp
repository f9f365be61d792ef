#pragma once

#include <gmpxx.h>

#include <vector>

#include "gzbt/arith/finite_field_poly.hpp"
#include "gzbt/constant_field/descriptor.hpp"
#include "gzbt/constant_field/hilbert.hpp"

namespace gzbt {

/// Square class in R or R((u)): (valuation parity, sign of the leading
/// coefficient). Parity is always 0 over R.
struct SignClass {
  int parity = 0;
  int sign = 1;
  bool operator==(const SignClass&) const = default;
};

inline SignClass sign_class(const RationalConstants& k, const mpq_class& c) {
  if (sgn(c) == 0) raise(ErrorCode::ZeroInput, "square class of 0");
  if (k.desc.kind != FieldKind::RealClosedModel) raise(ErrorCode::UnsupportedField, "sign classes need an ordered model");
  return {0, sgn(c)};
}

inline SignClass sign_class(const LaurentConstants& k, const RationalFunction<Rationals>& c) {
  if (k->is_zero(c)) raise(ErrorCode::ZeroInput, "square class of 0");
  const Rationals& q = k->base();
  int ln = poly::low_order(q, c.num), ld = poly::low_order(q, c.den);
  int ord = ln - ld;
  return {((ord % 2) + 2) % 2, sgn(c.num[ln]) * sgn(c.den[ld])};
}

/// Classes represented by the diagonal form <a_1, ..., a_n> over R or R((u)).
/// An isotropic form is universal; an anisotropic one has no cancellation
/// among leading terms, so it only takes the classes of its coefficients.
inline std::vector<SignClass> represented_classes(const std::vector<SignClass>& coeffs, bool laurent) {
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    for (std::size_t j = i + 1; j < coeffs.size(); ++j)
      if (coeffs[i].parity == coeffs[j].parity && coeffs[i].sign != coeffs[j].sign) {
        if (!laurent) return {{0, 1}, {0, -1}};
        return {{0, 1}, {1, 1}, {0, -1}, {1, -1}};
      }
  std::vector<SignClass> out;
  for (auto& c : coeffs)
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  return out;
}

inline bool is_rational_square(const mpq_class& c) {
  if (sgn(c) < 0) return false;
  return mpz_perfect_square_p(c.get_num().get_mpz_t()) && mpz_perfect_square_p(c.get_den().get_mpz_t());
}

inline bool is_square(const RationalConstants& k, const mpq_class& c) {
  if (sgn(c) == 0) raise(ErrorCode::ZeroInput, "is_square(0)");
  switch (k.desc.kind) {
    case FieldKind::QExact: return is_rational_square(c);
    case FieldKind::RealClosedModel: return sgn(c) > 0;
    case FieldKind::QpClassesOnly: return hilbert::is_padic_square(c, k.desc.p);
    default: raise(ErrorCode::UnsupportedField, "unexpected field kind for rational constants");
  }
}

inline bool is_square(const LaurentConstants& k, const RationalFunction<Rationals>& c) {
  return sign_class(k, c) == SignClass{0, 1};
}

namespace detail {

inline bool is_square_poly(const GaloisField& f, const poly::GFPoly& a) {
  if (poly::degree<GaloisField>(a) <= 0) return a.empty() || f.is_square(a[0]);
  if (!f.is_square(a.back())) return false;
  if (f.p() == 2) {
    for (std::size_t i = 1; i < a.size(); i += 2)
      if (!f.is_zero(a[i])) return false;
    return true;
  }
  for (auto& [p, e] : poly::factor(f, poly::monic(f, a)))
    if (e % 2) return false;
  return true;
}

}  // namespace detail

inline bool is_square(const FiniteFunctionConstants& k, const RationalFunction<GaloisField>& c) {
  if (k->is_zero(c)) raise(ErrorCode::ZeroInput, "is_square(0)");
  // den is monic, so c is a square iff num and den are
  return detail::is_square_poly(k->base(), c.num) && detail::is_square_poly(k->base(), c.den);
}

/// Representatives of the square classes of Q_p: {1, n, p, np} for odd p
/// (n the least positive non-residue) and the eight classes for p = 2.
inline std::vector<mpq_class> padic_square_class_reps(unsigned p) {
  if (p == 2) return {1, 3, 5, 7, 2, 6, 10, 14};
  mpz_class P = p;
  long n = 2;
  while (hilbert::legendre(n, P) != -1) ++n;
  return {1, mpq_class(n), mpq_class(p), mpq_class(n * static_cast<long>(p))};
}

}  // namespace gzbt
