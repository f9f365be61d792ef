#pragma once

#include <algorithm>
#include <climits>
#include <vector>

#include "gzbt/arith/finite_field_poly.hpp"
#include "gzbt/arith/rational_functions.hpp"

// Places of GF(q)(u): monic irreducibles P and the place at infinity, whose
// uniformizer is 1/u. Residue fields are represented as GF(q)[u]/(P) with
// P = u for the infinite place.
namespace gzbt::places {

using RF = RationalFunctions<GaloisField>;
using RFElem = RF::Elem;
using poly::GFPoly;

struct Place {
  GFPoly p;  // empty for the place at infinity
  bool infinite() const { return p.empty(); }
  int degree() const { return infinite() ? 1 : poly::degree<GaloisField>(p); }
};

inline bool same_place(const GaloisField& f, const Place& a, const Place& b) {
  return a.infinite() == b.infinite() && (a.infinite() || poly::equal(f, a.p, b.p));
}

inline int poly_valuation(const GaloisField& f, GFPoly a, const GFPoly& p) {
  if (a.empty()) return INT_MAX;
  int v = 0;
  while (true) {
    auto [q, r] = poly::divmod(f, a, p);
    if (!r.empty()) return v;
    a = std::move(q);
    ++v;
  }
}

inline int valuation(const RF& K, const RFElem& c, const Place& P) {
  if (K.is_zero(c)) return INT_MAX;
  if (P.infinite()) return K.valuation_at_infinity(c);
  return poly_valuation(K.base(), c.num, P.p) - poly_valuation(K.base(), c.den, P.p);
}

/// Modulus of the residue field at P.
inline GFPoly residue_modulus(const GaloisField& f, const Place& P) {
  return P.infinite() ? GFPoly{f.zero(), f.one()} : P.p;
}

/// Residue of c / pi^v(c) at P, as a residue-class polynomial.
inline GFPoly unit_residue(const RF& K, const RFElem& c, const Place& P) {
  const auto& f = K.base();
  if (P.infinite()) return poly::constant(f, f.div(c.num.back(), c.den.back()));
  GFPoly n = c.num, d = c.den;
  while (true) {
    auto [q, r] = poly::divmod(f, n, P.p);
    if (!r.empty()) break;
    n = std::move(q);
  }
  while (true) {
    auto [q, r] = poly::divmod(f, d, P.p);
    if (!r.empty()) break;
    d = std::move(q);
  }
  auto [g, s, t] = poly::xgcd(f, poly::mod(f, d, P.p), P.p);
  (void)t;
  // g is a nonzero constant since d is prime to P
  auto dinv = poly::scale(f, s, f.inv(g[0]));
  return poly::mulmod(f, poly::mod(f, n, P.p), dinv, P.p);
}

/// Residue of an element integral at P.
inline GFPoly reduce(const RF& K, const RFElem& c, const Place& P) {
  int v = valuation(K, c, P);
  if (v < 0) raise(ErrorCode::InvalidCurve, "element is not integral at the place");
  if (v > 0) return {};
  return unit_residue(K, c, P);
}

/// Quadratic character of a nonzero residue (q odd): +1 or -1.
inline int quadratic_character(const GaloisField& f, const GFPoly& e, const Place& P) {
  auto m = residue_modulus(f, P);
  mpz_class e2 = (poly::gf_order_pow(f, P.degree()) - 1) / 2;
  auto r = poly::powmod(f, e, e2, m);
  return poly::is_one(f, r) ? 1 : -1;
}

/// Absolute trace of a residue to GF(2) (characteristic 2).
inline unsigned absolute_trace(const GaloisField& f, const GFPoly& e, const Place& P) {
  auto m = residue_modulus(f, P);
  GFPoly acc, cur = poly::mod(f, e, m);
  const unsigned steps = f.degree() * P.degree();
  for (unsigned i = 0; i < steps; ++i) {
    acc = poly::add(f, acc, cur);
    cur = poly::mulmod(f, cur, cur, m);
  }
  if (acc.empty()) return 0;
  return f.trace(acc[0]);
}

/// Monic irreducible factors of numerators and denominators, deduplicated,
/// followed by the infinite place.
inline std::vector<Place> support(const RF& K, const std::vector<RFElem>& elems) {
  const auto& f = K.base();
  std::vector<Place> out;
  auto add = [&](const GFPoly& a) {
    if (poly::degree<GaloisField>(a) <= 0) return;
    for (auto& [p, e] : poly::factor(f, a)) {
      (void)e;
      bool seen = false;
      for (auto& q : out) seen = seen || poly::equal(f, q.p, p);
      if (!seen) out.push_back(Place{p});
    }
  };
  for (auto& c : elems) {
    if (K.is_zero(c)) continue;
    add(c.num);
    add(c.den);
  }
  out.push_back(Place{});
  return out;
}

/// Tame symbol (a, b)_P for q odd: +1 or -1.
inline int hilbert_symbol(const RF& K, const RFElem& a, const RFElem& b, const Place& P) {
  const auto& f = K.base();
  long al = valuation(K, a, P), be = valuation(K, b, P);
  int s = 1;
  if ((al * be) % 2 != 0) s *= quadratic_character(f, poly::constant(f, f.neg(f.one())), P);
  if (be % 2 != 0) s *= quadratic_character(f, unit_residue(K, a, P), P);
  if (al % 2 != 0) s *= quadratic_character(f, unit_residue(K, b, P), P);
  return s;
}

/// Enumerates monic irreducibles by increasing degree, then code order.
template <class Visit>
void for_each_finite_place(const GaloisField& f, unsigned max_degree, Visit&& visit) {
  for (unsigned d = 1; d <= max_degree; ++d)
    for (auto& p : poly::monic_irreducibles(f, d))
      if (!visit(Place{p})) return;
}

}  // namespace gzbt::places
