#pragma once

#include <gmpxx.h>

#include <vector>

#include "gzbt/constant_field/char2.hpp"
#include "gzbt/constant_field/conic.hpp"
#include "gzbt/constant_field/descriptor.hpp"
#include "gzbt/constant_field/hilbert.hpp"
#include "gzbt/constant_field/places.hpp"
#include "gzbt/constant_field/squares.hpp"
#include "gzbt/count.hpp"

// Norm classes. The binary form is the norm form of the residue field k(t):
// a^2 + rho b^2 in cases I-III and a^2 + ab + rho b^2 in case IV. The
// quaternary form is the reduced norm of the quaternion algebra at v_*.
namespace gzbt {

template <class E>
struct NormCosetReport {
  Count vertex_class_count;        // |k* / det S(v_*)|
  Count edge_classes_per_vertex;   // |det S(v_*) / det S(e_*)|
  std::vector<E> vertex_class_witnesses;
  std::vector<E> edge_class_witnesses;
};

namespace detail {

/// Exact coset counting over a finite set of square-class representatives
/// (the first being 1). Both norm groups contain k*^2, so a greedy sweep is exact.
template <class E, class Quat, class Bin, class Ratio>
NormCosetReport<E> classes_report(const std::vector<E>& reps, Quat quat, Bin bin, Ratio ratio) {
  NormCosetReport<E> rep;
  for (auto& r : reps) {
    bool fresh = true;
    for (auto& w : rep.vertex_class_witnesses) fresh = fresh && !quat(ratio(r, w));
    if (fresh) rep.vertex_class_witnesses.push_back(r);
  }
  for (auto& r : reps) {
    if (!quat(r)) continue;
    bool fresh = true;
    for (auto& w : rep.edge_class_witnesses) fresh = fresh && !bin(ratio(r, w));
    if (fresh) rep.edge_class_witnesses.push_back(r);
  }
  rep.vertex_class_count = rep.vertex_class_witnesses.size();
  rep.edge_classes_per_vertex = rep.edge_class_witnesses.size();
  return rep;
}

inline void require_nonzero(bool zero) {
  if (zero) raise(ErrorCode::ZeroInput, "norm membership of 0");
}

inline void require_case(bool ok, const std::string& what) {
  if (!ok) raise(ErrorCode::UnsupportedField, what);
}

}  // namespace detail

// ---------------------------------------------------------------- Q, R, Q_p

inline bool binary_norm_membership(const RationalConstants& k, const ConicData<mpq_class>& c, const mpq_class& x) {
  detail::require_nonzero(sgn(x) == 0);
  detail::require_case(c.kind == ConicCase::I, "only case I occurs in characteristic 0");
  const mpq_class minus_rho = -c.rho;
  switch (k.desc.kind) {
    case FieldKind::QExact:
      if (is_rational_square(minus_rho)) return true;
      return hilbert::globally_trivial(x, minus_rho);
    case FieldKind::RealClosedModel: {
      auto vals = represented_classes({sign_class(k, 1), sign_class(k, c.rho)}, false);
      return std::find(vals.begin(), vals.end(), sign_class(k, x)) != vals.end();
    }
    case FieldKind::QpClassesOnly:
      if (hilbert::is_padic_square(minus_rho, k.desc.p)) return true;
      return hilbert::at_prime(x, minus_rho, k.desc.p) == 1;
    default: break;
  }
  raise(ErrorCode::UnsupportedField, "no norm decision procedure for " + k.desc.name());
}

inline bool quaternary_norm_membership(const RationalConstants& k, const ConicData<mpq_class>& c, const mpq_class& x) {
  detail::require_nonzero(sgn(x) == 0);
  detail::require_case(c.kind == ConicCase::I, "only case I occurs in characteristic 0");
  switch (k.desc.kind) {
    case FieldKind::QExact:
      // the algebra ramifies at the real place iff the norm form is definite
      return (sgn(c.rho) > 0 && sgn(c.sigma) > 0) ? sgn(x) > 0 : true;
    case FieldKind::RealClosedModel: {
      auto vals = represented_classes(
          {sign_class(k, 1), sign_class(k, c.rho), sign_class(k, c.sigma), sign_class(k, c.rho * c.sigma)}, false);
      return std::find(vals.begin(), vals.end(), sign_class(k, x)) != vals.end();
    }
    case FieldKind::QpClassesOnly: return true;
    default: break;
  }
  raise(ErrorCode::UnsupportedField, "no norm decision procedure for " + k.desc.name());
}

/// Odd primes p prime to rho with -rho a non-residue mod p, ascending.
inline std::vector<mpz_class> inert_primes(const mpq_class& rho, std::size_t count) {
  std::vector<mpz_class> out;
  mpz_class m = -rho.get_num() * rho.get_den();
  for (mpz_class p = 3; out.size() < count; mpz_nextprime(p.get_mpz_t(), p.get_mpz_t())) {
    if (m % p == 0) continue;
    if (hilbert::legendre(m, p) == -1) out.push_back(p);
  }
  return out;
}

/// Products of distinct inert primes, the i-th witness using the primes
/// selected by the binary digits of i. Each witness is positive, so it lies in
/// det S(v_*) even when that group is Q^+.
inline std::vector<mpq_class> nonnorm_witnesses(const RationalConstants& k, const ConicData<mpq_class>& c,
                                                std::size_t count) {
  if (k.desc.kind != FieldKind::QExact || is_rational_square(-c.rho))
    raise(ErrorCode::FiniteIndex, "edge index is finite over " + k.desc.name());
  std::size_t bits = 0;
  while ((std::size_t{1} << bits) <= count) ++bits;
  auto primes = inert_primes(c.rho, bits);
  std::vector<mpq_class> out;
  for (std::size_t i = 1; out.size() < count; ++i) {
    mpz_class w = 1;
    for (std::size_t b = 0; b < bits; ++b)
      if (i >> b & 1u) w *= primes[b];
    out.emplace_back(w);
  }
  return out;
}

inline NormCosetReport<mpq_class> norm_coset_report(const RationalConstants& k, const ConicData<mpq_class>& c,
                                                    std::size_t witness_budget = 10) {
  auto quat = [&](const mpq_class& x) { return quaternary_norm_membership(k, c, x); };
  auto bin = [&](const mpq_class& x) { return binary_norm_membership(k, c, x); };
  auto ratio = [](const mpq_class& a, const mpq_class& b) { return mpq_class(a / b); };
  switch (k.desc.kind) {
    case FieldKind::RealClosedModel: return detail::classes_report<mpq_class>({1, -1}, quat, bin, ratio);
    case FieldKind::QpClassesOnly:
      return detail::classes_report<mpq_class>(padic_square_class_reps(k.desc.p), quat, bin, ratio);
    case FieldKind::QExact: {
      NormCosetReport<mpq_class> rep;
      rep.vertex_class_witnesses = quat(-1) ? std::vector<mpq_class>{1} : std::vector<mpq_class>{1, -1};
      rep.vertex_class_count = rep.vertex_class_witnesses.size();
      if (is_rational_square(-c.rho)) {
        rep.edge_classes_per_vertex = 1;
        rep.edge_class_witnesses = {1};
      } else {
        rep.edge_classes_per_vertex = Count::omega();
        rep.edge_class_witnesses = nonnorm_witnesses(k, c, witness_budget);
      }
      return rep;
    }
    default: break;
  }
  raise(ErrorCode::UnsupportedField, "no norm decision procedure for " + k.desc.name());
}

// ---------------------------------------------------------------- R((u))

inline bool binary_norm_membership(const LaurentConstants& k, const ConicData<RationalFunction<Rationals>>& c,
                                   const RationalFunction<Rationals>& x) {
  detail::require_nonzero(k->is_zero(x));
  detail::require_case(c.kind == ConicCase::I, "only case I occurs in characteristic 0");
  auto vals = represented_classes({sign_class(k, k->one()), sign_class(k, c.rho)}, true);
  return std::find(vals.begin(), vals.end(), sign_class(k, x)) != vals.end();
}

inline bool quaternary_norm_membership(const LaurentConstants& k, const ConicData<RationalFunction<Rationals>>& c,
                                       const RationalFunction<Rationals>& x) {
  detail::require_nonzero(k->is_zero(x));
  detail::require_case(c.kind == ConicCase::I, "only case I occurs in characteristic 0");
  auto vals = represented_classes({sign_class(k, k->one()), sign_class(k, c.rho), sign_class(k, c.sigma),
                                   sign_class(k, k->mul(c.rho, c.sigma))},
                                  true);
  return std::find(vals.begin(), vals.end(), sign_class(k, x)) != vals.end();
}

inline std::vector<RationalFunction<Rationals>> laurent_square_class_reps(const LaurentConstants& k) {
  auto u = k->variable();
  return {k->one(), u, k->neg(k->one()), k->neg(u)};
}

inline NormCosetReport<RationalFunction<Rationals>> norm_coset_report(
    const LaurentConstants& k, const ConicData<RationalFunction<Rationals>>& c, std::size_t = 10) {
  using E = RationalFunction<Rationals>;
  return detail::classes_report<E>(
      laurent_square_class_reps(k), [&](const E& x) { return quaternary_norm_membership(k, c, x); },
      [&](const E& x) { return binary_norm_membership(k, c, x); },
      [&](const E& a, const E& b) { return k->div(a, b); });
}

inline std::vector<RationalFunction<Rationals>> nonnorm_witnesses(const LaurentConstants& k,
                                                                  const ConicData<RationalFunction<Rationals>>&,
                                                                  std::size_t) {
  raise(ErrorCode::FiniteIndex, "edge index is finite over " + k.desc.name());
}

// ---------------------------------------------------------------- GF(q)(u)

namespace detail {

using FFElem = RationalFunction<GaloisField>;

inline bool odd_hasse_norm(const FiniteFunctionConstants& k, const FFElem& x, const FFElem& minus_rho) {
  if (is_square(k, minus_rho)) return true;
  for (auto& P : places::support(k.arith, {x, minus_rho}))
    if (places::hilbert_symbol(k.arith, x, minus_rho, P) != 1) return false;
  return true;
}

/// P is inert in k(t)/k for t^2 + t = rho: rho integral at P with residue of trace 1.
inline bool inert_char2(const FiniteFunctionConstants& k, const FFElem& rho, const places::Place& P) {
  if (places::valuation(k.arith, rho, P) < 0) return false;
  auto r = places::reduce(k.arith, rho, P);
  return places::absolute_trace(k->base(), r, P) == 1;
}

/// P is inert in k(sqrt(-rho))/k: -rho a unit at P and a non-square residue.
inline bool inert_odd(const FiniteFunctionConstants& k, const FFElem& minus_rho, const places::Place& P) {
  if (places::valuation(k.arith, minus_rho, P) != 0) return false;
  return places::quadratic_character(k->base(), places::unit_residue(k.arith, minus_rho, P), P) == -1;
}

}  // namespace detail

inline bool binary_norm_membership(const FiniteFunctionConstants& k, const ConicData<RationalFunction<GaloisField>>& c,
                                   const RationalFunction<GaloisField>& x) {
  detail::require_nonzero(k->is_zero(x));
  if (k.desc.kind == FieldKind::FqRationalFunc) {
    detail::require_case(c.kind == ConicCase::I, "odd characteristic needs case I");
    return detail::odd_hasse_norm(k, x, k->neg(c.rho));
  }
  switch (c.kind) {
    case ConicCase::III: return true;  // k = k^2 + rho k^2 since [k:k^2] = 2
    case ConicCase::IV: break;
    default: raise(ErrorCode::UnsupportedField, "case " + to_string(c.kind) + " has no norm procedure in characteristic 2");
  }
  if (is_artin_schreier_value(k.arith, c.rho)) return true;
  auto places = places::support(k.arith, {x});
  if (k->is_constant(c.rho)) {
    // constant field extension: norms are the elements of even degree at odd-degree places
    for (auto& P : places)
      if (P.degree() % 2 && places::valuation(k.arith, x, P) % 2) return false;
    return true;
  }
  for (auto& P : places)
    if (places::valuation(k.arith, x, P) % 2 && detail::inert_char2(k, c.rho, P)) return false;
  raise(ErrorCode::UnsupportedField, "no local obstruction found and rho is not constant; norm test undecided");
}

inline bool quaternary_norm_membership(const FiniteFunctionConstants& k,
                                       const ConicData<RationalFunction<GaloisField>>& c,
                                       const RationalFunction<GaloisField>& x) {
  detail::require_nonzero(k->is_zero(x));
  // no real places: the reduced norm of a quaternion algebra is onto
  if (c.kind == ConicCase::II) raise(ErrorCode::UnsupportedField, "case II needs [k:k^2] > 2");
  return true;
}

/// Inert monic irreducibles by increasing degree, then coefficient order.
inline std::vector<RationalFunction<GaloisField>> nonnorm_witnesses(
    const FiniteFunctionConstants& k, const ConicData<RationalFunction<GaloisField>>& c, std::size_t count) {
  const bool odd = k.desc.kind == FieldKind::FqRationalFunc;
  if (!odd && c.kind != ConicCase::IV) raise(ErrorCode::FiniteIndex, "edge index is 1 in case " + to_string(c.kind));
  auto minus_rho = k->neg(c.rho);
  if (odd ? is_square(k, minus_rho) : is_artin_schreier_value(k.arith, c.rho))
    raise(ErrorCode::FiniteIndex, "residue extension is trivial");
  std::vector<RationalFunction<GaloisField>> out;
  if (count == 0) return out;
  places::for_each_finite_place(k->base(), 24, [&](const places::Place& P) {
    bool inert = odd ? detail::inert_odd(k, minus_rho, P) : detail::inert_char2(k, c.rho, P);
    if (inert) out.push_back(k->from_poly(P.p));
    return out.size() < count;
  });
  if (out.size() < count) raise(ErrorCode::ConstructionFailed, "not enough inert places found");
  return out;
}

inline NormCosetReport<RationalFunction<GaloisField>> norm_coset_report(
    const FiniteFunctionConstants& k, const ConicData<RationalFunction<GaloisField>>& c,
    std::size_t witness_budget = 10) {
  if (c.kind == ConicCase::II) raise(ErrorCode::UnsupportedField, "case II needs [k:k^2] > 2");
  NormCosetReport<RationalFunction<GaloisField>> rep;
  rep.vertex_class_count = 1;
  rep.vertex_class_witnesses = {k->one()};
  const bool trivial = k.desc.kind == FieldKind::FqRationalFunc ? is_square(k, k->neg(c.rho))
                       : c.kind == ConicCase::III           ? true
                                                            : is_artin_schreier_value(k.arith, c.rho);
  if (trivial) {
    rep.edge_classes_per_vertex = 1;
    rep.edge_class_witnesses = {k->one()};
  } else {
    rep.edge_classes_per_vertex = Count::omega();
    rep.edge_class_witnesses = nonnorm_witnesses(k, c, witness_budget);
  }
  return rep;
}

// ---------------------------------------------------------------- checks

/// Witnesses lie in det S(v_*) and in pairwise distinct cosets of det S(e_*).
template <class K, class E>
bool witnesses_pairwise_distinct(const K& k, const ConicData<E>& c, const std::vector<E>& ws) {
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (!quaternary_norm_membership(k, c, ws[i])) return false;
    for (std::size_t j = i + 1; j < ws.size(); ++j)
      if (binary_norm_membership(k, c, k->div(ws[i], ws[j]))) return false;
  }
  return true;
}

/// Vertex witnesses lie in pairwise distinct cosets of det S(v_*).
template <class K, class E>
bool vertex_witnesses_distinct(const K& k, const ConicData<E>& c, const std::vector<E>& ws) {
  for (std::size_t i = 0; i < ws.size(); ++i)
    for (std::size_t j = i + 1; j < ws.size(); ++j)
      if (quaternary_norm_membership(k, c, k->div(ws[i], ws[j]))) return false;
  return true;
}

}  // namespace gzbt
