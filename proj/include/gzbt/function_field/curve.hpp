#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gzbt/constant_field/local_conic.hpp"
#include "gzbt/constant_field/norms.hpp"

namespace gzbt {

/// A pointless conic in normal form over a constant field; C = k[x,y] is its
/// affine coordinate ring. Case IV is written y^2 = xy + rho x^2 + sigma, since
/// signs do not matter in characteristic 2.
template <class F>
struct Curve {
  using Elem = typename F::Elem;

  ConstantField<F> k;
  ConicData<Elem> conic;

  ConicCase kind() const { return conic.kind; }
  const Elem& rho() const { return conic.rho; }
  const Elem& sigma() const { return conic.sigma; }
  const Elem& tau() const { return conic.tau; }

  std::string equation() const {
    const F& f = k.arith;
    std::string r = f.to_string_atomic(conic.rho), s = f.to_string_atomic(conic.sigma);
    switch (conic.kind) {
      case ConicCase::I:
      case ConicCase::II: return "y^2 + " + r + "*x^2 + " + s + " = 0";
      case ConicCase::III: return "y^2 + " + r + "*x^2 + x + " + s + " = 0";
      case ConicCase::IV: return "y^2 + x*y + " + r + "*x^2 + " + s + " = 0";
    }
    return "";
  }
};

struct Violation {
  ErrorCode code;  // HasRationalPoint or InvalidCurve
  std::string message;
};

enum class ValidationStatus { Ok, Violations, Inconclusive };

struct ValidationReport {
  ValidationStatus status = ValidationStatus::Ok;
  std::vector<Violation> violations;
  std::vector<std::string> notes;

  bool ok() const { return status == ValidationStatus::Ok; }
};

struct ValidationOptions {
  int degree_limit = 6;             // point search: degrees of numerator and denominator of x
  std::size_t point_budget = 20000; // point search: candidates tried
  local::SearchLimits local;
};

namespace detail {

template <class F>
void check_shape(const ConstantField<F>& k, const ConicData<typename F::Elem>& c, ValidationReport& rep) {
  const F& f = k.arith;
  const bool char2 = k.desc.characteristic() == 2;
  auto bad = [&](std::string m) { rep.violations.push_back({ErrorCode::InvalidCurve, std::move(m)}); };
  if (char2 && c.kind == ConicCase::I) bad("case I needs characteristic != 2");
  if (!char2 && c.kind != ConicCase::I) bad("case " + to_string(c.kind) + " needs characteristic 2");
  if (f.is_zero(c.rho)) bad("rho must be nonzero");
  if (f.is_zero(c.sigma)) bad("sigma must be nonzero");
  const bool tau_one = c.kind == ConicCase::III;
  if (tau_one ? !f.is_one(c.tau) : !f.is_zero(c.tau))
    bad(std::string("tau must be ") + (tau_one ? "1" : "0") + " in case " + to_string(c.kind));
  if (c.kind == ConicCase::II)
    bad("case II needs [k:k^2] > 2; here [k:k^2] = 2, so k = k^2 + rho*k^2 and y^2 + rho*x^2 = sigma is solvable");
}

inline void finish(ValidationReport& rep) {
  if (!rep.violations.empty()) rep.status = ValidationStatus::Violations;
}

/// Small search for a rational point of y^2 + rho x^2 + sigma = 0.
inline std::optional<std::pair<mpq_class, mpq_class>> small_rational_point(const mpq_class& rho,
                                                                           const mpq_class& sigma) {
  for (long c = 1; c <= 12; ++c)
    for (long a = 0; a <= 40; ++a)
      for (long sgn_a : {1L, -1L}) {
        mpq_class x(a * sgn_a, c);
        x.canonicalize();
        mpq_class v = -sigma - rho * x * x;
        if (sgn(v) == 0) return std::pair{x, mpq_class(0)};
        if (is_rational_square(v)) {
          mpz_class n, d;
          mpz_sqrt(n.get_mpz_t(), v.get_num().get_mpz_t());
          mpz_sqrt(d.get_mpz_t(), v.get_den().get_mpz_t());
          return std::pair{x, mpq_class(n, d)};
        }
        if (a == 0) break;
      }
  return std::nullopt;
}

/// Case I over any field with a binary norm test: a point exists iff -sigma
/// is a value of y^2 + rho x^2.
template <class F>
void check_case_one(const ConstantField<F>& k, const ConicData<typename F::Elem>& c, ValidationReport& rep) {
  const F& f = k.arith;
  if (is_square(k, f.neg(c.rho))) {
    rep.violations.push_back({ErrorCode::InvalidCurve, "-rho is a square, so the place at infinity splits"});
    return;
  }
  if (!binary_norm_membership(k, c, f.neg(c.sigma))) {
    rep.notes.push_back("-sigma is not a value of y^2 + rho*x^2: no point");
    return;
  }
  std::string msg = "rational point found";
  if constexpr (std::is_same_v<F, Rationals>) {
    if (k.desc.kind == FieldKind::QExact) {
      if (auto p = small_rational_point(c.rho, c.sigma))
        msg += ": (x, y) = (" + p->first.get_str() + ", " + p->second.get_str() + ")";
      else
        msg += " (-sigma is everywhere locally a norm)";
    }
  }
  if (k.desc.kind != FieldKind::QExact) msg += " (-sigma is a value of y^2 + rho*x^2)";
  rep.violations.push_back({ErrorCode::HasRationalPoint, msg});
}

inline std::optional<poly::GFPoly> sqrt_poly_char2(const GaloisField& f, const poly::GFPoly& a) {
  poly::GFPoly r;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i % 2) {
      if (!f.is_zero(a[i])) return std::nullopt;
    } else {
      r.push_back(f.sqrt_char2(a[i]));
    }
  }
  poly::trim(f, r);
  return r;
}

inline std::optional<RationalFunction<GaloisField>> sqrt_char2(const RationalFunctions<GaloisField>& K,
                                                               const RationalFunction<GaloisField>& a) {
  auto n = sqrt_poly_char2(K.base(), a.num), d = sqrt_poly_char2(K.base(), a.den);
  if (!n || !d) return std::nullopt;
  return K.make(*n, *d);
}

/// Searches x = A/B with deg A, deg B <= limit and solves for y.
inline std::optional<std::pair<RationalFunction<GaloisField>, RationalFunction<GaloisField>>> char2_point_search(
    const FiniteFunctionConstants& k, const ConicData<RationalFunction<GaloisField>>& c, int limit,
    std::size_t budget) {
  const auto& K = k.arith;
  const auto& f = K.base();
  auto try_x = [&](const RationalFunction<GaloisField>& x)
      -> std::optional<std::pair<RationalFunction<GaloisField>, RationalFunction<GaloisField>>> {
    auto x2 = K.mul(x, x);
    if (c.kind == ConicCase::III) {
      auto rhs = K.add(K.add(K.mul(c.rho, x2), x), c.sigma);
      if (auto y = sqrt_char2(K, rhs)) return std::pair{x, *y};
      return std::nullopt;
    }
    if (K.is_zero(x)) {
      if (auto y = sqrt_char2(K, c.sigma)) return std::pair{x, *y};
      return std::nullopt;
    }
    if (auto z = artin_schreier_root(K, K.add(c.rho, K.div(c.sigma, x2)))) return std::pair{x, K.mul(x, *z)};
    return std::nullopt;
  };
  const std::uint64_t q = f.order();
  std::size_t tried = 0;
  for (int deg = 0; deg <= limit; ++deg) {
    // all A, B with max(deg A, deg B) = deg, B monic
    std::uint64_t span = 1;
    for (int i = 0; i <= deg; ++i) {
      span *= q;
      if (span > (1ull << 40)) return std::nullopt;
    }
    for (int db = 0; db <= deg; ++db) {
      std::uint64_t bspan = 1;
      for (int i = 0; i < db; ++i) bspan *= q;
      for (std::uint64_t bc = 0; bc < bspan; ++bc) {
        poly::GFPoly B(db + 1, f.zero());
        auto t = bc;
        for (int i = 0; i < db; ++i, t /= q) B[i] = static_cast<GaloisField::Elem>(t % q);
        B[db] = f.one();
        for (std::uint64_t ac = 0; ac < span; ++ac) {
          poly::GFPoly A(deg + 1, f.zero());
          auto s = ac;
          for (int i = 0; i <= deg; ++i, s /= q) A[i] = static_cast<GaloisField::Elem>(s % q);
          poly::trim(f, A);
          if (db < deg && poly::degree<GaloisField>(A) < deg) continue;
          if (++tried > budget) return std::nullopt;
          if (auto pt = try_x(K.make(A, B))) return pt;
        }
      }
    }
  }
  return std::nullopt;
}

inline void check_char2(const FiniteFunctionConstants& k, const ConicData<RationalFunction<GaloisField>>& c,
                        const ValidationOptions& opt, ValidationReport& rep) {
  const auto& K = k.arith;
  if (c.kind == ConicCase::III && is_square(k, c.rho)) {
    rep.violations.push_back({ErrorCode::InvalidCurve, "rho is a square, so the place at infinity splits"});
    return;
  }
  if (c.kind == ConicCase::IV && is_artin_schreier_value(K, c.rho)) {
    rep.violations.push_back({ErrorCode::InvalidCurve, "rho = a^2 + a for some a in k"});
    return;
  }
  const auto one = K.one(), zero = K.zero();
  local::TernaryForm form{c.kind == ConicCase::III ? std::array{c.rho, one, c.sigma, zero, one, zero}
                                                   : std::array{c.rho, one, c.sigma, one, zero, zero}};
  // outside these places the reduction is a smooth conic over a finite field
  auto bad = places::support(K, {c.rho, c.sigma});
  bool all_solvable = true;
  for (auto& P : bad) {
    std::string where = P.infinite() ? "infinity" : poly::to_string(K.base(), P.p, K.var());
    auto res = local::local_solvability(K, form, P, opt.local);
    if (res == local::Solvability::Obstructed) {
      rep.notes.push_back("no local point at the place " + where);
      return;
    }
    if (res == local::Solvability::Unknown) all_solvable = false;
  }
  auto pt = char2_point_search(k, c, opt.degree_limit, opt.point_budget);
  if (pt) {
    rep.violations.push_back({ErrorCode::HasRationalPoint, "rational point found: (x, y) = (" +
                                                               K.to_string(pt->first) + ", " +
                                                               K.to_string(pt->second) + ")"});
    return;
  }
  if (all_solvable) {
    rep.violations.push_back(
        {ErrorCode::HasRationalPoint, "rational point exists: the conic is solvable at every place"});
    return;
  }
  rep.status = ValidationStatus::Inconclusive;
  rep.notes.push_back("no local obstruction found and no point of degree <= " + std::to_string(opt.degree_limit));
}

}  // namespace detail

/// Checks the conditions that make k[x,y] the ring of a nonrational genus zero
/// function field: shape of the equation, the condition on rho, and absence
/// of k-points.
template <class F>
ValidationReport validate_conic(const ConstantField<F>& k, const ConicData<typename F::Elem>& c,
                                const ValidationOptions& opt = {}) {
  ValidationReport rep;
  detail::check_shape(k, c, rep);
  if (!rep.violations.empty()) {
    detail::finish(rep);
    return rep;
  }
  if constexpr (std::is_same_v<F, RationalFunctions<GaloisField>>) {
    if (k.desc.characteristic() == 2)
      detail::check_char2(k, c, opt, rep);
    else
      detail::check_case_one(k, c, rep);
  } else {
    (void)opt;
    detail::check_case_one(k, c, rep);
  }
  detail::finish(rep);
  return rep;
}

template <class F>
ValidationReport validate_curve(const Curve<F>& curve, const ValidationOptions& opt = {}) {
  return validate_conic(curve.k, curve.conic, opt);
}

/// Builds a curve, raising on any violation or an inconclusive check.
template <class F>
Curve<F> make_curve(const ConstantField<F>& k, ConicCase kind, typename F::Elem rho, typename F::Elem sigma,
                    const ValidationOptions& opt = {}) {
  const F& f = k.arith;
  ConicData<typename F::Elem> c{kind, std::move(rho), std::move(sigma), kind == ConicCase::III ? f.one() : f.zero()};
  auto rep = validate_conic(k, c, opt);
  if (rep.status == ValidationStatus::Inconclusive)
    raise(ErrorCode::ValidationInconclusive, rep.notes.empty() ? "validation inconclusive" : rep.notes.back());
  for (auto& v : rep.violations)
    if (v.code == ErrorCode::HasRationalPoint) raise(v.code, v.message);
  if (!rep.violations.empty()) raise(rep.violations.front().code, rep.violations.front().message);
  return Curve<F>{k, std::move(c)};
}

/// Wraps a conic without checks; for tests of the checks themselves.
template <class F>
Curve<F> unchecked_curve(const ConstantField<F>& k, ConicData<typename F::Elem> c) {
  return Curve<F>{k, std::move(c)};
}

}  // namespace gzbt
