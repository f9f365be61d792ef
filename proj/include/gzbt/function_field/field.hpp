#pragma once

#include <climits>
#include <optional>
#include <string>
#include <vector>

#include "gzbt/arith/parse.hpp"
#include "gzbt/function_field/curve.hpp"
#include "gzbt/function_field/residue.hpp"
#include "gzbt/function_field/series.hpp"

namespace gzbt {

/// a + b*y with a, b in k(x), reduced by y^2 = p1*y + p0.
template <class F>
struct KElement {
  RationalFunction<F> a;
  RationalFunction<F> b;
};

/// The function field K = k(x)[y] of a curve, with the valuation at the
/// unique place at infinity (uniformizer pi = 1/x, residue field k(tbar),
/// t = y/x).
template <class F>
class FunctionField {
 public:
  using Const = typename F::Elem;
  using KX = RationalFunctions<F>;
  using R = RationalFunction<F>;
  using Elem = KElement<F>;
  using Residue = ResidueElement<Const>;

  explicit FunctionField(Curve<F> curve)
      : curve_(std::move(curve)),
        kx_(curve_.k.arith, "x"),
        res_(curve_.k.arith, curve_.kind(), curve_.rho()) {
    curve_.k.require_element_arithmetic();
    const F& k = curve_.k.arith;
    auto x = kx_.variable();
    auto rho = kx_.constant(curve_.rho()), sigma = kx_.constant(curve_.sigma()), tau = kx_.constant(curve_.tau());
    auto rx2 = kx_.mul(rho, kx_.mul(x, x));
    if (curve_.kind() == ConicCase::IV) {
      p1_ = x;
      p0_ = kx_.add(rx2, sigma);
    } else {
      p1_ = kx_.zero();
      p0_ = kx_.neg(kx_.add(kx_.add(rx2, kx_.mul(tau, x)), sigma));
    }
    (void)k;
  }

  const Curve<F>& curve() const { return curve_; }
  const F& constants() const { return curve_.k.arith; }
  const KX& kx() const { return kx_; }
  const ResidueField<F>& residue_field() const { return res_; }
  /// y^2 = p1*y + p0.
  const R& p0() const { return p0_; }
  const R& p1() const { return p1_; }

  Elem make(R a, R b) const { return {std::move(a), std::move(b)}; }
  Elem from_rf(R a) const { return {std::move(a), kx_.zero()}; }
  Elem from_const(const Const& c) const { return from_rf(kx_.constant(c)); }
  Elem zero() const { return from_rf(kx_.zero()); }
  Elem one() const { return from_rf(kx_.one()); }
  Elem from_int(long long n) const { return from_rf(kx_.from_int(n)); }
  Elem from_mpz(const mpz_class& n) const { return from_rf(kx_.from_mpz(n)); }
  Elem x() const { return from_rf(kx_.variable()); }
  Elem y() const { return {kx_.zero(), kx_.one()}; }
  Elem t() const { return {kx_.zero(), kx_.inv(kx_.variable())}; }
  Elem pi() const { return from_rf(kx_.inv(kx_.variable())); }
  /// pi^n for any integer n.
  Elem pi_pow(long n) const { return from_rf(kx_.pow(kx_.variable(), -n)); }

  Elem add(const Elem& u, const Elem& v) const { return {kx_.add(u.a, v.a), kx_.add(u.b, v.b)}; }
  Elem sub(const Elem& u, const Elem& v) const { return {kx_.sub(u.a, v.a), kx_.sub(u.b, v.b)}; }
  Elem neg(const Elem& u) const { return {kx_.neg(u.a), kx_.neg(u.b)}; }
  Elem mul(const Elem& u, const Elem& v) const {
    auto bb = kx_.mul(u.b, v.b);
    auto a = kx_.add(kx_.mul(u.a, v.a), kx_.mul(bb, p0_));
    auto b = kx_.add(kx_.add(kx_.mul(u.a, v.b), kx_.mul(u.b, v.a)), kx_.mul(bb, p1_));
    return {std::move(a), std::move(b)};
  }
  Elem scale(const Const& c, const Elem& u) const {
    auto cc = kx_.constant(c);
    return {kx_.mul(cc, u.a), kx_.mul(cc, u.b)};
  }
  /// Norm to k(x): a^2 + a b p1 - b^2 p0.
  R norm(const Elem& u) const {
    return kx_.sub(kx_.add(kx_.mul(u.a, u.a), kx_.mul(kx_.mul(u.a, u.b), p1_)), kx_.mul(kx_.mul(u.b, u.b), p0_));
  }
  /// Conjugate a + b p1 - b y.
  Elem conj(const Elem& u) const { return {kx_.add(u.a, kx_.mul(u.b, p1_)), kx_.neg(u.b)}; }
  Elem inv(const Elem& u) const {
    if (is_zero(u)) raise(ErrorCode::DivisionByZero, "inverse of 0 in K");
    auto ni = kx_.inv(norm(u));
    auto c = conj(u);
    return {kx_.mul(c.a, ni), kx_.mul(c.b, ni)};
  }
  Elem div(const Elem& u, const Elem& v) const { return mul(u, inv(v)); }
  Elem pow(Elem u, long long e) const {
    if (e < 0) {
      u = inv(u);
      e = -e;
    }
    Elem r = one();
    while (e) {
      if (e & 1) r = mul(r, u);
      e >>= 1;
      if (e) u = mul(u, u);
    }
    return r;
  }

  bool is_zero(const Elem& u) const { return kx_.is_zero(u.a) && kx_.is_zero(u.b); }
  bool is_one(const Elem& u) const { return kx_.is_one(u.a) && kx_.is_zero(u.b); }
  bool eq(const Elem& u, const Elem& v) const { return kx_.eq(u.a, v.a) && kx_.eq(u.b, v.b); }
  unsigned long characteristic() const { return kx_.characteristic(); }

  /// nu(a + b y) = min(nu(a), nu(b) - 1): the residues 1 and tbar are
  /// independent over k, so leading terms of a and b*y cannot cancel.
  int valuation(const Elem& u) const {
    if (is_zero(u)) return INT_MAX;
    int va = kx_.valuation_at_infinity(u.a), vb = kx_.valuation_at_infinity(u.b);
    if (vb != INT_MAX) vb -= 1;
    return std::min(va, vb);
  }

  /// True iff u lies in C = k[x, y].
  bool is_integral(const Elem& u) const { return kx_.is_polynomial(u.a) && kx_.is_polynomial(u.b); }

  /// k-basis 1, x, ..., x^n, y, y x, ..., y x^(n-1) of C(n) = {z in C : nu(z) >= -n}.
  std::vector<Elem> riemann_roch_basis(int n) const {
    if (n < 0) raise(ErrorCode::InvalidCurve, "C(n) needs n >= 0");
    std::vector<Elem> out;
    for (int i = 0; i <= n; ++i) out.push_back(from_rf(kx_.pow(kx_.variable(), i)));
    for (int i = 0; i < n; ++i) out.push_back({kx_.zero(), kx_.pow(kx_.variable(), i)});
    return out;
  }

  /// Coefficients of pi^0 .. pi^(m-1) in z = sum (A_i + B_i t) pi^i, read from
  /// z = A + B t with A = a and B = b x.
  std::vector<Residue> residue_expansion(const Elem& z, std::size_t m) const {
    if (valuation(z) < 0) raise(ErrorCode::NotIntegralAtInfinity, "residue expansion needs nu(z) >= 0");
    auto A = expand_at_infinity(kx_, z.a, m);
    auto B = expand_at_infinity(kx_, kx_.mul(z.b, kx_.variable()), m);
    std::vector<Residue> out;
    out.reserve(m);
    for (std::size_t i = 0; i < m; ++i) out.push_back({A[i], B[i]});
    return out;
  }
  Residue residue(const Elem& z) const { return residue_expansion(z, 1)[0]; }
  /// The representative c0 + c1 t of a residue class.
  Elem lift(const Residue& r) const {
    return add(from_const(r.c0), {kx_.zero(), kx_.mul(kx_.constant(r.c1), kx_.inv(kx_.variable()))});
  }

  std::string to_string(const Elem& u) const {
    if (kx_.is_zero(u.b)) return kx_.to_string(u.a);
    std::string c = kx_.to_string(u.b);
    std::string yb = c == "1" ? "y" : c == "-1" ? "-y"
                                    : (poly::detail::has_top_level(c, "+-") ? "(" + c + ")" : c) + "*y";
    if (kx_.is_zero(u.a)) return yb;
    return kx_.to_string(u.a) + (yb[0] == '-' ? "" : "+") + yb;
  }
  std::string to_string_atomic(const Elem& u) const {
    if (kx_.is_zero(u.b)) return kx_.to_string_atomic(u.a);
    return "(" + to_string(u) + ")";
  }
  /// Symbols x, y, t, pi and the constants' own symbols.
  std::optional<Elem> symbol(std::string_view name) const {
    if (name == "x") return x();
    if (name == "y") return y();
    if (name == "t") return t();
    if (name == "pi") return pi();
    if (auto c = constants().symbol(name)) return from_const(*c);
    return std::nullopt;
  }
  Elem parse(std::string_view text) const { return parse_element(*this, text); }

  template <class Rng>
  Elem random(Rng& rng, int size) const {
    return {kx_.random(rng, size), kx_.random(rng, size)};
  }

 private:
  Curve<F> curve_;
  KX kx_;
  ResidueField<F> res_;
  R p0_, p1_;
};

}  // namespace gzbt
