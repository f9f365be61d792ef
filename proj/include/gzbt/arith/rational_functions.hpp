#pragma once

#include <gmpxx.h>

#include <limits>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "gzbt/arith/polynomial.hpp"
#include "gzbt/error.hpp"

namespace gzbt {

template <class F>
struct RationalFunction {
  poly::Poly<F> num;
  poly::Poly<F> den;
};

/// The rational function field F(var). Elements are kept reduced with a
/// monic denominator, so structural equality is field equality.
template <class F>
class RationalFunctions {
 public:
  using Elem = RationalFunction<F>;
  using Poly = poly::Poly<F>;

  explicit RationalFunctions(F base, std::string var = "u") : base_(std::move(base)), var_(std::move(var)) {}

  const F& base() const { return base_; }
  const std::string& var() const { return var_; }

  Elem make(Poly num, Poly den) const {
    if (den.empty()) raise(ErrorCode::DivisionByZero, "rational function with zero denominator");
    if (num.empty()) return zero();
    auto g = poly::gcd(base_, num, den);
    if (poly::degree<F>(g) > 0) {
      num = poly::divmod(base_, num, g).first;
      den = poly::divmod(base_, den, g).first;
    }
    auto li = base_.inv(den.back());
    return Elem{poly::scale(base_, num, li), poly::scale(base_, den, li)};
  }
  Elem from_poly(Poly p) const { return Elem{std::move(p), Poly{base_.one()}}; }
  Elem constant(const typename F::Elem& c) const { return from_poly(poly::constant(base_, c)); }
  Elem variable() const { return from_poly(Poly{base_.zero(), base_.one()}); }

  Elem zero() const { return Elem{{}, Poly{base_.one()}}; }
  Elem one() const { return constant(base_.one()); }
  Elem from_int(long long n) const { return constant(base_.from_int(n)); }
  Elem from_mpz(const mpz_class& n) const { return constant(base_.from_mpz(n)); }

  Elem add(const Elem& a, const Elem& b) const {
    if (a.num.empty()) return b;
    if (b.num.empty()) return a;
    if (poly::equal(base_, a.den, b.den)) return make(poly::add(base_, a.num, b.num), a.den);
    // Henrici: only the common part g of the denominators can cancel
    auto g = poly::gcd(base_, a.den, b.den);
    if (poly::degree<F>(g) == 0) {
      auto num = poly::add(base_, poly::mul(base_, a.num, b.den), poly::mul(base_, b.num, a.den));
      if (num.empty()) return zero();
      return Elem{std::move(num), poly::mul(base_, a.den, b.den)};
    }
    auto ad = poly::divmod(base_, a.den, g).first, bd = poly::divmod(base_, b.den, g).first;
    auto num = poly::add(base_, poly::mul(base_, a.num, bd), poly::mul(base_, b.num, ad));
    if (num.empty()) return zero();
    auto g2 = poly::gcd(base_, num, g);
    if (poly::degree<F>(g2) > 0) {
      num = poly::divmod(base_, num, g2).first;
      ad = poly::divmod(base_, a.den, g2).first;
    } else {
      ad = a.den;
    }
    return Elem{std::move(num), poly::mul(base_, ad, bd)};
  }
  Elem neg(const Elem& a) const { return Elem{poly::neg(base_, a.num), a.den}; }
  Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
  Elem mul(const Elem& a, const Elem& b) const {
    if (a.num.empty() || b.num.empty()) return zero();
    if (poly::is_one(base_, a.den) && poly::is_one(base_, b.den))
      return from_poly(poly::mul(base_, a.num, b.num));
    // cross-cancel before multiplying to keep intermediate degrees small
    auto g1 = poly::gcd(base_, a.num, b.den);
    auto g2 = poly::gcd(base_, b.num, a.den);
    auto an = poly::divmod(base_, a.num, g1).first, bd = poly::divmod(base_, b.den, g1).first;
    auto bn = poly::divmod(base_, b.num, g2).first, ad = poly::divmod(base_, a.den, g2).first;
    auto num = poly::mul(base_, an, bn);
    auto den = poly::mul(base_, ad, bd);
    auto li = base_.inv(den.back());
    return Elem{poly::scale(base_, num, li), poly::scale(base_, den, li)};
  }
  Elem inv(const Elem& a) const {
    if (a.num.empty()) raise(ErrorCode::DivisionByZero, "inverse of 0 in " + base_name());
    auto li = base_.inv(a.num.back());
    return Elem{poly::scale(base_, a.den, li), poly::scale(base_, a.num, li)};
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, long long e) const {
    if (e < 0) {
      a = inv(a);
      e = -e;
    }
    Elem r = one();
    while (e) {
      if (e & 1) r = mul(r, a);
      e >>= 1;
      if (e) a = mul(a, a);
    }
    return r;
  }

  /// gcd in F(var)[X], computed as a primitive remainder sequence over F[var]
  /// after clearing denominators. Euclid over F(var) itself suffers heavy
  /// coefficient growth.
  std::vector<Elem> poly_gcd(const std::vector<Elem>& a, const std::vector<Elem>& b) const {
    using Big = std::vector<Poly>;
    auto primitive = [&](Big p) {
      Poly c;
      for (const auto& q : p)
        if (!q.empty()) c = c.empty() ? poly::monic(base_, q) : poly::gcd(base_, c, q);
      for (auto& q : p)
        if (!q.empty()) q = poly::divmod(base_, q, c).first;
      return p;
    };
    auto integral = [&](const std::vector<Elem>& p) {
      Poly l{base_.one()};
      for (const auto& e : p)
        if (!e.num.empty()) l = poly::divmod(base_, poly::mul(base_, l, e.den), poly::gcd(base_, l, e.den)).first;
      Big r;
      for (const auto& e : p) r.push_back(poly::mul(base_, e.num, poly::divmod(base_, l, e.den).first));
      return primitive(std::move(r));
    };
    auto trimmed = [](Big p) {
      while (!p.empty() && p.back().empty()) p.pop_back();
      return p;
    };
    Big A = trimmed(integral(a)), B = trimmed(integral(b));
    if (A.size() < B.size()) std::swap(A, B);
    while (!B.empty() && B.size() > 1) {
      // pseudo-remainder of A by B
      const Poly& lc = B.back();
      while (A.size() >= B.size()) {
        Poly lead = A.back();
        std::size_t s = A.size() - B.size();
        for (auto& q : A) q = poly::mul(base_, q, lc);
        for (std::size_t j = 0; j < B.size(); ++j)
          A[s + j] = poly::sub(base_, A[s + j], poly::mul(base_, lead, B[j]));
        A = trimmed(std::move(A));
      }
      if (A.empty()) break;
      A = primitive(std::move(A));
      std::swap(A, B);
    }
    Big g = B.empty() ? A : B;
    if (B.size() == 1) g = Big{Poly{base_.one()}};
    std::vector<Elem> out;
    for (auto& q : g) out.push_back(from_poly(std::move(q)));
    if (out.empty()) return out;
    auto li = inv(out.back());
    for (auto& e : out) e = mul(e, li);
    return out;
  }

  bool is_zero(const Elem& a) const { return a.num.empty(); }
  bool is_one(const Elem& a) const { return poly::is_one(base_, a.num) && poly::is_one(base_, a.den); }
  bool eq(const Elem& a, const Elem& b) const {
    return poly::equal(base_, a.num, b.num) && poly::equal(base_, a.den, b.den);
  }
  bool is_polynomial(const Elem& a) const { return poly::degree<F>(a.den) == 0; }
  bool is_constant(const Elem& a) const { return is_polynomial(a) && poly::degree<F>(a.num) <= 0; }
  typename F::Elem constant_value(const Elem& a) const { return poly::coeff(base_, a.num, 0); }

  /// Valuation at the infinite place of F(var): deg(den) - deg(num); INT_MAX for 0.
  int valuation_at_infinity(const Elem& a) const {
    if (a.num.empty()) return std::numeric_limits<int>::max();
    return poly::degree<F>(a.den) - poly::degree<F>(a.num);
  }

  unsigned long characteristic() const { return base_.characteristic(); }
  bool operator==(const RationalFunctions& o) const { return base_ == o.base_ && var_ == o.var_; }

  std::string to_string(const Elem& a) const {
    if (is_polynomial(a)) return poly::to_string(base_, a.num, var_);
    auto n = poly::to_string(base_, a.num, var_), d = poly::to_string(base_, a.den, var_);
    if (poly::detail::has_top_level(n, "+-")) n = "(" + n + ")";
    if (poly::detail::has_top_level(d, "+-*/")) d = "(" + d + ")";
    return n + "/" + d;
  }
  std::string to_string_atomic(const Elem& a) const {
    if (is_constant(a)) return base_.to_string_atomic(constant_value(a));
    if (is_polynomial(a) && a.num.size() >= 1) {
      int terms = 0;
      for (const auto& c : a.num) terms += base_.is_zero(c) ? 0 : 1;
      auto s = to_string(a);
      if (terms == 1 && s.find('+') == std::string::npos && s[0] != '-') return s;
    }
    return "(" + to_string(a) + ")";
  }

  std::optional<Elem> symbol(std::string_view name) const {
    if (name == var_) return variable();
    if (auto c = base_.symbol(name)) return constant(*c);
    return std::nullopt;
  }

  /// Random element with numerator degree <= size and denominator degree <= size/2.
  template <class Rng>
  Elem random(Rng& rng, int size) const {
    std::uniform_int_distribution<int> nd(0, std::max(0, size));
    std::uniform_int_distribution<int> dd(0, std::max(0, size / 2));
    auto rp = [&](int deg, bool nonzero) {
      for (;;) {
        Poly p(deg + 1, base_.zero());
        for (auto& c : p) c = base_.random(rng, 1);
        poly::trim(base_, p);
        if (!nonzero || !p.empty()) return p;
      }
    };
    return make(rp(nd(rng), false), rp(dd(rng), true));
  }

 private:
  std::string base_name() const { return "F(" + var_ + ")"; }

  F base_;
  std::string var_;
};

}  // namespace gzbt
