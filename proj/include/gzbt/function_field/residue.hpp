#pragma once

#include <string>

#include "gzbt/constant_field/conic.hpp"
#include "gzbt/error.hpp"

namespace gzbt {

/// c0 + c1*tbar in the residue field k(tbar) at infinity.
template <class E>
struct ResidueElement {
  E c0;
  E c1;
};

/// k(tbar) with tbar^2 = e0 + e1*tbar: (e0, e1) = (-rho, 0) in cases I-III,
/// (rho, 1) in case IV.
template <class F>
class ResidueField {
 public:
  using Elem = ResidueElement<typename F::Elem>;

  ResidueField(F k, ConicCase kind, const typename F::Elem& rho) : k_(std::move(k)) {
    if (kind == ConicCase::IV) {
      e0_ = rho;
      e1_ = k_.one();
    } else {
      e0_ = k_.neg(rho);
      e1_ = k_.zero();
    }
  }

  const F& base() const { return k_; }

  Elem zero() const { return {k_.zero(), k_.zero()}; }
  Elem one() const { return {k_.one(), k_.zero()}; }
  Elem tbar() const { return {k_.zero(), k_.one()}; }
  Elem from_base(const typename F::Elem& c) const { return {c, k_.zero()}; }
  Elem make(typename F::Elem c0, typename F::Elem c1) const { return {std::move(c0), std::move(c1)}; }

  Elem add(const Elem& a, const Elem& b) const { return {k_.add(a.c0, b.c0), k_.add(a.c1, b.c1)}; }
  Elem sub(const Elem& a, const Elem& b) const { return {k_.sub(a.c0, b.c0), k_.sub(a.c1, b.c1)}; }
  Elem neg(const Elem& a) const { return {k_.neg(a.c0), k_.neg(a.c1)}; }
  Elem mul(const Elem& a, const Elem& b) const {
    auto bd = k_.mul(a.c1, b.c1);
    return {k_.add(k_.mul(a.c0, b.c0), k_.mul(bd, e0_)),
            k_.add(k_.add(k_.mul(a.c0, b.c1), k_.mul(a.c1, b.c0)), k_.mul(bd, e1_))};
  }
  /// N(a + b tbar) = a^2 + a b e1 - b^2 e0.
  typename F::Elem norm(const Elem& a) const {
    return k_.sub(k_.add(k_.mul(a.c0, a.c0), k_.mul(k_.mul(a.c0, a.c1), e1_)), k_.mul(k_.mul(a.c1, a.c1), e0_));
  }
  Elem inv(const Elem& a) const {
    auto n = norm(a);
    if (k_.is_zero(n)) raise(ErrorCode::DivisionByZero, "inverse of 0 in the residue field");
    auto ni = k_.inv(n);
    return {k_.mul(k_.add(a.c0, k_.mul(a.c1, e1_)), ni), k_.mul(k_.neg(a.c1), ni)};
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

  bool is_zero(const Elem& a) const { return k_.is_zero(a.c0) && k_.is_zero(a.c1); }
  bool eq(const Elem& a, const Elem& b) const { return k_.eq(a.c0, b.c0) && k_.eq(a.c1, b.c1); }

  std::string to_string(const Elem& a) const {
    if (k_.is_zero(a.c1)) return k_.to_string(a.c0);
    std::string t = k_.is_one(a.c1) ? "tbar" : k_.to_string_atomic(a.c1) + "*tbar";
    if (k_.is_zero(a.c0)) return t;
    return k_.to_string(a.c0) + "+" + t;
  }

 private:
  F k_;
  typename F::Elem e0_, e1_;
};

}  // namespace gzbt
