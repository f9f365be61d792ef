#pragma once

#include <utility>

#include "gzbt/constant_field/char2.hpp"
#include "gzbt/function_field/curve.hpp"

namespace gzbt {

/// alpha y^2 + beta x y + gamma x^2 + delta x + epsilon y + zeta.
template <class E>
struct QuadraticCoeffs {
  E alpha, beta, gamma, delta, epsilon, zeta;
};

/// cx*x + cy*y + c0.
template <class E>
struct AffineForm {
  E cx, cy, c0;
};

/// New coordinates x' = x_new(x, y), y' = y_new(x, y) with
/// canonical(x', y') = scale * input(x, y).
template <class E>
struct Substitution {
  AffineForm<E> x_new;
  AffineForm<E> y_new;
  E scale;
};

template <class F>
struct Normalization {
  Curve<F> curve;
  Substitution<typename F::Elem> substitution;
};

/// Substitutes affine forms for x and y in a quadratic.
template <class F>
QuadraticCoeffs<typename F::Elem> substitute(const F& f, const QuadraticCoeffs<typename F::Elem>& q,
                                             const AffineForm<typename F::Elem>& X,
                                             const AffineForm<typename F::Elem>& Y) {
  using E = typename F::Elem;
  QuadraticCoeffs<E> r{f.zero(), f.zero(), f.zero(), f.zero(), f.zero(), f.zero()};
  auto acc = [&](const E& c, const AffineForm<E>& l, const AffineForm<E>& m) {
    if (f.is_zero(c)) return;
    r.alpha = f.add(r.alpha, f.mul(c, f.mul(l.cy, m.cy)));
    r.beta = f.add(r.beta, f.mul(c, f.add(f.mul(l.cx, m.cy), f.mul(l.cy, m.cx))));
    r.gamma = f.add(r.gamma, f.mul(c, f.mul(l.cx, m.cx)));
    r.delta = f.add(r.delta, f.mul(c, f.add(f.mul(l.cx, m.c0), f.mul(l.c0, m.cx))));
    r.epsilon = f.add(r.epsilon, f.mul(c, f.add(f.mul(l.cy, m.c0), f.mul(l.c0, m.cy))));
    r.zeta = f.add(r.zeta, f.mul(c, f.mul(l.c0, m.c0)));
  };
  AffineForm<E> one{f.zero(), f.zero(), f.one()};
  acc(q.alpha, Y, Y);
  acc(q.beta, X, Y);
  acc(q.gamma, X, X);
  acc(q.delta, X, one);
  acc(q.epsilon, Y, one);
  acc(q.zeta, one, one);
  return r;
}

/// The canonical relation of a conic as a quadratic in x, y.
template <class F>
QuadraticCoeffs<typename F::Elem> canonical_quadratic(const F& f, const ConicData<typename F::Elem>& c) {
  return {f.one(), c.kind == ConicCase::IV ? f.one() : f.zero(), c.rho, c.tau, f.zero(), c.sigma};
}

namespace detail {

template <class F>
struct Normalizer {
  using E = typename F::Elem;
  const F& f;
  QuadraticCoeffs<E> q;
  AffineForm<E> X, Y;  // current variables in terms of the input ones
  E scale;             // current equation = scale * input

  E two_inv() const { return f.inv(f.from_int(2)); }
  AffineForm<E> combine(const E& a, const E& b, const E& c) const {
    // a*X + b*Y + c
    return {f.add(f.mul(a, X.cx), f.mul(b, Y.cx)), f.add(f.mul(a, X.cy), f.mul(b, Y.cy)),
            f.add(f.add(f.mul(a, X.c0), f.mul(b, Y.c0)), c)};
  }
};

[[noreturn]] inline void degenerate(const std::string& why) { raise(ErrorCode::DegenerateConic, why); }
[[noreturn]] inline void has_point(const std::string& why) { raise(ErrorCode::HasRationalPoint, why); }

}  // namespace detail

/// Brings alpha y^2 + beta x y + gamma x^2 + delta x + epsilon y + zeta = 0 to
/// one of the four normal forms by an affine change of variables. The result
/// is not validated; see normalize_conic.
template <class F>
Normalization<F> reduce_conic(const ConstantField<F>& k, QuadraticCoeffs<typename F::Elem> in) {
  using E = typename F::Elem;
  k.require_element_arithmetic();
  const F& f = k.arith;
  detail::Normalizer<F> st{f, in, {f.one(), f.zero(), f.zero()}, {f.zero(), f.one(), f.zero()}, f.one()};
  auto& q = st.q;
  if (f.is_zero(q.alpha)) {
    if (f.is_zero(q.gamma)) detail::degenerate("no square terms");
    std::swap(q.alpha, q.gamma);
    std::swap(q.delta, q.epsilon);
    std::swap(st.X, st.Y);
  }
  {
    auto ai = f.inv(q.alpha);
    for (E* c : {&q.alpha, &q.beta, &q.gamma, &q.delta, &q.epsilon, &q.zeta}) *c = f.mul(*c, ai);
    st.scale = ai;
  }
  ConicData<E> out{ConicCase::I, f.zero(), f.zero(), f.zero()};
  AffineForm<E> xn, yn;
  E extra = f.one();  // canonical = extra * current equation
  if (k.desc.characteristic() != 2) {
    // y' = y + (beta x + epsilon)/2, then x' = x + B/(2A)
    const E h = st.two_inv();
    const E A = f.sub(q.gamma, f.mul(f.mul(q.beta, q.beta), f.mul(h, h)));
    const E B = f.sub(q.delta, f.mul(f.mul(q.beta, q.epsilon), h));
    const E C = f.sub(q.zeta, f.mul(f.mul(q.epsilon, q.epsilon), f.mul(h, h)));
    if (f.is_zero(A)) {
      if (!f.is_zero(B)) detail::has_point("parabola: x is a polynomial in y");
      detail::degenerate("quadratic in y alone");
    }
    const E shift = f.mul(B, f.inv(f.add(A, A)));
    out.rho = A;
    out.sigma = f.sub(C, f.mul(f.mul(B, shift), h));
    if (f.is_zero(out.sigma)) detail::degenerate("cone: the quadratic form is singular");
    xn = st.combine(f.one(), f.zero(), shift);
    yn = st.combine(f.mul(q.beta, h), f.one(), f.mul(q.epsilon, h));
  } else if (!f.is_zero(q.beta)) {
    const E bi = f.inv(q.beta);
    const E d = f.mul(q.delta, bi), g = f.mul(q.gamma, f.mul(bi, bi));
    out.kind = ConicCase::IV;
    out.rho = g;
    out.sigma = f.add(f.add(q.zeta, f.mul(d, d)), f.add(f.mul(q.epsilon, d), f.mul(g, f.mul(q.epsilon, q.epsilon))));
    if (f.is_zero(out.sigma)) detail::degenerate("cone: the quadratic form is singular");
    xn = st.combine(q.beta, f.zero(), q.epsilon);
    yn = st.combine(f.zero(), f.one(), d);
  } else {
    if (f.is_zero(q.gamma)) {
      if (!f.is_zero(q.delta)) detail::has_point("x is a polynomial in y");
      detail::degenerate("quadratic in y alone");
    }
    if (f.is_zero(q.delta) && f.is_zero(q.epsilon)) {
      out.kind = ConicCase::II;
      out.rho = q.gamma;
      out.sigma = q.zeta;
      if (f.is_zero(out.sigma)) detail::degenerate("cone: the quadratic form is singular");
      xn = st.X;
      yn = st.Y;
    } else if (f.is_zero(q.epsilon)) {
      out.kind = ConicCase::III;
      out.rho = f.div(q.gamma, f.mul(q.delta, q.delta));
      out.sigma = q.zeta;
      out.tau = f.one();
      xn = st.combine(q.delta, f.zero(), f.zero());
      yn = st.Y;
    } else {
      const E ei = f.inv(q.epsilon);
      const E p = f.add(f.mul(f.mul(q.delta, q.delta), f.mul(ei, ei)), q.gamma);
      if (f.is_zero(p)) {
        // y^2 + gamma x^2 is the square of a linear form L, and the equation
        // reads L^2 + L' + zeta with L' proportional to L
        if constexpr (std::is_same_v<F, RationalFunctions<GaloisField>>) {
          if (is_artin_schreier_value(f, f.mul(q.zeta, f.mul(ei, ei))))
            detail::has_point("equation in one linear form with a root in k");
        }
        detail::degenerate("equation in one linear form");
      }
      const E pi = f.inv(p);
      out.kind = ConicCase::III;
      out.rho = f.mul(p, f.mul(ei, ei));
      out.sigma = f.mul(q.zeta, pi);
      out.tau = f.one();
      xn = st.combine(f.mul(q.delta, pi), f.mul(q.epsilon, pi), f.zero());
      yn = st.X;
      extra = pi;
    }
    if (out.kind == ConicCase::III && f.is_zero(out.sigma)) detail::has_point("(x', y') = (0, 0) is a point");
  }
  return {Curve<F>{k, out}, {xn, yn, f.mul(extra, st.scale)}};
}

/// reduce_conic followed by validation. Every failed check means the conic
/// has a k-point.
template <class F>
Normalization<F> normalize_conic(const ConstantField<F>& k, const QuadraticCoeffs<typename F::Elem>& in,
                                 const ValidationOptions& opt = {}) {
  auto n = reduce_conic(k, in);
  auto rep = validate_conic(k, n.curve.conic, opt);
  if (rep.status == ValidationStatus::Inconclusive)
    raise(ErrorCode::ValidationInconclusive, rep.notes.empty() ? "validation inconclusive" : rep.notes.back());
  if (!rep.violations.empty()) detail::has_point(rep.violations.front().message);
  return n;
}

}  // namespace gzbt
