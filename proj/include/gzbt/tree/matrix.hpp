#pragma once

#include <string>

#include "gzbt/function_field/field.hpp"

namespace gzbt {

/// [[a, b], [c, d]] over K.
template <class F>
struct Matrix2 {
  KElement<F> a, b, c, d;
};

template <class F>
Matrix2<F> mat_identity(const FunctionField<F>& K) {
  return {K.one(), K.zero(), K.zero(), K.one()};
}

template <class F>
Matrix2<F> mat_diag(const FunctionField<F>& K, const KElement<F>& p, const KElement<F>& q) {
  return {p, K.zero(), K.zero(), q};
}

template <class F>
Matrix2<F> mat_mul(const FunctionField<F>& K, const Matrix2<F>& g, const Matrix2<F>& h) {
  return {K.add(K.mul(g.a, h.a), K.mul(g.b, h.c)), K.add(K.mul(g.a, h.b), K.mul(g.b, h.d)),
          K.add(K.mul(g.c, h.a), K.mul(g.d, h.c)), K.add(K.mul(g.c, h.b), K.mul(g.d, h.d))};
}

template <class F>
Matrix2<F> mat_add(const FunctionField<F>& K, const Matrix2<F>& g, const Matrix2<F>& h) {
  return {K.add(g.a, h.a), K.add(g.b, h.b), K.add(g.c, h.c), K.add(g.d, h.d)};
}

template <class F>
Matrix2<F> mat_scale(const FunctionField<F>& K, const KElement<F>& s, const Matrix2<F>& g) {
  return {K.mul(s, g.a), K.mul(s, g.b), K.mul(s, g.c), K.mul(s, g.d)};
}

template <class F>
KElement<F> mat_det(const FunctionField<F>& K, const Matrix2<F>& g) {
  return K.sub(K.mul(g.a, g.d), K.mul(g.b, g.c));
}

template <class F>
Matrix2<F> mat_inverse(const FunctionField<F>& K, const Matrix2<F>& g) {
  auto det = mat_det(K, g);
  if (K.is_zero(det)) raise(ErrorCode::SingularMatrix, "matrix is not invertible");
  auto di = K.inv(det);
  return {K.mul(g.d, di), K.neg(K.mul(g.b, di)), K.neg(K.mul(g.c, di)), K.mul(g.a, di)};
}

template <class F>
bool mat_eq(const FunctionField<F>& K, const Matrix2<F>& g, const Matrix2<F>& h) {
  return K.eq(g.a, h.a) && K.eq(g.b, h.b) && K.eq(g.c, h.c) && K.eq(g.d, h.d);
}

/// g = s*I for some s in K.
template <class F>
bool mat_is_scalar(const FunctionField<F>& K, const Matrix2<F>& g) {
  return K.is_zero(g.b) && K.is_zero(g.c) && K.eq(g.a, g.d);
}

template <class F>
std::string mat_to_string(const FunctionField<F>& K, const Matrix2<F>& g) {
  return "[[" + K.to_string(g.a) + ", " + K.to_string(g.b) + "], [" + K.to_string(g.c) + ", " + K.to_string(g.d) +
         "]]";
}

/// Nonzero constant of k, read off a K element.
template <class F>
bool is_nonzero_constant(const FunctionField<F>& K, const KElement<F>& e) {
  return K.kx().is_zero(e.b) && K.kx().is_constant(e.a) && !K.kx().is_zero(e.a);
}

/// Entries in C = k[x, y] and det in k*.
template <class F>
bool in_G(const FunctionField<F>& K, const Matrix2<F>& g) {
  return K.is_integral(g.a) && K.is_integral(g.b) && K.is_integral(g.c) && K.is_integral(g.d) &&
         is_nonzero_constant(K, mat_det(K, g));
}

template <class F>
bool in_Gamma(const FunctionField<F>& K, const Matrix2<F>& g) {
  return in_G(K, g) && K.is_one(mat_det(K, g));
}

/// Entries in O_infinity and det a unit.
template <class F>
bool in_GL2O(const FunctionField<F>& K, const Matrix2<F>& g) {
  for (const auto* e : {&g.a, &g.b, &g.c, &g.d})
    if (K.valuation(*e) < 0) return false;
  auto det = mat_det(K, g);
  return !K.is_zero(det) && K.valuation(det) == 0;
}

}  // namespace gzbt
