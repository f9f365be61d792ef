#pragma once

#include <algorithm>
#include <climits>
#include <string>

#include "gzbt/tree/matrix.hpp"

namespace gzbt {

/// The coset of [[pi^n, z], [0, 1]] modulo Z GL_2(O_infinity).
template <class F>
struct Vertex {
  long n = 0;
  KElement<F> z;
};

/// Vertices, adjacency and the left action of GL_2(K) on the tree of K
/// at infinity.
template <class F>
class Tree {
 public:
  using Elem = KElement<F>;
  using Residue = typename FunctionField<F>::Residue;

  explicit Tree(const FunctionField<F>& K) : K_(K) {}
  const FunctionField<F>& field() const { return K_; }

  Vertex<F> vertex(long n, Elem z) const { return {n, std::move(z)}; }
  /// v_n = v(pi^(-n), 0).
  Vertex<F> ray(long n) const { return {-n, K_.zero()}; }
  /// v_* = v(pi, t).
  Vertex<F> vstar() const { return {1, K_.t()}; }
  Matrix2<F> matrix(const Vertex<F>& v) const { return {K_.pi_pow(v.n), v.z, K_.zero(), K_.one()}; }

  /// Column reduction of g by GL_2(O_infinity) on the right and scalars.
  /// The pivot is the lower entry of smaller valuation, moved to the right
  /// column (ties prefer the left column); eliminating the other lower entry
  /// and dividing by the pivot d gives [[det/d^2, b/d], [0, 1]], so only the
  /// valuation of the determinant is needed for n.
  Vertex<F> normal_form(const Matrix2<F>& g) const {
    auto det = mat_det(K_, g);
    if (K_.is_zero(det)) raise(ErrorCode::SingularMatrix, "coset of a singular matrix");
    const bool swap = K_.valuation(g.c) <= K_.valuation(g.d);
    const Elem& b = swap ? g.a : g.b;
    const Elem& d = swap ? g.c : g.d;
    return {static_cast<long>(K_.valuation(det)) - 2L * K_.valuation(d), K_.div(b, d)};
  }

  bool eq(const Vertex<F>& v, const Vertex<F>& w) const {
    return v.n == w.n && K_.valuation(K_.sub(v.z, w.z)) >= v.n;
  }

  long distance(const Vertex<F>& v, const Vertex<F>& w) const {
    // w^-1 v = [[pi^(n-m), (z - z') pi^(-m)], [0, 1]]; elementary divisors
    const long m = v.n - w.n;
    auto dz = K_.sub(v.z, w.z);
    long e = std::min<long>(m, 0);
    if (!K_.is_zero(dz)) e = std::min<long>(e, K_.valuation(dz) - w.n);
    return m - 2 * e;
  }

  bool adjacent(const Vertex<F>& v, const Vertex<F>& w) const { return distance(v, w) == 1; }

  /// v(pi^(n+1), z + lift(u) pi^n).
  Vertex<F> child(const Vertex<F>& v, const Residue& u) const {
    return {v.n + 1, K_.add(v.z, K_.mul(K_.lift(u), K_.pi_pow(v.n)))};
  }
  /// v(pi^(n-1), z).
  Vertex<F> parent(const Vertex<F>& v) const { return {v.n - 1, v.z}; }

  Vertex<F> act(const Matrix2<F>& g, const Vertex<F>& v) const { return normal_form(mat_mul(K_, g, matrix(v))); }

  /// Representative with z truncated below pi^n: the pi-adic digits of z from
  /// index n on are dropped, so equal vertices get identical representatives.
  Vertex<F> reduced(const Vertex<F>& v) const {
    if (K_.is_zero(v.z) || K_.valuation(v.z) >= v.n) return {v.n, K_.zero()};
    const auto& kx = K_.kx();
    auto cut = [&](const typename FunctionField<F>::R& r) {
      // digits of r in pi = 1/x with index < n
      if (kx.is_zero(r)) return r;
      long lo = kx.valuation_at_infinity(r);
      if (lo >= v.n) return kx.zero();
      auto shifted = kx.mul(r, kx.pow(kx.variable(), lo));
      auto digits = expand_at_infinity(kx, shifted, static_cast<std::size_t>(v.n - lo));
      auto out = kx.zero();
      for (std::size_t i = 0; i < digits.size(); ++i)
        if (!K_.constants().is_zero(digits[i]))
          out = kx.add(out, kx.mul(kx.constant(digits[i]), kx.pow(kx.variable(), -(lo + static_cast<long>(i)))));
      return out;
    };
    // z = A + B t with A = a, B = b x
    auto A = cut(v.z.a);
    auto B = cut(kx.mul(v.z.b, kx.variable()));
    return {v.n, K_.make(A, kx.div(B, kx.variable()))};
  }

  std::string to_string(const Vertex<F>& v) const {
    return "v(pi^" + std::to_string(v.n) + ", " + K_.to_string(v.z) + ")";
  }

 private:
  const FunctionField<F>& K_;
};

}  // namespace gzbt
