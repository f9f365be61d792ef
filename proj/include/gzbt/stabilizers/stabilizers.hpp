#pragma once

#include <array>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gzbt/constant_field/char2.hpp"
#include "gzbt/constant_field/squares.hpp"
#include "gzbt/tree/vertex.hpp"

namespace gzbt {

/// The three membership conditions for the stabilizer of v(pi^n, z) in G.
template <class F>
bool stab_membership(const FunctionField<F>& K, const Matrix2<F>& g, const Vertex<F>& v) {
  if (!in_G(K, g)) raise(ErrorCode::NotInG, "stabilizer test needs entries in C and det in k*");
  const auto& z = v.z;
  const long n = v.n;
  auto ge = [&](const KElement<F>& e, long bound) { return K.is_zero(e) || K.valuation(e) >= bound; };
  if (!ge(K.sub(g.a, K.mul(z, g.c)), 0) || !ge(K.add(g.d, K.mul(z, g.c)), 0)) return false;
  if (!ge(g.c, -n)) return false;
  auto e = K.sub(K.add(g.b, K.mul(z, K.sub(g.a, g.d))), K.mul(K.mul(z, z), g.c));
  return ge(e, n);
}

template <class F>
struct QuaternionBasis {
  Matrix2<F> U, V, W;
};

template <class E>
struct QuaternionCoords {
  E alpha, beta, gamma, delta;
};

template <class F>
QuaternionBasis<F> quaternion_basis(const FunctionField<F>& K) {
  const auto& c = K.curve();
  auto rho = K.from_const(c.rho());
  auto x = K.x(), y = K.y();
  auto rx = K.mul(rho, x);
  if (c.kind() == ConicCase::IV) {
    auto rxy = K.add(rx, y);
    return {{K.zero(), rho, K.one(), K.one()},
            {y, rxy, x, y},
            {rxy, K.add(rx, K.mul(K.add(K.one(), rho), y)), y, rxy}};
  }
  auto tau_rx = K.add(K.from_const(c.tau()), rx);
  return {{K.zero(), K.neg(rho), K.one(), K.zero()},
          {y, tau_rx, x, K.neg(y)},
          {K.neg(rx), K.mul(rho, y), y, tau_rx}};
}

template <class F>
Matrix2<F> quaternion_element(const FunctionField<F>& K, const QuaternionCoords<typename F::Elem>& q,
                              const QuaternionBasis<F>& B) {
  const auto& k = K.constants();
  if (k.is_zero(q.alpha) && k.is_zero(q.beta) && k.is_zero(q.gamma) && k.is_zero(q.delta))
    raise(ErrorCode::ZeroTuple, "quaternion coordinates are all zero");
  auto m = mat_scale(K, K.from_const(q.alpha), mat_identity(K));
  m = mat_add(K, m, mat_scale(K, K.from_const(q.beta), B.U));
  m = mat_add(K, m, mat_scale(K, K.from_const(q.gamma), B.V));
  return mat_add(K, m, mat_scale(K, K.from_const(q.delta), B.W));
}

/// det(alpha I + beta U + gamma V + delta W) in closed form. Case IV:
/// alpha^2 + alpha beta + rho beta^2 + sigma (gamma^2 + gamma delta + rho delta^2).
template <class F>
typename F::Elem det_form(const FunctionField<F>& K, const QuaternionCoords<typename F::Elem>& q) {
  const auto& k = K.constants();
  const auto& c = K.curve();
  auto sq = [&](const auto& e) { return k.mul(e, e); };
  if (c.kind() == ConicCase::IV) {
    auto first = k.add(k.add(sq(q.alpha), k.mul(q.alpha, q.beta)), k.mul(c.rho(), sq(q.beta)));
    auto second = k.add(k.add(sq(q.gamma), k.mul(q.gamma, q.delta)), k.mul(c.rho(), sq(q.delta)));
    return k.add(first, k.mul(c.sigma(), second));
  }
  auto r = k.add(sq(q.alpha), k.mul(c.rho(), sq(q.beta)));
  r = k.add(r, k.mul(c.tau(), k.sub(k.mul(q.alpha, q.delta), k.mul(q.beta, q.gamma))));
  return k.add(r, k.mul(c.sigma(), k.add(sq(q.gamma), k.mul(c.rho(), sq(q.delta)))));
}

namespace detail {

/// Coordinates of e = c0 + c1 x + c2 y in C(1); nullopt otherwise.
template <class F>
std::optional<std::array<typename F::Elem, 3>> c1_coords(const FunctionField<F>& K, const KElement<F>& e) {
  const auto& kx = K.kx();
  if (!kx.is_polynomial(e.a) || !kx.is_constant(e.b) || poly::degree<F>(e.a.num) > 1) return std::nullopt;
  const auto& k = K.constants();
  return std::array<typename F::Elem, 3>{poly::coeff(k, e.a.num, 0), poly::coeff(k, e.a.num, 1),
                                         kx.constant_value(e.b)};
}

}  // namespace detail

/// Recovers (alpha, beta, gamma, delta) when m lies in k I + k U + k V + k W.
template <class F>
std::optional<QuaternionCoords<typename F::Elem>> quaternion_coords(const FunctionField<F>& K,
                                                                     const QuaternionBasis<F>& B,
                                                                     const Matrix2<F>& m) {
  // the lower left entry is beta + gamma x + delta y in every case
  auto cc = detail::c1_coords(K, m.c);
  auto ca = detail::c1_coords(K, m.a);
  if (!cc || !ca) return std::nullopt;
  QuaternionCoords<typename F::Elem> q{(*ca)[0], (*cc)[0], (*cc)[1], (*cc)[2]};
  const auto& k = K.constants();
  if (k.is_zero(q.alpha) && k.is_zero(q.beta) && k.is_zero(q.gamma) && k.is_zero(q.delta)) {
    if (mat_eq(K, m, mat_scale(K, K.zero(), mat_identity(K)))) return q;
    return std::nullopt;
  }
  if (!mat_eq(K, quaternion_element(K, q, B), m)) return std::nullopt;
  return q;
}

enum class StabilizerKind { FullLinearOverK, UpperTriangularRay, QuaternionicVStar, EdgeEStar };

inline std::string to_string(StabilizerKind s) {
  switch (s) {
    case StabilizerKind::FullLinearOverK: return "FullLinearOverK";
    case StabilizerKind::UpperTriangularRay: return "UpperTriangularRay";
    case StabilizerKind::QuaternionicVStar: return "QuaternionicVStar";
    case StabilizerKind::EdgeEStar: return "EdgeEStar";
  }
  return "?";
}

/// Which group, and the matrices spanning it over k where that applies:
/// for UpperTriangularRay(n) the basis of the b-space C(n), for the v_*
/// and e_* stabilizers the k-basis of the enveloping algebra.
template <class F>
struct StabilizerDescription {
  StabilizerKind kind;
  long n = 0;
  std::vector<KElement<F>> b_space;
  std::vector<Matrix2<F>> algebra_basis;
  std::string text;
};

template <class F>
StabilizerDescription<F> stab_ray_description(const FunctionField<F>& K, long n) {
  if (n < 0) raise(ErrorCode::InvalidCurve, "ray index must be >= 0");
  if (n == 0) return {StabilizerKind::FullLinearOverK, 0, {}, {}, "GL_2(k)"};
  return {StabilizerKind::UpperTriangularRay, n, K.riemann_roch_basis(static_cast<int>(n)), {},
          "[[alpha, b], [0, beta]] with alpha, beta in k*, b in C(" + std::to_string(n) + ")"};
}

template <class F>
StabilizerDescription<F> stab_vstar_description(const FunctionField<F>& K) {
  auto B = quaternion_basis(K);
  return {StabilizerKind::QuaternionicVStar, 1, {}, {mat_identity(K), B.U, B.V, B.W},
          "alpha I + beta U + gamma V + delta W, (alpha, beta, gamma, delta) != 0"};
}

template <class F>
StabilizerDescription<F> edge_stabilizer_estar(const FunctionField<F>& K) {
  auto B = quaternion_basis(K);
  return {StabilizerKind::EdgeEStar, 0, {}, {mat_identity(K), B.U},
          "alpha I + beta U, (alpha, beta) != 0, isomorphic to (O/m)*"};
}

/// True iff X^2 - tr X + det has no root in k.
template <class F>
bool irreducible_quadratic(const ConstantField<F>& k, const typename F::Elem& tr, const typename F::Elem& det) {
  const F& f = k.arith;
  if (k.desc.characteristic() != 2) return !is_square(k, f.sub(f.mul(tr, tr), f.mul(f.from_int(4), det)));
  if (f.is_zero(tr)) return !is_square(k, det);
  if constexpr (std::is_same_v<F, RationalFunctions<GaloisField>>) {
    return !is_artin_schreier_value(f, f.div(det, f.mul(tr, tr)));
  } else {
    raise(ErrorCode::UnsupportedField, "characteristic 2 needs GF(2^r)(u)");
  }
}

struct StructureReport {
  std::vector<std::string> checks;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Quaternion relations of the v_* stabilizer: squares of the basis matrices
/// (where the relation is scalar), (anti)commutation, closure of the span
/// under products, non-commutativity, an element with irreducible
/// characteristic polynomial, and the division property on random tuples.
template <class F>
StructureReport structure_check(const FunctionField<F>& K, unsigned seed = 1, int samples = 200) {
  StructureReport rep;
  const auto& k = K.constants();
  const auto& c = K.curve();
  const auto B = quaternion_basis(K);
  auto check = [&](bool cond, const std::string& what) {
    rep.checks.push_back(what);
    if (!cond) rep.failures.push_back(what);
  };
  const std::array<std::pair<const char*, const Matrix2<F>*>, 3> named{
      {{"U", &B.U}, {"V", &B.V}, {"W", &B.W}}};
  const bool tau_zero = c.kind() == ConicCase::I || c.kind() == ConicCase::II;
  if (tau_zero) {
    for (auto [n, P] : named) check(mat_is_scalar(K, mat_mul(K, *P, *P)), std::string(n) + "^2 is scalar");
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j) {
        auto pq = mat_mul(K, *named[i].second, *named[j].second);
        auto qp = mat_mul(K, *named[j].second, *named[i].second);
        std::string pair = std::string(named[i].first) + named[j].first;
        if (K.characteristic() != 2)
          check(mat_eq(K, pq, mat_scale(K, K.from_int(-1), qp)), pair + " = -" + named[j].first + named[i].first);
        else
          check(mat_eq(K, pq, qp), pair + " = " + named[j].first + named[i].first);
      }
  } else {
    check(mat_is_scalar(K, mat_mul(K, B.V, B.V)), "V^2 is scalar");
  }
  // closure under multiplication
  const std::array<Matrix2<F>, 4> basis{mat_identity(K), B.U, B.V, B.W};
  const char* names[] = {"I", "U", "V", "W"};
  for (std::size_t i = 1; i < 4; ++i)
    for (std::size_t j = 1; j < 4; ++j)
      check(quaternion_coords(K, B, mat_mul(K, basis[i], basis[j])).has_value(),
            std::string(names[i]) + names[j] + " lies in the span of I, U, V, W");
  if (c.kind() != ConicCase::II) check(!mat_eq(K, mat_mul(K, B.U, B.V), mat_mul(K, B.V, B.U)), "UV != VU");
  // U generates the residue field: its characteristic polynomial is irreducible
  auto trU = K.add(B.U.a, B.U.d), detU = mat_det(K, B.U);
  check(irreducible_quadratic(c.k, K.kx().constant_value(trU.a), K.kx().constant_value(detU.a)),
        "charpoly(U) is irreducible over k");
  std::mt19937_64 rng(seed);
  int bad = 0;
  for (int s = 0; s < samples; ++s) {
    QuaternionCoords<typename F::Elem> q{k.random(rng, 2), k.random(rng, 2), k.random(rng, 2), k.random(rng, 2)};
    if (k.is_zero(q.alpha) && k.is_zero(q.beta) && k.is_zero(q.gamma) && k.is_zero(q.delta)) continue;
    auto m = quaternion_element(K, q, B);
    auto d = det_form(K, q);
    if (k.is_zero(d) || !K.eq(mat_det(K, m), K.from_const(d))) ++bad;
  }
  check(bad == 0, "nonzero tuples give invertible elements with det = det_form (" + std::to_string(samples) +
                      " samples)");
  return rep;
}

}  // namespace gzbt
