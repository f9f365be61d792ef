#pragma once

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gzbt/stabilizers/stabilizers.hpp"

namespace gzbt {

/// One orbit claim: a witness moves `neighbor` of `vertex` onto `claimed`.
template <class F>
struct OrbitCheck {
  std::string vertex;
  std::string neighbor;
  std::string claimed;
  std::vector<Matrix2<F>> witnesses;
  std::vector<std::pair<std::string, bool>> results;

  bool ok() const {
    for (const auto& r : results)
      if (!r.second) return false;
    return true;
  }
};

template <class F>
struct OrbitVerificationReport {
  long depth = 0;  // ray levels covered; 0 for the v_* sweep
  std::vector<OrbitCheck<F>> checks;

  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.ok() ? 0 : 1;
    return n;
  }
  bool ok() const { return !checks.empty() && failures() == 0; }
};

template <class F>
Matrix2<F> mat_e12(const FunctionField<F>& K, const KElement<F>& b) {
  return {K.one(), b, K.zero(), K.one()};
}

template <class F>
Matrix2<F> mat_e21(const FunctionField<F>& K, const KElement<F>& c) {
  return {K.one(), K.zero(), c, K.one()};
}

/// b in C(n) with b pi^n + u = 0 mod pi. Only x^n and y x^(n-1) have
/// nonzero residue after scaling by pi^n, so a 2x2 system over k decides it.
template <class F>
std::optional<KElement<F>> solve_ray_congruence(const FunctionField<F>& K, long n,
                                                const typename FunctionField<F>::Residue& u) {
  const auto& k = K.constants();
  auto basis = K.riemann_roch_basis(static_cast<int>(n));
  std::vector<typename FunctionField<F>::Residue> res;
  for (const auto& e : basis) res.push_back(K.residue(K.mul(e, K.pi_pow(n))));
  if (K.residue_field().is_zero(u)) return K.zero();
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const auto& p = res[i];
      const auto& q = res[j];
      auto det = k.sub(k.mul(p.c0, q.c1), k.mul(p.c1, q.c0));
      if (k.is_zero(det)) continue;
      // lambda p + mu q = -u
      auto r0 = k.neg(u.c0), r1 = k.neg(u.c1);
      auto lambda = k.div(k.sub(k.mul(r0, q.c1), k.mul(r1, q.c0)), det);
      auto mu = k.div(k.sub(k.mul(p.c0, r1), k.mul(p.c1, r0)), det);
      return K.add(K.mul(K.from_const(lambda), basis[i]), K.mul(K.from_const(mu), basis[j]));
    }
  return std::nullopt;
}

/// Neighbours of v_0 other than v_1 are v(pi, u); u in k joins the orbit of
/// v_1 and u outside k the orbit of v_*.
template <class F>
bool rational_neighbor_of_v0(const Tree<F>& T, const Vertex<F>& w) {
  const auto& K = T.field();
  if (T.eq(w, T.ray(1))) return true;
  return K.constants().is_zero(K.residue(w.z).c1);
}

/// Orbits of the ray stabilizers on edges at v_n, 0 <= n <= N. For n >= 1
/// every neighbour v(pi^(1-n), u pi^(-n)) is moved onto v_(n-1) by
/// [[1, b], [0, 1]] with b in C(n); at v_0 the GL_2(k) action on the
/// neighbours has the two orbits of v_1 and v_*.
template <class F>
OrbitVerificationReport<F> verify_ray_orbits(const FunctionField<F>& K, long N,
                                             const std::vector<typename FunctionField<F>::Residue>& residues,
                                             unsigned seed = 0) {
  if (N < 1) raise(ErrorCode::InvalidCurve, "ray verification needs N >= 1");
  if (residues.empty()) raise(ErrorCode::InvalidCurve, "ray verification needs residue samples");
  const Tree<F> T(K);
  const auto& k = K.constants();
  const auto& rf = K.residue_field();
  OrbitVerificationReport<F> rep;
  rep.depth = N;
  for (long n = 1; n <= N; ++n) {
    const auto vn = T.ray(n);
    for (const auto& u : residues) {
      auto b = solve_ray_congruence(K, n, u);
      if (!b)
        raise(ErrorCode::ConstructionFailed,
              "no b in C(" + std::to_string(n) + ") with b pi^n + u = 0 mod pi for u = " + rf.to_string(u));
      OrbitCheck<F> c;
      const auto w = T.vertex(1 - n, K.mul(K.lift(u), K.pi_pow(-n)));
      const auto g = mat_e12(K, *b);
      c.vertex = T.to_string(vn);
      c.neighbor = T.to_string(w);
      c.claimed = T.to_string(T.ray(n - 1));
      auto lhs = mat_diag(K, K.pi_pow(n - 1), K.one());
      auto product = mat_mul(K, mat_mul(K, lhs, g), T.matrix(w));
      c.witnesses = {g, product};
      c.results.emplace_back("neighbor is adjacent to v_n", T.adjacent(w, vn));
      c.results.emplace_back("b lies in C(n)", K.is_integral(*b) && (K.is_zero(*b) || K.valuation(*b) >= -n));
      auto r = K.residue(K.add(K.mul(*b, K.pi_pow(n)), K.lift(u)));
      c.results.emplace_back("b pi^n + u = 0 mod pi", rf.is_zero(r));
      c.results.emplace_back("[[1, b], [0, 1]] fixes v_n", stab_membership(K, g, vn));
      c.results.emplace_back("triple product lies in GL_2(O)", in_GL2O(K, product));
      c.results.emplace_back("witness maps the neighbor to v_(n-1)", T.eq(T.act(g, w), T.ray(n - 1)));
      rep.checks.push_back(std::move(c));
    }
  }
  // v_0: explicit moves onto v_1 or v_*, and invariance of the two classes
  const auto v0 = T.ray(0), v1 = T.ray(1), vs = T.vstar();
  std::mt19937_64 rng(seed);
  for (const auto& u : residues) {
    const auto w = T.child(v0, u);
    OrbitCheck<F> c;
    c.vertex = T.to_string(v0);
    c.neighbor = T.to_string(w);
    Matrix2<F> g;
    Vertex<F> target;
    if (k.is_zero(u.c1)) {
      g = {K.zero(), K.one(), K.one(), K.from_const(k.neg(u.c0))};
      target = v1;
    } else {
      auto ci = K.from_const(k.inv(u.c1));
      g = {ci, K.neg(K.mul(ci, K.from_const(u.c0))), K.zero(), K.one()};
      target = vs;
    }
    c.claimed = T.to_string(target);
    c.witnesses = {g};
    c.results.emplace_back("neighbor is adjacent to v_0", T.adjacent(w, v0));
    c.results.emplace_back("witness lies in GL_2(k)", stab_membership(K, g, v0));
    c.results.emplace_back("witness maps the neighbor to the claimed vertex", T.eq(T.act(g, w), target));
    const bool rational = rational_neighbor_of_v0(T, w);
    for (int s = 0; s < 4; ++s) {
      Matrix2<F> h;
      do {
        h = {K.from_const(k.random(rng, 1)), K.from_const(k.random(rng, 1)), K.from_const(k.random(rng, 1)),
             K.from_const(k.random(rng, 1))};
      } while (K.is_zero(mat_det(K, h)));
      auto hw = T.act(h, w);
      c.witnesses.push_back(h);
      c.results.emplace_back("random GL_2(k) element keeps the neighbor's class",
                             T.adjacent(hw, v0) && rational_neighbor_of_v0(T, hw) == rational);
    }
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

/// The predicted residue u with X v_0 = v(pi^2, t + pi u).
template <class F>
typename FunctionField<F>::Residue predicted_vstar_residue(const FunctionField<F>& K,
                                                           const QuaternionCoords<typename F::Elem>& q,
                                                           bool special) {
  const auto& k = K.constants();
  const auto& rf = K.residue_field();
  if (special) return rf.inv(rf.make(q.alpha, k.one()));
  auto den = rf.make(q.alpha, q.beta);
  if (K.curve().kind() == ConicCase::IV) return rf.inv(den);
  return rf.div(rf.from_base(k.add(k.one(), k.mul(q.beta, K.curve().tau()))), den);
}

/// Orbit of v_* on its edges. Each sample (alpha, beta) gives
/// X = I + alpha V + beta W in S(pi, t), or Y = alpha V + W when tau = beta = 1,
/// and the chain z^-1 X [[1, 1], [s, 0]] = [[a', b'], [0, 1]] exhibits
/// X v_0 = v(pi^2, t + pi u). The base identity x^-1 V [[t, 1], [1, 0]]
/// covers u = 0. Only the alpha and beta fields of the samples are read.
template <class F>
OrbitVerificationReport<F> verify_vstar_orbit(const FunctionField<F>& K,
                                              const std::vector<QuaternionCoords<typename F::Elem>>& samples) {
  const Tree<F> T(K);
  const auto& k = K.constants();
  const auto& rf = K.residue_field();
  const auto B = quaternion_basis(K);
  const auto vs = T.vstar(), v0 = T.ray(0);
  const auto t = K.t();
  OrbitVerificationReport<F> rep;

  auto chain = [&](OrbitCheck<F>& c, const Matrix2<F>& X, const typename FunctionField<F>::Residue& u) {
    const auto target = T.child(vs, u);
    c.vertex = T.to_string(vs);
    c.neighbor = T.to_string(v0);
    c.claimed = T.to_string(target);
    // s = -c/d clears the lower left entry
    if (K.is_zero(X.d)) raise(ErrorCode::ConstructionFailed, "X has d = 0");
    const auto z = X.c;
    if (K.is_zero(z)) raise(ErrorCode::ConstructionFailed, "z = 0");
    const auto s = K.neg(K.div(X.c, X.d));
    const Matrix2<F> E{K.one(), K.one(), s, K.zero()};
    const auto M = mat_scale(K, K.inv(z), mat_mul(K, X, E));
    c.witnesses = {X, E, M};
    c.results.emplace_back("X fixes v_*", stab_membership(K, X, vs));
    c.results.emplace_back("nu(s) = 0", !K.is_zero(s) && K.valuation(s) == 0);
    c.results.emplace_back("lower row of the product is (0, 1)", K.is_zero(M.c) && K.is_one(M.d));
    c.results.emplace_back("nu(a') = 2", !K.is_zero(M.a) && K.valuation(M.a) == 2);
    auto db = K.sub(M.b, t);
    bool close = K.is_zero(db) || K.valuation(db) >= 1;
    c.results.emplace_back("nu(b' - t) >= 1", close);
    if (close)
      c.results.emplace_back("(b' - t)/pi has the predicted residue",
                             rf.eq(K.residue(K.mul(db, K.x())), u));
    c.results.emplace_back("X v_0 is the claimed neighbor of v_*", T.eq(T.act(X, v0), target));
  };

  {
    OrbitCheck<F> c;
    const Matrix2<F> E{t, K.one(), K.one(), K.zero()};
    const auto M = mat_scale(K, K.pi(), mat_mul(K, B.V, E));
    c.vertex = T.to_string(vs);
    c.neighbor = T.to_string(v0);
    c.claimed = T.to_string(T.child(vs, rf.zero()));
    c.witnesses = {B.V, E, M};
    c.results.emplace_back("V fixes v_*", stab_membership(K, B.V, vs));
    c.results.emplace_back("[[t, 1], [1, 0]] lies in GL_2(O)", in_GL2O(K, E));
    c.results.emplace_back("x^-1 V [[t, 1], [1, 0]] = [[a', t], [0, 1]]",
                           K.is_zero(M.c) && K.is_one(M.d) && K.eq(M.b, t));
    c.results.emplace_back("nu(a') = 2", !K.is_zero(M.a) && K.valuation(M.a) == 2);
    c.results.emplace_back("V v_0 = v(pi^2, t)", T.eq(T.act(B.V, v0), T.child(vs, rf.zero())));
    rep.checks.push_back(std::move(c));
  }
  const bool tau_one = k.is_one(K.curve().tau());
  for (const auto& q : samples) {
    if (k.is_zero(q.alpha) && k.is_zero(q.beta))
      raise(ErrorCode::ZeroTuple, "vstar samples need (alpha, beta) != (0, 0)");
    const bool special = tau_one && k.is_one(q.beta);
    const auto aV = mat_scale(K, K.from_const(q.alpha), B.V);
    const auto X = special ? mat_add(K, aV, B.W)
                           : mat_add(K, mat_identity(K), mat_add(K, aV, mat_scale(K, K.from_const(q.beta), B.W)));
    OrbitCheck<F> c;
    chain(c, X, predicted_vstar_residue(K, q, special));
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

/// Residue samples 0, 1, tbar, 1 + tbar followed by `extra` random ones.
template <class F>
std::vector<typename FunctionField<F>::Residue> default_residue_samples(const FunctionField<F>& K, std::size_t extra,
                                                                        unsigned seed) {
  const auto& rf = K.residue_field();
  const auto& k = K.constants();
  std::vector<typename FunctionField<F>::Residue> out{rf.zero(), rf.one(), rf.tbar(), rf.add(rf.one(), rf.tbar())};
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < extra; ++i) out.push_back(rf.make(k.random(rng, 2), k.random(rng, 2)));
  return out;
}

/// (alpha, beta) samples: (1, 0), (0, 1), (1, 1), then random nonzero pairs.
template <class F>
std::vector<QuaternionCoords<typename F::Elem>> default_vstar_samples(const FunctionField<F>& K, std::size_t count,
                                                                      unsigned seed) {
  const auto& k = K.constants();
  std::vector<QuaternionCoords<typename F::Elem>> out{{k.one(), k.zero(), k.zero(), k.zero()},
                                                      {k.zero(), k.one(), k.zero(), k.zero()},
                                                      {k.one(), k.one(), k.zero(), k.zero()}};
  std::mt19937_64 rng(seed);
  while (out.size() < count) {
    auto a = k.random(rng, 2), b = k.random(rng, 2);
    if (k.is_zero(a) && k.is_zero(b)) continue;
    out.push_back({a, b, k.zero(), k.zero()});
  }
  return out;
}

}  // namespace gzbt
