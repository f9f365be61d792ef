#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gzbt/constant_field/norms.hpp"
#include "gzbt/quotient/graph.hpp"
#include "gzbt/quotient/orbits.hpp"

namespace gzbt {

/// The curve with exact element arithmetic used for matrix work. Q_p is
/// modelled by norm classes only, so its tree computations run over the
/// rational points of the same equation.
template <class F>
Curve<F> element_model(const Curve<F>& c) {
  if constexpr (std::is_same_v<F, Rationals>) {
    if (c.k.desc.kind == FieldKind::QpClassesOnly)
      return Curve<F>{make_rational_constants(ConstantFieldDescriptor::rationals()), c.conic};
  }
  return c;
}

namespace detail {

/// Upper triangular with b in C(n): the stabilizer of v_n for n >= 1 and of
/// the edge v_n - v_(n+1) for n >= 0.
inline std::string triangular_text(long n, bool special) {
  return std::string("[[alpha, b], [0, beta]] with ") + (special ? "alpha beta = 1" : "alpha, beta in k*") +
         ", b in C(" + std::to_string(n) + ")";
}

inline std::string ray_stabilizer_text(long n, bool special) {
  if (n == 0) return special ? "SL_2(k)" : "GL_2(k)";
  return triangular_text(n, special);
}

inline std::string vstar_stabilizer_text(bool special) {
  return std::string("alpha I + beta U + gamma V + delta W, (alpha, beta, gamma, delta) != 0") +
         (special ? ", reduced norm 1" : "");
}

inline std::string estar_stabilizer_text(bool special) {
  return std::string("alpha I + beta U, (alpha, beta) != 0") + (special ? ", norm 1" : "");
}

/// The ray v_0 .. v_N with its path edges.
inline void add_ray(QuotientGraph& g, long N, bool special) {
  g.truncated_at = N;
  for (long n = 0; n <= N; ++n) g.ray.push_back({ray_id(n), n, ray_stabilizer_text(n, special), ""});
  for (long n = 0; n < N; ++n) g.edges.push_back({ray_id(n), ray_id(n + 1), 1, {}, triangular_text(n, special)});
}

inline std::optional<std::vector<mpq_class>> square_class_reps(const RationalConstants& k) {
  if (k.desc.kind == FieldKind::RealClosedModel) return std::vector<mpq_class>{1, -1};
  if (k.desc.kind == FieldKind::QpClassesOnly) return padic_square_class_reps(k.desc.p);
  return std::nullopt;
}

inline std::optional<std::vector<RationalFunction<Rationals>>> square_class_reps(const LaurentConstants& k) {
  return laurent_square_class_reps(k);
}

inline std::optional<std::vector<RationalFunction<GaloisField>>> square_class_reps(const FiniteFunctionConstants&) {
  return std::nullopt;
}

}  // namespace detail

/// G\T: v_* - v_0 - v_1 - ... - v_N, every multiplicity 1. Needs passing
/// orbit verifications covering depth N.
template <class F>
QuotientGraph build_gl2_quotient(long N, const OrbitVerificationReport<F>& ray, const OrbitVerificationReport<F>& vstar) {
  if (N < 1) raise(ErrorCode::InvalidCurve, "quotient depth must be >= 1");
  if (!ray.ok() || ray.depth < N)
    raise(ErrorCode::VerificationIncomplete, "ray orbits are not verified up to depth " + std::to_string(N));
  if (!vstar.ok()) raise(ErrorCode::VerificationIncomplete, "the orbit of v_* is not verified");
  QuotientGraph g;
  g.vstar_lifts.push_back({vstar_id(0), 0, detail::vstar_stabilizer_text(false), "1"});
  g.edges.push_back({vstar_id(0), ray_id(0), 1, {}, detail::estar_stabilizer_text(false)});
  detail::add_ray(g, N, false);
  return g;
}

/// build_gl2_quotient after the default verification sweeps.
template <class F>
QuotientGraph build_gl2_quotient(const FunctionField<F>& K, long N, unsigned seed = 0) {
  auto ray = verify_ray_orbits(K, N, default_residue_samples(K, 4, seed), seed);
  auto vs = verify_vstar_orbit(K, default_vstar_samples(K, 20, seed));
  return build_gl2_quotient(N, ray, vs);
}

/// Gamma\T for Gamma = SL_2(C). Above v_* sit the cosets k*/det S(v_*); each
/// lift carries the cosets det S(v_*)/det S(e_*) as edges to v_0. Edge
/// counts are computed per lift and must agree.
template <class F>
QuotientGraph build_sl2_quotient(const Curve<F>& curve, long N, std::size_t witness_budget = 10) {
  using E = typename F::Elem;
  if (N < 1) raise(ErrorCode::InvalidCurve, "quotient depth must be >= 1");
  const auto& k = curve.k;
  const auto& c = curve.conic;
  const auto rep = norm_coset_report(k, c, witness_budget);
  auto quat = [&](const E& x) { return quaternary_norm_membership(k, c, x); };
  auto bin = [&](const E& x) { return binary_norm_membership(k, c, x); };
  if (!rep.vertex_class_count.is_finite() || rep.vertex_class_count.value() != rep.vertex_class_witnesses.size())
    raise(ErrorCode::ConstructionFailed, "vertex classes need one witness each");
  if (!vertex_witnesses_distinct(k, c, rep.vertex_class_witnesses))
    raise(ErrorCode::ConstructionFailed, "vertex witnesses are not in distinct cosets");
  {
    // det: G -> k* is onto via diag(w, 1), so the fibre above v_* is k*/det S(v_*)
    FunctionField<F> K(element_model(curve));
    for (const auto& w : rep.vertex_class_witnesses) {
      auto d = mat_diag(K, K.from_const(w), K.one());
      if (!in_G(K, d) || !K.eq(mat_det(K, d), K.from_const(w)))
        raise(ErrorCode::ConstructionFailed, "diag(w, 1) is not in G with det w");
    }
  }
  const auto reps = detail::square_class_reps(k);
  QuotientGraph g;
  for (std::size_t i = 0; i < rep.vertex_class_witnesses.size(); ++i) {
    const auto& w = rep.vertex_class_witnesses[i];
    std::vector<E> classes;
    Count mult;
    if (reps) {
      for (const auto& r : *reps) {
        if (!quat(k->div(r, w))) continue;
        bool fresh = true;
        for (const auto& s : classes) fresh = fresh && !bin(k->div(r, s));
        if (fresh) classes.push_back(r);
      }
      mult = classes.size();
    } else {
      for (const auto& e : rep.edge_class_witnesses) classes.push_back(k->mul(w, e));
      for (std::size_t a = 0; a < classes.size(); ++a) {
        if (!quat(k->div(classes[a], w)))
          raise(ErrorCode::ConstructionFailed, "edge witness outside the coset of its lift");
        for (std::size_t b = a + 1; b < classes.size(); ++b)
          if (bin(k->div(classes[a], classes[b])))
            raise(ErrorCode::ConstructionFailed, "edge witnesses are not pairwise distinct");
      }
      mult = rep.edge_classes_per_vertex;
      if (mult.is_finite() && mult.value() != classes.size())
        raise(ErrorCode::ConstructionFailed, "edge classes need one witness each");
    }
    if (!(mult == rep.edge_classes_per_vertex))
      raise(ErrorCode::ConstructionFailed, "edge multiplicity at lift " + std::to_string(i) + " is " +
                                               mult.to_string() + ", expected " +
                                               rep.edge_classes_per_vertex.to_string());
    std::vector<std::string> ws;
    for (const auto& e : classes) {
      if (ws.size() >= witness_budget) break;
      ws.push_back(k->to_string(e));
    }
    g.vstar_lifts.push_back({vstar_id(i), 0, detail::vstar_stabilizer_text(true), k->to_string(w)});
    g.edges.push_back({vstar_id(i), ray_id(0), mult, std::move(ws), detail::estar_stabilizer_text(true)});
  }
  detail::add_ray(g, N, true);
  return g;
}

/// True iff the number of lifts of v_* is a power of two or omega.
template <class E>
bool power_of_two_check(const NormCosetReport<E>& report) {
  return is_power_of_two_or_omega(report.vertex_class_count);
}

// ---------------------------------------------------------------- amalgam

template <class F>
struct ElementaryFactor {
  enum class Kind { Upper, Lower, Diagonal } kind;
  Matrix2<F> m;
};

/// M in GL_2(k) as a product of elementary and diagonal matrices:
/// E12((a-1)/c) E21(c) E12((d/D-1)/c) diag(1, D) when c != 0, with D = det M,
/// and E12(b/d) diag(a, d) when c = 0.
template <class F>
std::vector<ElementaryFactor<F>> elementary_factorization(const FunctionField<F>& K, const Matrix2<F>& M) {
  using Kind = typename ElementaryFactor<F>::Kind;
  for (const auto* e : {&M.a, &M.b, &M.c, &M.d})
    if (!K.is_zero(*e) && !is_nonzero_constant(K, *e))
      raise(ErrorCode::ConstructionFailed, "factorization needs entries in k");
  const auto D = mat_det(K, M);
  if (K.is_zero(D)) raise(ErrorCode::SingularMatrix, "factorization of a singular matrix");
  const auto one = K.one();
  if (K.is_zero(M.c))
    return {{Kind::Upper, mat_e12(K, K.div(M.b, M.d))}, {Kind::Diagonal, mat_diag(K, M.a, M.d)}};
  return {{Kind::Upper, mat_e12(K, K.div(K.sub(M.a, one), M.c))},
          {Kind::Lower, mat_e21(K, M.c)},
          {Kind::Upper, mat_e12(K, K.div(K.sub(K.div(M.d, D), one), M.c))},
          {Kind::Diagonal, mat_diag(K, one, D)}};
}

/// Each factor has the claimed shape with entries in C and the product is M.
template <class F>
bool factorization_valid(const FunctionField<F>& K, const Matrix2<F>& M,
                         const std::vector<ElementaryFactor<F>>& fs) {
  using Kind = typename ElementaryFactor<F>::Kind;
  auto p = mat_identity(K);
  for (const auto& f : fs) {
    const auto& m = f.m;
    bool shape = false;
    switch (f.kind) {
      case Kind::Upper: shape = K.is_one(m.a) && K.is_one(m.d) && K.is_zero(m.c) && K.is_integral(m.b); break;
      case Kind::Lower: shape = K.is_one(m.a) && K.is_one(m.d) && K.is_zero(m.b) && K.is_integral(m.c); break;
      case Kind::Diagonal:
        shape = K.is_zero(m.b) && K.is_zero(m.c) && is_nonzero_constant(K, m.a) && is_nonzero_constant(K, m.d);
        break;
    }
    if (!shape) return false;
    p = mat_mul(K, p, f.m);
  }
  return mat_eq(K, p, M);
}

template <class F>
struct AmalgamSample {
  typename F::Elem alpha, beta;
  Matrix2<F> element;
  std::vector<ElementaryFactor<F>> factors;
  bool in_A = false;            // fixes v_*
  bool in_B = false;            // fixes v_0 and factors into elementary and diagonal matrices
  bool det_is_norm = false;     // det = N(alpha + beta tbar)
  std::optional<bool> det_in_norm_group;  // decided by the norm engine when it can

  bool ok() const { return in_A && in_B && det_is_norm && det_in_norm_group.value_or(true); }
};

template <class F>
struct AmalgamReport {
  std::string a_description;
  std::string b_description;
  std::string c_description;
  std::string c_isomorphism;
  std::vector<AmalgamSample<F>> samples;

  bool ok() const {
    for (const auto& s : samples)
      if (!s.ok()) return false;
    return !samples.empty();
  }
};

/// G = A *_C B with A = S(pi, t), B generated by the ray stabilizers, and
/// C = {alpha I + beta U}. Samples start with I and U.
template <class F>
AmalgamReport<F> amalgam_report(const FunctionField<F>& K, std::size_t samples = 50, unsigned seed = 0) {
  const auto& k = K.constants();
  const auto& rf = K.residue_field();
  const Tree<F> T(K);
  const auto B = quaternion_basis(K);
  AmalgamReport<F> rep;
  rep.a_description = "S(pi, t): " + detail::vstar_stabilizer_text(false) + "; U = " + mat_to_string(K, B.U) +
                      ", V = " + mat_to_string(K, B.V) + ", W = " + mat_to_string(K, B.W);
  rep.b_description =
      "GE_2(C): generated by the elementary matrices of G, equal to the subgroup generated by the ray "
      "stabilizers S(v_n), n >= 0";
  rep.c_description = "C = A meet B = {alpha I + beta U : (alpha, beta) != 0}";
  rep.c_isomorphism = "C is isomorphic to (O/m)* by alpha I + beta U -> alpha + beta tbar";
  std::vector<std::pair<typename F::Elem, typename F::Elem>> coords{{k.one(), k.zero()}, {k.zero(), k.one()}};
  std::mt19937_64 rng(seed);
  while (coords.size() < samples) {
    auto a = k.random(rng, 2), b = k.random(rng, 2);
    if (!k.is_zero(a) || !k.is_zero(b)) coords.emplace_back(a, b);
  }
  for (const auto& [a, b] : coords) {
    AmalgamSample<F> s{a, b, mat_add(K, mat_scale(K, K.from_const(a), mat_identity(K)), mat_scale(K, K.from_const(b), B.U)),
                       {}, false, false, false, std::nullopt};
    s.in_A = stab_membership(K, s.element, T.vstar());
    s.factors = elementary_factorization(K, s.element);
    s.in_B = stab_membership(K, s.element, T.ray(0)) && factorization_valid(K, s.element, s.factors);
    const auto det = mat_det(K, s.element);
    const auto n = rf.norm(rf.make(a, b));
    s.det_is_norm = K.eq(det, K.from_const(n));
    try {
      s.det_in_norm_group = binary_norm_membership(K.curve().k, K.curve().conic, n);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::UnsupportedField) throw;
    }
    rep.samples.push_back(std::move(s));
  }
  return rep;
}

}  // namespace gzbt
