// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>

#include "gzbt/function_field/normalize.hpp"
#include "gzbt/quotient/quotient.hpp"
#include "support/curves.hpp"

using namespace gzbt;
using namespace gzbt::testing;

namespace {

/// Collects failed expectations for one criterion.
struct Sink {
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

struct Criterion {
  int number;
  std::string title;
  double budget_seconds;  // 0 = no time limit
  std::function<void(Sink&)> body;
};

// ------------------------------------------------------------------ helpers

template <class F, class Rng>
Matrix2<F> random_invertible(const FunctionField<F>& K, Rng& rng) {
  for (;;) {
    Matrix2<F> g{random_sparse(K, rng), random_sparse(K, rng), random_sparse(K, rng), random_sparse(K, rng)};
    if (!K.is_zero(mat_det(K, g))) return g;
  }
}

template <class F, class Rng>
Vertex<F> random_vertex(const Tree<F>& T, Rng& rng) {
  std::uniform_int_distribution<long> n(-3, 3);
  return T.vertex(n(rng), random_sparse(T.field(), rng));
}

template <class F, class Rng>
QuaternionCoords<typename F::Elem> random_coords(const FunctionField<F>& K, Rng& rng) {
  const auto& k = K.constants();
  for (;;) {
    QuaternionCoords<typename F::Elem> q{k.random(rng, 1), k.random(rng, 1), k.random(rng, 1), k.random(rng, 1)};
    if (!(k.is_zero(q.alpha) && k.is_zero(q.beta) && k.is_zero(q.gamma) && k.is_zero(q.delta))) return q;
  }
}

bool two_squares_brute(const mpz_class& n) {
  for (mpz_class a = 0; a * a <= n; ++a) {
    mpz_class r = n - a * a, s = sqrt(r);
    if (s * s == r) return true;
  }
  return false;
}

struct Shape {
  std::size_t lifts;
  Count edges;
  Count rank;
};

template <class F>
void expect_shape(Sink& s, const std::string& name, const Curve<F>& curve, Shape want) {
  auto g = build_sl2_quotient(curve, 3);
  s.expect(graph_violations(g).empty(), name + ": malformed graph");
  s.expect(g.vstar_lifts.size() == want.lifts, name + ": " + std::to_string(g.vstar_lifts.size()) + " lifts");
  for (const auto& e : g.edges)
    if (is_vstar_id(e.from)) s.expect(e.multiplicity == want.edges, name + ": " + e.multiplicity.to_string() + " edges");
  s.expect(free_rank(g) == want.rank, name + ": free rank " + free_rank(g).to_string());
}

// ---------------------------------------------------------------- criteria

template <class F>
void riemann_roch(Sink& s, const std::string& name, const Curve<F>& c) {
  FunctionField<F> K(c);
  for (int n = 0; n <= 20; ++n) {
    auto basis = K.riemann_roch_basis(n);
    s.expect(static_cast<int>(basis.size()) == 2 * n + 1, name + ": dim C(" + std::to_string(n) + ")");
    for (const auto& e : basis) s.expect(K.valuation(e) >= -n, name + ": basis element outside C(n)");
  }
}

template <class F>
void stabilizer_samples(Sink& s, const std::string& name, const Curve<F>& c, unsigned seed) {
  FunctionField<F> K(c);
  Tree<F> T(K);
  const auto B = quaternion_basis(K);
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 200; ++i) {
    auto q = random_coords(K, rng);
    auto m = quaternion_element(K, q, B);
    auto d = det_form(K, q);
    s.expect(stab_membership(K, m, T.vstar()), name + ": not in S(v_*)");
    s.expect(T.eq(T.act(m, T.vstar()), T.vstar()), name + ": does not fix v_*");
    s.expect(K.eq(mat_det(K, m), K.from_const(d)), name + ": det_form differs from det");
    s.expect(!K.constants().is_zero(d), name + ": zero determinant");
  }
}

template <class F>
void structure(Sink& s, const std::string& name, const Curve<F>& c) {
  FunctionField<F> K(c);
  auto rep = structure_check(K);
  for (const auto& f : rep.failures) s.expect(false, name + ": " + f);
  s.expect(!rep.checks.empty(), name + ": no checks ran");
}

template <class F>
void orbits(Sink& s, const std::string& name, const Curve<F>& c, bool needs_special) {
  FunctionField<F> K(c);
  auto residues = default_residue_samples(K, 4, 0);
  s.expect(residues.size() >= 8, name + ": fewer than 8 residues");
  try {
    auto ray = verify_ray_orbits(K, 10, residues, 0);
    for (const auto& ch : ray.checks)
      for (const auto& [what, ok] : ch.results) s.expect(ok, name + ": " + ch.neighbor + " -> " + ch.claimed + ": " + what);
    s.expect(ray.ok(), name + ": ray orbits");
    auto samples = default_vstar_samples(K, 20, 0);
    bool special = false;
    for (const auto& q : samples) special |= K.constants().is_one(q.beta) && K.constants().is_one(c.tau());
    s.expect(special || !needs_special, name + ": special branch not sampled");
    auto vs = verify_vstar_orbit(K, samples);
    s.expect(vs.checks.size() >= 21, name + ": fewer than 20 v_* samples");
    for (const auto& ch : vs.checks)
      for (const auto& [what, ok] : ch.results) s.expect(ok, name + ": " + ch.neighbor + " -> " + ch.claimed + ": " + what);
    auto g = build_gl2_quotient(10, ray, vs);
    s.expect(g.ray.size() == 11 && g.truncated_at == 10, name + ": ray not emitted");
    s.expect(graph_violations(g).empty(), name + ": malformed G\\T");
  } catch (const Error& e) {
    s.expect(false, name + ": construction failure: " + e.what());
  }
}

template <class F>
void amalgam(Sink& s, const std::string& name, const Curve<F>& c) {
  FunctionField<F> K(c);
  auto rep = amalgam_report(K, 50);
  s.expect(rep.samples.size() == 50, name + ": sample count");
  for (std::size_t i = 0; i < rep.samples.size(); ++i) {
    const auto& x = rep.samples[i];
    const auto tag = name + ": sample " + std::to_string(i);
    s.expect(x.in_A, tag + " not in A");
    s.expect(x.in_B, tag + " not in B");
    s.expect(factorization_valid(K, x.element, x.factors), tag + " factorization");
    s.expect(x.det_is_norm, tag + " det not a binary norm value");
    if (x.det_in_norm_group) s.expect(*x.det_in_norm_group, tag + " det outside the norm group");
  }
}

template <class F>
void ultrametric(Sink& s, const std::string& name, const Curve<F>& c, unsigned seed) {
  FunctionField<F> K(c);
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 1000; ++i) {
    auto z = random_nonzero(K, rng, 3), w = random_nonzero(K, rng, 3);
    s.expect(K.valuation(K.mul(z, w)) == K.valuation(z) + K.valuation(w), name + ": nu(zw)");
    auto sum = K.add(z, w);
    if (!K.is_zero(sum)) s.expect(K.valuation(sum) >= std::min(K.valuation(z), K.valuation(w)), name + ": nu(z+w)");
  }
}

template <class F>
void action_laws(Sink& s, const std::string& name, const Curve<F>& c, unsigned seed) {
  FunctionField<F> K(c);
  Tree<F> T(K);
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 1000; ++i) {
    auto g = random_invertible(K, rng), h = random_invertible(K, rng);
    auto v = random_vertex(T, rng), w = random_vertex(T, rng);
    s.expect(T.eq(T.act(mat_mul(K, g, h), v), T.act(g, T.act(h, v))), name + ": (gh)v != g(hv)");
    s.expect(T.distance(T.act(g, v), T.act(g, w)) == T.distance(v, w), name + ": action is not an isometry");
    auto nf = T.normal_form(T.matrix(v));
    s.expect(nf.n == v.n && T.eq(nf, v), name + ": normal form not idempotent");
    auto r = T.reduced(v);
    auto rr = T.reduced(r);
    s.expect(T.eq(r, v) && rr.n == r.n && K.eq(rr.z, r.z), name + ": reduced representative not idempotent");
  }
}

template <class F>
void normalization(Sink& s, const std::string& name, const ConstantField<F>& k, unsigned seed, int size) {
  const F& f = k.arith;
  std::mt19937_64 rng(seed);
  int done = 0;
  for (int i = 0; done < 1000 && i < 5000; ++i) {
    QuadraticCoeffs<typename F::Elem> in{f.random(rng, size), f.random(rng, size), f.random(rng, size),
                                         f.random(rng, size), f.random(rng, size), f.random(rng, size)};
    try {
      auto n = reduce_conic(k, in);
      ++done;
      auto again = reduce_conic(k, canonical_quadratic(f, n.curve.conic));
      s.expect(again.curve.kind() == n.curve.kind() && f.eq(again.curve.rho(), n.curve.rho()) &&
                   f.eq(again.curve.sigma(), n.curve.sigma()) && f.eq(again.curve.tau(), n.curve.tau()),
               name + ": normal form not idempotent");
    } catch (const Error& e) {
      s.expect(e.code() == ErrorCode::DegenerateConic || e.code() == ErrorCode::HasRationalPoint, name + ": " + e.what());
    }
  }
  s.expect(done == 1000, name + ": only " + std::to_string(done) + " nondegenerate samples");
}

QuotientGraph random_graph(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> depth(1, 6);
  std::uniform_int_distribution<int> lifts(1, 4), mult(0, 4), nw(0, 3), ch(0, 25);
  auto word = [&] {
    std::string w;
    for (int i = nw(rng) + 1; i > 0; --i) w += static_cast<char>('a' + ch(rng));
    return w;
  };
  QuotientGraph g;
  g.truncated_at = depth(rng);
  for (int i = 0, L = lifts(rng); i < L; ++i) {
    g.vstar_lifts.push_back({vstar_id(i), 0, word(), word()});
    int m = mult(rng);
    std::vector<std::string> ws;
    for (int j = nw(rng); j > 0; --j) ws.push_back(word());
    g.edges.push_back({vstar_id(i), ray_id(0), m == 0 ? Count::omega() : Count(m), ws, word()});
  }
  for (long n = 0; n <= g.truncated_at; ++n) g.ray.push_back({ray_id(n), n, word(), ""});
  for (long n = 0; n < g.truncated_at; ++n) g.edges.push_back({ray_id(n), ray_id(n + 1), 1, {}, word()});
  return g;
}

std::vector<Criterion> criteria() {
  return {
      {1, "Riemann-Roch dimensions dim C(n) = 2n+1, n <= 20", 1.0,
       [](Sink& s) {
         riemann_roch(s, "Q case I", q_curve());
         riemann_roch(s, "GF(2)(u) case III", example_case_three());
         riemann_roch(s, "GF(2)(u) case IV", example_case_four());
       }},
      {2, "v_* stabilizer: 200 random tuples per curve", 10.0,
       [](Sink& s) {
         stabilizer_samples(s, "Q", q_curve(), 1);
         stabilizer_samples(s, "Q rho=2 sigma=3", q_curve(2, 3), 2);
         stabilizer_samples(s, "GF(3)(u)", example_gf3(), 3);
         stabilizer_samples(s, "GF(2)(u) case III", example_case_three(), 4);
         stabilizer_samples(s, "GF(2)(u) case IV", example_case_four(), 5);
         stabilizer_samples(s, "R((u))", laurent_curve("1", "u"), 6);
       }},
      {3, "quaternion structure", 0.0,
       [](Sink& s) {
         FunctionField<Rationals> K(q_curve());
         const auto B = quaternion_basis(K);
         s.expect(mat_eq(K, mat_mul(K, B.U, B.V), B.W), "Q rho=sigma=1: UV != W");
         for (const auto* m : {&B.U, &B.V, &B.W}) s.expect(mat_is_scalar(K, mat_mul(K, *m, *m)), "Q: square not scalar");
         structure(s, "Q", q_curve());
         structure(s, "Q rho=2 sigma=3", q_curve(2, 3));
         structure(s, "GF(3)(u)", example_gf3());
         structure(s, "R((u))", laurent_curve("u", "1"));
         structure(s, "GF(2)(u) case III", example_case_three());
         structure(s, "GF(2)(u) case IV", example_case_four());
       }},
      {4, "G\\T orbits at depth 10, >= 8 residues, >= 20 v_* samples", 60.0,
       [](Sink& s) {
         orbits(s, "Q", q_curve(), false);
         orbits(s, "GF(3)(u)", example_gf3(), false);
         orbits(s, "GF(2)(u) case III", example_case_three(), true);
         orbits(s, "GF(2)(u) case IV", example_case_four(), false);
         orbits(s, "R((u))", laurent_curve("1", "u"), false);
       }},
      {5, "Gamma\\T shapes", 0.0,
       [](Sink& s) {
         expect_shape(s, "R", real_curve(), {2, 1, 0});
         expect_shape(s, "Qp(3)", padic_curve(3, 1, 3), {1, 2, 1});
         expect_shape(s, "Qp(5)", padic_curve(5, -2, 5), {1, 2, 1});
         expect_shape(s, "Qp(7)", padic_curve(7, 1, 7), {1, 2, 1});
         expect_shape(s, "R((u)) 1,1", laurent_curve("1", "1"), {4, 1, 0});
         expect_shape(s, "R((u)) 1,u", laurent_curve("1", "u"), {2, 2, 2});
         expect_shape(s, "R((u)) u,1", laurent_curve("u", "1"), {2, 1, 0});
         expect_shape(s, "GF(2)(u) case III", example_case_three(), {1, 1, 0});
         expect_shape(s, "Q", q_curve(), {2, Count::omega(), Count::omega()});
         expect_shape(s, "GF(3)(u)", example_gf3(), {1, Count::omega(), Count::omega()});

         // Q: witnesses are products of distinct primes = 3 mod 4, no ratio a sum of two squares
         auto gq = build_sl2_quotient(q_curve(), 3, 10);
         for (const auto& e : gq.edges) {
           if (!is_vstar_id(e.from)) continue;
           s.expect(e.witnesses.size() >= 10, "Q: fewer than 10 witnesses");
           std::vector<mpz_class> ws;
           for (const auto& w : e.witnesses) ws.emplace_back(w);
           for (const auto& w : ws) {
             mpz_class n = abs(w);
             for (mpz_class p = 2; n > 1; ++p) {
               if (p * p > n) p = n;
               int k = 0;
               for (; n % p == 0; n /= p) ++k;
               if (k) s.expect(p % 4 == 3 && k == 1, "Q: witness " + w.get_str() + " has a bad prime factor");
             }
           }
           for (std::size_t i = 0; i < ws.size(); ++i)
             for (std::size_t j = i + 1; j < ws.size(); ++j)
               s.expect(!two_squares_brute(abs(ws[i] * ws[j])), "Q: witnesses in the same class");
         }

         // GF(3)(u): monic irreducibles of odd degree are inert since -1 is not a square in GF(3^odd)
         auto curve = example_gf3();
         auto rep = norm_coset_report(curve.k, curve.conic, 10);
         s.expect(rep.edge_class_witnesses.size() >= 4, "GF(3)(u): fewer than 4 witnesses");
         const auto& f = curve.k->base();
         std::set<std::string> seen;
         for (const auto& w : rep.edge_class_witnesses) {
           const auto text = curve.k->to_string(w);
           int d = poly::degree<GaloisField>(w.num);
           s.expect(poly::is_one(f, w.den) && d % 2 == 1 && d <= 3, "GF(3)(u): witness " + text);
           for (int a = 0; a < 3 && d > 1; ++a) {
             auto v = f.zero();
             for (int i = d; i >= 0; --i) v = f.add(f.mul(v, f.from_int(a)), poly::coeff(f, w.num, i));
             s.expect(!f.is_zero(v), "GF(3)(u): witness " + text + " has a root");
           }
           s.expect(seen.insert(text).second, "GF(3)(u): repeated witness " + text);
         }
       }},
      {6, "amalgam report on 50 samples of C", 0.0,
       [](Sink& s) {
         amalgam(s, "Q", q_curve());
         amalgam(s, "Q rho=2 sigma=3", q_curve(2, 3));
         amalgam(s, "GF(3)(u)", example_gf3());
         amalgam(s, "GF(2)(u) case III", example_case_three());
         amalgam(s, "GF(2)(u) case IV", example_case_four());
         amalgam(s, "R((u))", laurent_curve("1", "u"));
       }},
      {7, "binary norms over Q, rho = 1, against two-squares search for 1..500", 5.0,
       [](Sink& s) {
         auto k = make_rational_constants(ConstantFieldDescriptor::rationals());
         ConicData<mpq_class> c{ConicCase::I, 1, 1, 0};
         for (long n = 1; n <= 500; ++n)
           s.expect(binary_norm_membership(k, c, n) == two_squares_brute(n), "n = " + std::to_string(n));
       }},
      {8, "property suites with 1000 cases each", 300.0,
       [](Sink& s) {
         ultrametric(s, "Q", q_curve(), 11);
         ultrametric(s, "GF(2)(u) case IV", example_case_four(), 12);
         action_laws(s, "Q", q_curve(), 13);
         action_laws(s, "GF(2)(u) case III", example_case_three(), 14);
         normalization(s, "Q", make_rational_constants(ConstantFieldDescriptor::rationals()), 15, 6);
         normalization(s, "GF(3)(u)", make_finite_function_constants(ConstantFieldDescriptor::parse("GF(3)(u)")), 16, 2);
         std::mt19937_64 rng(17);
         for (int i = 0; i < 1000; ++i) {
           auto g = random_graph(rng);
           auto text = export_json(g);
           s.expect(graph_from_json(text) == g && export_json(graph_from_json(text)) == text, "JSON round trip");
         }
       }},
  };
}

}  // namespace

int main() {
  int failed = 0;
  for (const auto& c : criteria()) {
    Sink s;
    auto start = std::chrono::steady_clock::now();
    try {
      c.body(s);
    } catch (const std::exception& e) {
      s.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && secs > c.budget_seconds)
      s.expect(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(c.budget_seconds) + " s");
    const bool ok = s.failures.empty();
    failed += !ok;
    char time[32];
    std::snprintf(time, sizeof time, "%.2f s", secs);
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << c.number << ": " << c.title << " (" << time << ")\n";
    for (std::size_t i = 0; i < s.failures.size() && i < 10; ++i) std::cout << "        " << s.failures[i] << "\n";
    if (s.failures.size() > 10) std::cout << "        ... " << s.failures.size() - 10 << " more\n";
  }
  std::cout << (failed ? "FAILED: " + std::to_string(failed) + " criteria" : "all criteria pass") << "\n";
  return failed ? 1 : 0;
}
