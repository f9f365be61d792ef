#include <gtest/gtest.h>

#include <random>
#include <set>

#include "gzbt/quotient/quotient.hpp"
#include "support/curves.hpp"

using namespace gzbt;
using namespace gzbt::testing;

namespace {

template <class F>
void expect_report_passes(const OrbitVerificationReport<F>& rep) {
  EXPECT_TRUE(rep.ok());
  for (const auto& c : rep.checks)
    for (const auto& [what, ok] : c.results) EXPECT_TRUE(ok) << c.neighbor << " -> " << c.claimed << ": " << what;
}

template <class F>
void expect_ray_orbits(const Curve<F>& curve, long N) {
  FunctionField<F> K(curve);
  auto rep = verify_ray_orbits(K, N, default_residue_samples(K, 4, 7), 7);
  EXPECT_EQ(rep.depth, N);
  EXPECT_EQ(rep.checks.size(), static_cast<std::size_t>(N + 1) * 8);
  expect_report_passes(rep);
}

template <class F>
void expect_vstar_orbit(const Curve<F>& curve, std::size_t samples) {
  FunctionField<F> K(curve);
  auto rep = verify_vstar_orbit(K, default_vstar_samples(K, samples, 3));
  EXPECT_EQ(rep.checks.size(), samples + 1);
  expect_report_passes(rep);
}

/// Shape of a Gamma quotient: lifts, multiplicity at every lift, free rank.
struct Shape {
  std::size_t lifts;
  Count edges;
  Count rank;
};

template <class F>
void expect_shape(const Curve<F>& curve, Shape want, std::size_t budget = 10) {
  auto g = build_sl2_quotient(curve, 3, budget);
  EXPECT_TRUE(graph_violations(g).empty());
  EXPECT_EQ(g.vstar_lifts.size(), want.lifts);
  for (const auto& e : g.edges)
    if (is_vstar_id(e.from)) {
      EXPECT_EQ(e.multiplicity, want.edges) << e.from;
    }
  EXPECT_EQ(free_rank(g), want.rank);
}

bool sum_of_two_squares(const mpz_class& n) {
  for (mpz_class a = 0; a * a <= n; ++a) {
    mpz_class r = n - a * a, s = sqrt(r);
    if (s * s == r) return true;
  }
  return false;
}

QuotientGraph random_graph(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> depth(1, 6);
  std::uniform_int_distribution<int> lifts(1, 4), mult(0, 4), nw(0, 3), ch(0, 25);
  auto word = [&] {
    std::string s;
    for (int i = nw(rng) + 1; i > 0; --i) s += static_cast<char>('a' + ch(rng));
    return s + "\"\\";
  };
  QuotientGraph g;
  g.truncated_at = depth(rng);
  const int L = lifts(rng);
  for (int i = 0; i < L; ++i) {
    g.vstar_lifts.push_back({vstar_id(i), 0, word(), word()});
    int m = mult(rng);
    Count c = m == 0 ? Count::omega() : Count(m);
    std::vector<std::string> ws;
    for (int j = nw(rng); j > 0; --j) ws.push_back(word());
    g.edges.push_back({vstar_id(i), ray_id(0), c, ws, word()});
  }
  for (long n = 0; n <= g.truncated_at; ++n) g.ray.push_back({ray_id(n), n, word(), ""});
  for (long n = 0; n < g.truncated_at; ++n) g.edges.push_back({ray_id(n), ray_id(n + 1), 1, {}, word()});
  return g;
}

}  // namespace

// ---------------------------------------------------------------- ray orbits

TEST(RayOrbits, CongruenceExamples) {
  FunctionField<Rationals> K(q_curve());
  const auto& rf = K.residue_field();
  auto b = solve_ray_congruence(K, 1, rf.tbar());
  ASSERT_TRUE(b);
  EXPECT_TRUE(K.eq(*b, K.neg(K.y())));
  b = solve_ray_congruence(K, 1, rf.one());
  ASSERT_TRUE(b);
  EXPECT_TRUE(K.eq(*b, K.neg(K.x())));
  b = solve_ray_congruence(K, 1, rf.zero());
  ASSERT_TRUE(b);
  EXPECT_TRUE(K.is_zero(*b));
  // level 3: b = -(2 x^3 + 5 y x^2) for u = 2 + 5 tbar
  b = solve_ray_congruence(K, 3, rf.make(2, 5));
  ASSERT_TRUE(b);
  EXPECT_TRUE(K.eq(*b, K.parse("-2*x^3-5*x^2*y")));
}

TEST(RayOrbits, ZeroResidueGivesTrivialProduct) {
  FunctionField<Rationals> K(q_curve());
  auto rep = verify_ray_orbits(K, 1, {K.residue_field().zero()});
  ASSERT_FALSE(rep.checks.empty());
  EXPECT_TRUE(mat_eq(K, rep.checks[0].witnesses[0], mat_identity(K)));
  EXPECT_TRUE(in_GL2O(K, rep.checks[0].witnesses[1]));
  expect_report_passes(rep);
}

TEST(RayOrbits, DepthTenOnAllCases) {
  expect_ray_orbits(q_curve(), 10);
  expect_ray_orbits(example_case_three(), 10);
  expect_ray_orbits(example_case_four(), 10);
  expect_ray_orbits(example_gf3(), 10);
  expect_ray_orbits(laurent_curve("1", "u"), 6);
  expect_ray_orbits(q_curve(3, 7), 6);
}

TEST(RayOrbits, VertexZeroHasTwoClasses) {
  FunctionField<Rationals> K(q_curve());
  Tree<Rationals> T(K);
  const auto& rf = K.residue_field();
  auto rep = verify_ray_orbits(K, 1, {rf.make(3, 0), rf.make(-1, 2)});
  // the level-1 checks come first, then one check per residue at v_0
  ASSERT_EQ(rep.checks.size(), 4u);
  EXPECT_EQ(rep.checks[2].claimed, T.to_string(T.ray(1)));
  EXPECT_EQ(rep.checks[3].claimed, T.to_string(T.vstar()));
  expect_report_passes(rep);
}

TEST(RayOrbits, Preconditions) {
  FunctionField<Rationals> K(q_curve());
  EXPECT_THROW(verify_ray_orbits(K, 0, {K.residue_field().one()}), Error);
  EXPECT_THROW(verify_ray_orbits(K, 2, {}), Error);
}

TEST(RayOrbitsProperty, RandomLevelsAndResidues) {
  FunctionField<Rationals> K(q_curve(2, 5));
  const auto& rf = K.residue_field();
  const auto& k = K.constants();
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> level(1, 10);
  std::size_t cases = 0;
  for (int i = 0; i < 100; ++i) {
    std::vector<ResidueElement<mpq_class>> us;
    for (int j = 0; j < 10; ++j) us.push_back(rf.make(k.random(rng, 6), k.random(rng, 6)));
    auto rep = verify_ray_orbits(K, level(rng), us, static_cast<unsigned>(i));
    for (const auto& c : rep.checks) {
      ++cases;
      EXPECT_TRUE(c.ok()) << c.neighbor;
    }
  }
  EXPECT_GE(cases, 1000u);
}

// ---------------------------------------------------------------- v_* orbit

TEST(VstarOrbit, BaseIdentity) {
  FunctionField<Rationals> K(q_curve());
  auto rep = verify_vstar_orbit(K, {});
  ASSERT_EQ(rep.checks.size(), 1u);
  // x^-1 V [[t, 1], [1, 0]] = [[-sigma x^-2, t], [0, 1]]
  const auto& M = rep.checks[0].witnesses[2];
  EXPECT_TRUE(mat_eq(K, M, Matrix2<Rationals>{K.parse("-1/x^2"), K.t(), K.zero(), K.one()}));
  expect_report_passes(rep);
}

TEST(VstarOrbit, AlphaOneBetaZero) {
  FunctionField<Rationals> K(q_curve());
  Tree<Rationals> T(K);
  auto rep = verify_vstar_orbit(K, {{1, 0, 0, 0}});
  ASSERT_EQ(rep.checks.size(), 2u);
  expect_report_passes(rep);
  // X = I + V sends v_0 to v(pi^2, t + pi): the oracle is the normal form
  auto X = rep.checks[1].witnesses[0];
  EXPECT_TRUE(T.eq(T.act(X, T.ray(0)), T.vertex(2, K.add(K.t(), K.pi()))));
}

TEST(VstarOrbit, RejectsZeroCoordinates) {
  FunctionField<Rationals> K(q_curve());
  try {
    verify_vstar_orbit(K, {{0, 0, 1, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroTuple);
  }
}

TEST(VstarOrbit, SpecialBranchInCaseThree) {
  auto curve = example_case_three();
  FunctionField<RationalFunctions<GaloisField>> K(curve);
  Tree<RationalFunctions<GaloisField>> T(K);
  const auto& k = K.constants();
  auto a = parse_element(k, "u+1");
  auto rep = verify_vstar_orbit(K, {{a, k.one(), k.zero(), k.zero()}});
  expect_report_passes(rep);
  // Y = alpha V + W reaches v(pi^2, t + pi (alpha + tbar)^-1)
  const auto& rf = K.residue_field();
  auto u = rf.inv(rf.make(a, k.one()));
  EXPECT_EQ(rep.checks[1].claimed, T.to_string(T.child(T.vstar(), u)));
  auto B = quaternion_basis(K);
  EXPECT_TRUE(mat_eq(K, rep.checks[1].witnesses[0], mat_add(K, mat_scale(K, K.from_const(a), B.V), B.W)));
}

TEST(VstarOrbit, AllCases) {
  expect_vstar_orbit(q_curve(), 25);
  expect_vstar_orbit(q_curve(3, 7), 25);
  expect_vstar_orbit(example_case_three(), 25);
  expect_vstar_orbit(example_case_four(), 25);
  expect_vstar_orbit(example_gf3(), 25);
  expect_vstar_orbit(laurent_curve("u", "1"), 25);
}

TEST(VstarOrbitProperty, RandomCoordinates) {
  std::size_t cases = 0;
  auto run = [&](auto curve, unsigned seed) {
    using F = typename decltype(curve.k)::Arith;
    FunctionField<F> K(curve);
    auto rep = verify_vstar_orbit(K, default_vstar_samples(K, 500, seed));
    for (const auto& c : rep.checks) {
      ++cases;
      EXPECT_TRUE(c.ok()) << c.claimed;
    }
  };
  run(q_curve(), 1);
  run(example_case_three(), 2);
  EXPECT_GE(cases, 1000u);
}

// ---------------------------------------------------------------- G\T

TEST(GL2Quotient, PathOfSevenVertices) {
  FunctionField<Rationals> K(q_curve());
  auto g = build_gl2_quotient(K, 5);
  EXPECT_EQ(g.ray.size() + g.vstar_lifts.size(), 7u);
  EXPECT_EQ(g.edges.size(), 6u);
  EXPECT_TRUE(graph_violations(g).empty());
  for (const auto& e : g.edges) EXPECT_EQ(e.multiplicity, Count(1));
  EXPECT_EQ(free_rank(g), Count(0));
  EXPECT_EQ(g.ray[0].stabilizer, "GL_2(k)");
  EXPECT_EQ(g.ray[3].stabilizer, "[[alpha, b], [0, beta]] with alpha, beta in k*, b in C(3)");
  EXPECT_EQ(g.edges[1].stabilizer, "[[alpha, b], [0, beta]] with alpha, beta in k*, b in C(0)");
  EXPECT_EQ(g.edges[0].stabilizer, "alpha I + beta U, (alpha, beta) != 0");
}

TEST(GL2Quotient, MinimalDepthAndCaseFour) {
  FunctionField<Rationals> K(q_curve(1, 3));
  auto g = build_gl2_quotient(K, 1);
  EXPECT_EQ(g.ray.size(), 2u);
  EXPECT_EQ(g.vstar_lifts.size(), 1u);
  EXPECT_EQ(g.edges.size(), 2u);
  FunctionField<RationalFunctions<GaloisField>> K4(example_case_four());
  auto g4 = build_gl2_quotient(K4, 3);
  EXPECT_EQ(g4.ray.size(), 4u);
  EXPECT_TRUE(graph_violations(g4).empty());
  EXPECT_NE(g4.vstar_lifts[0].stabilizer.find("delta W"), std::string::npos);
}

TEST(GL2Quotient, NeedsVerification) {
  FunctionField<Rationals> K(q_curve());
  auto ray = verify_ray_orbits(K, 2, default_residue_samples(K, 0, 0));
  auto vs = verify_vstar_orbit(K, default_vstar_samples(K, 5, 0));
  EXPECT_NO_THROW(build_gl2_quotient(2, ray, vs));
  auto expect_incomplete = [&](long N, const OrbitVerificationReport<Rationals>& r,
                               const OrbitVerificationReport<Rationals>& v) {
    try {
      build_gl2_quotient(N, r, v);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::VerificationIncomplete);
    }
  };
  expect_incomplete(3, ray, vs);
  auto broken = vs;
  broken.checks.back().results.emplace_back("forced failure", false);
  expect_incomplete(2, ray, broken);
  expect_incomplete(2, ray, OrbitVerificationReport<Rationals>{});
}

// ---------------------------------------------------------------- Gamma\T

TEST(SL2Quotient, RealModelIsATree) { expect_shape(real_curve(), {2, 1, 0}); }

TEST(SL2Quotient, PadicModelsHaveOneLoopPair) {
  expect_shape(padic_curve(3, 1, 3), {1, 2, 1});
  expect_shape(padic_curve(5, -2, 5), {1, 2, 1});
  expect_shape(padic_curve(7, 1, 7), {1, 2, 1});
}

TEST(SL2Quotient, LaurentTable) {
  expect_shape(laurent_curve("1", "1"), {4, 1, 0});
  expect_shape(laurent_curve("1", "u"), {2, 2, 2});
  expect_shape(laurent_curve("u", "1"), {2, 1, 0});
}

TEST(SL2Quotient, RationalsHaveInfinitelyManyEdges) {
  auto g = build_sl2_quotient(q_curve(), 4, 12);
  EXPECT_EQ(g.vstar_lifts.size(), 2u);
  EXPECT_EQ(free_rank(g), Count::omega());
  for (const auto& e : g.edges) {
    if (!is_vstar_id(e.from)) continue;
    EXPECT_EQ(e.multiplicity, Count::omega());
    ASSERT_GE(e.witnesses.size(), 10u);
    // oracle: each witness is +-(product of distinct primes = 3 mod 4), and
    // no ratio of two of them is a sum of two squares
    std::vector<mpz_class> ws;
    for (const auto& w : e.witnesses) ws.emplace_back(w);
    for (const auto& w : ws) {
      mpz_class n = abs(w);
      for (mpz_class p = 2; n > 1; ++p) {
        if (p * p > n) p = n;
        int e = 0;
        for (; n % p == 0; n /= p) ++e;
        if (e == 0) continue;
        EXPECT_EQ(mpz_class(p % 4), 3) << w;
        EXPECT_EQ(e, 1) << w;
      }
    }
    for (std::size_t i = 0; i < ws.size(); ++i)
      for (std::size_t j = i + 1; j < ws.size(); ++j)
        EXPECT_FALSE(sum_of_two_squares(abs(ws[i] * ws[j]))) << ws[i] << " " << ws[j];
  }
  EXPECT_EQ(g.vstar_lifts[1].coset_witness, "-1");
}

TEST(SL2Quotient, CaseThreeOverGF2HasOneEdge) { expect_shape(example_case_three(), {1, 1, 0}); }

TEST(SL2Quotient, GF3HasInertPlaceWitnesses) {
  auto curve = example_gf3();
  auto g = build_sl2_quotient(curve, 2, 6);
  ASSERT_EQ(g.vstar_lifts.size(), 1u);
  EXPECT_EQ(g.edges[0].multiplicity, Count::omega());
  EXPECT_EQ(free_rank(g), Count::omega());
  auto rep = norm_coset_report(curve.k, curve.conic, 6);
  ASSERT_GE(rep.edge_class_witnesses.size(), 4u);
  // oracle: -1 is a non-square in GF(3^d) iff d is odd, so monic
  // irreducibles of odd degree are inert; in degrees 2 and 3
  // irreducibility is the absence of roots in GF(3)
  const auto& f = curve.k->base();
  std::set<std::string> seen;
  for (const auto& w : rep.edge_class_witnesses) {
    ASSERT_TRUE(poly::is_one(f, w.den));
    int d = poly::degree<GaloisField>(w.num);
    ASSERT_LE(d, 3);
    EXPECT_EQ(d % 2, 1);
    for (int a = 0; a < 3 && d > 1; ++a) {
      auto v = f.zero();
      for (int i = d; i >= 0; --i) v = f.add(f.mul(v, f.from_int(a)), poly::coeff(f, w.num, i));
      EXPECT_FALSE(f.is_zero(v)) << curve.k->to_string(w);
    }
    EXPECT_TRUE(seen.insert(curve.k->to_string(w)).second);
  }
}

TEST(SL2Quotient, RayPartMatchesGL2) {
  FunctionField<Rationals> K(q_curve());
  auto gl = build_gl2_quotient(K, 4);
  auto sl = build_sl2_quotient(q_curve(), 4);
  ASSERT_EQ(gl.ray.size(), sl.ray.size());
  for (std::size_t i = 0; i < gl.ray.size(); ++i) {
    EXPECT_EQ(gl.ray[i].id, sl.ray[i].id);
    EXPECT_EQ(gl.ray[i].level, sl.ray[i].level);
  }
  auto ray_edges = [](const QuotientGraph& g) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& e : g.edges)
      if (!is_vstar_id(e.from)) out.emplace_back(e.from, e.to);
    return out;
  };
  EXPECT_EQ(ray_edges(gl), ray_edges(sl));
}

TEST(SL2Quotient, FreeRankZeroExactlyWhenNormGroupsAgree) {
  auto check = [](const auto& curve) {
    auto g = build_sl2_quotient(curve, 1, 4);
    auto rep = norm_coset_report(curve.k, curve.conic, 4);
    EXPECT_EQ(free_rank(g) == Count(0), rep.edge_classes_per_vertex == Count(1));
  };
  check(real_curve());
  check(padic_curve(3, 1, 3));
  check(q_curve());
  check(laurent_curve("1", "1"));
  check(laurent_curve("1", "u"));
  check(laurent_curve("u", "1"));
  check(example_case_three());
  check(example_case_four());
  check(example_gf3());
}

TEST(SL2Quotient, EmptyWitnessBudget) {
  auto g = build_sl2_quotient(q_curve(), 2, 0);
  auto j = to_json(g);
  for (const auto& e : j["edges"]) {
    ASSERT_TRUE(e.contains("witnesses"));
    EXPECT_TRUE(e["witnesses"].empty());
  }
}

TEST(FreeRank, Examples) {
  EXPECT_EQ(free_rank(build_sl2_quotient(real_curve(), 2)), Count(0));
  EXPECT_EQ(free_rank(build_sl2_quotient(padic_curve(3, 1, 3), 2)), Count(1));
  EXPECT_EQ(free_rank(build_sl2_quotient(q_curve(), 2)), Count::omega());
}

TEST(PowerOfTwo, Examples) {
  auto real = real_curve();
  EXPECT_TRUE(power_of_two_check(norm_coset_report(real.k, real.conic)));
  auto l = laurent_curve("1", "1");
  auto rep = norm_coset_report(l.k, l.conic);
  EXPECT_EQ(rep.vertex_class_count, Count(4));
  EXPECT_TRUE(power_of_two_check(rep));
  NormCosetReport<mpq_class> three{3, 1, {}, {}};
  EXPECT_FALSE(power_of_two_check(three));
  NormCosetReport<mpq_class> omega{Count::omega(), 1, {}, {}};
  EXPECT_TRUE(power_of_two_check(omega));
}

// ---------------------------------------------------------------- amalgam

TEST(Amalgam, RationalExample) {
  FunctionField<Rationals> K(q_curve());
  auto rep = amalgam_report(K, 50);
  ASSERT_EQ(rep.samples.size(), 50u);
  EXPECT_TRUE(rep.ok());
  // the identity and U come first
  const auto B = quaternion_basis(K);
  EXPECT_TRUE(mat_eq(K, rep.samples[0].element, mat_identity(K)));
  EXPECT_TRUE(mat_eq(K, rep.samples[1].element, B.U));
  EXPECT_TRUE(stab_membership(K, B.U, Tree<Rationals>(K).ray(0)));
  for (const auto& s : rep.samples) {
    EXPECT_TRUE(s.in_A && s.in_B && s.det_is_norm);
    ASSERT_TRUE(s.det_in_norm_group.has_value());
    EXPECT_TRUE(*s.det_in_norm_group);
  }
}

TEST(Amalgam, FactorizationExamples) {
  FunctionField<Rationals> K(q_curve(2, 3));
  using Kind = ElementaryFactor<Rationals>::Kind;
  Matrix2<Rationals> M{K.from_int(3), K.from_int(-2), K.from_int(1), K.from_int(3)};
  auto fs = elementary_factorization(K, M);
  ASSERT_EQ(fs.size(), 4u);
  EXPECT_EQ(fs[1].kind, Kind::Lower);
  EXPECT_TRUE(factorization_valid(K, M, fs));
  Matrix2<Rationals> T{K.from_int(2), K.from_int(5), K.zero(), K.from_int(7)};
  fs = elementary_factorization(K, T);
  ASSERT_EQ(fs.size(), 2u);
  EXPECT_TRUE(factorization_valid(K, T, fs));
  // a wrong product is rejected
  EXPECT_FALSE(factorization_valid(K, M, elementary_factorization(K, T)));
  EXPECT_THROW(elementary_factorization(K, mat_diag(K, K.x(), K.one())), Error);
}

TEST(Amalgam, OtherCases) {
  auto run = [](auto curve) {
    using F = typename decltype(curve.k)::Arith;
    FunctionField<F> K(curve);
    auto rep = amalgam_report(K, 50, 5);
    EXPECT_TRUE(rep.ok()) << curve.equation();
  };
  run(example_case_three());
  run(example_case_four());
  run(example_gf3());
  run(laurent_curve("1", "u"));
}

// ---------------------------------------------------------------- export

TEST(Export, JsonLayout) {
  FunctionField<Rationals> K(q_curve());
  auto g = build_gl2_quotient(K, 2);
  auto j = to_json(g);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"ray", "vstar_lifts", "edges", "free_rank", "truncated_at"}));
  EXPECT_EQ(j["ray"].size() + j["vstar_lifts"].size(), 4u);
  EXPECT_EQ(j["edges"].size(), 3u);
  EXPECT_EQ(j["truncated_at"], 2);
  EXPECT_EQ(j["ray"][2]["id"], "v2");
  EXPECT_EQ(j["vstar_lifts"][0]["id"], "vstar_0");
  auto p = build_sl2_quotient(padic_curve(3, 1, 3), 2);
  auto jp = to_json(p);
  EXPECT_EQ(jp["vstar_lifts"].size(), 1u);
  EXPECT_EQ(jp["edges"][0]["multiplicity"], 2);
  EXPECT_EQ(to_json(build_sl2_quotient(q_curve(), 2))["edges"][0]["multiplicity"], "omega");
}

TEST(Export, DotMarksOmegaEdges) {
  auto dot = export_dot(build_sl2_quotient(q_curve(), 2));
  EXPECT_NE(dot.find("vstar_0 -- v0 [label=\"omega\", style=dashed]"), std::string::npos);
  EXPECT_NE(dot.find("v2 -- more [style=dotted]"), std::string::npos);
  auto real = export_dot(build_sl2_quotient(real_curve(), 1));
  EXPECT_NE(real.find("vstar_1 -- v0 [label=\"1\"]"), std::string::npos);
  EXPECT_EQ(real.find("dashed"), std::string::npos);
}

TEST(Export, ParseErrors) {
  EXPECT_THROW(graph_from_json("{"), Error);
  EXPECT_THROW(graph_from_json("{\"ray\":[]}"), Error);
  auto j = to_json(build_sl2_quotient(real_curve(), 1));
  j["free_rank"] = 3;
  EXPECT_THROW(graph_from_json(j.dump()), Error);
  j["free_rank"] = "many";
  EXPECT_THROW(graph_from_json(j.dump()), Error);
}

TEST(ExportProperty, JsonRoundTrip) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 1000; ++i) {
    auto g = random_graph(rng);
    auto text = export_json(g);
    auto back = graph_from_json(text);
    ASSERT_EQ(back, g) << text;
    ASSERT_EQ(export_json(back), text);
  }
  for (auto g : {build_sl2_quotient(q_curve(), 3), build_sl2_quotient(laurent_curve("1", "u"), 3),
                 build_sl2_quotient(example_gf3(), 3)})
    EXPECT_EQ(graph_from_json(export_json(g)), g);
}
