#pragma once

#include <array>
#include <climits>
#include <vector>

#include "gzbt/constant_field/places.hpp"

// Local solvability of a ternary quadratic form over the completion of
// GF(q)(u) at a place: lift primitive solutions mod P^m level by level until
// either none survive (no local point) or Hensel's lemma certifies one.
namespace gzbt::local {

using places::GFPoly;
using places::Place;
using places::RF;
using places::RFElem;

enum class Solvability { Solvable, Obstructed, Unknown };

/// Q = c0 X^2 + c1 Y^2 + c2 Z^2 + c3 XY + c4 XZ + c5 YZ.
struct TernaryForm {
  std::array<RFElem, 6> c;
};

/// c(1/w), renaming w back to u: moves the infinite place to u = 0.
inline RFElem invert_variable(const RF& K, const RFElem& c) {
  if (K.is_zero(c)) return c;
  const auto& f = K.base();
  const int dn = poly::degree<GaloisField>(c.num), dd = poly::degree<GaloisField>(c.den);
  auto num = poly::reverse(f, c.num, dn), den = poly::reverse(f, c.den, dd);
  if (dd > dn) num = poly::shift(f, num, dd - dn);
  if (dn > dd) den = poly::shift(f, den, dn - dd);
  return K.make(num, den);
}

struct SearchLimits {
  unsigned max_level = 12;
  std::size_t max_nodes = 200000;
};

namespace detail {

struct Ring {
  const GaloisField& f;
  GFPoly p;    // the prime
  GFPoly mod;  // P^L
  unsigned L;

  GFPoly add(const GFPoly& a, const GFPoly& b) const { return poly::add(f, a, b); }
  GFPoly mul(const GFPoly& a, const GFPoly& b) const { return poly::mulmod(f, a, b, mod); }
  unsigned val(GFPoly a) const {
    a = poly::mod(f, a, mod);
    unsigned v = 0;
    while (!a.empty() && v < L) {
      auto [q, r] = poly::divmod(f, a, p);
      if (!r.empty()) break;
      a = std::move(q);
      ++v;
    }
    return a.empty() ? L : v;
  }
  GFPoly reduce(const RF& K, const RFElem& c) const {
    if (K.is_zero(c)) return {};
    auto [g, s, t] = poly::xgcd(f, poly::mod(f, c.den, mod), mod);
    (void)t;
    auto dinv = poly::scale(f, s, f.inv(g[0]));
    return poly::mulmod(f, poly::mod(f, c.num, mod), dinv, mod);
  }
};

}  // namespace detail

/// Decides whether Q has a nontrivial zero over the completion at P.
inline Solvability local_solvability(const RF& K, TernaryForm q, Place P, const SearchLimits& lim = {}) {
  const auto& f = K.base();
  if (P.infinite()) {
    for (auto& c : q.c) c = invert_variable(K, c);
    P = Place{GFPoly{f.zero(), f.one()}};
  }
  int e = INT_MAX;
  for (auto& c : q.c)
    if (!K.is_zero(c)) e = std::min(e, places::valuation(K, c, P));
  if (e == INT_MAX) return Solvability::Solvable;
  auto scale = K.pow(K.from_poly(P.p), -e);
  for (auto& c : q.c) c = K.mul(c, scale);

  const unsigned L = lim.max_level + 1;
  detail::Ring R{f, P.p, poly::pow(f, P.p, L), L};
  std::array<GFPoly, 6> c;
  for (int i = 0; i < 6; ++i) c[i] = R.reduce(K, q.c[i]);
  auto two = poly::constant(f, f.from_int(2));
  auto eval = [&](const std::array<GFPoly, 3>& v) {
    GFPoly acc;
    acc = R.add(acc, R.mul(c[0], R.mul(v[0], v[0])));
    acc = R.add(acc, R.mul(c[1], R.mul(v[1], v[1])));
    acc = R.add(acc, R.mul(c[2], R.mul(v[2], v[2])));
    acc = R.add(acc, R.mul(c[3], R.mul(v[0], v[1])));
    acc = R.add(acc, R.mul(c[4], R.mul(v[0], v[2])));
    acc = R.add(acc, R.mul(c[5], R.mul(v[1], v[2])));
    return acc;
  };
  auto grad_val = [&](const std::array<GFPoly, 3>& v) {
    auto g0 = R.add(R.add(R.mul(R.mul(two, c[0]), v[0]), R.mul(c[3], v[1])), R.mul(c[4], v[2]));
    auto g1 = R.add(R.add(R.mul(R.mul(two, c[1]), v[1]), R.mul(c[3], v[0])), R.mul(c[5], v[2]));
    auto g2 = R.add(R.add(R.mul(R.mul(two, c[2]), v[2]), R.mul(c[4], v[0])), R.mul(c[5], v[1]));
    return std::min({R.val(g0), R.val(g1), R.val(g2)});
  };

  // residue field representatives: polynomials of degree < deg P
  const int d = P.degree();
  std::vector<GFPoly> reps;
  {
    std::uint64_t total = 1;
    for (int i = 0; i < d; ++i) total *= f.order();
    for (std::uint64_t code = 0; code < total; ++code) {
      GFPoly r(d, f.zero());
      auto x = code;
      for (int i = 0; i < d; ++i) {
        r[i] = static_cast<GaloisField::Elem>(x % f.order());
        x /= f.order();
      }
      poly::trim(f, r);
      reps.push_back(std::move(r));
    }
  }

  struct Node {
    std::array<GFPoly, 3> v;
    int pivot;
  };
  std::vector<Node> level;
  auto one = poly::constant(f, f.one());
  for (int pivot = 0; pivot < 3; ++pivot) {
    std::vector<std::array<GFPoly, 3>> cur{{GFPoly{}, GFPoly{}, GFPoly{}}};
    cur[0][pivot] = one;
    for (int j = pivot + 1; j < 3; ++j) {
      std::vector<std::array<GFPoly, 3>> next;
      for (auto& v : cur)
        for (auto& r : reps) {
          auto w = v;
          w[j] = r;
          next.push_back(std::move(w));
        }
      cur = std::move(next);
    }
    for (auto& v : cur)
      if (R.val(eval(v)) >= 1) level.push_back({v, pivot});
  }

  std::size_t nodes = level.size();
  GFPoly pm = P.p;  // P^m
  for (unsigned m = 1;; ++m) {
    if (level.empty()) return Solvability::Obstructed;
    for (auto& n : level) {
      unsigned g = grad_val(n.v);
      if (g < L && R.val(eval(n.v)) > 2 * g) return Solvability::Solvable;
    }
    if (m >= lim.max_level || nodes > lim.max_nodes) return Solvability::Unknown;
    std::vector<Node> next;
    for (auto& n : level) {
      std::vector<std::array<GFPoly, 3>> cur{n.v};
      for (int j = 0; j < 3; ++j) {
        if (j == n.pivot) continue;
        std::vector<std::array<GFPoly, 3>> grown;
        for (auto& v : cur)
          for (auto& r : reps) {
            auto w = v;
            w[j] = R.add(w[j], R.mul(pm, r));
            grown.push_back(std::move(w));
          }
        cur = std::move(grown);
      }
      for (auto& v : cur)
        if (R.val(eval(v)) >= m + 1) next.push_back({v, n.pivot});
      nodes += cur.size();
      if (nodes > lim.max_nodes) return Solvability::Unknown;
    }
    level = std::move(next);
    pm = R.mul(pm, P.p);
  }
}

}  // namespace gzbt::local
