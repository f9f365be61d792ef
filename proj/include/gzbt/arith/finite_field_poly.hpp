#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "gzbt/arith/galois_field.hpp"
#include "gzbt/arith/polynomial.hpp"

/// Factorization and irreducibility over GF(q)[u].
namespace gzbt::poly {

using GFPoly = Poly<GaloisField>;

inline mpz_class gf_order_pow(const GaloisField& f, unsigned d) {
  mpz_class q = f.order();
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), q.get_mpz_t(), d);
  return r;
}

/// p-th root of a polynomial whose derivative vanishes.
inline GFPoly pth_root(const GaloisField& f, const GFPoly& a) {
  const unsigned p = f.p();
  GFPoly r;
  for (std::size_t i = 0; i < a.size(); i += p) r.push_back(f.pow(a[i], f.order() / p));
  trim(f, r);
  return r;
}

/// Square-free decomposition of a monic polynomial: pairs (factor, multiplicity).
inline std::vector<std::pair<GFPoly, unsigned>> squarefree(const GaloisField& f, const GFPoly& a) {
  std::vector<std::pair<GFPoly, unsigned>> out;
  if (degree<GaloisField>(a) <= 0) return out;
  auto d = derivative(f, a);
  if (d.empty()) {
    for (auto& [g, m] : squarefree(f, pth_root(f, a))) out.emplace_back(g, m * f.p());
    return out;
  }
  auto c = gcd(f, a, d);
  auto w = divmod(f, a, c).first;
  unsigned i = 1;
  while (degree<GaloisField>(w) > 0) {
    auto y = gcd(f, w, c);
    auto fac = divmod(f, w, y).first;
    if (degree<GaloisField>(fac) > 0) out.emplace_back(monic(f, fac), i);
    w = y;
    c = divmod(f, c, y).first;
    ++i;
  }
  if (degree<GaloisField>(c) > 0)
    for (auto& [g, m] : squarefree(f, pth_root(f, monic(f, c)))) out.emplace_back(g, m * f.p());
  return out;
}

/// Distinct-degree factorization of a square-free monic polynomial.
inline std::vector<std::pair<GFPoly, unsigned>> distinct_degree(const GaloisField& f, GFPoly a) {
  std::vector<std::pair<GFPoly, unsigned>> out;
  const GFPoly x{f.zero(), f.one()};
  GFPoly h = x;
  for (unsigned d = 1; 2 * d <= static_cast<unsigned>(degree<GaloisField>(a)); ++d) {
    h = powmod(f, h, static_cast<std::uint64_t>(f.order()), a);
    auto g = gcd(f, sub(f, h, x), a);
    if (degree<GaloisField>(g) > 0) {
      out.emplace_back(g, d);
      a = divmod(f, a, g).first;
      h = mod(f, h, a);
    }
  }
  if (degree<GaloisField>(a) > 0) out.emplace_back(a, static_cast<unsigned>(degree<GaloisField>(a)));
  return out;
}

/// Splits a product of distinct monic irreducibles of degree d (Cantor–Zassenhaus).
inline void equal_degree(const GaloisField& f, const GFPoly& a, unsigned d, std::mt19937_64& rng,
                         std::vector<GFPoly>& out) {
  int n = degree<GaloisField>(a);
  if (n <= 0) return;
  if (static_cast<unsigned>(n) == d) {
    out.push_back(a);
    return;
  }
  for (;;) {
    GFPoly r(n, f.zero());
    for (auto& c : r) c = f.random(rng, 0);
    trim(f, r);
    if (degree<GaloisField>(r) <= 0) continue;
    GFPoly g;
    if (f.p() == 2) {
      // absolute trace map  r + r^2 + ... + r^(2^(k d - 1)), k = [GF(q):GF(2)]
      GFPoly t = r, acc = r;
      for (unsigned i = 1; i < f.degree() * d; ++i) {
        t = mulmod(f, t, t, a);
        acc = add(f, acc, t);
      }
      g = gcd(f, acc, a);
    } else {
      mpz_class e = (gf_order_pow(f, d) - 1) / 2;
      auto h = powmod(f, r, e, a);
      g = gcd(f, sub(f, h, GFPoly{f.one()}), a);
    }
    int dg = degree<GaloisField>(g);
    if (dg > 0 && dg < n) {
      equal_degree(f, g, d, rng, out);
      equal_degree(f, divmod(f, a, g).first, d, rng, out);
      return;
    }
  }
}

/// Complete factorization of a nonzero polynomial into monic irreducibles with
/// multiplicities, sorted by degree then coefficients.
inline std::vector<std::pair<GFPoly, unsigned>> factor(const GaloisField& f, const GFPoly& a) {
  std::vector<std::pair<GFPoly, unsigned>> out;
  if (degree<GaloisField>(a) <= 0) return out;
  std::mt19937_64 rng(0x5eed);
  for (auto& [sf, mult] : squarefree(f, monic(f, a))) {
    for (auto& [g, d] : distinct_degree(f, sf)) {
      std::vector<GFPoly> pieces;
      equal_degree(f, g, d, rng, pieces);
      for (auto& pc : pieces) out.emplace_back(monic(f, pc), mult);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) {
    if (l.first.size() != r.first.size()) return l.first.size() < r.first.size();
    return std::lexicographical_compare(l.first.rbegin(), l.first.rend(), r.first.rbegin(), r.first.rend());
  });
  // merge repeated factors coming from different square-free layers
  std::vector<std::pair<GFPoly, unsigned>> merged;
  for (auto& e : out) {
    if (!merged.empty() && merged.back().first == e.first)
      merged.back().second += e.second;
    else
      merged.push_back(e);
  }
  return merged;
}

inline bool is_irreducible(const GaloisField& f, const GFPoly& a) {
  int n = degree<GaloisField>(a);
  if (n <= 0) return false;
  auto fac = factor(f, a);
  return fac.size() == 1 && fac[0].second == 1;
}

/// All monic irreducible polynomials of degree d, ordered by the base-q code
/// of their non-leading coefficients (c_{d-1} most significant).
inline std::vector<GFPoly> monic_irreducibles(const GaloisField& f, unsigned d, std::size_t limit = SIZE_MAX) {
  std::vector<GFPoly> out;
  const std::uint64_t q = f.order();
  std::uint64_t total = 1;
  for (unsigned i = 0; i < d; ++i) {
    total *= q;
    if (total > (1ull << 24)) break;
  }
  for (std::uint64_t code = 0; code < total && out.size() < limit; ++code) {
    GFPoly p(d + 1, f.zero());
    std::uint64_t c = code;
    for (unsigned i = 0; i < d; ++i) {
      p[i] = static_cast<GaloisField::Elem>(c % q);
      c /= q;
    }
    p[d] = f.one();
    if (is_irreducible(f, p)) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace gzbt::poly
