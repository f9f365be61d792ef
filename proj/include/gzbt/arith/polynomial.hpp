#pragma once

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

#include "gzbt/error.hpp"

/// Dense univariate polynomials over a field parent `F`. Coefficients are
/// stored low degree first with no trailing zeros; the zero polynomial is empty.
namespace gzbt::poly {

template <class F>
using Poly = std::vector<typename F::Elem>;

template <class F>
void trim(const F& f, Poly<F>& p) {
  while (!p.empty() && f.is_zero(p.back())) p.pop_back();
}

template <class F>
int degree(const Poly<F>& p) {
  return static_cast<int>(p.size()) - 1;
}

template <class F>
Poly<F> constant(const F& f, const typename F::Elem& c) {
  if (f.is_zero(c)) return {};
  return {c};
}

template <class F>
Poly<F> monomial(const F& f, const typename F::Elem& c, int deg) {
  if (f.is_zero(c)) return {};
  Poly<F> p(deg + 1, f.zero());
  p[deg] = c;
  return p;
}

template <class F>
typename F::Elem coeff(const F& f, const Poly<F>& p, int i) {
  return (i >= 0 && i < static_cast<int>(p.size())) ? p[i] : f.zero();
}

template <class F>
bool equal(const F& f, const Poly<F>& a, const Poly<F>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!f.eq(a[i], b[i])) return false;
  return true;
}

template <class F>
bool is_one(const F& f, const Poly<F>& p) {
  return p.size() == 1 && f.is_one(p[0]);
}

template <class F>
Poly<F> add(const F& f, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r(std::max(a.size(), b.size()), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.add(r[i], b[i]);
  trim(f, r);
  return r;
}

template <class F>
Poly<F> neg(const F& f, const Poly<F>& a) {
  Poly<F> r;
  r.reserve(a.size());
  for (const auto& c : a) r.push_back(f.neg(c));
  return r;
}

template <class F>
Poly<F> sub(const F& f, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r(std::max(a.size(), b.size()), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.sub(r[i], b[i]);
  trim(f, r);
  return r;
}

template <class F>
Poly<F> scale(const F& f, const Poly<F>& a, const typename F::Elem& c) {
  if (f.is_zero(c)) return {};
  Poly<F> r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(f.mul(x, c));
  trim(f, r);
  return r;
}

template <class F>
Poly<F> shift(const F& f, const Poly<F>& a, int k) {
  if (a.empty()) return {};
  Poly<F> r(k, f.zero());
  r.insert(r.end(), a.begin(), a.end());
  return r;
}

template <class F>
Poly<F> mul(const F& f, const Poly<F>& a, const Poly<F>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<F> r(a.size() + b.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (f.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  trim(f, r);
  return r;
}

template <class F>
Poly<F> pow(const F& f, Poly<F> a, std::uint64_t e) {
  Poly<F> r{f.one()};
  while (e) {
    if (e & 1) r = mul(f, r, a);
    e >>= 1;
    if (e) a = mul(f, a, a);
  }
  return r;
}

template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const F& f, const Poly<F>& a, const Poly<F>& b) {
  if (b.empty()) raise(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.size() < b.size()) return {{}, a};
  Poly<F> rem = a;
  Poly<F> quo(a.size() - b.size() + 1, f.zero());
  auto lead_inv = f.inv(b.back());
  for (int i = static_cast<int>(rem.size()) - 1; i >= static_cast<int>(b.size()) - 1; --i) {
    if (f.is_zero(rem[i])) continue;
    auto c = f.mul(rem[i], lead_inv);
    int s = i - (static_cast<int>(b.size()) - 1);
    quo[s] = c;
    for (std::size_t j = 0; j < b.size(); ++j) rem[s + j] = f.sub(rem[s + j], f.mul(c, b[j]));
  }
  trim(f, rem);
  trim(f, quo);
  return {std::move(quo), std::move(rem)};
}

template <class F>
Poly<F> mod(const F& f, const Poly<F>& a, const Poly<F>& b) {
  return divmod(f, a, b).second;
}

template <class F>
Poly<F> monic(const F& f, const Poly<F>& a) {
  if (a.empty()) return a;
  return scale(f, a, f.inv(a.back()));
}

template <class F>
Poly<F> gcd(const F& f, Poly<F> a, Poly<F> b) {
  if constexpr (requires { f.poly_gcd(a, b); }) return f.poly_gcd(a, b);
  while (!b.empty()) {
    auto r = mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(f, a);
}

/// Returns (g, s, t) with s*a + t*b = g, g monic.
template <class F>
std::tuple<Poly<F>, Poly<F>, Poly<F>> xgcd(const F& f, Poly<F> a, Poly<F> b) {
  Poly<F> s0{f.one()}, s1{}, t0{}, t1{f.one()};
  while (!b.empty()) {
    auto [q, r] = divmod(f, a, b);
    a = std::move(b);
    b = std::move(r);
    auto s2 = sub(f, s0, mul(f, q, s1));
    auto t2 = sub(f, t0, mul(f, q, t1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (a.empty()) return {a, s0, t0};
  auto li = f.inv(a.back());
  return {scale(f, a, li), scale(f, s0, li), scale(f, t0, li)};
}

template <class F>
Poly<F> derivative(const F& f, const Poly<F>& a) {
  if (a.size() <= 1) return {};
  Poly<F> r(a.size() - 1, f.zero());
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = f.mul(f.from_int(static_cast<long long>(i)), a[i]);
  trim(f, r);
  return r;
}

template <class F>
typename F::Elem eval(const F& f, const Poly<F>& a, const typename F::Elem& x) {
  auto r = f.zero();
  for (auto it = a.rbegin(); it != a.rend(); ++it) r = f.add(f.mul(r, x), *it);
  return r;
}

/// Lowest index with a nonzero coefficient (the order at 0); -1 for zero.
template <class F>
int low_order(const F& f, const Poly<F>& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!f.is_zero(a[i])) return static_cast<int>(i);
  return -1;
}

/// Reversal x^deg * a(1/x).
template <class F>
Poly<F> reverse(const F& f, const Poly<F>& a, int deg) {
  Poly<F> r(deg + 1, f.zero());
  for (int i = 0; i <= degree<F>(a); ++i) r[deg - i] = a[i];
  trim(f, r);
  return r;
}

template <class F>
Poly<F> mulmod(const F& f, const Poly<F>& a, const Poly<F>& b, const Poly<F>& m) {
  return mod(f, mul(f, a, b), m);
}

template <class F, class Exponent>
Poly<F> powmod(const F& f, Poly<F> a, Exponent e, const Poly<F>& m) {
  Poly<F> r = mod(f, Poly<F>{f.one()}, m);
  a = mod(f, a, m);
  while (e > 0) {
    if (e % 2 == 1) r = mulmod(f, r, a, m);
    e /= 2;
    if (e > 0) a = mulmod(f, a, a, m);
  }
  return r;
}

namespace detail {
/// True when `s` contains a top-level operator from `ops` past its first character.
inline bool has_top_level(const std::string& s, const char* ops) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(') ++depth;
    else if (c == ')') --depth;
    else if (depth == 0 && i > 0 && std::strchr(ops, c)) return true;
  }
  return false;
}
}  // namespace detail

template <class F>
std::string to_string(const F& f, const Poly<F>& a, const std::string& var) {
  if (a.empty()) return "0";
  std::string out;
  for (int i = degree<F>(a); i >= 0; --i) {
    if (f.is_zero(a[i])) continue;
    std::string mon = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    std::string c = f.to_string(a[i]);
    if (i > 0) {
      if (c == "1")
        c = "";
      else if (c == "-1")
        c = "-";
      else
        c = (detail::has_top_level(c, "+-") ? "(" + c + ")" : c) + "*";
    } else if (!out.empty() && detail::has_top_level(c, "+-")) {
      c = "(" + c + ")";
    }
    std::string term = c + mon;
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out;
}

}  // namespace gzbt::poly
