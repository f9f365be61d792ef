#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "gzbt/error.hpp"

namespace gzbt {

namespace detail {

inline bool is_small_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

struct GaloisTables {
  std::uint32_t p = 2;
  std::uint32_t r = 1;
  std::uint32_t q = 2;
  std::vector<std::uint32_t> modulus;  // low-order coefficients of the monic primitive modulus
  std::vector<std::uint32_t> exp;      // exp[i] = g^i, doubled length
  std::vector<std::uint32_t> log;      // log[0] unused
};

inline std::uint32_t times_generator(const GaloisTables& t, std::uint32_t v,
                                     const std::vector<std::uint32_t>& mod) {
  // digits of v are coefficients in the basis 1, a, ..., a^{r-1}
  std::vector<std::uint32_t> d(t.r + 1, 0);
  for (std::uint32_t i = 0; i < t.r; ++i) {
    d[i + 1] = v % t.p;
    v /= t.p;
  }
  std::uint32_t top = d[t.r];
  std::uint32_t out = 0, place = 1;
  for (std::uint32_t i = 0; i < t.r; ++i) {
    std::uint32_t c = (d[i] + (t.p - (top * mod[i]) % t.p)) % t.p;
    out += c * place;
    place *= t.p;
  }
  return out;
}

inline std::shared_ptr<const GaloisTables> build_tables(std::uint32_t p, std::uint32_t r) {
  if (!is_small_prime(p)) raise(ErrorCode::UnsupportedField, "GF(p^r) needs a prime p");
  if (r == 0) raise(ErrorCode::UnsupportedField, "GF(p^r) needs r >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < r; ++i) {
    q *= p;
    if (q > (1u << 16)) raise(ErrorCode::UnsupportedField, "GF(q) limited to q <= 65536");
  }
  auto t = std::make_shared<GaloisTables>();
  t->p = p;
  t->r = r;
  t->q = static_cast<std::uint32_t>(q);
  t->exp.assign(2 * (t->q - 1), 0);
  t->log.assign(t->q, 0);
  // Search monic moduli in lexicographic order for one whose root generates the unit group.
  std::uint64_t candidates = q;
  for (std::uint64_t code = 0; code < candidates; ++code) {
    std::vector<std::uint32_t> mod(r);
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < r; ++i) {
      mod[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    if (mod[0] == 0) continue;
    std::uint32_t g = (r == 1) ? (p - mod[0]) % p : p;  // for r = 1 the root of X + m0 is -m0
    if (r == 1 && g == 0) continue;
    std::vector<bool> seen(t->q, false);
    std::uint32_t v = 1;
    bool ok = true;
    for (std::uint32_t i = 0; i + 1 < t->q; ++i) {
      if (v == 0 || seen[v]) {
        ok = false;
        break;
      }
      seen[v] = true;
      t->exp[i] = v;
      v = (r == 1) ? static_cast<std::uint32_t>((std::uint64_t(v) * g) % p) : times_generator(*t, v, mod);
    }
    if (!ok || v != 1) continue;
    t->modulus = mod;
    for (std::uint32_t i = 0; i + 1 < t->q; ++i) {
      t->exp[i + t->q - 1] = t->exp[i];
      t->log[t->exp[i]] = i;
    }
    return t;
  }
  raise(ErrorCode::UnsupportedField, "no primitive modulus found");
}

}  // namespace detail

/// The finite field GF(p^r). Elements are integers in [0, q) whose base-p
/// digits are coordinates in the power basis of a fixed primitive element `a`.
class GaloisField {
 public:
  using Elem = std::uint32_t;

  GaloisField(std::uint32_t p, std::uint32_t r = 1) : t_(detail::build_tables(p, r)) {}

  std::uint32_t p() const { return t_->p; }
  std::uint32_t degree() const { return t_->r; }
  std::uint32_t order() const { return t_->q; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long long n) const {
    long long m = n % static_cast<long long>(t_->p);
    if (m < 0) m += t_->p;
    return static_cast<Elem>(m);
  }
  Elem from_mpz(const mpz_class& n) const {
    mpz_class m = n % t_->p;
    if (m < 0) m += t_->p;
    return static_cast<Elem>(m.get_ui());
  }
  Elem generator() const { return t_->exp[1 % (t_->q - 1)]; }

  Elem add(Elem a, Elem b) const {
    if (t_->p == 2) return a ^ b;
    if (t_->r == 1) return (a + b) % t_->p;
    Elem out = 0, place = 1;
    for (std::uint32_t i = 0; i < t_->r; ++i) {
      out += ((a % t_->p + b % t_->p) % t_->p) * place;
      a /= t_->p;
      b /= t_->p;
      place *= t_->p;
    }
    return out;
  }
  Elem neg(Elem a) const {
    if (t_->p == 2) return a;
    Elem out = 0, place = 1;
    for (std::uint32_t i = 0; i < t_->r; ++i) {
      out += ((t_->p - a % t_->p) % t_->p) * place;
      a /= t_->p;
      place *= t_->p;
    }
    return out;
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return t_->exp[t_->log[a] + t_->log[b]];
  }
  Elem inv(Elem a) const {
    if (a == 0) raise(ErrorCode::DivisionByZero, "inverse of 0 in GF(q)");
    return t_->exp[(t_->q - 1 - t_->log[a]) % (t_->q - 1)];
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    return t_->exp[(std::uint64_t(t_->log[a]) * (e % (t_->q - 1))) % (t_->q - 1)];
  }

  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }
  bool eq(Elem a, Elem b) const { return a == b; }

  /// Squares in odd characteristic are the even powers of the generator; in
  /// characteristic 2 every element is a square.
  bool is_square(Elem a) const {
    if (a == 0 || t_->p == 2) return true;
    return t_->log[a] % 2 == 0;
  }
  /// Square root in characteristic 2 (Frobenius inverse).
  Elem sqrt_char2(Elem a) const { return pow(a, t_->q / 2); }
  /// Absolute trace to the prime field, returned as an integer in [0, p).
  std::uint32_t trace(Elem a) const {
    Elem s = 0, x = a;
    for (std::uint32_t i = 0; i < t_->r; ++i) {
      s = add(s, x);
      x = pow(x, t_->p);
    }
    return s;
  }

  unsigned long characteristic() const { return t_->p; }
  bool operator==(const GaloisField& o) const { return t_->p == o.t_->p && t_->r == o.t_->r; }

  std::string to_string(Elem a) const {
    if (t_->r == 1) return std::to_string(a);
    if (a == 0) return "0";
    std::string out;
    for (int i = static_cast<int>(t_->r) - 1; i >= 0; --i) {
      Elem place = 1;
      for (int j = 0; j < i; ++j) place *= t_->p;
      Elem d = (a / place) % t_->p;
      if (d == 0) continue;
      if (!out.empty()) out += "+";
      if (i == 0) {
        out += std::to_string(d);
        continue;
      }
      if (d != 1) out += std::to_string(d) + "*";
      out += (i == 1) ? std::string("a") : "a^" + std::to_string(i);
    }
    return out;
  }
  std::string to_string_atomic(Elem a) const {
    auto s = to_string(a);
    return s.find('+') != std::string::npos || s.find('*') != std::string::npos ? "(" + s + ")" : s;
  }

  /// `a` names the primitive element when r > 1.
  std::optional<Elem> symbol(std::string_view name) const {
    if (name == "a" && t_->r > 1) return generator();
    return std::nullopt;
  }

  template <class Rng>
  Elem random(Rng& rng, int) const {
    std::uniform_int_distribution<Elem> d(0, t_->q - 1);
    return d(rng);
  }

 private:
  std::shared_ptr<const detail::GaloisTables> t_;
};

}  // namespace gzbt
