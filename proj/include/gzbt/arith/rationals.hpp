#pragma once

#include <gmpxx.h>

#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "gzbt/error.hpp"

namespace gzbt {

/// The field Q with GMP-backed exact elements.
class Rationals {
 public:
  using Elem = mpq_class;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long long n) const { return Elem(mpz_class(std::to_string(n))); }
  Elem from_mpz(const mpz_class& n) const { return Elem(n); }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (sgn(a) == 0) raise(ErrorCode::DivisionByZero, "inverse of 0 in Q");
    return 1 / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool is_one(const Elem& a) const { return a == 1; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }

  /// gcd in Q[X] by a primitive remainder sequence over Z; Euclid over Q
  /// lets the rational coefficients grow quickly.
  std::vector<Elem> poly_gcd(const std::vector<Elem>& a, const std::vector<Elem>& b) const {
    using Z = std::vector<mpz_class>;
    auto trimmed = [](Z p) {
      while (!p.empty() && p.back() == 0) p.pop_back();
      return p;
    };
    auto primitive = [](Z p) {
      mpz_class c = 0;
      for (const auto& v : p) c = gcd(c, v);
      if (c > 1)
        for (auto& v : p) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
      return p;
    };
    auto integral = [&](const std::vector<Elem>& p) {
      mpz_class l = 1;
      for (const auto& v : p) l = lcm(l, v.get_den());
      Z r;
      for (const auto& v : p) r.push_back(v.get_num() * (l / v.get_den()));
      return primitive(trimmed(std::move(r)));
    };
    Z A = integral(a), B = integral(b);
    if (A.size() < B.size()) std::swap(A, B);
    while (B.size() > 1) {
      const mpz_class lc = B.back();
      while (A.size() >= B.size()) {
        const mpz_class lead = A.back();
        const std::size_t s = A.size() - B.size();
        for (auto& v : A) v *= lc;
        for (std::size_t j = 0; j < B.size(); ++j) A[s + j] -= lead * B[j];
        A = trimmed(std::move(A));
      }
      if (A.empty()) break;
      A = primitive(std::move(A));
      std::swap(A, B);
    }
    Z g = B.empty() ? A : B;
    if (B.size() == 1) g = Z{1};
    std::vector<Elem> out;
    for (const auto& v : g) out.emplace_back(v, g.back());
    for (auto& v : out) v.canonicalize();
    return out;
  }

  unsigned long characteristic() const { return 0; }
  bool operator==(const Rationals&) const { return true; }

  std::string to_string(const Elem& a) const { return a.get_str(); }
  /// Rendering safe to juxtapose with `*` inside a larger expression.
  std::string to_string_atomic(const Elem& a) const {
    auto s = a.get_str();
    return (sgn(a) < 0 || a.get_den() != 1) ? "(" + s + ")" : s;
  }

  std::optional<Elem> symbol(std::string_view) const { return std::nullopt; }

  template <class Rng>
  Elem random(Rng& rng, int size) const {
    int bound = 2 + size;
    std::uniform_int_distribution<int> num(-bound, bound);
    std::uniform_int_distribution<int> den(1, bound);
    Elem r(num(rng), den(rng));
    r.canonicalize();
    return r;
  }
};

}  // namespace gzbt
