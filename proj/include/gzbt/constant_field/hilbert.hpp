#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <vector>

#include "gzbt/arith/integer_factor.hpp"
#include "gzbt/error.hpp"

// Hilbert symbols of rationals at the places of Q.
namespace gzbt::hilbert {

inline int legendre(const mpz_class& a, const mpz_class& p) { return mpz_legendre(a.get_mpz_t(), p.get_mpz_t()); }

/// Writes r = p^v * unit with the unit an integer prime to p (numerator
/// times denominator, which has the same square class).
inline std::pair<long, mpz_class> split(const mpq_class& r, const mpz_class& p) {
  long v = padic_valuation(r, p);
  mpz_class n = r.get_num(), d = r.get_den();
  while (n % p == 0) n /= p;
  while (d % p == 0) d /= p;
  return {v, n * d};
}

inline int at_infinity(const mpq_class& a, const mpq_class& b) { return (sgn(a) < 0 && sgn(b) < 0) ? -1 : 1; }

/// (a, b)_p for a prime p, including p = 2.
inline int at_prime(const mpq_class& a, const mpq_class& b, const mpz_class& p) {
  if (sgn(a) == 0 || sgn(b) == 0) raise(ErrorCode::ZeroInput, "Hilbert symbol of zero");
  auto [al, u] = split(a, p);
  auto [be, w] = split(b, p);
  if (p == 2) {
    auto eps = [](const mpz_class& x) -> int {
      mpz_class m = x % 4;
      if (m < 0) m += 4;
      return m == 3 ? 1 : 0;
    };
    auto omega = [](const mpz_class& x) -> int {
      mpz_class m = x % 8;
      if (m < 0) m += 8;
      return (m == 3 || m == 5) ? 1 : 0;
    };
    int e = eps(u) * eps(w) + static_cast<int>(((al % 2) + 2) % 2) * omega(w) +
            static_cast<int>(((be % 2) + 2) % 2) * omega(u);
    return e % 2 ? -1 : 1;
  }
  int s = 1;
  if ((al * be) % 2 != 0) {
    mpz_class m = p % 4;
    if (m == 3) s = -s;
  }
  if (be % 2 != 0) s *= legendre(u, p);
  if (al % 2 != 0) s *= legendre(w, p);
  return s;
}

/// Primes at which (a, b) may be ramified: 2 and the odd primes dividing a or b.
inline std::vector<mpz_class> relevant_primes(const std::vector<mpq_class>& xs) {
  std::vector<mpz_class> out{2};
  auto add = [&](const mpz_class& n) {
    for (auto& p : prime_divisors(abs(n)))
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  };
  for (auto& x : xs) {
    add(x.get_num());
    add(x.get_den());
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// True when the quaternion algebra (a, b) splits everywhere, i.e. a is a
/// norm from Q(sqrt b).
inline bool globally_trivial(const mpq_class& a, const mpq_class& b) {
  if (at_infinity(a, b) != 1) return false;
  for (auto& p : relevant_primes({a, b}))
    if (at_prime(a, b, p) != 1) return false;
  return true;
}

/// Square class of a nonzero rational in Q_p as (v mod 2, unit class), where
/// the unit class is the Legendre symbol for odd p and the residue mod 8 for p = 2.
inline std::pair<int, int> padic_square_class(const mpq_class& a, const mpz_class& p) {
  auto [v, u] = split(a, p);
  int parity = static_cast<int>(((v % 2) + 2) % 2);
  if (p == 2) {
    mpz_class m = u % 8;
    if (m < 0) m += 8;
    return {parity, static_cast<int>(m.get_si())};
  }
  return {parity, legendre(u, p)};
}

inline bool is_padic_square(const mpq_class& a, const mpz_class& p) {
  auto c = padic_square_class(a, p);
  return c.first == 0 && c.second == 1;
}

}  // namespace gzbt::hilbert
