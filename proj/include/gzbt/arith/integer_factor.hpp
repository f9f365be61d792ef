#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <vector>

namespace gzbt {

namespace detail {

inline mpz_class pollard_brent(const mpz_class& n) {
  if (n % 2 == 0) return 2;
  for (unsigned long c = 1;; ++c) {
    mpz_class x = 2, y = 2, d = 1;
    auto step = [&](const mpz_class& v) { return mpz_class((v * v + c) % n); };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      mpz_class diff = abs(x - y);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

inline void factor_into(mpz_class n, std::map<mpz_class, unsigned>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
    ++out[n];
    return;
  }
  mpz_class d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace detail

/// Prime factorization of |n| (n != 0) as ascending (prime, exponent) pairs.
inline std::vector<std::pair<mpz_class, unsigned>> factor_integer(mpz_class n) {
  n = abs(n);
  std::map<mpz_class, unsigned> acc;
  for (unsigned long p = 2; p < 1000 && n > 1; ++p) {
    while (n % p == 0) {
      ++acc[mpz_class(p)];
      n /= p;
    }
  }
  detail::factor_into(n, acc);
  return {acc.begin(), acc.end()};
}

inline std::vector<mpz_class> prime_divisors(const mpz_class& n) {
  std::vector<mpz_class> out;
  if (n == 0) return out;
  for (auto& [p, e] : factor_integer(n)) out.push_back(p);
  return out;
}

/// Exponent of the prime p in the nonzero rational r.
inline long padic_valuation(const mpq_class& r, const mpz_class& p) {
  long v = 0;
  mpz_class n = r.get_num(), d = r.get_den();
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  while (d % p == 0) {
    d /= p;
    --v;
  }
  return v;
}

}  // namespace gzbt
