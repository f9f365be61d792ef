#pragma once

#include <climits>
#include <vector>

#include "gzbt/arith/rational_functions.hpp"

namespace gzbt {

/// First m coefficients of r in powers of pi = 1/x, for r in k(x) with
/// valuation at infinity >= 0.
template <class F>
std::vector<typename F::Elem> expand_at_infinity(const RationalFunctions<F>& kx, const RationalFunction<F>& r,
                                                 std::size_t m) {
  const F& f = kx.base();
  std::vector<typename F::Elem> out(m, f.zero());
  if (kx.is_zero(r)) return out;
  const int dn = poly::degree<F>(r.num), dd = poly::degree<F>(r.den);
  if (dd < dn) raise(ErrorCode::NotIntegralAtInfinity, "pole at infinity");
  // r(1/pi) = pi^(dd-dn) * rev(num)(pi) / rev(den)(pi)
  auto n = poly::reverse(f, r.num, dn), d = poly::reverse(f, r.den, dd);
  const std::size_t shift = static_cast<std::size_t>(dd - dn);
  if (shift >= m) return out;
  const std::size_t len = m - shift;
  const auto d0inv = f.inv(poly::coeff(f, d, 0));
  std::vector<typename F::Elem> q(len, f.zero());
  for (std::size_t i = 0; i < len; ++i) {
    auto acc = poly::coeff(f, n, static_cast<int>(i));
    for (std::size_t j = 1; j <= i; ++j) {
      auto dj = poly::coeff(f, d, static_cast<int>(j));
      if (!f.is_zero(dj)) acc = f.sub(acc, f.mul(dj, q[i - j]));
    }
    q[i] = f.mul(acc, d0inv);
  }
  for (std::size_t i = 0; i < len; ++i) out[shift + i] = q[i];
  return out;
}

}  // namespace gzbt
