#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "gzbt/arith/finite_field_poly.hpp"
#include "gzbt/arith/rational_functions.hpp"
#include "gzbt/linalg/f2.hpp"

namespace gzbt {

/// Solves z^2 + z = c in GF(2^r)(u). Writing z = A/B in lowest terms forces
/// den(c) = B^2 and num(c) = A^2 + A B, which is GF(2)-linear in A.
inline std::optional<RationalFunction<GaloisField>> artin_schreier_root(const RationalFunctions<GaloisField>& K,
                                                                          const RationalFunction<GaloisField>& c) {
  const GaloisField& f = K.base();
  if (f.p() != 2) raise(ErrorCode::UnsupportedField, "Artin-Schreier equation needs characteristic 2");
  if (K.is_zero(c)) return K.zero();
  poly::GFPoly B;
  for (std::size_t i = 0; i < c.den.size(); ++i) {
    if (i % 2) {
      if (!f.is_zero(c.den[i])) return std::nullopt;
    } else {
      B.push_back(f.sqrt_char2(c.den[i]));
    }
  }
  poly::trim(f, B);
  const int db = poly::degree<GaloisField>(B), dn = poly::degree<GaloisField>(c.num);
  const int amax = std::max((dn + 1) / 2, db);
  const unsigned r = f.degree();
  const int top = std::max({2 * amax, amax + db, dn});
  const std::size_t unknowns = static_cast<std::size_t>(amax + 1) * r;
  const std::size_t eqs = static_cast<std::size_t>(top + 1) * r;
  std::vector<std::vector<std::uint8_t>> m(eqs, std::vector<std::uint8_t>(unknowns, 0));
  for (int i = 0; i <= amax; ++i)
    for (unsigned j = 0; j < r; ++j) {
      auto e = poly::monomial(f, GaloisField::Elem(1u << j), i);
      auto img = poly::add(f, poly::mul(f, e, e), poly::mul(f, e, B));
      for (std::size_t d = 0; d < img.size(); ++d)
        for (unsigned bit = 0; bit < r; ++bit) m[d * r + bit][i * r + j] = (img[d] >> bit) & 1u;
    }
  std::vector<std::uint8_t> rhs(eqs, 0);
  for (std::size_t d = 0; d < c.num.size(); ++d)
    for (unsigned bit = 0; bit < r; ++bit) rhs[d * r + bit] = (c.num[d] >> bit) & 1u;
  auto sol = linalg::solve_f2(std::move(m), std::move(rhs));
  if (!sol) return std::nullopt;
  poly::GFPoly A(amax + 1, f.zero());
  for (int i = 0; i <= amax; ++i)
    for (unsigned j = 0; j < r; ++j)
      if ((*sol)[i * r + j]) A[i] |= (1u << j);
  poly::trim(f, A);
  return K.make(A, B);
}

inline bool is_artin_schreier_value(const RationalFunctions<GaloisField>& K, const RationalFunction<GaloisField>& c) {
  return artin_schreier_root(K, c).has_value();
}

}  // namespace gzbt
