#pragma once

#include <string>

#include "gzbt/error.hpp"

namespace gzbt {

/// The four normal forms of a pointless conic y^2 + ... over k:
///   I   y^2 + rho x^2 + sigma = 0            (char != 2)
///   II  y^2 + rho x^2 + sigma = 0            (char 2)
///   III y^2 + rho x^2 + x + sigma = 0        (char 2)
///   IV  y^2 + x y + rho x^2 + sigma = 0      (char 2)
enum class ConicCase { I, II, III, IV };

inline std::string to_string(ConicCase c) {
  switch (c) {
    case ConicCase::I: return "I";
    case ConicCase::II: return "II";
    case ConicCase::III: return "III";
    case ConicCase::IV: return "IV";
  }
  return "?";
}

inline ConicCase parse_conic_case(const std::string& s) {
  if (s == "I" || s == "i" || s == "1") return ConicCase::I;
  if (s == "II" || s == "ii" || s == "2") return ConicCase::II;
  if (s == "III" || s == "iii" || s == "3") return ConicCase::III;
  if (s == "IV" || s == "iv" || s == "4") return ConicCase::IV;
  raise(ErrorCode::Parse, "unknown conic case '" + s + "'");
}

/// Coefficients of a conic in normal form. tau is 1 in case III and 0 otherwise.
template <class E>
struct ConicData {
  ConicCase kind = ConicCase::I;
  E rho;
  E sigma;
  E tau;
};

}  // namespace gzbt
