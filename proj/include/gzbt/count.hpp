#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace gzbt {

/// A cardinality in N ∪ {ω}, where ω marks a countably infinite count.
class Count {
 public:
  constexpr Count() = default;
  constexpr Count(std::uint64_t n) : value_(n) {}  // NOLINT: implicit by intent

  static constexpr Count omega() {
    Count c;
    c.value_.reset();
    return c;
  }

  constexpr bool is_omega() const { return !value_.has_value(); }
  constexpr bool is_finite() const { return value_.has_value(); }
  constexpr std::uint64_t value() const { return *value_; }

  friend constexpr bool operator==(const Count&, const Count&) = default;

  friend constexpr Count operator+(Count a, Count b) {
    if (a.is_omega() || b.is_omega()) return omega();
    return Count(a.value() + b.value());
  }
  friend constexpr Count operator*(Count a, Count b) {
    if (a.is_finite() && a.value() == 0) return Count(0);
    if (b.is_finite() && b.value() == 0) return Count(0);
    if (a.is_omega() || b.is_omega()) return omega();
    return Count(a.value() * b.value());
  }

  std::string to_string() const { return is_omega() ? "omega" : std::to_string(*value_); }

 private:
  std::optional<std::uint64_t> value_ = std::uint64_t{0};
};

/// True for 1, 2, 4, ... and for ω.
constexpr bool is_power_of_two_or_omega(Count c) {
  if (c.is_omega()) return true;
  auto n = c.value();
  return n != 0 && (n & (n - 1)) == 0;
}

}  // namespace gzbt
