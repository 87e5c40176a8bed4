#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace vesselplan {

/// Fixed-point currency amount in hundredths of a unit. Sums are exact, so
/// weekly costs always add up to the schedule total.
class Money {
 public:
  constexpr Money() = default;

  static constexpr Money from_cents(std::int64_t cents) { return Money(cents); }
  static constexpr Money from_units(std::int64_t units) { return Money(units * 100); }
  /// Parses "12", "12.5", "12.50". More than two fractional digits is rejected.
  static Money parse(std::string_view text);

  constexpr std::int64_t cents() const { return cents_; }
  constexpr double to_double() const { return static_cast<double>(cents_) / 100.0; }
  /// Always two decimals: "895.00".
  std::string to_string() const;

  constexpr Money& operator+=(Money o) {
    cents_ += o.cents_;
    return *this;
  }
  constexpr Money& operator-=(Money o) {
    cents_ -= o.cents_;
    return *this;
  }
  friend constexpr Money operator+(Money a, Money b) { return a += b; }
  friend constexpr Money operator-(Money a, Money b) { return a -= b; }
  friend constexpr Money operator*(Money a, std::int64_t n) { return Money(a.cents_ * n); }
  friend constexpr Money operator*(std::int64_t n, Money a) { return Money(a.cents_ * n); }
  friend constexpr auto operator<=>(Money, Money) = default;

 private:
  constexpr explicit Money(std::int64_t cents) : cents_(cents) {}
  std::int64_t cents_ = 0;
};

}  // namespace vesselplan
