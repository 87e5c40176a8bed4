#include "vesselplan/money.hpp"

#include <charconv>
#include <cstdlib>
#include <stdexcept>

namespace vesselplan {

Money Money::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty money value");
  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto dot = text.find('.');
  const std::string_view whole = text.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (whole.empty() && frac.empty()) throw std::invalid_argument("malformed money value");
  if (frac.size() > 2) throw std::invalid_argument("money supports at most two decimals");

  std::int64_t units = 0;
  if (!whole.empty()) {
    auto [ptr, ec] = std::from_chars(whole.data(), whole.data() + whole.size(), units);
    if (ec != std::errc{} || ptr != whole.data() + whole.size())
      throw std::invalid_argument("malformed money value");
  }
  std::int64_t hundredths = 0;
  for (std::size_t i = 0; i < 2; ++i) {
    hundredths *= 10;
    if (i < frac.size()) {
      if (frac[i] < '0' || frac[i] > '9') throw std::invalid_argument("malformed money value");
      hundredths += frac[i] - '0';
    }
  }
  const std::int64_t cents = units * 100 + hundredths;
  return Money(negative ? -cents : cents);
}

std::string Money::to_string() const {
  const std::int64_t mag = cents_ < 0 ? -cents_ : cents_;
  std::string out = cents_ < 0 ? "-" : "";
  out += std::to_string(mag / 100);
  out += '.';
  const auto frac = mag % 100;
  out += static_cast<char>('0' + frac / 10);
  out += static_cast<char>('0' + frac % 10);
  return out;
}

}  // namespace vesselplan
