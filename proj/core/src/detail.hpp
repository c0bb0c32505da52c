#pragma once

#include <charconv>
#include <complex>
#include <string>

namespace chernkit::detail {

inline constexpr double kTinyDenominator = 1e-300;

inline std::complex<double> int_power(std::complex<double> base, int n) {
  std::complex<double> result{1.0, 0.0};
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

// Shortest text that parses back to the same double.
inline std::string shortest(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

}  // namespace chernkit::detail
