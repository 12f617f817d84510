#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace flowfilter {

// Copy and path counts grow exponentially with depth, so every count that can
// depend on the number of paths is arbitrary precision.
using Count = boost::multiprecision::cpp_int;

std::string to_string(const Count& c);

// Exact nonnegative fraction num/den. A zero denominator is not allowed.
struct Ratio {
  Count num;
  Count den{1};

  // Round-half-up decimal with exactly `digits` fractional digits.
  std::string to_decimal(int digits = 6) const;
  double to_double() const;

  friend bool operator==(const Ratio& a, const Ratio& b) {
    return a.num * b.den == b.num * a.den;
  }
  friend bool operator<(const Ratio& a, const Ratio& b) {
    return a.num * b.den < b.num * a.den;
  }
  friend bool operator<=(const Ratio& a, const Ratio& b) { return !(b < a); }
};

}  // namespace flowfilter
