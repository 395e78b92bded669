#pragma once

#include <boost/rational.hpp>
#include <algorithm>
#include <string>

#include "cuspcoh/errors.hpp"

namespace cuspcoh {

using Int = long long;
using Rat = boost::rational<Int>;

// C(n, k), exact; 0 outside the Pascal triangle.
inline Int binomial(Int n, Int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int result = 1;
  for (Int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

inline Int checked_mul(Int a, Int b) {
  Int out = 0;
  if (__builtin_mul_overflow(a, b, &out))
    throw resource_error("integer overflow in exact multiplication");
  return out;
}

// Reduced decimal form, "3", "-5/2"; never floating point.
inline std::string rat_string(const Rat& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
  return s;
}

}  // namespace cuspcoh
