#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace torfib {

// Exact arbitrary-precision rational; the scalar type of every series coefficient.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline std::string rat_to_string(const Rat& r) { return r.str(); }

inline Rat rat_from_string(const std::string& s) { return Rat(s); }

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt b = 1;
  for (int i = 0; i < k; ++i) {
    b *= (n - i);
    b /= (i + 1);
  }
  return b;
}

}  // namespace torfib
