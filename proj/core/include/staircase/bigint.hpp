#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace staircase {

using BigInt = boost::multiprecision::cpp_int;

// Floor division for d > 0 (cpp_int's operator/ truncates toward zero).
inline BigInt floor_div(const BigInt& n, const BigInt& d) {
  BigInt q = n / d;
  if (q * d != n && n < 0) {
    --q;
  }
  return q;
}

// Ceiling division for d > 0.
inline BigInt ceil_div(const BigInt& n, const BigInt& d) {
  return floor_div(n + d - 1, d);
}

// Nearest integer to n/d with ties toward -infinity, for d > 0.
inline BigInt round_div_ties_down(const BigInt& n, const BigInt& d) {
  return ceil_div(2 * n - d, 2 * d);
}

// Smallest k with 2^k >= v; v must be positive.
inline unsigned ceil_log2(const BigInt& v) {
  const unsigned top = boost::multiprecision::msb(v);
  const bool power_of_two = (v & (v - 1)) == 0;
  return power_of_two ? top : top + 1;
}

}  // namespace staircase
