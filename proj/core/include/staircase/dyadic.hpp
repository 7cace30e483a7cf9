#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "staircase/bigint.hpp"

namespace staircase {

// Exact binary rational m * 2^e with arbitrary-precision mantissa.
// Canonical form keeps the mantissa odd (zero is stored as 0 * 2^0), so
// equality is plain structural equality. Add, subtract and multiply are
// exact; rounding only ever happens in round_to_dyadic.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(BigInt mantissa, std::int64_t exponent);

  const BigInt& mantissa() const { return mantissa_; }
  std::int64_t exponent() const { return exponent_; }
  bool is_zero() const { return mantissa_.is_zero(); }
  int sign() const { return mantissa_.sign(); }

  Dyadic operator-() const;
  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.exponent_ == b.exponent_ && a.mantissa_ == b.mantissa_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

 private:
  void normalize();

  BigInt mantissa_ = 0;
  std::int64_t exponent_ = 0;
};

Dyadic abs(const Dyadic& d);

// Text form "m*2^e" with m in decimal, e.g. "-5*2^-3". Used in CLI output
// and CSV columns.
std::string to_string(const Dyadic& d);

// Nearest double; exact whenever the mantissa fits 53 bits.
double to_double(const Dyadic& d);

}  // namespace staircase
