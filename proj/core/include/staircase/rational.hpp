#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "staircase/bigint.hpp"
#include "staircase/dyadic.hpp"

namespace staircase {

// Exact reduced fraction: gcd(|num|, den) == 1 and den >= 1 always hold,
// zero is 0/1. All arithmetic and comparisons are exact.
class Rational {
 public:
  Rational() = default;  // 0/1
  explicit Rational(BigInt value) : num_(std::move(value)) {}
  Rational(BigInt num, BigInt den);
  explicit Rational(const Dyadic& d);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  int sign() const { return num_.sign(); }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  void reduce();

  BigInt num_ = 0;
  BigInt den_ = 1;
};

Rational abs(const Rational& x);

// Text form "p/q", e.g. "-7/5", "0/1". The CLI accepts inputs in exactly
// this form; decimals are rejected.
std::string to_string(const Rational& x);
std::optional<Rational> parse_rational(std::string_view text);

// Nearest double (via a 64-bit dyadic approximation, so safe for huge
// numerators and denominators).
double to_double(const Rational& x);

// floor(q*x) for x in [0,1] and q >= 1. The result lies in [0..q] and
// equals q exactly when x == 1. Throws std::domain_error otherwise.
std::uint64_t floor_scaled(std::uint64_t q, const Rational& x);

// Nearest multiple of 2^-k with ties toward -infinity. The result satisfies
// |result - x| <= 2^-(k+1) <= 2^-k and has exponent >= -k. Fixed points of
// the grid are returned unchanged.
Dyadic round_to_dyadic(const Rational& x, unsigned k);

}  // namespace staircase
