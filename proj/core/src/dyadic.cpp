#include "staircase/dyadic.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace staircase {

Dyadic::Dyadic(BigInt mantissa, std::int64_t exponent)
    : mantissa_(std::move(mantissa)), exponent_(exponent) {
  normalize();
}

void Dyadic::normalize() {
  if (mantissa_.is_zero()) {
    exponent_ = 0;
    return;
  }
  const bool negative = mantissa_ < 0;
  BigInt magnitude = negative ? BigInt(-mantissa_) : std::move(mantissa_);
  const unsigned shift = boost::multiprecision::lsb(magnitude);
  if (shift > 0) {
    magnitude >>= shift;
    exponent_ += shift;
  }
  mantissa_ = negative ? BigInt(-magnitude) : std::move(magnitude);
}

Dyadic Dyadic::operator-() const {
  Dyadic out = *this;
  out.mantissa_ = -out.mantissa_;
  return out;
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const std::int64_t e = std::min(a.exponent_, b.exponent_);
  BigInt m = (a.mantissa_ << static_cast<unsigned>(a.exponent_ - e)) +
             (b.mantissa_ << static_cast<unsigned>(b.exponent_ - e));
  return Dyadic(std::move(m), e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  return Dyadic(a.mantissa_ * b.mantissa_, a.exponent_ + b.exponent_);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  if (a == b) return std::strong_ordering::equal;
  return (a - b).sign() < 0 ? std::strong_ordering::less
                            : std::strong_ordering::greater;
}

Dyadic abs(const Dyadic& d) { return d.sign() < 0 ? -d : d; }

std::string to_string(const Dyadic& d) {
  return d.mantissa().str() + "*2^" + std::to_string(d.exponent());
}

double to_double(const Dyadic& d) {
  const double m = d.mantissa().convert_to<double>();
  const std::int64_t e = std::clamp<std::int64_t>(d.exponent(), -8000, 8000);
  return std::ldexp(m, static_cast<int>(e));
}

}  // namespace staircase
