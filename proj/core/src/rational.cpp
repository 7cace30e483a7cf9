#include "staircase/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace staircase {

Rational::Rational(BigInt num, BigInt den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) {
    throw std::domain_error("rational: zero denominator");
  }
  reduce();
}

Rational::Rational(const Dyadic& d) {
  if (d.exponent() >= 0) {
    num_ = d.mantissa() << static_cast<unsigned>(d.exponent());
    den_ = 1;
  } else {
    num_ = d.mantissa();
    den_ = BigInt(1) << static_cast<unsigned>(-d.exponent());
  }
  // canonical dyadics have odd mantissas, so this is already reduced
}

void Rational::reduce() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  const BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator-() const {
  Rational out = *this;
  out.num_ = -out.num_;
  return out;
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) {
    throw std::domain_error("rational: division by zero");
  }
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const BigInt lhs = a.num_ * b.den_;
  const BigInt rhs = b.num_ * a.den_;
  if (lhs == rhs) return std::strong_ordering::equal;
  return lhs < rhs ? std::strong_ordering::less : std::strong_ordering::greater;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

std::string to_string(const Rational& x) {
  return x.num().str() + "/" + x.den().str();
}

std::optional<Rational> parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos || slash == 0 ||
      slash + 1 == text.size()) {
    return std::nullopt;
  }
  std::string_view num_part = text.substr(0, slash);
  const std::string_view den_part = text.substr(slash + 1);
  bool negative = false;
  if (num_part.front() == '-' || num_part.front() == '+') {
    negative = num_part.front() == '-';
    num_part.remove_prefix(1);
    if (num_part.empty()) return std::nullopt;
  }
  const auto all_digits = [](std::string_view s) {
    for (const char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return !s.empty();
  };
  if (!all_digits(num_part) || !all_digits(den_part)) {
    return std::nullopt;
  }
  BigInt num{std::string(num_part)};
  const BigInt den{std::string(den_part)};
  if (den.is_zero()) {
    return std::nullopt;
  }
  if (negative) num = -num;
  return Rational(std::move(num), den);
}

double to_double(const Rational& x) {
  return to_double(round_to_dyadic(x, 64));
}

std::uint64_t floor_scaled(std::uint64_t q, const Rational& x) {
  if (q < 1) {
    throw std::domain_error("floor_scaled: q must be >= 1");
  }
  if (x.sign() < 0 || x > Rational(1)) {
    throw std::domain_error("floor_scaled: x must lie in [0,1]");
  }
  return floor_div(BigInt(q) * x.num(), x.den()).convert_to<std::uint64_t>();
}

Dyadic round_to_dyadic(const Rational& x, unsigned k) {
  // nearest m with |m*2^-k - x| minimal, ties toward -infinity:
  // m = ceil(x*2^k - 1/2)
  BigInt m = ceil_div((x.num() << (k + 1)) - x.den(), x.den() << 1);
  return Dyadic(std::move(m), -static_cast<std::int64_t>(k));
}

}  // namespace staircase
