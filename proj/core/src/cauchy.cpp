#include "staircase/cauchy.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace staircase {
namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

void require_unit_interval(const Rational& x) {
  if (x.sign() < 0 || x > Rational(1)) {
    throw std::domain_error("oracle: represented real must lie in [0,1]");
  }
}

}  // namespace

Dyadic CauchyOracle::query(std::uint64_t n) {
  ++stats_.query_count;
  stats_.max_precision = std::max(stats_.max_precision, n);
  return approx_(n);
}

CauchyOracle make_rational_oracle(Rational x) {
  require_unit_interval(x);
  return CauchyOracle([x = std::move(x)](std::uint64_t n) {
    return round_to_dyadic(x, static_cast<unsigned>(n));
  });
}

CauchyOracle make_dithered_oracle(Rational x, std::uint64_t seed) {
  require_unit_interval(x);
  return CauchyOracle([x = std::move(x), seed](std::uint64_t n) {
    // offset j*2^-(n+3) with j in [-4..4]: magnitude <= 2^-(n+1), which
    // together with the (n+1)-bit rounding keeps the answer within 2^-n
    const std::uint64_t h = splitmix64(seed ^ (n * 0xd1342543de82ef95ull));
    const int j = static_cast<int>(h % 9) - 4;
    const Dyadic base = round_to_dyadic(x, static_cast<unsigned>(n) + 1);
    return base + Dyadic(BigInt(j), -static_cast<std::int64_t>(n) - 3);
  });
}

}  // namespace staircase
