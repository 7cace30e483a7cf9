#pragma once

#include <cstdint>
#include <functional>

#include "staircase/dyadic.hpp"
#include "staircase/rational.hpp"

namespace staircase {

struct QueryStats {
  std::uint64_t query_count = 0;
  std::uint64_t max_precision = 0;
};

// Precision-indexed approximator of a real x: query(n) answers a dyadic
// within 2^-n of x. Answers at different n need not be mutually consistent
// beyond that bound. Accounting is observational only and never changes
// answers; an oracle instance is driven by one evaluation at a time.
class CauchyOracle {
 public:
  using Approximator = std::function<Dyadic(std::uint64_t)>;

  explicit CauchyOracle(Approximator approx) : approx_(std::move(approx)) {}

  Dyadic query(std::uint64_t n);
  const QueryStats& stats() const { return stats_; }

 private:
  Approximator approx_;
  QueryStats stats_;
};

// Oracle for a rational x in [0,1] answering round_to_dyadic(x, n).
CauchyOracle make_rational_oracle(Rational x);

// Honest but adversarial oracle: answers carry a seeded dither of magnitude
// at most 2^-(n+1) on top of an (n+1)-bit rounding of x, so every answer
// still lands within 2^-n of x. Answers depend only on (x, seed, n), never
// on query order, so replays with the same seed are bit-identical.
CauchyOracle make_dithered_oracle(Rational x, std::uint64_t seed);

}  // namespace staircase
