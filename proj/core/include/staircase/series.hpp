#pragma once

#include <cstdint>
#include <functional>

#include "staircase/cauchy.hpp"
#include "staircase/errors.hpp"
#include "staircase/rational.hpp"

namespace staircase {

// F(x) = sum_{q>=1} stair(q, x) / q^2 on [0,1]: monotone, uniformly
// continuous, and expensive on purpose — the q-th stair has slope 2^q, so
// target precision 2^-n forces 2^(n+2) terms. The schedule below splits the
// 2^-n budget three ways:
//
//   tail past 2^(n+2) terms   < 2^-(n+2)   (sum_{q>t} 1/q^2 < 1/t)
//   per-term rounding, 2n+8 bits: total 2^(n+2) * 2^-(2n+8) = 2^-(n+6)
//   one oracle query at 2^(n+2)+n+4 bits:  error < 2^-(n+3)  (oracle mode)

inline constexpr std::uint64_t kDefaultTermLimit = std::uint64_t{1} << 24;

struct Schedule {
  unsigned precision_n = 0;
  std::uint64_t terms = 0;             // 2^(n+2)
  unsigned per_term_bits = 0;          // 2n + 8
  std::uint64_t oracle_precision = 0;  // 2^(n+2) + n + 4
};

// Throws ResourceLimitError when 2^(n+2) would exceed term_limit.
Schedule schedule_for(unsigned n, std::uint64_t term_limit = kDefaultTermLimit);

struct EvalOptions {
  unsigned workers = 1;
  std::uint64_t term_limit = kDefaultTermLimit;
};

struct EvalReport {
  Dyadic result;
  unsigned precision_n = 0;
  std::uint64_t terms_summed = 0;
  std::uint64_t max_oracle_precision = 0;  // 0 in rational mode
  std::uint64_t wall_time_ns = 0;
};

// Piecewise-linear ramp: 0 up to p/q, slope 2^q across the width-2^-q/q
// interval starting at p/q, then the plateau 1/q. Requires q >= 1,
// p in [0, q-1] and x in [0,1].
Rational ramp(std::uint64_t p, std::uint64_t q, const Rational& x);

// q-step staircase: the sum of the q ramps based at 0/q .. (q-1)/q,
// computed in closed form. With s = floor(q*x) and r = x - s/q the value is
// s/q + min(1/q, 2^q * r); the ramp membership test r <= 2^-q/q is one
// cross-multiplication with a q-bit shift, which is what makes the series
// cost Theta(4^n) at precision n.
Rational stair(std::uint64_t q, const Rational& x);

// Same value as the literal sum of ramps. Reference path for equivalence
// checks; quadratic in q.
Rational stair_bruteforce(std::uint64_t q, const Rational& x);

// 1/t, an upper bound on sum_{q>t} 1/q^2 and hence on the series tail.
Rational tail_bound(std::uint64_t t);

// Truncated evaluation of F at an exact rational input:
// |result - F(x)| <= 2^-n. Deterministic bit-for-bit, independent of the
// worker count.
EvalReport eval_f_rational(const Rational& x, unsigned n,
                           const EvalOptions& options = {});

// Same guarantee relative to the real represented by phi, for every honest
// phi: queries once at oracle_precision, clamps the answer to [0,1], and
// evaluates the truncated series there.
EvalReport eval_f_oracle(CauchyOracle& phi, unsigned n,
                         const EvalOptions& options = {});

using PointEvaluator = std::function<Rational(const Rational&)>;

// Joins f on [a,z] and g on [z,c] with f(z) = g(z) = f_at_z into a single
// evaluator h(x) = f(min(x,z)) + g(max(x,z)) - f_at_z, which restricts to f
// left of z and to g right of it.
PointEvaluator glue(PointEvaluator f, PointEvaluator g, Rational z,
                    Rational f_at_z);

}  // namespace staircase
