#include "staircase/series.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

namespace staircase {
namespace {

void require_unit_interval(const Rational& x, const char* where) {
  if (x.sign() < 0 || x > Rational(1)) {
    throw std::domain_error(std::string(where) + ": x must lie in [0,1]");
  }
}

std::uint64_t elapsed_ns(std::chrono::steady_clock::time_point start) {
  const auto dt = std::chrono::steady_clock::now() - start;
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(dt).count());
}

// One series term rounded to the schedule's dyadic grid:
// round(stair(q, x) / q^2, per_term_bits).
Dyadic term_at(std::uint64_t q, const Rational& x, unsigned per_term_bits) {
  const Rational sv = stair(q, x);
  const Rational term(sv.num(), sv.den() * (BigInt(q) * q));
  return round_to_dyadic(term, per_term_bits);
}

// Exact dyadic addition is associative, so any split of the index range
// combines to the same bits; workers take interleaved stripes and the
// stripe sums are folded in stripe order.
Dyadic sum_terms(const Rational& x, const Schedule& schedule, unsigned workers) {
  const std::uint64_t terms = schedule.terms;
  const unsigned stripe_count = static_cast<unsigned>(
      std::min<std::uint64_t>(std::max(1u, workers), terms));
  if (stripe_count == 1) {
    Dyadic acc;
    for (std::uint64_t q = 1; q <= terms; ++q) {
      acc = acc + term_at(q, x, schedule.per_term_bits);
    }
    return acc;
  }
  std::vector<Dyadic> partial(stripe_count);
  std::vector<std::thread> pool;
  pool.reserve(stripe_count);
  for (unsigned stripe = 0; stripe < stripe_count; ++stripe) {
    pool.emplace_back([&, stripe] {
      Dyadic acc;
      for (std::uint64_t q = stripe + 1; q <= terms; q += stripe_count) {
        acc = acc + term_at(q, x, schedule.per_term_bits);
      }
      partial[stripe] = std::move(acc);
    });
  }
  for (auto& worker : pool) {
    worker.join();
  }
  Dyadic acc;
  for (const Dyadic& p : partial) {
    acc = acc + p;
  }
  return acc;
}

}  // namespace

Schedule schedule_for(unsigned n, std::uint64_t term_limit) {
  if (n > 61) {
    throw ResourceLimitError("schedule_for: precision out of range");
  }
  const std::uint64_t terms = std::uint64_t{1} << (n + 2);
  if (terms > term_limit) {
    throw ResourceLimitError("schedule_for: 2^(n+2) terms exceed the term limit");
  }
  return Schedule{n, terms, 2 * n + 8, terms + n + 4};
}

Rational ramp(std::uint64_t p, std::uint64_t q, const Rational& x) {
  if (q < 1) {
    throw std::domain_error("ramp: q must be >= 1");
  }
  if (p >= q) {
    throw std::domain_error("ramp: p must lie in [0, q-1]");
  }
  require_unit_interval(x, "ramp");
  const Rational start{BigInt(p), BigInt(q)};
  if (x <= start) {
    return Rational();
  }
  const Rational end((BigInt(p) << static_cast<unsigned>(q)) + 1,
                     BigInt(q) << static_cast<unsigned>(q));
  if (x >= end) {
    return Rational(1, BigInt(q));
  }
  const Rational offset = x - start;
  return Rational(offset.num() << static_cast<unsigned>(q), offset.den());
}

Rational stair(std::uint64_t q, const Rational& x) {
  if (q < 1) {
    throw std::domain_error("stair: q must be >= 1");
  }
  require_unit_interval(x, "stair");
  const std::uint64_t steps = floor_scaled(q, x);
  if (steps == q) {
    return Rational(1);  // x == 1
  }
  // r = x - steps/q = rnum / (q * den); ramp test r <= 2^-q/q reduces to
  // rnum * 2^q <= den after cancelling q
  BigInt rnum = BigInt(q) * x.num() - BigInt(steps) * x.den();
  if (rnum.is_zero()) {
    return Rational(BigInt(steps), BigInt(q));
  }
  const BigInt shifted = rnum << static_cast<unsigned>(q);
  if (shifted <= x.den()) {
    return Rational(BigInt(steps) * x.den() + shifted, BigInt(q) * x.den());
  }
  return Rational(BigInt(steps) + 1, BigInt(q));
}

Rational stair_bruteforce(std::uint64_t q, const Rational& x) {
  if (q < 1) {
    throw std::domain_error("stair_bruteforce: q must be >= 1");
  }
  require_unit_interval(x, "stair_bruteforce");
  Rational sum;
  for (std::uint64_t p = 0; p < q; ++p) {
    sum = sum + ramp(p, q, x);
  }
  return sum;
}

Rational tail_bound(std::uint64_t t) {
  if (t < 1) {
    throw std::domain_error("tail_bound: t must be >= 1");
  }
  return Rational(1, BigInt(t));
}

EvalReport eval_f_rational(const Rational& x, unsigned n,
                           const EvalOptions& options) {
  require_unit_interval(x, "eval_f_rational");
  const Schedule schedule = schedule_for(n, options.term_limit);
  const auto start = std::chrono::steady_clock::now();
  Dyadic result = sum_terms(x, schedule, options.workers);
  return EvalReport{std::move(result), n, schedule.terms, 0, elapsed_ns(start)};
}

EvalReport eval_f_oracle(CauchyOracle& phi, unsigned n,
                         const EvalOptions& options) {
  const Schedule schedule = schedule_for(n, options.term_limit);
  const auto start = std::chrono::steady_clock::now();
  const Dyadic answer = phi.query(schedule.oracle_precision);
  // honest oracles for endpoint reals may answer slightly outside [0,1]
  Rational x_hat(answer);
  if (x_hat.sign() < 0) {
    x_hat = Rational();
  } else if (x_hat > Rational(1)) {
    x_hat = Rational(1);
  }
  Dyadic result = sum_terms(x_hat, schedule, options.workers);
  return EvalReport{std::move(result), n, schedule.terms,
                    schedule.oracle_precision, elapsed_ns(start)};
}

PointEvaluator glue(PointEvaluator f, PointEvaluator g, Rational z,
                    Rational f_at_z) {
  return [f = std::move(f), g = std::move(g), z = std::move(z),
          f_at_z = std::move(f_at_z)](const Rational& x) {
    const Rational& lo = x < z ? x : z;
    const Rational& hi = x < z ? z : x;
    return f(lo) + g(hi) - f_at_z;
  };
}

}  // namespace staircase
