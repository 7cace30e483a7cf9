#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "staircase/series.hpp"

namespace staircase {

// A jump instance for F: with x = p/q and delta = 2^-n the width-2^-q/q
// ramp based at p/q lies entirely inside (x, x+delta), so
// F(x+delta) - F(x) >= (1/q^2)(1/q) = jump_lower_bound. Factories keep
// n <= q <= n^2, p in [1..q-1] and x + delta <= 1.
struct Witness {
  Rational x;
  Rational delta;
  std::uint64_t q = 0;
  unsigned n = 0;
  Rational jump_lower_bound;  // 1/q^3
};

// Strongest witness for index n: q = n, p = 1, x = 1/n, delta = 2^-n.
// Requires n >= 2 (q = 1 has no interior breakpoint).
Witness make_witness(unsigned n);

// Witness pinned at a given rational x = p'/q' in (0,1) with q' <= n and
// x + 2^-n <= 1: uses the smallest power q = q'^k with q >= n, which keeps
// q <= n*q' <= n^2 and the jump bound 1/q^3 >= 1/n^6.
Witness make_witness_at(const Rational& x, unsigned n);

struct Certification {
  Dyadic measured_jump;
  bool certified = false;
  unsigned eval_precision = 0;  // the n' used for both evaluations
};

// Evaluates F on both ends of the witness interval at the smallest n' with
// 2^(1-n') <= 1/(4q^3) and accepts iff
//   measured_jump >= jump_lower_bound - 2^(1-n'),
// which proves the true jump is at least 1/(2q^3). Witnesses from the
// factories always certify; a delta that does not clear the ramp fails.
Certification certify_witness(const Witness& w, const EvalOptions& options = {});

// omega(m) = 2^(m+2) + m + 2: whenever |x-y| <= 2^-omega(m), the head of
// the series moves by at most 2^(m+2)+1 doublings of that gap (< 2^-(m+1))
// and the tail by < 2^-(m+2), so |F(x)-F(y)| <= 2^-m.
std::uint64_t modulus_upper(unsigned m);

struct ModulusRecord {
  unsigned m = 0;                 // target output precision
  std::uint64_t omega_upper = 0;  // sufficient input precision
  std::uint64_t omega_lower = 0;  // necessary input precision, witness-backed
  unsigned witness_n = 0;         // index of the backing witness
};

// One row per output precision m reachable by the witness family
// n = 2..n_max: witness n targets m = ceil(3*log2(n)) (the largest m with
// 2^-m <= 1/n^3). A row is emitted once its witness certifies and the
// measured jump minus the evaluation slack strictly beats 2^-m; the row then
// states omega(m) >= n+1 for every valid modulus omega. Rows grow like
// 2^(m/3) — the exponential-modulus signature.
std::vector<ModulusRecord> modulus_lower_table(unsigned n_max,
                                               const EvalOptions& options = {});

struct SuiteReport {
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> failure_notes;  // capped, first few only
  bool passed() const { return failures == 0; }
};

// Random x < y pairs: checks eval(y) >= eval(x) - 2^(1-n).
SuiteReport monotonicity_suite(std::uint64_t sample_count, unsigned n,
                               std::uint64_t seed,
                               const EvalOptions& options = {});

// For each t: exact partial summation of sum_{q=t+1}^{1000t} 1/q^2 and
// comparison against the 1/t bound.
SuiteReport tail_suite(const std::vector<std::uint64_t>& t_values);

// Closed-form stair vs the literal ramp sum, exact equality over the
// 257-point grid k/256 plus probes around every breakpoint.
SuiteReport stair_equivalence_suite(std::uint64_t max_q);

// The glue combinator against direct piecewise evaluation, including the
// reproduction of ramp(0, 1, .) on a 65-point grid.
SuiteReport glue_suite();

// Dithered oracles around each point: every evaluation must land within
// 2^(1-n) of the rational-mode result with exactly one query at the
// scheduled precision.
SuiteReport oracle_robustness_suite(const std::vector<Rational>& points,
                                    unsigned n, std::uint64_t oracle_count,
                                    std::uint64_t seed,
                                    const EvalOptions& options = {});

// Upper side: pairs at distance 2^-modulus_upper(m) evaluated at n' = m+3
// may differ by at most 2^-m + 2^-(m+1). Lower side: modulus_lower_table
// rows must be monotone, sandwiched (omega_lower <= omega_upper), and grow
// by a factor >= 1.5 from m to m+3.
SuiteReport modulus_suite(unsigned m_max, unsigned witness_n_max,
                          std::uint64_t seed, const EvalOptions& options = {});

}  // namespace staircase
