#include "staircase/analysis.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <utility>

namespace staircase {
namespace {

constexpr std::size_t kMaxNotes = 8;

void note_failure(SuiteReport& report, std::string text) {
  ++report.failures;
  if (report.failure_notes.size() < kMaxNotes) {
    report.failure_notes.push_back(std::move(text));
  }
}

Rational pow2_inverse(std::uint64_t k) {
  return Rational(1, BigInt(1) << static_cast<unsigned>(k));
}

// Exact partial sum of 1/q^2 over [first, last]. Accumulates unreduced
// within 1024-term blocks, reduces each block, then folds the reduced
// blocks without further gcds; that keeps every multiplication small while
// the result stays exact.
std::pair<BigInt, BigInt> inv_square_sum(std::uint64_t first,
                                         std::uint64_t last) {
  BigInt total_num = 0;
  BigInt total_den = 1;
  std::uint64_t q = first;
  while (q <= last) {
    const std::uint64_t block_end = std::min(last, q + 1023);
    BigInt num = 0;
    BigInt den = 1;
    for (; q <= block_end; ++q) {
      const BigInt qq = BigInt(q) * q;
      num = num * qq + den;
      den *= qq;
    }
    const BigInt g = boost::multiprecision::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    total_num = total_num * den + num * total_den;
    total_den *= den;
  }
  return {std::move(total_num), std::move(total_den)};
}

Rational random_unit_rational(std::mt19937_64& rng) {
  const std::uint64_t den = (rng() % 65536) + 1;
  const std::uint64_t num = rng() % (den + 1);
  return Rational(BigInt(num), BigInt(den));
}

}  // namespace

Witness make_witness(unsigned n) {
  if (n < 2) {
    throw std::domain_error("make_witness: n must be >= 2");
  }
  Witness w;
  w.q = n;
  w.n = n;
  w.x = Rational(1, BigInt(n));
  w.delta = pow2_inverse(n);
  w.jump_lower_bound = Rational(1, BigInt(n) * n * n);
  return w;
}

Witness make_witness_at(const Rational& x, unsigned n) {
  if (x.sign() <= 0 || x >= Rational(1)) {
    throw std::domain_error("make_witness_at: x must lie in (0,1)");
  }
  const BigInt& base = x.den();  // q' of the reduced fraction
  if (base > n) {
    throw std::domain_error("make_witness_at: denominator of x exceeds n");
  }
  const Rational delta = pow2_inverse(n);
  if (x + delta > Rational(1)) {
    throw std::domain_error("make_witness_at: x + 2^-n exceeds 1");
  }
  BigInt q = base;  // base >= 2 since x is interior and reduced
  while (q < n) {
    q *= base;
  }
  Witness w;
  w.q = q.convert_to<std::uint64_t>();
  w.n = n;
  w.x = x;
  w.delta = delta;
  w.jump_lower_bound = Rational(1, q * q * q);
  return w;
}

Certification certify_witness(const Witness& w, const EvalOptions& options) {
  if (w.q < 1) {
    throw std::domain_error("certify_witness: witness q must be >= 1");
  }
  const BigInt four_q_cubed = BigInt(4) * w.q * w.q * w.q;
  const unsigned eval_precision = ceil_log2(four_q_cubed) + 1;
  const EvalReport upper = eval_f_rational(w.x + w.delta, eval_precision, options);
  const EvalReport lower = eval_f_rational(w.x, eval_precision, options);
  Certification cert;
  cert.measured_jump = upper.result - lower.result;
  cert.eval_precision = eval_precision;
  const Rational slack = pow2_inverse(eval_precision - 1);
  cert.certified = Rational(cert.measured_jump) >= w.jump_lower_bound - slack;
  return cert;
}

std::uint64_t modulus_upper(unsigned m) {
  if (m > 60) {
    throw std::domain_error("modulus_upper: m too large for a 64-bit result");
  }
  return (std::uint64_t{1} << (m + 2)) + m + 2;
}

std::vector<ModulusRecord> modulus_lower_table(unsigned n_max,
                                               const EvalOptions& options) {
  if (n_max < 2) {
    throw std::domain_error("modulus_lower_table: n_max must be >= 2");
  }
  std::vector<ModulusRecord> rows;
  for (unsigned n = 2; n <= n_max; ++n) {
    const Witness w = make_witness(n);
    const Certification cert = certify_witness(w, options);
    if (!cert.certified) {
      continue;  // cannot happen for the built-in family
    }
    const unsigned m = ceil_log2(BigInt(n) * n * n);
    // a pair at distance 2^-n moving F by more than 2^-m forces
    // omega(m) > n; back that strictly with the measured jump
    const Rational slack = pow2_inverse(cert.eval_precision - 1);
    if (!(Rational(cert.measured_jump) - slack > pow2_inverse(m))) {
      continue;
    }
    const ModulusRecord row{m, modulus_upper(m), std::uint64_t{n} + 1, n};
    if (!rows.empty() && rows.back().m == m) {
      rows.back() = row;  // same m reached again: keep the stronger witness
    } else {
      rows.push_back(row);
    }
  }
  return rows;
}

SuiteReport monotonicity_suite(std::uint64_t sample_count, unsigned n,
                               std::uint64_t seed, const EvalOptions& options) {
  std::mt19937_64 rng(seed);
  const Rational slack(2, BigInt(1) << n);  // 2^(1-n)
  SuiteReport report;
  for (std::uint64_t i = 0; i < sample_count; ++i) {
    Rational a = random_unit_rational(rng);
    Rational b = random_unit_rational(rng);
    if (b < a) {
      std::swap(a, b);
    }
    const Rational fa{eval_f_rational(a, n, options).result};
    const Rational fb{eval_f_rational(b, n, options).result};
    ++report.checked;
    if (fb < fa - slack) {
      note_failure(report, "monotonicity violated at " + to_string(a) + " < " +
                               to_string(b));
    }
  }
  return report;
}

SuiteReport tail_suite(const std::vector<std::uint64_t>& t_values) {
  SuiteReport report;
  for (const std::uint64_t t : t_values) {
    ++report.checked;
    if (t < 1) {
      note_failure(report, "tail check needs t >= 1");
      continue;
    }
    const auto [num, den] = inv_square_sum(t + 1, 1000 * t);
    if (!(num * t < den)) {
      note_failure(report, "partial tail sum at t=" + std::to_string(t) +
                               " not below 1/t");
    }
  }
  return report;
}

SuiteReport stair_equivalence_suite(std::uint64_t max_q) {
  SuiteReport report;
  const auto check = [&](std::uint64_t q, const Rational& x) {
    ++report.checked;
    if (stair(q, x) != stair_bruteforce(q, x)) {
      note_failure(report, "stair mismatch at q=" + std::to_string(q) +
                               ", x=" + to_string(x));
    }
  };
  for (std::uint64_t q = 1; q <= max_q; ++q) {
    for (int k = 0; k <= 256; ++k) {
      check(q, Rational(k, 256));
    }
    // probes half a ramp width around every breakpoint, plus the ramp ends
    const Rational half_ramp(1, (BigInt(2) * q) << static_cast<unsigned>(q));
    for (std::uint64_t p = 0; p < q; ++p) {
      const Rational breakpoint{BigInt(p), BigInt(q)};
      if (p > 0) {
        check(q, breakpoint - half_ramp);
      }
      check(q, breakpoint);
      check(q, breakpoint + half_ramp);
      check(q, breakpoint + half_ramp + half_ramp);  // exact ramp end
      check(q, breakpoint + half_ramp * Rational(3));
    }
  }
  return report;
}

SuiteReport glue_suite() {
  SuiteReport report;
  const auto expect = [&](const Rational& got, const Rational& want,
                          const char* what) {
    ++report.checked;
    if (got != want) {
      note_failure(report, std::string("glue: ") + what + " gave " +
                               to_string(got) + ", wanted " + to_string(want));
    }
  };
  {
    // identity joined to a constant plateau at z = 1/2
    const PointEvaluator f = [](const Rational& x) { return x; };
    const PointEvaluator g = [](const Rational&) { return Rational(1, 2); };
    const auto h = glue(f, g, Rational(1, 2), Rational(1, 2));
    expect(h(Rational(1, 4)), Rational(1, 4), "h(1/4)");
    expect(h(Rational(3, 4)), Rational(1, 2), "h(3/4)");
    expect(h(Rational(1, 2)), Rational(1, 2), "h(z)");
  }
  {
    // slope-2 ramp joined to its plateau reproduces ramp(0, 1, .)
    const PointEvaluator f = [](const Rational& x) { return Rational(2) * x; };
    const PointEvaluator g = [](const Rational&) { return Rational(1); };
    const auto h = glue(f, g, Rational(1, 2), Rational(1));
    for (int k = 0; k <= 64; ++k) {
      const Rational x(k, 64);
      expect(h(x), ramp(0, 1, x), "ramp grid point");
    }
  }
  return report;
}

SuiteReport oracle_robustness_suite(const std::vector<Rational>& points,
                                    unsigned n, std::uint64_t oracle_count,
                                    std::uint64_t seed,
                                    const EvalOptions& options) {
  SuiteReport report;
  const Schedule schedule = schedule_for(n, options.term_limit);
  const Rational tolerance(2, BigInt(1) << n);  // 2^(1-n)
  for (const Rational& x : points) {
    const Rational base{eval_f_rational(x, n, options).result};
    for (std::uint64_t i = 0; i < oracle_count; ++i) {
      CauchyOracle phi = make_dithered_oracle(x, seed + i);
      const EvalReport run = eval_f_oracle(phi, n, options);
      ++report.checked;
      const bool close = abs(Rational(run.result) - base) <= tolerance;
      const bool accounted = run.max_oracle_precision == schedule.oracle_precision &&
                             phi.stats().max_precision == schedule.oracle_precision &&
                             phi.stats().query_count == 1;
      if (!close || !accounted) {
        note_failure(report, "oracle run off at x=" + to_string(x) +
                                 ", seed=" + std::to_string(seed + i));
      }
    }
  }
  return report;
}

SuiteReport modulus_suite(unsigned m_max, unsigned witness_n_max,
                          std::uint64_t seed, const EvalOptions& options) {
  SuiteReport report;
  std::mt19937_64 rng(seed);
  for (unsigned m = 0; m <= m_max; ++m) {
    const std::uint64_t omega = modulus_upper(m);
    const Rational gap = pow2_inverse(omega);
    const unsigned eval_n = m + 3;
    const Rational tolerance(3, BigInt(1) << (m + 1));  // 2^-m + 2^-(m+1)
    std::vector<Rational> points = {Rational(), Rational(1, 3), Rational(1, 2),
                                    Rational(127, 128)};
    for (int i = 0; i < 4; ++i) {
      points.push_back(random_unit_rational(rng));
    }
    for (Rational x : points) {
      if (x + gap > Rational(1)) {
        x = Rational(1) - gap;
      }
      const Rational at_x{eval_f_rational(x, eval_n, options).result};
      const Rational at_y{eval_f_rational(x + gap, eval_n, options).result};
      ++report.checked;
      if (abs(at_y - at_x) > tolerance) {
        note_failure(report, "pair at distance 2^-omega(" + std::to_string(m) +
                                 ") moved too far near x=" + to_string(x));
      }
    }
  }
  const auto rows = modulus_lower_table(witness_n_max, options);
  ++report.checked;
  if (rows.empty()) {
    note_failure(report, "modulus_lower_table produced no rows");
    return report;
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    ++report.checked;
    if (rows[i].omega_lower > rows[i].omega_upper) {
      note_failure(report, "row m=" + std::to_string(rows[i].m) +
                               " not sandwiched");
    }
    if (i > 0) {
      ++report.checked;
      if (rows[i].m <= rows[i - 1].m ||
          rows[i].omega_lower < rows[i - 1].omega_lower) {
        note_failure(report, "rows not monotone at m=" +
                                 std::to_string(rows[i].m));
      }
    }
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      if (rows[j].m != rows[i].m + 3) continue;
      ++report.checked;
      // omega_lower(m+3) >= 1.5 * omega_lower(m), scaled by 2 to stay integral
      if (2 * rows[j].omega_lower < 3 * rows[i].omega_lower) {
        note_failure(report, "growth signature broken between m=" +
                                 std::to_string(rows[i].m) + " and m=" +
                                 std::to_string(rows[j].m));
      }
    }
  }
  return report;
}

}  // namespace staircase
