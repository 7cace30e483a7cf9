#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "staircase/analysis.hpp"

using staircase::BigInt;
using staircase::ModulusRecord;
using staircase::Rational;
using staircase::Witness;

TEST_CASE("make_witness frozen instances") {
  const Witness two = staircase::make_witness(2);
  CHECK(two.x == Rational(1, 2));
  CHECK(two.delta == Rational(1, 4));
  CHECK(two.q == 2);
  CHECK(two.jump_lower_bound == Rational(1, 8));
  // the crossed ramp ends at 5/8, left of x + delta = 3/4
  CHECK(Rational(5, 8) < two.x + two.delta);

  const Witness three = staircase::make_witness(3);
  CHECK(three.x == Rational(1, 3));
  CHECK(three.delta == Rational(1, 8));
  CHECK(three.jump_lower_bound == Rational(1, 27));
  CHECK(Rational(1, 24) < three.delta);  // ramp width 2^-3/3

  CHECK_THROWS_AS(staircase::make_witness(1), std::domain_error);
  CHECK_THROWS_AS(staircase::make_witness(0), std::domain_error);
}

TEST_CASE("witness invariants across the family") {
  for (unsigned n = 2; n <= 12; ++n) {
    const Witness w = staircase::make_witness(n);
    CHECK(w.q >= n);
    CHECK(w.q <= std::uint64_t{n} * n);
    CHECK(w.x > Rational());
    CHECK(w.x < Rational(1));
    CHECK(w.x + w.delta <= Rational(1));
    // ramp fully crossed: 2^-q / q < delta
    const Rational ramp_width(1, BigInt(w.q) << static_cast<unsigned>(w.q));
    CHECK(ramp_width < w.delta);
  }
}

TEST_CASE("make_witness_at frozen instances") {
  const Witness half = staircase::make_witness_at(Rational(1, 2), 5);
  CHECK(half.q == 8);
  CHECK(half.x == Rational(1, 2));
  CHECK(half.jump_lower_bound == Rational(1, 512));

  const Witness third = staircase::make_witness_at(Rational(1, 3), 7);
  CHECK(third.q == 9);
  CHECK(third.jump_lower_bound == Rational(1, 729));

  const Witness two_thirds = staircase::make_witness_at(Rational(2, 3), 3);
  CHECK(two_thirds.q == 3);
  CHECK(two_thirds.jump_lower_bound == Rational(1, 27));

  const Witness fifths = staircase::make_witness_at(Rational(3, 5), 5);
  CHECK(fifths.q == 5);
  const Witness fifths_sq = staircase::make_witness_at(Rational(3, 5), 6);
  CHECK(fifths_sq.q == 25);
  CHECK(fifths_sq.jump_lower_bound == Rational(1, 15625));
}

TEST_CASE("make_witness_at domain errors") {
  CHECK_THROWS_AS(staircase::make_witness_at(Rational(1, 2), 1),
                  std::domain_error);  // q' = 2 exceeds n = 1
  CHECK_THROWS_AS(staircase::make_witness_at(Rational(3, 5), 4),
                  std::domain_error);  // q' = 5 exceeds n = 4
  CHECK_THROWS_AS(staircase::make_witness_at(Rational(0, 1), 4),
                  std::domain_error);
  CHECK_THROWS_AS(staircase::make_witness_at(Rational(1, 1), 4),
                  std::domain_error);
}

TEST_CASE("witness certification succeeds for the built-in family") {
  for (unsigned n = 2; n <= 12; ++n) {
    const Witness w = staircase::make_witness(n);
    const auto cert = staircase::certify_witness(w);
    CHECK(cert.certified);
    const Rational slack(1, BigInt(1) << (cert.eval_precision - 1));
    CHECK(Rational(cert.measured_jump) >= w.jump_lower_bound - slack);
  }
  // q = 2: 4q^3 = 32, so the evaluation runs at n' = 6
  CHECK(staircase::certify_witness(staircase::make_witness(2)).eval_precision == 6);
}

TEST_CASE("pinned-point witnesses certify") {
  CHECK(staircase::certify_witness(staircase::make_witness_at(Rational(1, 2), 5))
            .certified);
  CHECK(staircase::certify_witness(staircase::make_witness_at(Rational(2, 3), 3))
            .certified);
}

TEST_CASE("a delta inside the ramp fails certification") {
  // half-ramp delta at q = 12: the measured jump lands below the
  // certification threshold (nearby stairs contribute too little to save it)
  Witness corrupted = staircase::make_witness(12);
  corrupted.delta = Rational(1, BigInt(12) << 13);  // 2^-13/12 < 2^-12/12
  const auto cert = staircase::certify_witness(corrupted);
  CHECK_FALSE(cert.certified);
}

TEST_CASE("modulus upper bound") {
  CHECK(staircase::modulus_upper(0) == 6);
  CHECK(staircase::modulus_upper(3) == 37);

  // spot check: a pair at distance 2^-omega(3) moves F by well under 2^-3
  const Rational x(1, 3);
  const Rational y = x + Rational(1, BigInt(1) << 37);
  const Rational fx{staircase::eval_f_rational(x, 6).result};
  const Rational fy{staircase::eval_f_rational(y, 6).result};
  const Rational allowance = Rational(1, 8) + Rational(1, 32);
  CHECK(abs(fy - fx) <= allowance);
}

TEST_CASE("modulus upper bound at the guaranteed tolerance") {
  // evaluated at n' = m+3, a pair within 2^-omega(m) can differ by at most
  // 2^-m + 2*2^-n' even before any acceptance slack
  for (unsigned m : {2u, 4u}) {
    const unsigned eval_n = m + 3;
    const Rational gap(1, BigInt(1) << staircase::modulus_upper(m));
    const Rational tight = Rational(1, BigInt(1) << m) +
                           Rational(2, BigInt(1) << eval_n);
    for (const Rational& x : {Rational(), Rational(1, 2), Rational(13, 64)}) {
      const Rational fx{staircase::eval_f_rational(x, eval_n).result};
      const Rational fy{staircase::eval_f_rational(x + gap, eval_n).result};
      CHECK(abs(fy - fx) <= tight);
    }
  }
}

TEST_CASE("modulus lower table frozen rows") {
  const auto rows = staircase::modulus_lower_table(8);
  REQUIRE(rows.size() == 6);
  const std::vector<unsigned> expect_m = {3, 5, 6, 7, 8, 9};
  const std::vector<std::uint64_t> expect_lower = {3, 4, 5, 6, 7, 9};
  const std::vector<unsigned> expect_witness = {2, 3, 4, 5, 6, 8};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].m == expect_m[i]);
    CHECK(rows[i].omega_lower == expect_lower[i]);
    CHECK(rows[i].witness_n == expect_witness[i]);
    CHECK(rows[i].omega_upper == staircase::modulus_upper(rows[i].m));
    CHECK(rows[i].omega_lower <= rows[i].omega_upper);
  }
  // growth signature: omega_lower roughly doubles every three output bits
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      if (rows[j].m != rows[i].m + 3) continue;
      CHECK(2 * rows[j].omega_lower >= 3 * rows[i].omega_lower);
      CHECK(rows[j].omega_lower + 1 >= 2 * rows[i].omega_lower);
    }
  }
}

TEST_CASE("monotonicity suite") {
  const auto report = staircase::monotonicity_suite(200, 8, 42);
  CHECK(report.checked == 200);
  CHECK(report.failures == 0);

  // endpoint pair: the full rise is about pi^2/6
  const Rational lo{staircase::eval_f_rational(Rational(), 8).result};
  const Rational hi{staircase::eval_f_rational(Rational(1), 8).result};
  CHECK(hi - lo >= Rational(1) - Rational(1, 128));

  // degenerate pair
  const Rational again{staircase::eval_f_rational(Rational(), 8).result};
  CHECK(abs(again - lo) <= Rational(1, 128));
}

TEST_CASE("tail suite") {
  const auto report = staircase::tail_suite({1, 4, 64});
  CHECK(report.checked == 3);
  CHECK(report.failures == 0);
}

TEST_CASE("oracle robustness suite") {
  const std::vector<Rational> points = {Rational(1, 3), Rational(2, 3),
                                        Rational(5, 7)};
  const auto report = staircase::oracle_robustness_suite(points, 8, 10, 1);
  CHECK(report.checked == 30);
  CHECK(report.failures == 0);
}

TEST_CASE("modulus suite") {
  const auto report = staircase::modulus_suite(4, 6, 7);
  CHECK(report.failures == 0);
}
