#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "lommel/series.hpp"
#include "lommel/zeros.hpp"

using namespace lommel;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("brackets follow the odd/even pattern") {
  const auto b = bracket_intervals(0.5, 4);
  REQUIRE(b.size() == 4);
  CHECK(b[0].lower == doctest::Approx(1.25 * kPi));
  CHECK(b[0].upper == doctest::Approx(1.5 * kPi));
  CHECK(b[1].lower == doctest::Approx(2.0 * kPi));
  CHECK(b[1].upper == doctest::Approx(2.25 * kPi));
  CHECK_THROWS_AS(bracket_intervals(1.0, 3), InvalidParameter);
  CHECK_THROWS_AS(bracket_intervals(-0.5, 3), InvalidParameter);
}

TEST_CASE("first zeros against high-precision roots") {
  struct Ref {
    double mu, eta;
  };
  const Ref refs[] = {{0.1, 3.3309109097888959142},
                      {0.25, 3.6323484262340780916},
                      {0.5, 4.1969217528002227374},
                      {0.75, 4.893489158575028992},
                      {0.9, 5.461516474469088718}};
  for (const auto& r : refs) {
    const ZeroTable t = find_zeros(r.mu, 1, 1e-12);
    CHECK(t.zeros(0) == doctest::Approx(r.eta).epsilon(1e-14));
  }
}

TEST_CASE("zeros lie inside their brackets with small residual") {
  for (double mu : {0.1, 0.25, 0.5, 0.75, 0.9}) {
    const HalfIntFamily f(mu);
    const ZeroTable t = find_zeros(mu, 10, 1e-12);
    const auto b = bracket_intervals(mu, 10);
    REQUIRE(t.size() == 10);
    for (int i = 0; i < 10; ++i) {
      CHECK(t.zeros(i) > b[i].lower);
      CHECK(t.zeros(i) < b[i].upper);
      CHECK(std::fabs(eval_capital_lambda(f, t.zeros(i)).value) <= 1e-10 * bracket_scale(f, b[i]));
      CHECK(t.multiplicity(i) == 1);
    }
  }
}

TEST_CASE("mu = 1 has double zeros at 2 n pi") {
  const ZeroTable t = find_zeros(1.0, 5, 1e-12);
  REQUIRE(t.size() == 5);
  for (int i = 0; i < 5; ++i) {
    CHECK(t.zeros(i) == doctest::Approx(2.0 * (i + 1) * kPi).epsilon(1e-7));
    CHECK(t.multiplicity(i) == 2);
  }
  CHECK(t.counted() == 10);
}

TEST_CASE("mu outside (0, 1) without the brackets") {
  // mu = 0: Lambda = sin(x)/x, zeros at n pi.
  const ZeroTable zero_case = find_zeros(0.0, 4, 1e-12);
  REQUIRE(zero_case.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(zero_case.zeros(i) == doctest::Approx((i + 1) * kPi));

  // mu = 2: 6(x - sin x)/x^3 > 0 has no real zero.
  try {
    find_zeros(2.0, 3, 1e-12);
    FAIL("expected ScanMiss");
  } catch (const ScanMiss& e) {
    CHECK(e.partial().size() == 0);
  }
}

TEST_CASE("refine_zero rejects a bracket without sign change") {
  const HalfIntFamily f(0.5);
  CHECK_THROWS_AS(refine_zero(f, {1.0, 2.0, 1}, 1e-12), NoSignChange);
  CHECK_THROWS_AS(refine_zero(f, {2.0, 1.0, 1}, 1e-12), InvalidParameter);
}

TEST_CASE("empty table and argument checks") {
  CHECK(find_zeros(0.5, 0, 1e-12).size() == 0);
  CHECK_THROWS_AS(find_zeros(0.5, -1, 1e-12), InvalidParameter);
  CHECK_THROWS_AS(find_zeros(0.5, 3, 0.0), InvalidParameter);
}

TEST_CASE("tail bracket orders and contains the estimate") {
  for (double mu : {0.25, 1.0, 1.5}) {
    for (int m = 1; m <= 3; ++m) {
      const TailBracket tb = power_sum_tail(mu, 20, m, 100);
      CHECK(tb.lower <= tb.estimate);
      CHECK(tb.estimate <= tb.upper);
    }
  }
}

TEST_CASE("reciprocal square sum improves with more zeros") {
  for (double mu : {0.25, 0.5, 0.75}) {
    const double d50 = verify_reciprocal_square_sum(find_zeros(mu, 50, 1e-12)).discrepancy;
    const double d200 = verify_reciprocal_square_sum(find_zeros(mu, 200, 1e-12)).discrepancy;
    CHECK(d200 <= d50);
    CHECK(d50 <= 1e-4);
  }
}
