#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <vector>

#include "ledgerkit/cost.hpp"
#include "ledgerkit/errors.hpp"
#include "ledgerkit/kernels.hpp"
#include "support/rational_oracle.hpp"

using namespace ledgerkit;
using testsupport::Rational;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const double kNan = std::numeric_limits<double>::quiet_NaN();

// Independently frozen references, not produced by the code under test.
constexpr double kPhi = 1.6180339887498949;       // (1 + sqrt 5) / 2
constexpr double kLnPhi = 0.4812118250596035;     // log of the above
constexpr double kCoshOneMinusOne = 0.5430806348152437;

}  // namespace

TEST_CASE("eval_cost hits exact dyadic values") {
  CHECK(eval_cost(1.0) == 0.0);
  CHECK(eval_cost(2.0) == 0.25);
  CHECK(eval_cost(0.5) == 0.25);
  CHECK(eval_cost(4.0) == 1.125);
  CHECK(eval_cost(0.25) == 1.125);
}

TEST_CASE("eval_cost rejects non-ratios") {
  CHECK_THROWS_AS(eval_cost(0.0), DomainError);
  CHECK_THROWS_AS(eval_cost(-1.0), DomainError);
  CHECK_THROWS_AS(eval_cost(kInf), DomainError);
  CHECK_THROWS_AS(eval_cost(kNan), DomainError);
}

TEST_CASE("eval_cost agrees with the exact rational value") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> pick(1, 99);
  for (int i = 0; i < 200; ++i) {
    const int p = pick(rng);
    const int q = pick(rng);
    const double x = static_cast<double>(p) / static_cast<double>(q);
    const double exact =
        static_cast<double>(testsupport::rational_cost(Rational(p, q)));
    const double got = eval_cost(x);
    CHECK(std::abs(got - exact) <= 1e-14 * std::max(1.0, std::abs(exact)));
  }
}

TEST_CASE("reciprocity is exact on powers of two") {
  for (int k = -20; k <= 20; ++k) {
    const double x = std::ldexp(1.0, k);
    CHECK(eval_cost(x) == eval_cost(1.0 / x));
  }
}

TEST_CASE("composition residual vanishes in exact arithmetic") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> pick(1, 99);
  for (int i = 0; i < 50; ++i) {
    const Rational x(pick(rng), pick(rng));
    const Rational y(pick(rng), pick(rng));
    CHECK(testsupport::rational_composition_residual(x, y) == 0);
  }
}

TEST_CASE("composition residual stays tiny in doubles") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> t(-6.0, 6.0);
  for (int i = 0; i < 500; ++i) {
    const double x = std::exp(t(rng));
    const double y = std::exp(t(rng));
    const double r = composition_residual(x, y);
    const double scale = 1.0 + std::abs(eval_cost(x * y)) + std::abs(eval_cost(x / y));
    CHECK(std::abs(r) / scale <= 1e-9);
  }
}

TEST_CASE("cost_check passes its own pinned tolerances") {
  const CostCheckReport rep = cost_check(100, 1e-3, 1e3);
  CHECK(rep.reciprocity_max <= kReciprocityRelTol);
  CHECK(rep.composition_max <= kCompositionRelTol);
  CHECK(rep.cost_min >= kCostNonnegFloor);
  CHECK(rep.cost_min > 0.0);  // the grid straddles but never lands on x = 1
}

TEST_CASE("log_lift matches cosh(t) - 1 and is exactly even") {
  CHECK(log_lift(0.0) == 0.0);
  CHECK(log_lift(1.0) == doctest::Approx(kCoshOneMinusOne).epsilon(1e-15));

  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> t(1e-12, 30.0);
  for (int i = 0; i < 200; ++i) {
    const double v = t(rng);
    CHECK(log_lift(v) == log_lift(-v));  // bitwise, both take the |t| path
  }

  // Against the direct form where the direct form is trustworthy.
  for (double v : {0.01, 0.1, 0.5, 1.0, 2.0, 5.0}) {
    const double direct = eval_cost(std::exp(v));
    CHECK(std::abs(log_lift(v) - direct) <= 1e-12 * std::max(1.0, direct));
  }

  CHECK_THROWS_AS(log_lift(kInf), DomainError);
  CHECK_THROWS_AS(log_lift(kNan), DomainError);
}

TEST_CASE("calibration ratio tends to one quadratically") {
  CHECK(calibration_ratio(1.0) == doctest::Approx(2.0 * kCoshOneMinusOne).epsilon(1e-15));
  CHECK(std::abs(calibration_ratio(1e-4) - 1.0) <= 1e-6);

  // |ratio - 1| ~ t^2 / 12; allow double headroom on the constant.
  for (double v : {1e-2, 1e-3}) {
    CHECK(std::abs(calibration_ratio(v) - 1.0) <= v * v / 6.0);
  }

  std::mt19937_64 rng(15);
  std::uniform_real_distribution<double> t(1e-8, 10.0);
  for (int i = 0; i < 100; ++i) {
    const double v = t(rng);
    CHECK(calibration_ratio(v) == calibration_ratio(-v));
  }

  CHECK_THROWS_AS(calibration_ratio(0.0), DomainError);
  CHECK_THROWS_AS(calibration_ratio(kInf), DomainError);
}

TEST_CASE("fixed point iteration lands on the golden ratio") {
  const double r = fixed_point_phi(1.0, 1e-12, 200);
  CHECK(std::abs(r - kPhi) <= 1e-12);
  CHECK(std::abs(r * r - r - 1.0) <= 10.0 * 1e-12);
  CHECK(std::abs(eval_cost(r) - (r - 1.5)) <= 1e-12);
  CHECK(std::abs(std::log(r) - kLnPhi) <= 1e-12);

  // Convergence is global on the positive axis.
  for (double x0 : {0.1, 0.5, 2.0, 100.0}) {
    CHECK(std::abs(fixed_point_phi(x0, 1e-12, 200) - kPhi) <= 1e-11);
  }
}

TEST_CASE("fixed point iteration reports the last iterate on exhaustion") {
  double expected = 1.0;
  for (int i = 0; i < 3; ++i) expected = 1.0 + 1.0 / expected;
  try {
    fixed_point_phi(1.0, 1e-30, 3);
    FAIL("expected IterationLimitError");
  } catch (const IterationLimitError& e) {
    CHECK(e.last_iterate() == expected);
  }

  CHECK_THROWS_AS(fixed_point_phi(-1.0, 1e-12, 10), DomainError);
  CHECK_THROWS_AS(fixed_point_phi(1.0, 0.0, 10), DomainError);
  CHECK_THROWS_AS(fixed_point_phi(1.0, 1e-12, 0), DomainError);
}

TEST_CASE("bal and exists") {
  CHECK(bal(1.0, 0.0));
  CHECK(bal(2.0, 0.25));
  CHECK_FALSE(bal(2.0, 0.2499));
  CHECK_THROWS_AS(bal(1.0, -0.1), DomainError);
  CHECK_THROWS_AS(bal(0.0, 0.1), DomainError);

  static_assert(noexcept(exists(1.0)));
  CHECK(exists(1.0));
  CHECK(exists(1e-300));
  CHECK_FALSE(exists(0.0));
  CHECK_FALSE(exists(-2.0));
  CHECK_FALSE(exists(kInf));
  CHECK_FALSE(exists(kNan));
}

TEST_CASE("cost blows up toward the boundary") {
  CHECK(eval_cost(1e-7) > 1e6);
  double prev = eval_cost(1e-1);
  for (int k = 2; k <= 7; ++k) {
    const double cur = eval_cost(std::pow(10.0, -k));
    CHECK(cur > prev);
    prev = cur;
  }
}

TEST_CASE("log_grid shape and failure modes") {
  const auto g = log_grid(1e-3, 1e3, 7);
  REQUIRE(g.size() == 7);
  CHECK(g.front() == doctest::Approx(1e-3).epsilon(1e-14));
  CHECK(g.back() == doctest::Approx(1e3).epsilon(1e-14));
  CHECK(std::abs(g[3] - 1.0) <= 1e-14);
  for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i] > g[i - 1]);

  CHECK_THROWS_AS(log_grid(0.0, 1.0, 5), DomainError);
  CHECK_THROWS_AS(log_grid(2.0, 1.0, 5), DomainError);
  CHECK_THROWS_AS(log_grid(1.0, 2.0, 1), DomainError);
}

TEST_CASE("level sets of the cost are reciprocal pairs") {
  // On a log grid symmetric about x = 1, the only grid point sharing a cost
  // value with x_i (up to 1e-10) is its mirror x_{n-1-i}; neighbours differ
  // by at least ~1e-5.
  constexpr std::size_t n = 2001;
  const auto grid = log_grid(1e-3, 1e3, n);
  std::vector<double> cost(n);
  kernels::eval_cost_batch(grid, cost);

  std::mt19937_64 rng(16);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<std::size_t> probes = {0, 137, 500, 999, 1000, 1499, 2000};
  for (int i = 0; i < 20; ++i) probes.push_back(pick(rng));

  for (const std::size_t i : probes) {
    std::set<std::size_t> matches;
    for (std::size_t j = 0; j < n; ++j)
      if (std::abs(cost[j] - cost[i]) <= 1e-10) matches.insert(j);
    CHECK(matches == std::set<std::size_t>{i, n - 1 - i});
  }
}
