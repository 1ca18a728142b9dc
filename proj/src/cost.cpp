#include "ledgerkit/cost.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "ledgerkit/errors.hpp"
#include "ledgerkit/kernels.hpp"

namespace ledgerkit {

namespace {

std::string short_num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

void require_ratio(double x) {
  if (!(std::isfinite(x) && x > 0.0))
    throw DomainError("cost argument must be a positive finite ratio, got " + short_num(x));
}

}  // namespace

double eval_cost(double x) {
  require_ratio(x);
  const double inv = 1.0 / x;
  return 0.5 * (x + inv) - 1.0;
}

double composition_residual(double x, double y) {
  require_ratio(x);
  require_ratio(y);
  const double fx = eval_cost(x);
  const double fy = eval_cost(y);
  const double fxy = eval_cost(x * y);
  const double fq = eval_cost(x / y);
  return fxy + fq - 2.0 * fx * fy - 2.0 * fx - 2.0 * fy;
}

double log_lift(double t) {
  if (!std::isfinite(t)) throw DomainError("log-lift argument must be finite");
  // |t| keeps evenness exact: both signs take the identical path.
  const double s = std::sinh(0.5 * std::abs(t));
  return 2.0 * s * s;
}

double calibration_ratio(double t) {
  if (!std::isfinite(t)) throw DomainError("calibration offset must be finite");
  if (t == 0.0) throw DomainError("calibration ratio is a limit at t = 0, not a value");
  return 2.0 * log_lift(t) / (t * t);
}

double fixed_point_phi(double x0, double tol, std::uint64_t max_iter) {
  if (!(std::isfinite(x0) && x0 > 0.0)) throw DomainError("starting point must be positive");
  if (!(std::isfinite(tol) && tol > 0.0)) throw DomainError("tolerance must be positive");
  if (max_iter < 1) throw DomainError("iteration budget must be at least 1");

  double x = x0;
  for (std::uint64_t i = 0; i < max_iter; ++i) {
    const double next = 1.0 + 1.0 / x;
    if (std::abs(next - x) <= tol) return next;
    x = next;
  }
  throw IterationLimitError("fixed-point iteration did not converge within " +
                                std::to_string(max_iter) + " steps",
                            x);
}

bool bal(double x, double tol) {
  if (!(std::isfinite(tol) && tol >= 0.0)) throw DomainError("tolerance must be nonnegative");
  return eval_cost(x) <= tol;
}

bool exists(double x) noexcept { return std::isfinite(x) && x > 0.0; }

std::vector<double> log_grid(double lo, double hi, std::size_t n) {
  if (!(std::isfinite(lo) && std::isfinite(hi) && lo > 0.0 && lo < hi))
    throw DomainError("grid bounds must satisfy 0 < lo < hi");
  if (n < 2) throw DomainError("grid needs at least 2 points");

  const double llo = std::log(lo);
  const double step = (std::log(hi) - llo) / static_cast<double>(n - 1);
  std::vector<double> grid(n);
  for (std::size_t i = 0; i < n; ++i) grid[i] = std::exp(llo + step * static_cast<double>(i));
  return grid;
}

CostCheckReport cost_check(std::size_t grid_n, double lo, double hi) {
  const std::vector<double> grid = log_grid(lo, hi, grid_n);
  const auto stats = kernels::cost_grid_stats(grid);
  CostCheckReport report;
  report.reciprocity_max = stats.reciprocity_max;
  report.cost_min = stats.cost_min;
  report.composition_max = kernels::composition_residual_max(grid, grid);
  return report;
}

}  // namespace ledgerkit
