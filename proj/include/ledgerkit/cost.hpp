#pragma once

// The canonical reciprocal cost J(x) = (x + 1/x)/2 - 1 on positive ratios,
// with the machinery to machine-check its identities: the composition law
// F(xy) + F(x/y) = 2F(x)F(y) + 2F(x) + 2F(y), the log-coordinate lift
// cosh(t) - 1, small-t calibration, and the golden-ratio fixed point of
// x -> 1 + 1/x.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ledgerkit {

// Pinned acceptance tolerances for the grid scans. Relative for the two
// identities; the floor absorbs rounding noise in the nonnegativity check.
inline constexpr double kReciprocityRelTol = 1e-12;
inline constexpr double kCompositionRelTol = 1e-9;
inline constexpr double kCostNonnegFloor = -1e-15;

// J(x). Requires x positive and finite.
double eval_cost(double x);

// F(xy) + F(x/y) - 2F(x)F(y) - 2F(x) - 2F(y); identically zero for J, so the
// returned value measures floating-point error only.
double composition_residual(double x, double y);

// cosh(t) - 1 = J(e^t), computed as 2*sinh^2(t/2) so small |t| keeps full
// relative accuracy. Even in t by construction.
double log_lift(double t);

// 2*log_lift(t) / t^2; tends to 1 as t -> 0. Requires t != 0.
double calibration_ratio(double t);

// Iterate x -> 1 + 1/x from x0 until successive iterates differ by at most
// tol; the limit is the golden ratio. IterationLimitError past max_iter.
double fixed_point_phi(double x0, double tol, std::uint64_t max_iter);

// Perfect-balance predicate: J(x) <= tol.
bool bal(double x, double tol);

// True iff the cost of x is finite, i.e. x is positive and finite.
bool exists(double x) noexcept;

// n log-uniformly spaced points over [lo, hi], endpoints included. n >= 2.
std::vector<double> log_grid(double lo, double hi, std::size_t n);

struct CostCheckReport {
  double reciprocity_max = 0.0;  // max relative |J(x) - J(1/x)| over the grid
  double cost_min = 0.0;         // min J over the grid
  double composition_max = 0.0;  // max relative composition residual, grid x grid
};

// Grid scan of the identities, sized grid_n points over [lo, hi].
CostCheckReport cost_check(std::size_t grid_n, double lo, double hi);

}  // namespace ledgerkit
