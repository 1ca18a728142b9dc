#pragma once

// Data-parallel inner loops behind the cost grid checks and the hypercube
// scheduler: batched cost evaluation, residual scans over log grids,
// Gray-code block generation, and unit-Hamming-step validation.
//
// Every kernel exists twice: a scalar reference implementation and an AVX2
// variant. The top-level entry points pick one at startup from CPU support.
// Both variants perform the same per-element operations in the same order,
// so their results are bit-identical; the test suite enforces this
// equivalence on random inputs.

#include <cstddef>
#include <cstdint>
#include <span>

namespace ledgerkit::kernels {

struct CostGridStats {
  // max over the grid of |J(x) - J(1/x)| / max(1, J(x))
  double reciprocity_max = 0.0;
  // min over the grid of J(x); negative values signal a nonnegativity bug
  double cost_min = 0.0;
};

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

// out[i] = 0.5*(x[i] + 1/x[i]) - 1. Caller guarantees x[i] > 0 and finite.
void eval_cost_batch(std::span<const double> x, std::span<double> out);

// Reciprocity and nonnegativity residuals over a grid of positive ratios.
CostGridStats cost_grid_stats(std::span<const double> x);

// max over (x_i, y_j) of
//   |F(xy) + F(x/y) - 2F(x)F(y) - 2F(x) - 2F(y)| / (1 + |F(xy)| + |F(x/y)|)
double composition_residual_max(std::span<const double> x, std::span<const double> y);

// out[i] = g(base+i) where g(k) = k xor (k >> 1).
void gray_fill(std::uint32_t base, std::span<std::uint32_t> out);

// Index of the first i with popcount(seq[i] ^ seq[i+1]) != 1, or npos when
// every consecutive step flips exactly one bit.
std::size_t first_non_unit_step(std::span<const std::uint32_t> seq);

// Name of the implementation the dispatcher selected: "scalar" or "avx2".
const char* active_backend() noexcept;

namespace scalar {
void eval_cost_batch(std::span<const double> x, std::span<double> out);
CostGridStats cost_grid_stats(std::span<const double> x);
double composition_residual_max(std::span<const double> x, std::span<const double> y);
void gray_fill(std::uint32_t base, std::span<std::uint32_t> out);
std::size_t first_non_unit_step(std::span<const std::uint32_t> seq);
}  // namespace scalar

namespace avx2 {
// False when the binary was built without AVX2 support or the CPU lacks it.
// The remaining functions must only be called when this returns true.
bool available() noexcept;
void eval_cost_batch(std::span<const double> x, std::span<double> out);
CostGridStats cost_grid_stats(std::span<const double> x);
double composition_residual_max(std::span<const double> x, std::span<const double> y);
void gray_fill(std::uint32_t base, std::span<std::uint32_t> out);
std::size_t first_non_unit_step(std::span<const std::uint32_t> seq);
}  // namespace avx2

}  // namespace ledgerkit::kernels
