#include "ledgerkit/kernels.hpp"

#include <cstdlib>

// Built on targets without AVX2 codegen. available() gates every caller, so
// the bodies are unreachable.

namespace ledgerkit::kernels::avx2 {

bool available() noexcept { return false; }

void eval_cost_batch(std::span<const double>, std::span<double>) { std::abort(); }

CostGridStats cost_grid_stats(std::span<const double>) { std::abort(); }

double composition_residual_max(std::span<const double>, std::span<const double>) { std::abort(); }

void gray_fill(std::uint32_t, std::span<std::uint32_t>) { std::abort(); }

std::size_t first_non_unit_step(std::span<const std::uint32_t>) { std::abort(); }

}  // namespace ledgerkit::kernels::avx2
