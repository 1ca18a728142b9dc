#include "ledgerkit/kernels.hpp"

namespace ledgerkit::kernels {

namespace {

bool use_avx2() {
  static const bool enabled = avx2::available();
  return enabled;
}

}  // namespace

const char* active_backend() noexcept {
  return use_avx2() ? "avx2" : "scalar";
}

void eval_cost_batch(std::span<const double> x, std::span<double> out) {
  if (use_avx2()) {
    avx2::eval_cost_batch(x, out);
  } else {
    scalar::eval_cost_batch(x, out);
  }
}

CostGridStats cost_grid_stats(std::span<const double> x) {
  return use_avx2() ? avx2::cost_grid_stats(x) : scalar::cost_grid_stats(x);
}

double composition_residual_max(std::span<const double> x, std::span<const double> y) {
  return use_avx2() ? avx2::composition_residual_max(x, y)
                    : scalar::composition_residual_max(x, y);
}

void gray_fill(std::uint32_t base, std::span<std::uint32_t> out) {
  if (use_avx2()) {
    avx2::gray_fill(base, out);
  } else {
    scalar::gray_fill(base, out);
  }
}

std::size_t first_non_unit_step(std::span<const std::uint32_t> seq) {
  return use_avx2() ? avx2::first_non_unit_step(seq) : scalar::first_non_unit_step(seq);
}

}  // namespace ledgerkit::kernels
