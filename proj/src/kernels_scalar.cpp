#include "ledgerkit/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

// Reference implementations. The AVX2 variants mirror the exact operation
// order used here; do not reassociate or fuse anything without updating both.

namespace ledgerkit::kernels::scalar {

void eval_cost_batch(std::span<const double> x, std::span<double> out) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double inv = 1.0 / x[i];
    out[i] = 0.5 * (x[i] + inv) - 1.0;
  }
}

CostGridStats cost_grid_stats(std::span<const double> x) {
  CostGridStats stats;
  stats.reciprocity_max = 0.0;
  stats.cost_min = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double y = 1.0 / x[i];
    const double z = 1.0 / y;
    const double j1 = 0.5 * (x[i] + y) - 1.0;
    const double j2 = 0.5 * (y + z) - 1.0;
    const double r = std::abs(j1 - j2) / std::max(1.0, j1);
    stats.reciprocity_max = std::max(stats.reciprocity_max, r);
    stats.cost_min = std::min(stats.cost_min, j1);
  }
  return stats;
}

double composition_residual_max(std::span<const double> x, std::span<const double> y) {
  double worst = 0.0;
  for (std::size_t j = 0; j < y.size(); ++j) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double xy = x[i] * y[j];
      const double q = x[i] / y[j];
      const double ix = 1.0 / x[i];
      const double iy = 1.0 / y[j];
      const double ixy = 1.0 / xy;
      const double iq = 1.0 / q;
      const double jx = 0.5 * (x[i] + ix) - 1.0;
      const double jy = 0.5 * (y[j] + iy) - 1.0;
      const double jxy = 0.5 * (xy + ixy) - 1.0;
      const double jq = 0.5 * (q + iq) - 1.0;
      const double r = (((jxy + jq) - ((2.0 * jx) * jy)) - (2.0 * jx)) - (2.0 * jy);
      const double scale = (1.0 + std::abs(jxy)) + std::abs(jq);
      const double rel = std::abs(r) / scale;
      worst = std::max(worst, rel);
    }
  }
  return worst;
}

void gray_fill(std::uint32_t base, std::span<std::uint32_t> out) {
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::uint32_t k = base + static_cast<std::uint32_t>(i);
    out[i] = k ^ (k >> 1);
  }
}

std::size_t first_non_unit_step(std::span<const std::uint32_t> seq) {
  if (seq.size() < 2) return npos;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    const std::uint32_t d = seq[i] ^ seq[i + 1];
    const bool one_bit = d != 0 && (d & (d - 1)) == 0;
    if (!one_bit) return i;
  }
  return npos;
}

}  // namespace ledgerkit::kernels::scalar
