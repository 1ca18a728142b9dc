#include "ledgerkit/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

// Mirrors kernels_scalar.cpp operation for operation. Each arithmetic step
// maps to one exactly-rounded vector instruction in the same order, so lane
// results match the scalar reference bit for bit. No FMA: the reference is
// built without contraction and none is used here.

namespace ledgerkit::kernels::avx2 {

bool available() noexcept {
#if defined(__GNUC__) || defined(__clang__)
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

namespace {

inline __m256d abs_pd(__m256d v) {
  return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v);
}

inline double reduce_max(__m256d v) {
  alignas(32) double lane[4];
  _mm256_store_pd(lane, v);
  return std::max(std::max(lane[0], lane[1]), std::max(lane[2], lane[3]));
}

inline double reduce_min(__m256d v) {
  alignas(32) double lane[4];
  _mm256_store_pd(lane, v);
  return std::min(std::min(lane[0], lane[1]), std::min(lane[2], lane[3]));
}

}  // namespace

void eval_cost_batch(std::span<const double> x, std::span<double> out) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d half = _mm256_set1_pd(0.5);
  std::size_t i = 0;
  for (; i + 4 <= x.size(); i += 4) {
    const __m256d xv = _mm256_loadu_pd(x.data() + i);
    const __m256d inv = _mm256_div_pd(one, xv);
    const __m256d j = _mm256_sub_pd(_mm256_mul_pd(half, _mm256_add_pd(xv, inv)), one);
    _mm256_storeu_pd(out.data() + i, j);
  }
  for (; i < x.size(); ++i) {
    const double inv = 1.0 / x[i];
    out[i] = 0.5 * (x[i] + inv) - 1.0;
  }
}

CostGridStats cost_grid_stats(std::span<const double> x) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d half = _mm256_set1_pd(0.5);
  __m256d rmax = _mm256_setzero_pd();
  __m256d cmin = _mm256_set1_pd(std::numeric_limits<double>::infinity());
  std::size_t i = 0;
  for (; i + 4 <= x.size(); i += 4) {
    const __m256d xv = _mm256_loadu_pd(x.data() + i);
    const __m256d y = _mm256_div_pd(one, xv);
    const __m256d z = _mm256_div_pd(one, y);
    const __m256d j1 = _mm256_sub_pd(_mm256_mul_pd(half, _mm256_add_pd(xv, y)), one);
    const __m256d j2 = _mm256_sub_pd(_mm256_mul_pd(half, _mm256_add_pd(y, z)), one);
    const __m256d r = _mm256_div_pd(abs_pd(_mm256_sub_pd(j1, j2)), _mm256_max_pd(one, j1));
    rmax = _mm256_max_pd(rmax, r);
    cmin = _mm256_min_pd(cmin, j1);
  }
  CostGridStats stats;
  stats.reciprocity_max = reduce_max(rmax);
  stats.cost_min = reduce_min(cmin);
  for (; i < x.size(); ++i) {
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
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d two = _mm256_set1_pd(2.0);
  __m256d worstv = _mm256_setzero_pd();
  double worst = 0.0;
  for (std::size_t j = 0; j < y.size(); ++j) {
    const double ys = y[j];
    const double iys = 1.0 / ys;
    const double jys = 0.5 * (ys + iys) - 1.0;
    const __m256d yv = _mm256_set1_pd(ys);
    const __m256d jy = _mm256_set1_pd(jys);
    std::size_t i = 0;
    for (; i + 4 <= x.size(); i += 4) {
      const __m256d xv = _mm256_loadu_pd(x.data() + i);
      const __m256d xy = _mm256_mul_pd(xv, yv);
      const __m256d q = _mm256_div_pd(xv, yv);
      const __m256d ix = _mm256_div_pd(one, xv);
      const __m256d ixy = _mm256_div_pd(one, xy);
      const __m256d iq = _mm256_div_pd(one, q);
      const __m256d jx = _mm256_sub_pd(_mm256_mul_pd(half, _mm256_add_pd(xv, ix)), one);
      const __m256d jxy = _mm256_sub_pd(_mm256_mul_pd(half, _mm256_add_pd(xy, ixy)), one);
      const __m256d jq = _mm256_sub_pd(_mm256_mul_pd(half, _mm256_add_pd(q, iq)), one);
      const __m256d t0 = _mm256_add_pd(jxy, jq);
      const __m256d t1 = _mm256_mul_pd(_mm256_mul_pd(two, jx), jy);
      const __m256d t2 = _mm256_sub_pd(t0, t1);
      const __m256d t3 = _mm256_sub_pd(t2, _mm256_mul_pd(two, jx));
      const __m256d r = _mm256_sub_pd(t3, _mm256_mul_pd(two, jy));
      const __m256d scale = _mm256_add_pd(_mm256_add_pd(one, abs_pd(jxy)), abs_pd(jq));
      const __m256d rel = _mm256_div_pd(abs_pd(r), scale);
      worstv = _mm256_max_pd(worstv, rel);
    }
    for (; i < x.size(); ++i) {
      const double xy = x[i] * ys;
      const double q = x[i] / ys;
      const double ix = 1.0 / x[i];
      const double ixy = 1.0 / xy;
      const double iq = 1.0 / q;
      const double jx = 0.5 * (x[i] + ix) - 1.0;
      const double jxy = 0.5 * (xy + ixy) - 1.0;
      const double jq = 0.5 * (q + iq) - 1.0;
      const double r = (((jxy + jq) - ((2.0 * jx) * jys)) - (2.0 * jx)) - (2.0 * jys);
      const double scale = (1.0 + std::abs(jxy)) + std::abs(jq);
      worst = std::max(worst, std::abs(r) / scale);
    }
  }
  return std::max(worst, reduce_max(worstv));
}

void gray_fill(std::uint32_t base, std::span<std::uint32_t> out) {
  const __m256i ramp = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  std::size_t i = 0;
  for (; i + 8 <= out.size(); i += 8) {
    const __m256i start = _mm256_set1_epi32(static_cast<int>(base + static_cast<std::uint32_t>(i)));
    const __m256i k = _mm256_add_epi32(start, ramp);
    const __m256i g = _mm256_xor_si256(k, _mm256_srli_epi32(k, 1));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + i), g);
  }
  for (; i < out.size(); ++i) {
    const std::uint32_t k = base + static_cast<std::uint32_t>(i);
    out[i] = k ^ (k >> 1);
  }
}

std::size_t first_non_unit_step(std::span<const std::uint32_t> seq) {
  if (seq.size() < 2) return npos;
  const __m256i zero = _mm256_setzero_si256();
  const __m256i ones = _mm256_set1_epi32(1);
  std::size_t i = 0;
  const std::size_t pairs = seq.size() - 1;
  for (; i + 8 <= pairs; i += 8) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(seq.data() + i));
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(seq.data() + i + 1));
    const __m256i d = _mm256_xor_si256(a, b);
    const __m256i t = _mm256_and_si256(d, _mm256_sub_epi32(d, ones));
    const __m256i ok = _mm256_andnot_si256(_mm256_cmpeq_epi32(d, zero), _mm256_cmpeq_epi32(t, zero));
    const int mask = _mm256_movemask_ps(_mm256_castsi256_ps(ok));
    if (mask != 0xFF) {
      const unsigned bad = static_cast<unsigned>(~mask) & 0xFFu;
      return i + static_cast<std::size_t>(std::countr_zero(bad));
    }
  }
  for (; i < pairs; ++i) {
    const std::uint32_t d = seq[i] ^ seq[i + 1];
    const bool one_bit = d != 0 && (d & (d - 1)) == 0;
    if (!one_bit) return i;
  }
  return npos;
}

}  // namespace ledgerkit::kernels::avx2

#endif
