#include <doctest.h>

#include <cmath>
#include <cstring>
#include <random>
#include <string>
#include <vector>

#include "ledgerkit/cost.hpp"
#include "ledgerkit/kernels.hpp"

using namespace ledgerkit;

namespace {

std::vector<double> random_ratios(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> t(-6.9, 6.9);
  std::vector<double> v(n);
  for (auto& x : v) x = std::exp(t(rng));
  return v;
}

bool bitwise_equal(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return false;
  return a.empty() || std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

}  // namespace

TEST_CASE("active backend names the selected implementation") {
  const std::string backend = kernels::active_backend();
  if (kernels::avx2::available())
    CHECK(backend == "avx2");
  else
    CHECK(backend == "scalar");
}

TEST_CASE("dispatched eval matches eval_cost elementwise") {
  std::mt19937_64 rng(21);
  const auto xs = random_ratios(rng, 1000);
  std::vector<double> out(xs.size());
  kernels::eval_cost_batch(xs, out);
  for (std::size_t i = 0; i < xs.size(); ++i) CHECK(out[i] == eval_cost(xs[i]));
}

TEST_CASE("vector backends are bit-exact against the scalar reference") {
  if (!kernels::avx2::available()) return;

  std::mt19937_64 rng(22);
  // Straddle every tail length around the 4- and 8-lane widths.
  for (std::size_t n = 0; n <= 17; ++n) {
    const auto xs = random_ratios(rng, n);
    const auto ys = random_ratios(rng, n);

    std::vector<double> a(n), b(n);
    kernels::scalar::eval_cost_batch(xs, a);
    kernels::avx2::eval_cost_batch(xs, b);
    CHECK(bitwise_equal(a, b));

    const auto [ra, ma] = kernels::scalar::cost_grid_stats(xs);
    const auto [rb, mb] = kernels::avx2::cost_grid_stats(xs);
    CHECK(ra == rb);
    CHECK(ma == mb);

    CHECK(kernels::scalar::composition_residual_max(xs, ys) ==
          kernels::avx2::composition_residual_max(xs, ys));

    std::vector<std::uint32_t> ga(n), gb(n);
    std::uniform_int_distribution<std::uint32_t> base(0, 1u << 20);
    const std::uint32_t b0 = base(rng);
    kernels::scalar::gray_fill(b0, ga);
    kernels::avx2::gray_fill(b0, gb);
    CHECK(ga == gb);

    std::vector<std::uint32_t> seq(n);
    std::uniform_int_distribution<std::uint32_t> word(0, 255);
    for (auto& v : seq) v = word(rng);
    CHECK(kernels::scalar::first_non_unit_step(seq) == kernels::avx2::first_non_unit_step(seq));
  }

  // And one large run where the vector body dominates.
  const auto xs = random_ratios(rng, 4096);
  std::vector<double> a(xs.size()), b(xs.size());
  kernels::scalar::eval_cost_batch(xs, a);
  kernels::avx2::eval_cost_batch(xs, b);
  CHECK(bitwise_equal(a, b));
  const auto sa = kernels::scalar::cost_grid_stats(xs);
  const auto sb = kernels::avx2::cost_grid_stats(xs);
  CHECK(sa.reciprocity_max == sb.reciprocity_max);
  CHECK(sa.cost_min == sb.cost_min);
}

TEST_CASE("gray_fill writes the reflected code") {
  std::vector<std::uint32_t> out(8);
  kernels::gray_fill(0, out);
  CHECK(out == std::vector<std::uint32_t>{0, 1, 3, 2, 6, 7, 5, 4});

  std::vector<std::uint32_t> shifted(4);
  kernels::gray_fill(6, shifted);
  CHECK(shifted == std::vector<std::uint32_t>{5, 4, 12, 13});  // g(6..9)
}

TEST_CASE("first_non_unit_step finds the first bad transition") {
  using kernels::npos;
  const auto fnus = [](std::vector<std::uint32_t> seq) {
    return kernels::first_non_unit_step(seq);
  };

  CHECK(fnus({}) == npos);
  CHECK(fnus({5}) == npos);
  CHECK(fnus({0, 1, 3, 2}) == npos);
  CHECK(fnus({0, 3}) == 0);        // two bits flip
  CHECK(fnus({0, 1, 1}) == 1);     // no bit flips
  CHECK(fnus({0, 1, 0, 5}) == 2);  // 0 -> 5 flips two bits
  CHECK(fnus({7, 6, 4, 5, 6}) == 3);  // 5 -> 6 flips two bits
}

TEST_CASE("dispatched stats agree with a direct recomputation") {
  std::mt19937_64 rng(23);
  const auto xs = random_ratios(rng, 257);
  const auto stats = kernels::cost_grid_stats(xs);

  double rmax = 0.0;
  double cmin = eval_cost(xs[0]);
  for (const double x : xs) {
    const double y = 1.0 / x;
    const double z = 1.0 / y;
    const double j1 = 0.5 * (x + y) - 1.0;
    const double j2 = 0.5 * (y + z) - 1.0;
    rmax = std::max(rmax, std::abs(j1 - j2) / std::max(1.0, j1));
    cmin = std::min(cmin, j1);
  }
  CHECK(stats.reciprocity_max == rmax);
  CHECK(stats.cost_min == cmin);
}
