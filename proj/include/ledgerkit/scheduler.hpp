#pragma once

// Gray-code scheduling on hypercubes Q_d: generate the Hamiltonian cycle
// g(k) = k xor (k >> 1), validate walks against the atomicity / completeness
// / uniqueness constraints, bridge walks into ledger traces on the full Q_d
// graph, and scan dimensions for the gap-45 synchronization criterion
// lcm(2^d, 45) = 360.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ledgerkit/graph.hpp"
#include "ledgerkit/ledger.hpp"

namespace ledgerkit {

// Full-cycle materialization stays within desk-scale memory up to here; the
// cap is shared by every dimension-taking entry point for uniformity.
inline constexpr std::size_t kMaxDimension = 24;

// Vertices are d-bit labels packed into a word; rendering is MSB first.
struct Walk {
  std::size_t dim = 0;
  std::vector<std::uint32_t> vertices;

  friend bool operator==(const Walk&, const Walk&) = default;
};

struct WalkReport {
  bool atomic = false;    // consecutive vertices (and the wraparound, if cyclic) adjacent
  bool complete = false;  // all 2^d vertices appear
  bool unique = false;    // no vertex repeats
  std::size_t period = 0;
};

struct DimensionRow {
  std::size_t dim = 0;
  std::uint64_t lcm_with_45 = 0;
  bool passes_gap45 = false;          // lcm(2^d, 45) == 360
  std::uint64_t closed_form_lcm = 0;  // 2^max(d,3) * 45
  bool closed_form_matches = false;   // closed form agrees with the computed lcm
};

// g(k) = k xor (k >> 1). Requires 1 <= d <= 24 and 0 <= k < 2^d.
std::uint32_t gray_code(std::uint64_t k, std::size_t d);

// The full Hamiltonian cycle [g(0), ..., g(2^d - 1)].
Walk gray_cycle(std::size_t d);

// MSB-first rendering of a vertex as a d-character bitstring.
std::string vertex_bits(std::uint32_t v, std::size_t d);

// The three walk predicates, judged independently. ValidationError when the
// dimension is out of range or a vertex has more than dim bits.
WalkReport validate_walk(const Walk& w, bool cyclic);

// 2^d: the fewest ticks in which an atomic walk can cover Q_d exactly once.
std::uint64_t minimal_period(std::size_t d);

// The Q_d recognition graph: 2^d bitstring nodes, d * 2^(d-1) undirected edges.
GraphPtr hypercube_graph(std::size_t d);

// A trace on the full Q_d graph whose tick-t event posts `magnitude` on
// (v_t -> v_{t+1}); when cyclic, a final tick closes the walk back to the
// start. The walk must be atomic.
Trace walk_to_trace(const Walk& w, std::int64_t magnitude, const Quantum& quantum, bool cyclic);

// lcm(2^d, 45) for d = 1..d_max, against the gap-45 target of 360 and the
// closed-form 2^max(d,3) * 45, which disagrees with the computed lcm below
// d = 3. Rows report computed truth; the mismatch is flagged, not corrected.
std::vector<DimensionRow> dimension_scan(std::size_t d_max);

}  // namespace ledgerkit
