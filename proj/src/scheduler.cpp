#include "ledgerkit/scheduler.hpp"

#include <bit>
#include <numeric>
#include <span>
#include <string>

#include "ledgerkit/kernels.hpp"

namespace ledgerkit {

namespace {

void require_dimension(std::size_t d) {
  if (d < 1 || d > kMaxDimension)
    throw BoundsError("dimension must be between 1 and " + std::to_string(kMaxDimension));
}

void require_walk_fits(const Walk& w) {
  require_dimension(w.dim);
  const std::uint32_t limit = std::uint32_t{1} << w.dim;
  for (const std::uint32_t v : w.vertices)
    if (v >= limit)
      throw ValidationError("vertex " + std::to_string(v) + " does not fit in " +
                            std::to_string(w.dim) + " bits");
}

bool unit_hamming(std::uint32_t a, std::uint32_t b) { return std::popcount(a ^ b) == 1; }

}  // namespace

std::uint32_t gray_code(std::uint64_t k, std::size_t d) {
  require_dimension(d);
  if (k >= (std::uint64_t{1} << d))
    throw BoundsError("index " + std::to_string(k) + " is outside [0, 2^" + std::to_string(d) +
                      ")");
  return static_cast<std::uint32_t>(k ^ (k >> 1));
}

Walk gray_cycle(std::size_t d) {
  require_dimension(d);
  Walk w;
  w.dim = d;
  w.vertices.resize(std::size_t{1} << d);
  kernels::gray_fill(0, w.vertices);
  return w;
}

std::string vertex_bits(std::uint32_t v, std::size_t d) {
  std::string bits(d, '0');
  for (std::size_t i = 0; i < d; ++i)
    if (v & (std::uint32_t{1} << (d - 1 - i))) bits[i] = '1';
  return bits;
}

WalkReport validate_walk(const Walk& w, bool cyclic) {
  require_walk_fits(w);

  WalkReport report;
  report.period = w.vertices.size();

  report.atomic = kernels::first_non_unit_step(w.vertices) == kernels::npos;
  if (cyclic && !w.vertices.empty())
    report.atomic = report.atomic && unit_hamming(w.vertices.back(), w.vertices.front());

  std::vector<char> seen(std::size_t{1} << w.dim, 0);
  std::size_t distinct = 0;
  report.unique = true;
  for (const std::uint32_t v : w.vertices) {
    if (seen[v]) {
      report.unique = false;
    } else {
      seen[v] = 1;
      ++distinct;
    }
  }
  report.complete = distinct == seen.size();
  return report;
}

std::uint64_t minimal_period(std::size_t d) {
  require_dimension(d);
  return std::uint64_t{1} << d;
}

GraphPtr hypercube_graph(std::size_t d) {
  require_dimension(d);
  const std::uint32_t count = std::uint32_t{1} << d;

  std::vector<NodeId> nodes;
  nodes.reserve(count);
  for (std::uint32_t v = 0; v < count; ++v) nodes.push_back(vertex_bits(v, d));

  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(d * (std::size_t{1} << (d - 1)));
  for (std::uint32_t v = 0; v < count; ++v) {
    for (std::size_t b = 0; b < d; ++b) {
      const std::uint32_t u = v ^ (std::uint32_t{1} << b);
      if (v < u) edges.emplace_back(nodes[v], nodes[u]);
    }
  }
  return RecognitionGraph::build(nodes, edges);
}

Trace walk_to_trace(const Walk& w, std::int64_t magnitude, const Quantum& quantum, bool cyclic) {
  if (magnitude == 0) throw DegenerateEventError("posting magnitude must be nonzero");
  const WalkReport report = validate_walk(w, cyclic);
  if (!report.atomic) throw ValidationError("walk is not atomic: consecutive vertices must "
                                            "differ in exactly one bit");

  Trace t;
  t.graph = hypercube_graph(w.dim);
  t.quantum = quantum;
  t.initial_units.assign(t.graph->node_count(), 0);

  const auto label = [&](std::uint32_t v) { return vertex_bits(v, w.dim); };
  for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i)
    t.events.push_back(Event::post(label(w.vertices[i]), label(w.vertices[i + 1]), magnitude));
  if (cyclic && w.vertices.size() >= 2)
    t.events.push_back(Event::post(label(w.vertices.back()), label(w.vertices.front()), magnitude));
  return t;
}

std::vector<DimensionRow> dimension_scan(std::size_t d_max) {
  if (d_max < 1 || d_max > kMaxDimension)
    throw BoundsError("scan bound must be between 1 and " + std::to_string(kMaxDimension));

  std::vector<DimensionRow> rows;
  rows.reserve(d_max);
  for (std::size_t d = 1; d <= d_max; ++d) {
    DimensionRow row;
    row.dim = d;
    row.lcm_with_45 = std::lcm(std::uint64_t{1} << d, std::uint64_t{45});
    row.passes_gap45 = row.lcm_with_45 == 360;
    row.closed_form_lcm = (std::uint64_t{1} << (d < 3 ? 3 : d)) * 45;
    row.closed_form_matches = row.closed_form_lcm == row.lcm_with_45;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace ledgerkit
