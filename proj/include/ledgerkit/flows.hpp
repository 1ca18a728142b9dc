#pragma once

// Cumulative edge flows: antisymmetric integer 1-cochains on a graph's
// directed edges. One value is stored per undirected edge on the lo -> hi
// orientation, so antisymmetry holds by construction and can never drift.

#include <cstdint>
#include <vector>

#include "ledgerkit/graph.hpp"

namespace ledgerkit {

class EdgeFlow {
public:
  explicit EdgeFlow(GraphPtr g);

  const GraphPtr& graph() const noexcept { return graph_; }

  // Signed value on the directed edge u -> v. TopologyError when absent.
  std::int64_t value(const NodeId& u, const NodeId& v) const;
  std::int64_t value_between(std::size_t u, std::size_t v) const;

  // Value on the canonical lo -> hi orientation of an undirected edge.
  std::int64_t value_at(std::size_t edge) const { return units_.at(edge); }

  void set(const NodeId& u, const NodeId& v, std::int64_t k);
  void add(const NodeId& u, const NodeId& v, std::int64_t k);
  void add_between(std::size_t u, std::size_t v, std::int64_t k);
  void add_at(std::size_t edge, std::int64_t k);

  friend bool operator==(const EdgeFlow& a, const EdgeFlow& b) {
    return *a.graph_ == *b.graph_ && a.units_ == b.units_;
  }

private:
  GraphPtr graph_;
  std::vector<std::int64_t> units_;  // per undirected edge, lo -> hi orientation
};

// Half-open tick interval [t0, t0 + length).
struct Window {
  std::size_t t0 = 0;
  std::size_t length = 0;
};

// Edgewise sum of the per-tick increments inside the window. The window must
// satisfy length >= 1 and t0 + length <= increments.size().
EdgeFlow accumulate(const std::vector<EdgeFlow>& increments, Window w);

// Signed sum along a closed directed walk (front() == back()).
std::int64_t cycle_flux(const EdgeFlow& f, const Cycle& cycle);

// Signed sum along a node path; every consecutive pair must be an edge.
std::int64_t path_sum(const EdgeFlow& f, const std::vector<NodeId>& path);

struct ClosureViolation {
  FundamentalCycle cycle;
  std::int64_t flux = 0;

  friend bool operator==(const ClosureViolation&, const ClosureViolation&) = default;
};

struct ClosureReport {
  bool closed = true;
  std::vector<ClosureViolation> violations;
};

// Closure on the fundamental basis: every basis cycle must carry zero flux.
// Basis sufficiency is defended empirically by the brute-force oracle below.
ClosureReport check_cycle_closure(const EdgeFlow& f, const CycleBasis& basis);

// Independent oracle: enumerates every simple directed path between every
// ordered node pair and compares path sums. Exponential by design; refuses
// graphs with more than max_nodes nodes.
bool check_path_independence_bruteforce(const EdgeFlow& f, std::size_t max_nodes = 10);

}  // namespace ledgerkit
