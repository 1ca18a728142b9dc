#pragma once

// Constructive scalar potentials for closed flows: spanning-tree path sums
// from each component's canonical root (its smallest node, gauge-fixed to 0),
// with every non-tree edge verified. A flow admits a potential exactly when
// it passes cycle closure, and the potential is unique per component up to an
// additive constant.

#include <cstdint>
#include <vector>

#include "ledgerkit/flows.hpp"
#include "ledgerkit/graph.hpp"

namespace ledgerkit {

class Potential {
public:
  Potential(GraphPtr g, std::vector<std::int64_t> values);

  const GraphPtr& graph() const noexcept { return graph_; }

  std::int64_t value(const NodeId& id) const;  // ValidationError when uncovered
  std::int64_t value_at(std::size_t node) const { return values_.at(node); }
  const std::vector<std::int64_t>& values() const noexcept { return values_; }

  friend bool operator==(const Potential& a, const Potential& b) {
    return *a.graph_ == *b.graph_ && a.values_ == b.values_;
  }

private:
  GraphPtr graph_;
  std::vector<std::int64_t> values_;  // by node index
};

// Build the potential by tree path sums and verify each non-tree edge. On the
// first chord whose fundamental cycle carries nonzero flux (in basis order),
// throws ClosureError with that cycle and its flux.
Potential solve_potential(const EdgeFlow& f);

// flow(u -> v) = p(v) - p(u) on every edge of g. ValidationError if p does
// not cover some node of g.
EdgeFlow gradient(const Potential& p, const GraphPtr& g);

// True iff p1 - p2 is a single constant across the given nodes.
bool differ_by_constant(const Potential& p1, const Potential& p2,
                        const std::vector<NodeId>& component);

}  // namespace ledgerkit
