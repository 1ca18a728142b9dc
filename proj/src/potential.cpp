#include "ledgerkit/potential.hpp"

#include <string>

#include "ledgerkit/checked.hpp"

namespace ledgerkit {

Potential::Potential(GraphPtr g, std::vector<std::int64_t> values)
    : graph_(std::move(g)), values_(std::move(values)) {
  if (values_.size() != graph_->node_count())
    throw ValidationError("potential does not cover the graph's nodes");
}

std::int64_t Potential::value(const NodeId& id) const {
  if (!graph_->has_node(id)) throw ValidationError("potential does not cover node: " + id);
  return values_[graph_->node_index(id)];
}

Potential solve_potential(const EdgeFlow& f) {
  const GraphPtr& g = f.graph();
  const SpanningForest forest(g);

  std::vector<std::int64_t> p(g->node_count(), 0);
  for (const std::size_t v : forest.visit_order()) {
    const std::size_t parent = forest.parent_of(v);
    if (parent == npos) continue;  // component root, gauge p = 0
    p[v] = checked_add(p[parent], f.value_between(parent, v));
  }

  for (const FundamentalCycle& fc : fundamental_cycles(g, forest)) {
    const std::int64_t flux = cycle_flux(f, fc.walk);
    if (flux != 0)
      throw ClosureError("cycle closure violated: flux " + std::to_string(flux) +
                             " around the fundamental cycle of edge " + fc.chord.lo + " -- " +
                             fc.chord.hi,
                         fc.walk, flux);
  }

  return Potential(g, std::move(p));
}

EdgeFlow gradient(const Potential& p, const GraphPtr& g) {
  EdgeFlow flow(g);
  for (const UndirectedEdge& e : g->undirected_edges())
    flow.set(e.lo, e.hi, checked_sub(p.value(e.hi), p.value(e.lo)));
  return flow;
}

bool differ_by_constant(const Potential& p1, const Potential& p2,
                        const std::vector<NodeId>& component) {
  bool have_ref = false;
  std::int64_t ref = 0;
  for (const NodeId& id : component) {
    const std::int64_t d = checked_sub(p1.value(id), p2.value(id));
    if (!have_ref) {
      have_ref = true;
      ref = d;
    } else if (d != ref) {
      return false;
    }
  }
  return true;
}

}  // namespace ledgerkit
