#include "ledgerkit/flows.hpp"

#include <functional>

#include "ledgerkit/checked.hpp"

namespace ledgerkit {

EdgeFlow::EdgeFlow(GraphPtr g) : graph_(std::move(g)) {
  units_.assign(graph_->undirected_edge_count(), 0);
}

std::int64_t EdgeFlow::value_between(std::size_t u, std::size_t v) const {
  const std::size_t e = graph_->undirected_edge_index(u, v);
  return u < v ? units_[e] : checked_neg(units_[e]);
}

std::int64_t EdgeFlow::value(const NodeId& u, const NodeId& v) const {
  return value_between(graph_->node_index(u), graph_->node_index(v));
}

void EdgeFlow::add_between(std::size_t u, std::size_t v, std::int64_t k) {
  const std::size_t e = graph_->undirected_edge_index(u, v);
  units_[e] = checked_add(units_[e], u < v ? k : checked_neg(k));
}

void EdgeFlow::add(const NodeId& u, const NodeId& v, std::int64_t k) {
  add_between(graph_->node_index(u), graph_->node_index(v), k);
}

void EdgeFlow::set(const NodeId& u, const NodeId& v, std::int64_t k) {
  const std::size_t ui = graph_->node_index(u);
  const std::size_t vi = graph_->node_index(v);
  const std::size_t e = graph_->undirected_edge_index(ui, vi);
  units_[e] = ui < vi ? k : checked_neg(k);
}

void EdgeFlow::add_at(std::size_t edge, std::int64_t k) {
  units_.at(edge) = checked_add(units_.at(edge), k);
}

EdgeFlow accumulate(const std::vector<EdgeFlow>& increments, Window w) {
  if (w.length < 1) throw BoundsError("window length must be at least 1");
  if (w.t0 > increments.size() || w.length > increments.size() - w.t0)
    throw BoundsError("window extends past the last tick");

  EdgeFlow total(increments[w.t0].graph());
  for (std::size_t t = w.t0; t < w.t0 + w.length; ++t) {
    const EdgeFlow& inc = increments[t];
    if (inc.graph().get() != total.graph().get())
      throw ValidationError("increments disagree on the underlying graph");
    for (std::size_t e = 0; e < total.graph()->undirected_edge_count(); ++e)
      total.add_at(e, inc.value_at(e));
  }
  return total;
}

std::int64_t cycle_flux(const EdgeFlow& f, const Cycle& cycle) {
  if (cycle.size() <= 1) return 0;
  if (cycle.front() != cycle.back()) throw ValidationError("cycle walk is not closed");
  std::int64_t sum = 0;
  for (std::size_t i = 0; i + 1 < cycle.size(); ++i)
    sum = checked_add(sum, f.value(cycle[i], cycle[i + 1]));
  return sum;
}

std::int64_t path_sum(const EdgeFlow& f, const std::vector<NodeId>& path) {
  const RecognitionGraph& g = *f.graph();
  std::int64_t sum = 0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (!g.has_edge(path[i], path[i + 1]))
      throw ValidationError("broken path: no edge " + path[i] + " -> " + path[i + 1]);
    sum = checked_add(sum, f.value(path[i], path[i + 1]));
  }
  return sum;
}

ClosureReport check_cycle_closure(const EdgeFlow& f, const CycleBasis& basis) {
  const RecognitionGraph& g = *f.graph();
  ClosureReport report;
  for (const FundamentalCycle& fc : basis) {
    if (fc.walk.size() < 2 || fc.walk.front() != fc.walk.back())
      throw ValidationError("cycle basis entry is not a closed walk");
    for (std::size_t i = 0; i + 1 < fc.walk.size(); ++i)
      if (!g.has_edge(fc.walk[i], fc.walk[i + 1]))
        throw ValidationError("cycle basis does not match the flow's graph");
    const std::int64_t flux = cycle_flux(f, fc.walk);
    if (flux != 0) report.violations.push_back({fc, flux});
  }
  report.closed = report.violations.empty();
  return report;
}

bool check_path_independence_bruteforce(const EdgeFlow& f, std::size_t max_nodes) {
  const RecognitionGraph& g = *f.graph();
  const std::size_t n = g.node_count();
  if (n > max_nodes)
    throw SizeError("path enumeration refused: graph exceeds " + std::to_string(max_nodes) +
                    " nodes");

  std::vector<char> visited(n, 0);
  for (std::size_t src = 0; src < n; ++src) {
    for (std::size_t dst = 0; dst < n; ++dst) {
      if (src == dst) continue;

      bool have_ref = false;
      std::int64_t ref = 0;
      bool consistent = true;

      std::function<void(std::size_t, std::int64_t)> extend = [&](std::size_t v,
                                                                  std::int64_t sum) {
        if (!consistent) return;
        if (v == dst) {
          if (!have_ref) {
            have_ref = true;
            ref = sum;
          } else if (sum != ref) {
            consistent = false;
          }
          return;
        }
        visited[v] = 1;
        for (const std::size_t w : g.neighbors(v)) {
          if (visited[w]) continue;
          extend(w, checked_add(sum, f.value_between(v, w)));
        }
        visited[v] = 0;
      };

      extend(src, 0);
      if (!consistent) return false;
    }
  }
  return true;
}

}  // namespace ledgerkit
