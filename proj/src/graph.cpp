#include "ledgerkit/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace ledgerkit {

GraphPtr RecognitionGraph::build(const std::vector<NodeId>& nodes,
                                 const std::vector<std::pair<NodeId, NodeId>>& undirected_edges) {
  auto g = std::shared_ptr<RecognitionGraph>(new RecognitionGraph());

  g->nodes_ = nodes;
  std::sort(g->nodes_.begin(), g->nodes_.end());
  for (std::size_t i = 0; i < g->nodes_.size(); ++i) {
    if (g->nodes_[i].empty()) throw ValidationError("empty node label");
    if (i > 0 && g->nodes_[i] == g->nodes_[i - 1])
      throw ValidationError("duplicate node: " + g->nodes_[i]);
  }

  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& [u, v] : undirected_edges) {
    if (u == v) throw ValidationError("self-loop on node: " + u);
    const std::size_t ui = g->node_index(u);
    const std::size_t vi = g->node_index(v);
    seen.insert(ui < vi ? std::make_pair(ui, vi) : std::make_pair(vi, ui));
  }

  g->und_edge_idx_.assign(seen.begin(), seen.end());
  g->und_edges_.reserve(g->und_edge_idx_.size());
  g->adj_.resize(g->nodes_.size());
  for (const auto& [lo, hi] : g->und_edge_idx_) {
    g->und_edges_.push_back({g->nodes_[lo], g->nodes_[hi]});
    g->adj_[lo].push_back(hi);
    g->adj_[hi].push_back(lo);
  }
  for (auto& nbrs : g->adj_) std::sort(nbrs.begin(), nbrs.end());

  return g;
}

bool RecognitionGraph::has_node(const NodeId& id) const noexcept {
  return std::binary_search(nodes_.begin(), nodes_.end(), id);
}

std::size_t RecognitionGraph::node_index(const NodeId& id) const {
  const auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id);
  if (it == nodes_.end() || *it != id) throw ValidationError("unknown node: " + id);
  return static_cast<std::size_t>(it - nodes_.begin());
}

bool RecognitionGraph::has_edge(const NodeId& u, const NodeId& v) const noexcept {
  const auto ui = std::lower_bound(nodes_.begin(), nodes_.end(), u);
  const auto vi = std::lower_bound(nodes_.begin(), nodes_.end(), v);
  if (ui == nodes_.end() || *ui != u || vi == nodes_.end() || *vi != v) return false;
  auto a = static_cast<std::size_t>(ui - nodes_.begin());
  auto b = static_cast<std::size_t>(vi - nodes_.begin());
  if (a > b) std::swap(a, b);
  if (a == b) return false;
  return std::binary_search(und_edge_idx_.begin(), und_edge_idx_.end(), std::make_pair(a, b));
}

std::size_t RecognitionGraph::undirected_edge_index(std::size_t u, std::size_t v) const {
  auto a = u;
  auto b = v;
  if (a > b) std::swap(a, b);
  const auto key = std::make_pair(a, b);
  const auto it = std::lower_bound(und_edge_idx_.begin(), und_edge_idx_.end(), key);
  if (it == und_edge_idx_.end() || *it != key)
    throw TopologyError("no edge between " + nodes_.at(u) + " and " + nodes_.at(v));
  return static_cast<std::size_t>(it - und_edge_idx_.begin());
}

std::size_t RecognitionGraph::undirected_edge_index(const NodeId& u, const NodeId& v) const {
  return undirected_edge_index(node_index(u), node_index(v));
}

std::vector<std::vector<NodeId>> components(const RecognitionGraph& g) {
  const std::size_t n = g.node_count();
  std::vector<char> visited(n, 0);
  std::vector<std::vector<NodeId>> result;
  for (std::size_t start = 0; start < n; ++start) {
    if (visited[start]) continue;
    std::vector<NodeId> comp;
    std::deque<std::size_t> queue{start};
    visited[start] = 1;
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      comp.push_back(g.node_at(v));
      for (const std::size_t w : g.neighbors(v)) {
        if (!visited[w]) {
          visited[w] = 1;
          queue.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    result.push_back(std::move(comp));
  }
  return result;
}

SpanningForest::SpanningForest(GraphPtr g) : graph_(std::move(g)) {
  const RecognitionGraph& gr = *graph_;
  const std::size_t n = gr.node_count();
  parent_.assign(n, npos);
  parent_edge_.assign(n, npos);
  tree_edge_.assign(gr.undirected_edge_count(), 0);
  visit_order_.reserve(n);

  std::vector<char> visited(n, 0);
  for (std::size_t start = 0; start < n; ++start) {
    if (visited[start]) continue;
    roots_.push_back(start);
    visited[start] = 1;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      visit_order_.push_back(v);
      for (const std::size_t w : gr.neighbors(v)) {
        if (visited[w]) continue;
        visited[w] = 1;
        parent_[w] = v;
        const std::size_t e = gr.undirected_edge_index(v, w);
        parent_edge_[w] = e;
        tree_edge_[e] = 1;
        queue.push_back(w);
      }
    }
  }
}

namespace {

// Node indices from v up to its root, inclusive.
std::vector<std::size_t> ascent(const SpanningForest& f, std::size_t v) {
  std::vector<std::size_t> path{v};
  while (f.parent_of(path.back()) != npos) path.push_back(f.parent_of(path.back()));
  return path;
}

}  // namespace

CycleBasis fundamental_cycles(const GraphPtr& g, const SpanningForest& f) {
  if (f.graph().get() != g.get())
    throw ValidationError("spanning forest was built for a different graph");

  CycleBasis basis;
  const RecognitionGraph& gr = *g;
  for (std::size_t e = 0; e < gr.undirected_edge_count(); ++e) {
    if (f.is_tree_edge(e)) continue;
    const auto [lo, hi] = gr.undirected_edge_endpoints(e);

    // Tree path hi -> lo: climb both endpoints to the root, splice at the
    // lowest common ancestor.
    const std::vector<std::size_t> from_hi = ascent(f, hi);
    const std::vector<std::size_t> from_lo = ascent(f, lo);
    std::vector<char> on_hi_path(gr.node_count(), 0);
    for (const std::size_t v : from_hi) on_hi_path[v] = 1;
    std::size_t meet = 0;
    while (!on_hi_path[from_lo[meet]]) ++meet;
    const std::size_t lca = from_lo[meet];

    Cycle walk;
    walk.push_back(gr.node_at(lo));
    for (const std::size_t v : from_hi) {
      walk.push_back(gr.node_at(v));
      if (v == lca) break;
    }
    for (std::size_t i = meet; i-- > 0;) walk.push_back(gr.node_at(from_lo[i]));

    basis.push_back({gr.undirected_edges()[e], std::move(walk)});
  }
  return basis;
}

}  // namespace ledgerkit
