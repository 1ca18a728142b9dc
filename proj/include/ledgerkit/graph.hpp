#pragma once

// Finite directed graphs closed under edge reversal, plus the combinatorics
// every downstream module leans on: connected components, deterministic BFS
// spanning forests, and fundamental cycle bases. Node order is the tie-break
// authority everywhere, so equal inputs always produce identical structures.

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ledgerkit/errors.hpp"

namespace ledgerkit {

using NodeId = std::string;

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

// One undirected edge in canonical orientation, lo < hi.
struct UndirectedEdge {
  NodeId lo;
  NodeId hi;

  friend bool operator==(const UndirectedEdge&, const UndirectedEdge&) = default;
};

class RecognitionGraph;
using GraphPtr = std::shared_ptr<const RecognitionGraph>;

class RecognitionGraph {
public:
  // Normalizes and validates: node labels unique and non-empty, edge endpoints
  // declared, no self-loops. Repeated undirected edges collapse (set
  // semantics); both orientations of each edge exist afterwards.
  static GraphPtr build(const std::vector<NodeId>& nodes,
                        const std::vector<std::pair<NodeId, NodeId>>& undirected_edges);

  const std::vector<NodeId>& nodes() const noexcept { return nodes_; }
  std::size_t node_count() const noexcept { return nodes_.size(); }
  const NodeId& node_at(std::size_t i) const { return nodes_.at(i); }

  // Sorted ascending by (lo, hi).
  const std::vector<UndirectedEdge>& undirected_edges() const noexcept { return und_edges_; }
  std::size_t undirected_edge_count() const noexcept { return und_edges_.size(); }

  bool has_node(const NodeId& id) const noexcept;
  std::size_t node_index(const NodeId& id) const;  // ValidationError when unknown

  bool has_edge(const NodeId& u, const NodeId& v) const noexcept;
  std::size_t undirected_edge_index(const NodeId& u, const NodeId& v) const;   // TopologyError
  std::size_t undirected_edge_index(std::size_t u, std::size_t v) const;       // TopologyError
  const std::pair<std::size_t, std::size_t>& undirected_edge_endpoints(std::size_t edge) const {
    return und_edge_idx_.at(edge);
  }

  // Neighbor node indices in ascending order.
  const std::vector<std::size_t>& neighbors(std::size_t node) const { return adj_.at(node); }

  friend bool operator==(const RecognitionGraph& a, const RecognitionGraph& b) {
    return a.nodes_ == b.nodes_ && a.und_edges_ == b.und_edges_;
  }

private:
  RecognitionGraph() = default;

  std::vector<NodeId> nodes_;                                  // sorted ascending
  std::vector<UndirectedEdge> und_edges_;                      // sorted ascending
  std::vector<std::pair<std::size_t, std::size_t>> und_edge_idx_;  // index pairs, lo < hi
  std::vector<std::vector<std::size_t>> adj_;
};

// Partition by undirected connectivity. Each component's nodes are ascending;
// components are ordered by their smallest node.
std::vector<std::vector<NodeId>> components(const RecognitionGraph& g);

// BFS forest rooted at the smallest node of each component, neighbors visited
// in ascending order.
class SpanningForest {
public:
  explicit SpanningForest(GraphPtr g);

  const GraphPtr& graph() const noexcept { return graph_; }
  const std::vector<std::size_t>& roots() const noexcept { return roots_; }

  // npos for roots.
  std::size_t parent_of(std::size_t node) const { return parent_.at(node); }
  std::size_t parent_edge_of(std::size_t node) const { return parent_edge_.at(node); }

  bool is_tree_edge(std::size_t edge) const { return tree_edge_.at(edge); }

  // Every node once, parents before children.
  const std::vector<std::size_t>& visit_order() const noexcept { return visit_order_; }

private:
  GraphPtr graph_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> parent_edge_;
  std::vector<std::size_t> roots_;
  std::vector<char> tree_edge_;
  std::vector<std::size_t> visit_order_;
};

inline SpanningForest spanning_forest(GraphPtr g) { return SpanningForest(std::move(g)); }

// A closed directed walk as a node sequence; front() == back() when nonempty.
using Cycle = std::vector<NodeId>;

// The cycle a non-tree edge closes: the chord lo -> hi followed by the tree
// path hi -> lo.
struct FundamentalCycle {
  UndirectedEdge chord;
  Cycle walk;

  friend bool operator==(const FundamentalCycle&, const FundamentalCycle&) = default;
};

using CycleBasis = std::vector<FundamentalCycle>;

// One cycle per non-tree undirected edge, in ascending chord order. The basis
// has exactly |E| - |X| + (#components) entries.
CycleBasis fundamental_cycles(const GraphPtr& g, const SpanningForest& f);

}  // namespace ledgerkit
