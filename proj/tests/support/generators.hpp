#pragma once

// Seeded random instance generators shared across the property tests. Every
// generator takes the engine by reference so a test's sequence is fixed by
// its seed alone.

#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ledgerkit/flows.hpp"
#include "ledgerkit/graph.hpp"
#include "ledgerkit/ledger.hpp"
#include "ledgerkit/potential.hpp"
#include "ledgerkit/scheduler.hpp"

namespace ledgerkit::testsupport {

using Rng = std::mt19937_64;

inline std::vector<NodeId> node_labels(std::size_t n) {
  std::vector<NodeId> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "n%02zu", i);
    labels[i] = buf;
  }
  return labels;
}

// A connected graph: a uniform random attachment tree plus extra edges drawn
// independently with the given density.
inline GraphPtr random_connected_graph(Rng& rng, std::size_t min_nodes, std::size_t max_nodes,
                                       double extra_density = 0.25) {
  std::uniform_int_distribution<std::size_t> node_count(min_nodes, max_nodes);
  const std::size_t n = node_count(rng);
  const std::vector<NodeId> labels = node_labels(n);

  std::vector<std::pair<NodeId, NodeId>> edges;
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> prev(0, i - 1);
    edges.emplace_back(labels[prev(rng)], labels[i]);
  }
  std::bernoulli_distribution extra(extra_density);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (extra(rng)) edges.emplace_back(labels[i], labels[j]);
  return RecognitionGraph::build(labels, edges);
}

// A trace over g: random small initial balances, then up to max_ticks events
// mixing empty ticks with postings of magnitude 1..3 in either direction.
inline Trace random_trace(Rng& rng, GraphPtr g, std::size_t max_ticks) {
  Trace t;
  t.graph = std::move(g);
  t.quantum = Quantum::make(1, 1);
  t.initial_units.resize(t.graph->node_count());
  std::uniform_int_distribution<std::int64_t> init(-10, 10);
  for (auto& u : t.initial_units) u = init(rng);

  const auto& edges = t.graph->undirected_edges();
  std::uniform_int_distribution<std::size_t> tick_count(0, max_ticks);
  std::bernoulli_distribution empty_tick(0.15);
  std::bernoulli_distribution flip(0.5);
  std::uniform_int_distribution<std::int64_t> mag(1, 3);

  const std::size_t ticks = tick_count(rng);
  for (std::size_t i = 0; i < ticks; ++i) {
    if (edges.empty() || empty_tick(rng)) {
      t.events.push_back(Event::empty());
      continue;
    }
    std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
    const UndirectedEdge& e = edges[pick(rng)];
    const std::int64_t k = flip(rng) ? mag(rng) : -mag(rng);
    if (flip(rng))
      t.events.push_back(Event::post(e.lo, e.hi, k));
    else
      t.events.push_back(Event::post(e.hi, e.lo, k));
  }
  return t;
}

// Arbitrary integer flow; almost never closed on a graph with cycles.
inline EdgeFlow random_flow(Rng& rng, GraphPtr g) {
  EdgeFlow f(std::move(g));
  std::uniform_int_distribution<std::int64_t> v(-5, 5);
  for (std::size_t e = 0; e < f.graph()->undirected_edge_count(); ++e) f.add_at(e, v(rng));
  return f;
}

inline Potential random_potential(Rng& rng, GraphPtr g) {
  std::vector<std::int64_t> vals(g->node_count());
  std::uniform_int_distribution<std::int64_t> v(-20, 20);
  for (auto& x : vals) x = v(rng);
  return Potential(std::move(g), std::move(vals));
}

// Closed by construction: the gradient of a random potential.
inline EdgeFlow random_closed_flow(Rng& rng, GraphPtr g) {
  const Potential p = random_potential(rng, g);
  return gradient(p, g);
}

// An atomic walk on Q_d: random start, then one random bit flip per step.
inline Walk random_atomic_walk(Rng& rng, std::size_t d, std::size_t length) {
  Walk w;
  w.dim = d;
  if (length == 0) return w;
  std::uniform_int_distribution<std::uint32_t> start(0, (std::uint32_t{1} << d) - 1);
  std::uniform_int_distribution<std::size_t> bit(0, d - 1);
  std::uint32_t v = start(rng);
  w.vertices.push_back(v);
  for (std::size_t i = 1; i < length; ++i) {
    v ^= std::uint32_t{1} << bit(rng);
    w.vertices.push_back(v);
  }
  return w;
}

}  // namespace ledgerkit::testsupport
