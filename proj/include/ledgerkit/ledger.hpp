#pragma once

// The atomic-tick, double-entry, quantized state machine. Balances live as
// signed 64-bit integers in units of an exact rational quantum; the quantum
// itself only matters at I/O boundaries, so no rounding can occur anywhere in
// the core. Every tick applies at most one event, posting +k/-k on the two
// endpoints of an existing edge.

#include <cstdint>
#include <numeric>
#include <vector>

#include "ledgerkit/flows.hpp"
#include "ledgerkit/graph.hpp"

namespace ledgerkit {

// The posting unit as a reduced positive rational p/q.
struct Quantum {
  std::int64_t num = 1;
  std::int64_t den = 1;

  static Quantum make(std::int64_t num, std::int64_t den) {
    if (num < 1 || den < 1) throw ValidationError("quantum must be a positive rational");
    if (std::gcd(num, den) != 1) throw ValidationError("quantum must be in reduced form");
    return {num, den};
  }

  friend bool operator==(const Quantum&, const Quantum&) = default;
};

class LedgerState {
public:
  LedgerState(GraphPtr g, Quantum q);
  LedgerState(GraphPtr g, Quantum q, std::vector<std::int64_t> units);

  const GraphPtr& graph() const noexcept { return graph_; }
  const Quantum& quantum() const noexcept { return quantum_; }

  std::int64_t units(const NodeId& id) const { return units_.at(graph_->node_index(id)); }
  std::int64_t units_at(std::size_t node) const { return units_.at(node); }
  const std::vector<std::int64_t>& all_units() const noexcept { return units_; }

  void set_units(const NodeId& id, std::int64_t k) { units_.at(graph_->node_index(id)) = k; }

  friend bool operator==(const LedgerState& a, const LedgerState& b) {
    return *a.graph_ == *b.graph_ && a.quantum_ == b.quantum_ && a.units_ == b.units_;
  }

private:
  GraphPtr graph_;
  Quantum quantum_;
  std::vector<std::int64_t> units_;  // by node index
};

// A tick's payload: nothing, or one directed posting of magnitude k on an
// edge (from -> to).
class Event {
public:
  static Event empty() { return Event(); }
  static Event post(NodeId from, NodeId to, std::int64_t magnitude) {
    Event e;
    e.empty_ = false;
    e.from_ = std::move(from);
    e.to_ = std::move(to);
    e.magnitude_ = magnitude;
    return e;
  }

  bool is_empty() const noexcept { return empty_; }
  const NodeId& from() const { return from_; }
  const NodeId& to() const { return to_; }
  std::int64_t magnitude() const noexcept { return magnitude_; }

  friend bool operator==(const Event&, const Event&) = default;

private:
  Event() = default;

  bool empty_ = true;
  NodeId from_;
  NodeId to_;
  std::int64_t magnitude_ = 0;
};

// The replayable unit: a graph, a quantum, an initial state, and one event
// per tick, ticks consecutive from 0 (the event list index is the tick).
struct Trace {
  GraphPtr graph;
  Quantum quantum;
  std::vector<std::int64_t> initial_units;  // by node index
  std::vector<Event> events;

  friend bool operator==(const Trace& a, const Trace& b) {
    return *a.graph == *b.graph && a.quantum == b.quantum &&
           a.initial_units == b.initial_units && a.events == b.events;
  }
};

// Post the event onto the state: balance(to) += k, balance(from) -= k, total
// conserved. Empty events leave the state untouched.
LedgerState apply_tick(const LedgerState& s, const Event& e, const RecognitionGraph& g);

// The event's sparse 1-cochain: +k on from -> to, -k on to -> from.
EdgeFlow per_tick_increment(const Event& e, const GraphPtr& g);

// Sum of all balances, in quantum units.
std::int64_t total_balance(const LedgerState& s);

struct ReplayOptions {
  // Restrict posting magnitudes to exactly +1 or -1.
  bool strict_unit = false;
};

struct ReplayResult {
  LedgerState final;
  std::vector<EdgeFlow> increments;  // one per tick
};

// Fold apply_tick over the events in tick order. Deterministic: equal traces
// produce equal results. The first failing tick aborts with its index.
ReplayResult replay(const Trace& t, const ReplayOptions& opts = {});

}  // namespace ledgerkit
