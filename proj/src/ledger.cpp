#include "ledgerkit/ledger.hpp"

#include <string>

#include "ledgerkit/checked.hpp"

namespace ledgerkit {

LedgerState::LedgerState(GraphPtr g, Quantum q) : graph_(std::move(g)), quantum_(q) {
  units_.assign(graph_->node_count(), 0);
}

LedgerState::LedgerState(GraphPtr g, Quantum q, std::vector<std::int64_t> units)
    : graph_(std::move(g)), quantum_(q), units_(std::move(units)) {
  if (units_.size() != graph_->node_count())
    throw ValidationError("balance vector does not cover the graph's nodes");
}

LedgerState apply_tick(const LedgerState& s, const Event& e, const RecognitionGraph& g) {
  if (e.is_empty()) return s;
  if (!g.has_edge(e.from(), e.to()))
    throw TopologyError("no edge " + e.from() + " -> " + e.to());
  if (e.magnitude() == 0) throw DegenerateEventError("posting magnitude must be nonzero");

  const std::size_t from = s.graph()->node_index(e.from());
  const std::size_t to = s.graph()->node_index(e.to());
  std::vector<std::int64_t> units = s.all_units();
  units[to] = checked_add(units[to], e.magnitude());
  units[from] = checked_sub(units[from], e.magnitude());
  return LedgerState(s.graph(), s.quantum(), std::move(units));
}

EdgeFlow per_tick_increment(const Event& e, const GraphPtr& g) {
  EdgeFlow flow(g);
  if (e.is_empty()) return flow;
  if (e.magnitude() == 0) throw DegenerateEventError("posting magnitude must be nonzero");
  flow.add(e.from(), e.to(), e.magnitude());
  return flow;
}

std::int64_t total_balance(const LedgerState& s) {
  std::int64_t sum = 0;
  for (const std::int64_t k : s.all_units()) sum = checked_add(sum, k);
  return sum;
}

namespace {

std::string at_tick(std::size_t tick, const char* what) {
  return "tick " + std::to_string(tick) + ": " + what;
}

}  // namespace

ReplayResult replay(const Trace& t, const ReplayOptions& opts) {
  LedgerState state(t.graph, t.quantum, t.initial_units);
  std::vector<EdgeFlow> increments;
  increments.reserve(t.events.size());

  for (std::size_t tick = 0; tick < t.events.size(); ++tick) {
    const Event& e = t.events[tick];
    try {
      if (opts.strict_unit && !e.is_empty() && e.magnitude() != 1 && e.magnitude() != -1)
        throw ValidationError("posting magnitude is not a single unit");
      state = apply_tick(state, e, *t.graph);
      increments.push_back(per_tick_increment(e, t.graph));
    } catch (const TopologyError& ex) {
      throw TopologyError(at_tick(tick, ex.what()));
    } catch (const DegenerateEventError& ex) {
      throw DegenerateEventError(at_tick(tick, ex.what()));
    } catch (const OverflowError& ex) {
      throw OverflowError(at_tick(tick, ex.what()));
    } catch (const ValidationError& ex) {
      throw ValidationError(at_tick(tick, ex.what()));
    }
  }
  return {std::move(state), std::move(increments)};
}

}  // namespace ledgerkit
