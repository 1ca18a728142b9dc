#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ledgerkit {

// Base class for everything this library throws on bad input or bad data.
class Error : public std::runtime_error {
public:
  explicit Error(std::string msg) : std::runtime_error(std::move(msg)) {}
};

// Argument outside a function's mathematical domain (non-positive ratio,
// zero calibration offset, negative tolerance).
class DomainError : public Error {
public:
  using Error::Error;
};

// Structurally invalid input: duplicate node, self-loop, mismatched forest,
// inconsistent walk, coverage mismatch.
class ValidationError : public Error {
public:
  using Error::Error;
};

// Index, window, or dimension outside the permitted range.
class BoundsError : public Error {
public:
  using Error::Error;
};

// Node or edge not present in the graph an operation was given.
class TopologyError : public Error {
public:
  using Error::Error;
};

// A posting with zero magnitude.
class DegenerateEventError : public Error {
public:
  using Error::Error;
};

// Checked 64-bit arithmetic overflowed. Balances and flows never wrap.
class OverflowError : public Error {
public:
  using Error::Error;
};

// Brute-force oracle invoked on an instance too large for enumeration.
class SizeError : public Error {
public:
  using Error::Error;
};

// Iteration limit reached before convergence; carries the last iterate.
class IterationLimitError : public Error {
public:
  IterationLimitError(std::string msg, double last_iterate)
      : Error(std::move(msg)), last_iterate_(last_iterate) {}

  double last_iterate() const noexcept { return last_iterate_; }

private:
  double last_iterate_;
};

// A cumulative flow failed cycle closure. Carries the offending fundamental
// cycle (as a closed node walk) and its flux so callers can report an
// actionable counterexample instead of a bare boolean.
class ClosureError : public Error {
public:
  ClosureError(std::string msg, std::vector<std::string> cycle_nodes, std::int64_t flux)
      : Error(std::move(msg)), cycle_nodes_(std::move(cycle_nodes)), flux_(flux) {}

  const std::vector<std::string>& cycle_nodes() const noexcept { return cycle_nodes_; }
  std::int64_t flux() const noexcept { return flux_; }

private:
  std::vector<std::string> cycle_nodes_;
  std::int64_t flux_;
};

// Machine-checkable reason a document failed to parse. Each code names one
// grammar or consistency rule so tests can assert the exact failure.
enum class ParseCode {
  bad_header,
  unknown_directive,
  missing_token,
  trailing_token,
  bad_integer,
  bad_delta,
  delta_not_positive,
  delta_not_reduced,
  duplicate_delta,
  missing_delta,
  bad_node_id,
  duplicate_node,
  unknown_node,
  self_loop,
  duplicate_edge,
  unknown_edge,
  duplicate_init,
  duplicate_tick,
  nonconsecutive_tick,
  zero_magnitude,
  bad_bitstring,
  inconsistent_length,
  bad_dimension,
};

const char* to_string(ParseCode code) noexcept;

// Parse failure with a 1-based position of the offending token.
class ParseError : public Error {
public:
  ParseError(ParseCode code, std::size_t line, std::size_t column, std::string msg)
      : Error(std::move(msg)), code_(code), line_(line), column_(column) {}

  ParseCode code() const noexcept { return code_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  ParseCode code_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace ledgerkit
