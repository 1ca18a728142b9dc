#pragma once

// Line-oriented text interchange for traces and walks. Parsing reports the
// exact line/column and a machine-checkable code for every failure; emission
// is canonical, so parse(emit(t)) == t and equal values serialize to
// byte-identical documents.
//
// Trace grammar, one directive per line ('#' comments and blank lines
// ignored):
//   ledger-trace v1
//   delta <p>/<q>
//   node <id>
//   edge <u> <v>
//   init <node> <k>
//   tick <t> empty | tick <t> <u> <v> <k>
//
// Walk files carry one MSB-first bitstring per line, with an optional
// '# d=<n>' dimension header before the first vertex.

#include <string>
#include <string_view>

#include "ledgerkit/ledger.hpp"
#include "ledgerkit/scheduler.hpp"

namespace ledgerkit {

Trace parse_trace(std::string_view text);

// Canonical form: header, delta, nodes ascending, edges ascending, nonzero
// initial balances ascending, ticks in order; single spaces, trailing newline.
std::string emit_trace(const Trace& t);

Walk parse_walk(std::string_view text);

// '# d=<n>' header followed by one bitstring per line.
std::string emit_walk(const Walk& w);

}  // namespace ledgerkit
