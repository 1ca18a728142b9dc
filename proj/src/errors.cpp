#include "ledgerkit/errors.hpp"

namespace ledgerkit {

const char* to_string(ParseCode code) noexcept {
  switch (code) {
    case ParseCode::bad_header: return "bad_header";
    case ParseCode::unknown_directive: return "unknown_directive";
    case ParseCode::missing_token: return "missing_token";
    case ParseCode::trailing_token: return "trailing_token";
    case ParseCode::bad_integer: return "bad_integer";
    case ParseCode::bad_delta: return "bad_delta";
    case ParseCode::delta_not_positive: return "delta_not_positive";
    case ParseCode::delta_not_reduced: return "delta_not_reduced";
    case ParseCode::duplicate_delta: return "duplicate_delta";
    case ParseCode::missing_delta: return "missing_delta";
    case ParseCode::bad_node_id: return "bad_node_id";
    case ParseCode::duplicate_node: return "duplicate_node";
    case ParseCode::unknown_node: return "unknown_node";
    case ParseCode::self_loop: return "self_loop";
    case ParseCode::duplicate_edge: return "duplicate_edge";
    case ParseCode::unknown_edge: return "unknown_edge";
    case ParseCode::duplicate_init: return "duplicate_init";
    case ParseCode::duplicate_tick: return "duplicate_tick";
    case ParseCode::nonconsecutive_tick: return "nonconsecutive_tick";
    case ParseCode::zero_magnitude: return "zero_magnitude";
    case ParseCode::bad_bitstring: return "bad_bitstring";
    case ParseCode::inconsistent_length: return "inconsistent_length";
    case ParseCode::bad_dimension: return "bad_dimension";
  }
  return "unknown";
}

}  // namespace ledgerkit
