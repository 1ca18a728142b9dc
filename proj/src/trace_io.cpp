#include "ledgerkit/trace_io.hpp"

#include <charconv>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

namespace ledgerkit {

namespace {

struct Tok {
  std::string_view text;
  std::size_t col;  // 1-based
};

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::vector<Tok> tokenize(std::string_view line) {
  const std::size_t cut = line.find('#');
  if (cut != std::string_view::npos) line = line.substr(0, cut);

  std::vector<Tok> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    toks.push_back({line.substr(i, j - i), i + 1});
    i = j;
  }
  return toks;
}

[[noreturn]] void fail(ParseCode code, std::size_t line, std::size_t col, std::string msg) {
  throw ParseError(code, line, col, std::move(msg));
}

bool parse_i64(std::string_view s, std::int64_t& out) {
  const char* last = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), last, out);
  return ec == std::errc() && ptr == last && !s.empty();
}

bool parse_u64(std::string_view s, std::uint64_t& out) {
  const char* last = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), last, out);
  return ec == std::errc() && ptr == last && !s.empty();
}

bool valid_id(std::string_view s) {
  if (s.empty()) return false;
  for (const char c : s) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                    c == '_' || c == '-' || c == '.' || c == ':';
    if (!ok) return false;
  }
  return true;
}

std::size_t end_col(const std::vector<Tok>& toks) {
  const Tok& last = toks.back();
  return last.col + last.text.size();
}

void need_exact(const std::vector<Tok>& toks, std::size_t n, std::size_t lineno,
                const char* shape) {
  if (toks.size() < n)
    fail(ParseCode::missing_token, lineno, end_col(toks),
         std::string("expected `") + shape + "`");
  if (toks.size() > n)
    fail(ParseCode::trailing_token, lineno, toks[n].col,
         "unexpected trailing token: " + std::string(toks[n].text));
}

Quantum parse_quantum(const Tok& tk, std::size_t lineno) {
  const std::string_view s = tk.text;
  const std::size_t slash = s.find('/');
  std::int64_t p = 0;
  std::int64_t q = 0;
  if (slash == std::string_view::npos || s.find('/', slash + 1) != std::string_view::npos ||
      !parse_i64(s.substr(0, slash), p) || !parse_i64(s.substr(slash + 1), q))
    fail(ParseCode::bad_delta, lineno, tk.col, "delta must be `<p>/<q>` with integer parts");
  if (p < 1 || q < 1)
    fail(ParseCode::delta_not_positive, lineno, tk.col, "delta must be a positive rational");
  if (std::gcd(p, q) != 1)
    fail(ParseCode::delta_not_reduced, lineno, tk.col, "delta must be in reduced form");
  return Quantum::make(p, q);
}

}  // namespace

Trace parse_trace(std::string_view text) {
  const auto lines = split_lines(text);

  bool header_seen = false;
  std::optional<Quantum> delta;
  std::vector<NodeId> nodes;
  std::set<NodeId> node_set;
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::set<std::pair<NodeId, NodeId>> edge_set;  // normalized lo < hi
  std::map<NodeId, std::int64_t> inits;
  std::vector<Event> events;

  for (std::size_t li = 0; li < lines.size(); ++li) {
    const std::size_t lineno = li + 1;
    const auto toks = tokenize(lines[li]);
    if (toks.empty()) continue;

    if (!header_seen) {
      if (toks[0].text != "ledger-trace" || toks.size() != 2 || toks[1].text != "v1")
        fail(ParseCode::bad_header, lineno, toks[0].col, "expected header `ledger-trace v1`");
      header_seen = true;
      continue;
    }

    const auto known_node = [&](const Tok& tk) -> NodeId {
      NodeId id(tk.text);
      if (!node_set.contains(id))
        fail(ParseCode::unknown_node, lineno, tk.col, "unknown node: " + id);
      return id;
    };

    const std::string_view kw = toks[0].text;
    if (kw == "delta") {
      need_exact(toks, 2, lineno, "delta <p>/<q>");
      if (delta)
        fail(ParseCode::duplicate_delta, lineno, toks[1].col, "delta already declared");
      delta = parse_quantum(toks[1], lineno);
    } else if (kw == "node") {
      need_exact(toks, 2, lineno, "node <id>");
      // `empty` is reserved: it marks eventless ticks, so a node with that
      // label could not round-trip through the tick grammar.
      if (!valid_id(toks[1].text) || toks[1].text == "empty")
        fail(ParseCode::bad_node_id, lineno, toks[1].col,
             "invalid node label: " + std::string(toks[1].text));
      NodeId id(toks[1].text);
      if (!node_set.insert(id).second)
        fail(ParseCode::duplicate_node, lineno, toks[1].col, "duplicate node: " + id);
      nodes.push_back(std::move(id));
    } else if (kw == "edge") {
      need_exact(toks, 3, lineno, "edge <u> <v>");
      const NodeId u = known_node(toks[1]);
      const NodeId v = known_node(toks[2]);
      if (u == v)
        fail(ParseCode::self_loop, lineno, toks[2].col, "self-loop on node: " + u);
      const auto key = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
      if (!edge_set.insert(key).second)
        fail(ParseCode::duplicate_edge, lineno, toks[1].col, "duplicate edge: " + u + " " + v);
      edges.emplace_back(u, v);
    } else if (kw == "init") {
      need_exact(toks, 3, lineno, "init <node> <k>");
      const NodeId id = known_node(toks[1]);
      std::int64_t k = 0;
      if (!parse_i64(toks[2].text, k))
        fail(ParseCode::bad_integer, lineno, toks[2].col,
             "invalid integer: " + std::string(toks[2].text));
      if (!inits.emplace(id, k).second)
        fail(ParseCode::duplicate_init, lineno, toks[1].col, "node already initialized: " + id);
    } else if (kw == "tick") {
      if (toks.size() < 2)
        fail(ParseCode::missing_token, lineno, end_col(toks), "expected tick index");
      std::uint64_t t = 0;
      if (!parse_u64(toks[1].text, t))
        fail(ParseCode::bad_integer, lineno, toks[1].col,
             "tick index must be a nonnegative integer");
      const std::uint64_t expected = events.size();
      if (t < expected)
        fail(ParseCode::duplicate_tick, lineno, toks[1].col,
             "tick " + std::to_string(t) + " already recorded");
      if (t > expected)
        fail(ParseCode::nonconsecutive_tick, lineno, toks[1].col,
             "expected tick " + std::to_string(expected) + ", got " + std::to_string(t));

      if (toks.size() >= 3 && toks[2].text == "empty") {
        if (toks.size() > 3)
          fail(ParseCode::trailing_token, lineno, toks[3].col,
               "unexpected token after `empty`");
        events.push_back(Event::empty());
      } else {
        need_exact(toks, 5, lineno, "tick <t> empty` or `tick <t> <u> <v> <k>");
        const NodeId u = known_node(toks[2]);
        const NodeId v = known_node(toks[3]);
        if (u == v)
          fail(ParseCode::self_loop, lineno, toks[3].col, "self-loop on node: " + u);
        const auto key = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
        if (!edge_set.contains(key))
          fail(ParseCode::unknown_edge, lineno, toks[2].col,
               "no declared edge between " + u + " and " + v);
        std::int64_t k = 0;
        if (!parse_i64(toks[4].text, k))
          fail(ParseCode::bad_integer, lineno, toks[4].col,
               "invalid integer: " + std::string(toks[4].text));
        if (k == 0)
          fail(ParseCode::zero_magnitude, lineno, toks[4].col,
               "posting magnitude must be nonzero");
        events.push_back(Event::post(u, v, k));
      }
    } else {
      fail(ParseCode::unknown_directive, lineno, toks[0].col,
           "unknown directive: " + std::string(kw));
    }
  }

  if (!header_seen)
    fail(ParseCode::bad_header, lines.size() + 1, 1, "missing `ledger-trace v1` header");
  if (!delta)
    fail(ParseCode::missing_delta, lines.size() + 1, 1, "missing delta directive");

  Trace t;
  t.graph = RecognitionGraph::build(nodes, edges);
  t.quantum = *delta;
  t.initial_units.assign(t.graph->node_count(), 0);
  for (const auto& [id, k] : inits) t.initial_units[t.graph->node_index(id)] = k;
  t.events = std::move(events);
  return t;
}

std::string emit_trace(const Trace& t) {
  if (t.initial_units.size() != t.graph->node_count())
    throw ValidationError("trace balance vector does not cover the graph's nodes");
  if (t.graph->has_node("empty"))
    throw ValidationError("node label `empty` cannot round-trip through the trace grammar");

  std::string out;
  out += "ledger-trace v1\n";
  out += "delta " + std::to_string(t.quantum.num) + "/" + std::to_string(t.quantum.den) + "\n";
  for (const NodeId& id : t.graph->nodes()) out += "node " + id + "\n";
  for (const UndirectedEdge& e : t.graph->undirected_edges())
    out += "edge " + e.lo + " " + e.hi + "\n";
  for (std::size_t i = 0; i < t.graph->node_count(); ++i)
    if (t.initial_units[i] != 0)
      out += "init " + t.graph->node_at(i) + " " + std::to_string(t.initial_units[i]) + "\n";
  for (std::size_t tick = 0; tick < t.events.size(); ++tick) {
    const Event& e = t.events[tick];
    out += "tick " + std::to_string(tick);
    if (e.is_empty())
      out += " empty";
    else
      out += " " + e.from() + " " + e.to() + " " + std::to_string(e.magnitude());
    out += "\n";
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Walk parse_walk(std::string_view text) {
  const auto lines = split_lines(text);

  bool have_dim = false;
  bool dim_from_header = false;
  std::size_t dim = 0;
  std::vector<std::uint32_t> vertices;

  for (std::size_t li = 0; li < lines.size(); ++li) {
    const std::size_t lineno = li + 1;
    const std::string_view line = lines[li];

    const std::size_t first = line.find_first_not_of(" \t");
    if (first != std::string_view::npos && line[first] == '#') {
      const std::string_view body = trim(line.substr(first + 1));
      if (body.size() >= 2 && body.substr(0, 2) == "d=") {
        std::uint64_t n = 0;
        if (!parse_u64(body.substr(2), n))
          fail(ParseCode::bad_dimension, lineno, first + 1,
               "malformed dimension header, expected `# d=<n>`");
        if (dim_from_header || !vertices.empty())
          fail(ParseCode::bad_dimension, lineno, first + 1,
               "dimension header must appear once, before any vertex");
        if (n < 1 || n > kMaxDimension)
          fail(ParseCode::bad_dimension, lineno, first + 1,
               "dimension must be between 1 and " + std::to_string(kMaxDimension));
        dim = static_cast<std::size_t>(n);
        have_dim = true;
        dim_from_header = true;
      }
      continue;
    }

    const auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks.size() > 1)
      fail(ParseCode::trailing_token, lineno, toks[1].col, "one vertex per line");

    const Tok& tk = toks[0];
    for (std::size_t i = 0; i < tk.text.size(); ++i)
      if (tk.text[i] != '0' && tk.text[i] != '1')
        fail(ParseCode::bad_bitstring, lineno, tk.col + i,
             "vertex must be a bitstring of 0s and 1s");

    if (!have_dim) {
      if (tk.text.size() > kMaxDimension)
        fail(ParseCode::bad_dimension, lineno, tk.col,
             "vertex length must be between 1 and " + std::to_string(kMaxDimension) + " bits");
      dim = tk.text.size();
      have_dim = true;
    } else if (tk.text.size() != dim) {
      fail(ParseCode::inconsistent_length, lineno, tk.col,
           "vertex has " + std::to_string(tk.text.size()) + " bits, expected " +
               std::to_string(dim));
    }

    std::uint32_t v = 0;
    for (const char c : tk.text) v = (v << 1) | static_cast<std::uint32_t>(c == '1');
    vertices.push_back(v);
  }

  if (!have_dim)
    fail(ParseCode::bad_dimension, lines.size() + 1, 1,
         "cannot determine dimension: no header and no vertices");
  return Walk{dim, std::move(vertices)};
}

std::string emit_walk(const Walk& w) {
  if (w.dim < 1 || w.dim > kMaxDimension)
    throw ValidationError("walk dimension out of range");
  const std::uint32_t limit = std::uint32_t{1} << w.dim;

  std::string out = "# d=" + std::to_string(w.dim) + "\n";
  for (const std::uint32_t v : w.vertices) {
    if (v >= limit) throw ValidationError("vertex does not fit the declared dimension");
    out += vertex_bits(v, w.dim) + "\n";
  }
  return out;
}

}  // namespace ledgerkit
