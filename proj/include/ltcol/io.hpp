#pragma once

#include <charconv>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <variant>
#include <vector>

#include "json.hpp"
#include "ltcol/checker.hpp"
#include "ltcol/core.hpp"
#include "ltcol/random.hpp"

namespace ltcol {

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <typename Int>
Int parse_int(std::string_view s, std::string_view what) {
  s = trim(s);
  Int value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw InvalidInput("bad " + std::string(what) + ": '" + std::string(s) + "'");
  }
  return value;
}

inline double parse_double(std::string_view s, std::string_view what) {
  std::string tmp(trim(s));
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(tmp, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (tmp.empty() || used != tmp.size()) {
    throw InvalidInput("bad " + std::string(what) + ": '" + tmp + "'");
  }
  return value;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// DIMACS-style graph files
//   c <comment>
//   p edge <n> <m>
//   e <u> <v>        1 <= u, v <= n, u != v
// ---------------------------------------------------------------------------

/// Parses the edge dialect. Duplicate edges collapse; a declared edge count
/// that disagrees with the distinct edges read is reported through
/// `warnings` (if given) rather than failing.
inline Graph parse_graph(std::string_view text,
                         std::vector<std::string>* warnings = nullptr) {
  std::size_t n = 0, declared = 0;
  bool have_header = false;
  std::vector<Edge> edges;
  std::istringstream in{std::string(text)};
  std::string line;
  for (std::size_t ln = 1; std::getline(in, line); ++ln) {
    auto body = detail::trim(line);
    if (body.empty() || body[0] == 'c') continue;
    std::istringstream fields{std::string(body)};
    std::string tag;
    fields >> tag;
    const std::string where = " at line " + std::to_string(ln);
    if (tag == "p") {
      std::string format;
      long long nv = -1, ne = -1;
      if (have_header) throw InvalidInput("duplicate header" + where);
      if (!(fields >> format >> nv >> ne) || (format != "edge" && format != "col") ||
          nv < 1 || ne < 0) {
        throw InvalidInput("malformed header" + where);
      }
      n = static_cast<std::size_t>(nv);
      declared = static_cast<std::size_t>(ne);
      have_header = true;
    } else if (tag == "e") {
      if (!have_header) throw InvalidInput("edge before header" + where);
      long long u = 0, v = 0;
      std::string extra;
      if (!(fields >> u >> v) || (fields >> extra)) {
        throw InvalidInput("malformed edge" + where);
      }
      if (u < 1 || v < 1 || static_cast<std::size_t>(u) > n ||
          static_cast<std::size_t>(v) > n) {
        throw InvalidInput("vertex index out of range" + where);
      }
      if (u == v) throw InvalidInput("loop" + where);
      edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    } else {
      throw InvalidInput("unrecognised line '" + std::string(body) + "'" + where);
    }
  }
  if (!have_header) throw InvalidInput("missing 'p edge' header");
  Graph g(n, edges);
  if (warnings && g.size() != declared) {
    warnings->push_back("header declares " + std::to_string(declared) +
                        " edges, found " + std::to_string(g.size()) +
                        " distinct");
  }
  return g;
}

inline std::string serialize_graph(const Graph& g) {
  std::string out = "p edge " + std::to_string(g.order()) + " " +
                    std::to_string(g.size()) + "\n";
  for (auto [u, v] : g.edges()) {
    out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// T sets and colour lists: "0,1,3"
// ---------------------------------------------------------------------------

inline std::vector<Colour> parse_colour_list(std::string_view text) {
  std::vector<Colour> out;
  if (detail::trim(text).empty()) return out;
  for (auto item : detail::split(text, ',')) {
    out.push_back(detail::parse_int<Colour>(item, "colour"));
  }
  return out;
}

inline TSet parse_tset(std::string_view text) {
  return TSet(parse_colour_list(text));
}

inline std::string format_colour_list(std::span<const Colour> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

inline std::string format_tset(const TSet& t) {
  return format_colour_list(t.elements());
}

// ---------------------------------------------------------------------------
// Graph families
// ---------------------------------------------------------------------------

namespace family {
struct Star { std::size_t leaves; };
struct Complete { std::size_t n; };
struct CompleteMultipartite { std::vector<std::size_t> sizes; };
struct Path { std::size_t n; };
struct Cycle { std::size_t n; };
struct Random {
  std::size_t n;
  double edge_probability;
  std::uint64_t seed;
};
}  // namespace family

using FamilySpec =
    std::variant<family::Star, family::Complete, family::CompleteMultipartite,
                 family::Path, family::Cycle, family::Random>;

/// "star:3", "complete:4", "kpartite:2,2,1" (alias "multipartite"),
/// "path:5", "cycle:6", "random:<n>,<p>,<seed>".
inline FamilySpec parse_family(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw InvalidInput("family spec needs the form kind:args, got '" +
                       std::string(text) + "'");
  }
  auto kind = detail::trim(text.substr(0, colon));
  auto args = detail::split(text.substr(colon + 1), ',');
  auto count = [&](std::size_t i) {
    return detail::parse_int<std::size_t>(args.at(i), "family argument");
  };
  auto want = [&](std::size_t k) {
    if (args.size() != k) {
      throw InvalidInput("family '" + std::string(kind) + "' takes " +
                         std::to_string(k) + " argument(s)");
    }
  };
  FamilySpec spec;
  if (kind == "star") {
    want(1);
    spec = family::Star{count(0)};
  } else if (kind == "complete") {
    want(1);
    spec = family::Complete{count(0)};
  } else if (kind == "kpartite" || kind == "multipartite") {
    family::CompleteMultipartite m;
    for (std::size_t i = 0; i < args.size(); ++i) m.sizes.push_back(count(i));
    spec = std::move(m);
  } else if (kind == "path") {
    want(1);
    spec = family::Path{count(0)};
  } else if (kind == "cycle") {
    want(1);
    spec = family::Cycle{count(0)};
  } else if (kind == "random") {
    want(3);
    spec = family::Random{count(0),
                          detail::parse_double(args[1], "edge probability"),
                          detail::parse_int<std::uint64_t>(args[2], "seed")};
  } else {
    throw InvalidInput("unknown family '" + std::string(kind) + "'");
  }
  return spec;
}

namespace detail {

struct Generator {
  Graph operator()(const family::Star& s) const {
    if (s.leaves < 1) throw InvalidInput("star needs at least one leaf");
    std::vector<Edge> e;
    for (Vertex v = 1; v <= s.leaves; ++v) e.emplace_back(0, v);
    return Graph(s.leaves + 1, e);
  }
  Graph operator()(const family::Complete& k) const {
    if (k.n < 1) throw InvalidInput("complete graph needs n >= 1");
    std::vector<Edge> e;
    for (Vertex u = 0; u < k.n; ++u)
      for (Vertex v = u + 1; v < k.n; ++v) e.emplace_back(u, v);
    return Graph(k.n, e);
  }
  Graph operator()(const family::CompleteMultipartite& m) const {
    if (m.sizes.empty()) throw InvalidInput("need at least one part");
    std::vector<std::size_t> part;
    for (std::size_t i = 0; i < m.sizes.size(); ++i) {
      if (m.sizes[i] < 1) throw InvalidInput("part sizes must be >= 1");
      part.insert(part.end(), m.sizes[i], i);
    }
    std::vector<Edge> e;
    for (Vertex u = 0; u < part.size(); ++u)
      for (Vertex v = u + 1; v < part.size(); ++v)
        if (part[u] != part[v]) e.emplace_back(u, v);
    return Graph(part.size(), e);
  }
  Graph operator()(const family::Path& p) const {
    if (p.n < 1) throw InvalidInput("path needs n >= 1");
    std::vector<Edge> e;
    for (Vertex v = 1; v < p.n; ++v) e.emplace_back(v - 1, v);
    return Graph(p.n, e);
  }
  Graph operator()(const family::Cycle& c) const {
    if (c.n < 3) throw InvalidInput("cycle needs n >= 3");
    std::vector<Edge> e;
    for (Vertex v = 0; v < c.n; ++v) {
      e.emplace_back(v, static_cast<Vertex>((v + 1) % c.n));
    }
    return Graph(c.n, e);
  }
  // Pairs (u, v), u < v, in lexicographic order; each consumes one draw and
  // is kept when next_double() < edge_probability.
  Graph operator()(const family::Random& r) const {
    if (r.n < 1) throw InvalidInput("random graph needs n >= 1");
    if (!(r.edge_probability >= 0.0 && r.edge_probability <= 1.0)) {
      throw InvalidInput("edge probability must lie in [0, 1]");
    }
    Xoshiro256 rng(r.seed);
    std::vector<Edge> e;
    for (Vertex u = 0; u < r.n; ++u)
      for (Vertex v = u + 1; v < r.n; ++v)
        if (rng.next_double() < r.edge_probability) e.emplace_back(u, v);
    return Graph(r.n, e);
  }
};

}  // namespace detail

inline Graph generate(const FamilySpec& spec) {
  return std::visit(detail::Generator{}, spec);
}

// ---------------------------------------------------------------------------
// Result output
// ---------------------------------------------------------------------------

/// {"lambda", "method", "colours", "tset", "sigma", "nodes_explored",
///  "elapsed_ms"} in that order.
inline nlohmann::ordered_json result_json(const SpanResult& r, const TSet& t) {
  nlohmann::ordered_json j;
  j["lambda"] = r.lambda;
  j["method"] = std::string(to_string(r.method));
  j["colours"] = r.witness.values();
  j["tset"] = t.elements();
  j["sigma"] = t.sigma();
  j["nodes_explored"] = r.nodes_explored;
  j["elapsed_ms"] = r.elapsed_ms();
  return j;
}

inline std::string emit_result(const SpanResult& r, const Graph& g,
                               const TSet& t) {
  if (r.witness.size() != g.order()) {
    throw InvalidInput("result witness does not match the graph");
  }
  return result_json(r, t).dump();
}

}  // namespace ltcol
