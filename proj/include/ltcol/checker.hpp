#pragma once

#include <algorithm>
#include <vector>

#include "ltcol/core.hpp"

namespace ltcol {

/// All breaches of the L(t,1) rules by `c` on `g`: adjacent vertices whose
/// colour difference lies in T, and exact-distance-2 vertices sharing a
/// colour. Each offending unordered pair is reported once per rule, ordered
/// by (u, v) with adjacency violations first. Empty means `c` is valid.
inline std::vector<Violation> validate(const Graph& g, const TSet& t,
                                       const Colouring& c) {
  if (c.size() != g.order()) {
    throw InvalidInput("colouring has " + std::to_string(c.size()) +
                       " entries, graph has " + std::to_string(g.order()) +
                       " vertices");
  }
  std::vector<Violation> out;
  for (auto [u, v] : g.edges()) {
    Colour d = colour_distance(c[u], c[v]);
    if (t.contains(d)) out.push_back({ViolationKind::AdjacentDiffInT, u, v, d});
  }
  for (auto [u, v] : distance_two_pairs(g)) {
    if (c[u] == c[v]) {
      out.push_back({ViolationKind::DistanceTwoEqual, u, v, c[u]});
    }
  }
  return out;
}

inline bool is_valid(const Graph& g, const TSet& t, const Colouring& c) {
  return validate(g, t, c).empty();
}

/// Highest colour used.
inline Colour c_span(const Colouring& c) {
  if (c.empty()) throw InvalidInput("c-span of an empty colouring");
  return *std::max_element(c.begin(), c.end());
}

/// c'(v) = s + j - c(v), with s the largest colour of c.
inline Colouring complement(const Colouring& c, Colour j = 0) {
  const Colour s = c_span(c);
  std::vector<Colour> out;
  out.reserve(c.size());
  for (Colour x : c) out.push_back(s + j - x);
  return Colouring(std::move(out));
}

inline Colour sigma(const TSet& t) { return t.sigma(); }

/// Integers in (0, r) absent from T, ascending. Length equals sigma(t).
inline std::vector<Colour> missing_colours(const TSet& t) {
  std::vector<Colour> out;
  for (Colour x = 1; x < t.max(); ++x) {
    if (!t.contains(x)) out.push_back(x);
  }
  return out;
}

/// Shift so the smallest colour is 0.
inline Colouring normalize(const Colouring& c) {
  if (c.empty()) return c;
  const Colour lo = *std::min_element(c.begin(), c.end());
  std::vector<Colour> out;
  out.reserve(c.size());
  for (Colour x : c) out.push_back(x - lo);
  return Colouring(std::move(out));
}

}  // namespace ltcol
