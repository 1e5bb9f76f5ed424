#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ltcol {

using Vertex = std::uint32_t;
using Colour = std::uint32_t;

// Thrown for any input that breaks a domain invariant (bad T set, loop edge,
// colouring of the wrong length, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline Colour colour_distance(Colour a, Colour b) noexcept {
  return a > b ? a - b : b - a;
}

// ---------------------------------------------------------------------------
// TSet
// ---------------------------------------------------------------------------

/// The forbidden-difference set T. Always contains 0, kept strictly
/// ascending, so max() is the last element.
class TSet {
 public:
  explicit TSet(std::vector<Colour> elements) : elements_(std::move(elements)) {
    if (elements_.empty() || elements_.front() != 0) {
      throw InvalidInput("T must contain 0");
    }
    for (std::size_t i = 1; i < elements_.size(); ++i) {
      if (elements_[i] <= elements_[i - 1]) {
        throw InvalidInput("T must be strictly ascending without duplicates");
      }
    }
    member_.assign(elements_.back() + 1, false);
    for (Colour e : elements_) member_[e] = true;
  }

  TSet(std::initializer_list<Colour> elements)
      : TSet(std::vector<Colour>(elements)) {}

  /// T = {0, 1, ..., p-1}; the set under which L(t,1) coincides with L(p,1).
  static TSet consecutive(Colour p) {
    if (p == 0) throw InvalidInput("consecutive T needs p >= 1");
    std::vector<Colour> e(p);
    for (Colour i = 0; i < p; ++i) e[i] = i;
    return TSet(std::move(e));
  }

  const std::vector<Colour>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }

  /// r = max{T}
  Colour max() const noexcept { return elements_.back(); }

  /// Number of integers in [0, r] that are not in T.
  Colour sigma() const noexcept {
    return max() + 1 - static_cast<Colour>(elements_.size());
  }

  bool contains(Colour d) const noexcept {
    return d < member_.size() && member_[d];
  }

  friend bool operator==(const TSet& a, const TSet& b) {
    return a.elements_ == b.elements_;
  }

 private:
  std::vector<Colour> elements_;
  std::vector<bool> member_;
};

// ---------------------------------------------------------------------------
// Graph
// ---------------------------------------------------------------------------

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1. Edges are stored normalised
/// (first < second), sorted and deduplicated. Immutable once built.
class Graph {
 public:
  Graph(std::size_t n, std::span<const Edge> edges) : n_(n), adj_(n) {
    if (n == 0) throw InvalidInput("graph must have at least one vertex");
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
      if (u >= n || v >= n) {
        throw InvalidInput("edge endpoint out of range: " + std::to_string(u) +
                           "-" + std::to_string(v));
      }
      if (u == v) throw InvalidInput("loop at vertex " + std::to_string(u));
      edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (auto [u, v] : edges_) {
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
  }

  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  explicit Graph(std::size_t n) : Graph(n, std::span<const Edge>{}) {}

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::size_t degree(Vertex v) const { return neighbours(v).size(); }

  /// Sorted neighbour list of v.
  std::span<const Vertex> neighbours(Vertex v) const {
    if (v >= n_) {
      throw InvalidInput("vertex out of range: " + std::to_string(v));
    }
    return adj_[v];
  }

  bool adjacent(Vertex u, Vertex v) const {
    auto nb = neighbours(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

inline std::span<const Vertex> neighbours(const Graph& g, Vertex v) {
  return g.neighbours(v);
}

/// For every vertex, the sorted list of vertices at shortest-path distance
/// exactly 2 (two-level expansion minus self and direct neighbours).
inline std::vector<std::vector<Vertex>> distance_two_lists(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<Vertex>> out(n);
  std::vector<std::size_t> stamp(n, n);  // stamp[x] == v  <=>  x seen from v
  for (Vertex v = 0; v < n; ++v) {
    stamp[v] = v;
    for (Vertex u : g.neighbours(v)) stamp[u] = v;
    for (Vertex u : g.neighbours(v)) {
      for (Vertex w : g.neighbours(u)) {
        if (stamp[w] != v) {
          stamp[w] = v;
          out[v].push_back(w);
        }
      }
    }
    std::sort(out[v].begin(), out[v].end());
  }
  return out;
}

/// Unordered pairs {u, v} (u < v) with d(u, v) == 2, sorted.
inline std::vector<Edge> distance_two_pairs(const Graph& g) {
  std::vector<Edge> pairs;
  auto lists = distance_two_lists(g);
  for (Vertex v = 0; v < lists.size(); ++v) {
    for (Vertex w : lists[v]) {
      if (v < w) pairs.emplace_back(v, w);
    }
  }
  return pairs;
}

// ---------------------------------------------------------------------------
// Colouring, Violation, SpanResult
// ---------------------------------------------------------------------------

/// Total assignment of non-negative colours, indexed by vertex id.
class Colouring {
 public:
  Colouring() = default;
  explicit Colouring(std::vector<Colour> colours)
      : colours_(std::move(colours)) {}
  Colouring(std::initializer_list<Colour> colours) : colours_(colours) {}

  std::size_t size() const noexcept { return colours_.size(); }
  bool empty() const noexcept { return colours_.empty(); }
  Colour operator[](Vertex v) const { return colours_[v]; }
  const std::vector<Colour>& values() const noexcept { return colours_; }

  auto begin() const noexcept { return colours_.begin(); }
  auto end() const noexcept { return colours_.end(); }

  friend bool operator==(const Colouring&, const Colouring&) = default;

 private:
  std::vector<Colour> colours_;
};

enum class ViolationKind { AdjacentDiffInT, DistanceTwoEqual };

inline std::string_view to_string(ViolationKind k) {
  return k == ViolationKind::AdjacentDiffInT ? "AdjacentDiffInT"
                                             : "DistanceTwoEqual";
}

/// One breach of the colouring rules. `detail` is the offending difference
/// for AdjacentDiffInT and the shared colour for DistanceTwoEqual. u < v.
struct Violation {
  ViolationKind kind;
  Vertex u;
  Vertex v;
  Colour detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

enum class Method { exact, brute_force, greedy, constructive };

inline std::string_view to_string(Method m) {
  switch (m) {
    case Method::exact: return "exact";
    case Method::brute_force: return "brute_force";
    case Method::greedy: return "greedy";
    case Method::constructive: return "constructive";
  }
  return "unknown";
}

struct SpanResult {
  Colour lambda = 0;
  Colouring witness;
  Method method = Method::exact;
  std::uint64_t nodes_explored = 0;
  std::chrono::nanoseconds elapsed{0};

  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(elapsed).count();
  }
};

/// Search ran out of its allowance (nodes, time, or a span ceiling) before
/// settling the span. Carries what was proven: every span below
/// `lower_bound` is infeasible, and `upper_bound`, when present, is attained
/// by some valid colouring.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, Colour lower,
                 std::optional<Colour> upper, std::uint64_t nodes)
      : std::runtime_error(what),
        lower_bound(lower),
        upper_bound(upper),
        nodes_explored(nodes) {}

  Colour lower_bound;
  std::optional<Colour> upper_bound;
  std::uint64_t nodes_explored;
};

}  // namespace ltcol
