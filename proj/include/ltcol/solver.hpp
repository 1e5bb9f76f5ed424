#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <thread>
#include <vector>

#include "ltcol/checker.hpp"
#include "ltcol/core.hpp"
#include "ltcol/random.hpp"

namespace ltcol {

struct Budget {
  std::uint64_t max_nodes = 10'000'000;
  std::chrono::milliseconds max_time{60'000};

  static Budget unlimited() {
    return {std::numeric_limits<std::uint64_t>::max(),
            std::chrono::milliseconds::max()};
  }
};

enum class SpanStrategy { iterative, binary };

struct ExactOptions {
  Budget budget{};
  SpanStrategy strategy = SpanStrategy::iterative;
  // >1 splits the first vertex's colour choices across threads. lambda is
  // unaffected; witness and nodes_explored are then not reproducible.
  unsigned workers = 1;
};

/// Vertices by descending degree, ties by smallest id.
inline std::vector<Vertex> degree_order(const Graph& g) {
  std::vector<Vertex> order(g.order());
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return g.degree(a) > g.degree(b);
  });
  return order;
}

namespace detail {

struct BudgetHit {};

// Shared bookkeeping for one or more concurrent searches.
struct SearchControl {
  SearchControl(const Budget& b, std::chrono::steady_clock::time_point start)
      : max_nodes(b.max_nodes),
        deadline(b.max_time == std::chrono::milliseconds::max()
                     ? std::chrono::steady_clock::time_point::max()
                     : start + b.max_time) {}

  std::uint64_t max_nodes;
  std::chrono::steady_clock::time_point deadline;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> exhausted{false};
};

// Backtracking feasibility search for a fixed span. Vertices are coloured in
// degree order; each vertex only checks constraints against vertices that
// precede it in that order.
class SpanSearch {
 public:
  SpanSearch(const Graph& g, const TSet& t)
      : t_(t), order_(degree_order(g)), earlier_adj_(g.order()),
        earlier_d2_(g.order()) {
    const std::size_t n = g.order();
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[order_[i]] = i;
    auto d2 = distance_two_lists(g);
    for (std::size_t i = 0; i < n; ++i) {
      Vertex v = order_[i];
      for (Vertex u : g.neighbours(v)) {
        if (pos[u] < i) earlier_adj_[i].push_back(pos[u]);
      }
      for (Vertex u : d2[v]) {
        if (pos[u] < i) earlier_d2_[i].push_back(pos[u]);
      }
    }
  }

  std::size_t order() const { return order_.size(); }

  // Searches span s with the first vertex fixed to colours in
  // [root_lo, root_hi]. Returns the colouring indexed by vertex id.
  std::optional<Colouring> run(Colour s, bool require_zero, Colour root_lo,
                               Colour root_hi, SearchControl& ctl,
                               std::uint64_t& local_nodes) const {
    Frame f{s, require_zero, std::vector<Colour>(order_.size()), 0, ctl,
            local_nodes};
    bool found = false;
    for (Colour x = root_lo; x <= std::min(root_hi, s) && !found; ++x) {
      if (ctl.stop.load(std::memory_order_relaxed)) break;
      found = place(f, 0, x);
    }
    if (!found) return std::nullopt;
    std::vector<Colour> by_vertex(order_.size());
    for (std::size_t i = 0; i < order_.size(); ++i) {
      by_vertex[order_[i]] = f.colour[i];
    }
    return Colouring(std::move(by_vertex));
  }

 private:
  struct Frame {
    Colour span;
    bool require_zero;
    std::vector<Colour> colour;  // by position in order_
    std::size_t zeros;
    SearchControl& ctl;
    std::uint64_t& nodes;
  };

  bool fits(const Frame& f, std::size_t i, Colour x) const {
    for (std::size_t p : earlier_adj_[i]) {
      if (t_.contains(colour_distance(x, f.colour[p]))) return false;
    }
    for (std::size_t p : earlier_d2_[i]) {
      if (f.colour[p] == x) return false;
    }
    return true;
  }

  void tick(Frame& f) const {
    ++f.nodes;
    std::uint64_t total = f.ctl.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (total > f.ctl.max_nodes) throw BudgetHit{};
    if ((f.nodes & 0xfff) == 0 &&
        std::chrono::steady_clock::now() > f.ctl.deadline) {
      throw BudgetHit{};
    }
  }

  // Assigns colour x at position i (already known to fit) and extends.
  bool place(Frame& f, std::size_t i, Colour x) const {
    tick(f);
    f.colour[i] = x;
    if (x == 0) ++f.zeros;
    bool ok = false;
    if (i + 1 == order_.size()) {
      ok = !f.require_zero || f.zeros > 0;
    } else if (!f.ctl.stop.load(std::memory_order_relaxed)) {
      for (Colour y = 0; y <= f.span && !ok; ++y) {
        if (fits(f, i + 1, y)) ok = place(f, i + 1, y);
      }
    }
    if (x == 0 && !ok) --f.zeros;
    return ok;
  }

  const TSet& t_;
  std::vector<Vertex> order_;
  std::vector<std::vector<std::size_t>> earlier_adj_;
  std::vector<std::vector<std::size_t>> earlier_d2_;
};

// One feasibility probe at span s, possibly split across workers.
inline std::optional<Colouring> probe(const SpanSearch& search, Colour s,
                                      bool require_zero, unsigned workers,
                                      SearchControl& ctl) {
  ctl.stop = false;
  if (workers <= 1) {
    std::uint64_t local = 0;
    try {
      return search.run(s, require_zero, 0, s, ctl, local);
    } catch (const BudgetHit&) {
      ctl.exhausted = true;
      return std::nullopt;
    }
  }

  std::vector<std::optional<Colouring>> found(s + 1);
  std::atomic<Colour> next_root{0};
  auto work = [&] {
    std::uint64_t local = 0;
    for (Colour x = next_root++; x <= s; x = next_root++) {
      if (ctl.stop) return;
      try {
        found[x] = search.run(s, require_zero, x, x, ctl, local);
      } catch (const BudgetHit&) {
        ctl.exhausted = true;
        ctl.stop = true;
        return;
      }
      if (found[x]) ctl.stop = true;
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  for (auto& c : found) {
    if (c) return c;
  }
  return std::nullopt;
}

}  // namespace detail

/// A valid colouring with every colour in [0, s], or nullopt if none exists.
/// Deterministic: the first complete assignment in (degree order, ascending
/// colours) is returned.
inline std::optional<Colouring> feasible_with_span(
    const Graph& g, const TSet& t, Colour s,
    const Budget& budget = Budget::unlimited()) {
  detail::SpanSearch search(g, t);
  detail::SearchControl ctl(budget, std::chrono::steady_clock::now());
  auto c = detail::probe(search, s, false, 1, ctl);
  if (ctl.exhausted) {
    throw BudgetExceeded("feasibility search exceeded its budget at span " +
                             std::to_string(s),
                         0, std::nullopt, ctl.nodes.load());
  }
  return c;
}

enum class OrderPolicy { degree_desc, id_asc, random };

struct GreedyOrder {
  OrderPolicy policy = OrderPolicy::degree_desc;
  std::uint64_t seed = 0;
};

/// First-fit: each vertex in turn takes the smallest colour compatible with
/// its already coloured neighbours and distance-2 vertices. Always succeeds;
/// the resulting lambda is only an upper bound.
inline SpanResult greedy_upper_bound(const Graph& g, const TSet& t,
                                     GreedyOrder order = {}) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Vertex> seq;
  switch (order.policy) {
    case OrderPolicy::degree_desc:
      seq = degree_order(g);
      break;
    case OrderPolicy::id_asc:
    case OrderPolicy::random:
      seq.resize(g.order());
      std::iota(seq.begin(), seq.end(), Vertex{0});
      if (order.policy == OrderPolicy::random) {
        Xoshiro256 rng(order.seed);
        shuffle(seq, rng);
      }
      break;
  }

  const auto d2 = distance_two_lists(g);
  std::vector<Colour> colour(g.order());
  std::vector<bool> done(g.order(), false);
  SpanResult res;
  res.method = Method::greedy;
  for (Vertex v : seq) {
    for (Colour x = 0;; ++x) {
      ++res.nodes_explored;
      bool ok = true;
      for (Vertex u : g.neighbours(v)) {
        if (done[u] && t.contains(colour_distance(x, colour[u]))) {
          ok = false;
          break;
        }
      }
      for (Vertex u : d2[v]) {
        if (!ok) break;
        if (done[u] && colour[u] == x) ok = false;
      }
      if (ok) {
        colour[v] = x;
        done[v] = true;
        break;
      }
    }
  }
  res.witness = Colouring(std::move(colour));
  res.lambda = c_span(res.witness);
  res.elapsed = std::chrono::steady_clock::now() - start;
  return res;
}

/// The L(t,1)-span: smallest s for which a valid colouring within [0, s]
/// exists, with a witness. Spans are probed from 0 upwards (or by bisection
/// under the greedy bound). Accepted assignments must use colour 0, which
/// loses nothing because shifting down preserves validity. Throws
/// BudgetExceeded with the bounds proven so far if the budget runs out.
inline SpanResult exact_span(const Graph& g, const TSet& t,
                             const ExactOptions& opts = {}) {
  const auto start = std::chrono::steady_clock::now();
  const SpanResult greedy = greedy_upper_bound(g, t);
  detail::SpanSearch search(g, t);
  detail::SearchControl ctl(opts.budget, start);

  auto give_up = [&](Colour lower) -> BudgetExceeded {
    return BudgetExceeded("exact search exceeded its budget; span lies in [" +
                              std::to_string(lower) + ", " +
                              std::to_string(greedy.lambda) + "]",
                          lower, greedy.lambda, ctl.nodes.load());
  };

  SpanResult res;
  res.method = Method::exact;
  if (opts.strategy == SpanStrategy::iterative) {
    for (Colour s = 0;; ++s) {
      auto c = detail::probe(search, s, true, opts.workers, ctl);
      if (ctl.exhausted) throw give_up(s);
      if (c) {
        res.lambda = s;
        res.witness = std::move(*c);
        break;
      }
    }
  } else {
    Colour lo = 0, hi = greedy.lambda;
    std::optional<Colouring> best;
    while (lo < hi) {
      Colour mid = lo + (hi - lo) / 2;
      auto c = detail::probe(search, mid, true, opts.workers, ctl);
      if (ctl.exhausted) throw give_up(lo);
      if (c) {
        hi = mid;
        best = std::move(c);
      } else {
        lo = mid + 1;
      }
    }
    if (!best) {
      best = detail::probe(search, hi, true, opts.workers, ctl);
      if (ctl.exhausted) throw give_up(lo);
    }
    res.lambda = hi;
    res.witness = std::move(*best);
  }
  res.nodes_explored = ctl.nodes.load();
  res.elapsed = std::chrono::steady_clock::now() - start;
  return res;
}

// ---------------------------------------------------------------------------
// Brute-force oracle. Deliberately independent of SpanSearch: it computes
// its own distance matrix and enumerates every assignment.
// ---------------------------------------------------------------------------

struct BruteForceGuard {
  std::size_t max_vertices = 8;
  Colour max_span = 12;
};

namespace detail {

inline constexpr unsigned kUnreachable = std::numeric_limits<unsigned>::max() / 2;

// Floyd-Warshall over the adjacency matrix.
inline std::vector<std::vector<unsigned>> distance_matrix(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<unsigned>> d(n, std::vector<unsigned>(n, kUnreachable));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

}  // namespace detail

/// Tries every assignment of colours {0..s} for s = 0, 1, ..., max_span and
/// returns the first s that admits a valid one. Refuses instances beyond the
/// guard (n > 8 or max_span > 12 by default).
inline SpanResult brute_force_span(const Graph& g, const TSet& t,
                                   Colour max_span = 12,
                                   BruteForceGuard guard = {}) {
  const std::size_t n = g.order();
  if (n > guard.max_vertices) {
    throw InvalidInput("brute force refuses " + std::to_string(n) +
                       " vertices (limit " + std::to_string(guard.max_vertices) +
                       ")");
  }
  if (max_span > guard.max_span) {
    throw InvalidInput("brute force refuses max span " +
                       std::to_string(max_span) + " (limit " +
                       std::to_string(guard.max_span) + ")");
  }

  const auto start = std::chrono::steady_clock::now();
  const auto dist = detail::distance_matrix(g);
  auto ok = [&](const std::vector<Colour>& c) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        Colour diff = c[i] > c[j] ? c[i] - c[j] : c[j] - c[i];
        if (dist[i][j] == 1 && t.contains(diff)) return false;
        if (dist[i][j] == 2 && diff == 0) return false;
      }
    }
    return true;
  };

  SpanResult res;
  res.method = Method::brute_force;
  for (Colour s = 0; s <= max_span; ++s) {
    std::vector<Colour> c(n, 0);
    while (true) {
      ++res.nodes_explored;
      if (ok(c)) {
        res.lambda = s;
        res.witness = Colouring(std::move(c));
        res.elapsed = std::chrono::steady_clock::now() - start;
        return res;
      }
      // Lexicographic odometer: the last vertex varies fastest.
      std::size_t k = n;
      while (k > 0 && c[k - 1] == s) c[--k] = 0;
      if (k == 0) break;
      ++c[k - 1];
    }
  }
  throw BudgetExceeded("no valid colouring with span <= " +
                           std::to_string(max_span),
                       max_span + 1, std::nullopt, res.nodes_explored);
}

}  // namespace ltcol
