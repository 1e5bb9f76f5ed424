#pragma once

#include <chrono>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "ltcol/checker.hpp"
#include "ltcol/core.hpp"
#include "ltcol/solver.hpp"

namespace ltcol {

// ---------------------------------------------------------------------------
// Stars K_{1,n}: vertex 0 is the centre, 1..n the leaves.
// ---------------------------------------------------------------------------

struct StarPrediction {
  enum class Mode { Exact, StrictUpperBound };
  Mode mode;
  Colour value;

  friend bool operator==(const StarPrediction&, const StarPrediction&) = default;
};

inline std::string_view to_string(StarPrediction::Mode m) {
  return m == StarPrediction::Mode::Exact ? "exact" : "strict_upper_bound";
}

/// sigma < n: the span is exactly n - sigma + r.
/// sigma >= n: the span is strictly below r.
inline StarPrediction star_span_predicted(std::size_t n, const TSet& t) {
  if (n == 0) throw InvalidInput("star needs at least one leaf");
  const Colour s = t.sigma();
  const Colour r = t.max();
  if (s < n) {
    return {StarPrediction::Mode::Exact, static_cast<Colour>(n) - s + r};
  }
  return {StarPrediction::Mode::StrictUpperBound, r};
}

/// Centre 0; leaves take the gaps of T below r in ascending order, then
/// r+1, r+2, ... once the gaps run out.
inline Colouring star_colouring(std::size_t n, const TSet& t) {
  if (n == 0) throw InvalidInput("star needs at least one leaf");
  const auto gaps = missing_colours(t);
  std::vector<Colour> c;
  c.reserve(n + 1);
  c.push_back(0);
  for (std::size_t i = 0; i < n; ++i) {
    if (i < gaps.size()) {
      c.push_back(gaps[i]);
    } else {
      c.push_back(t.max() + static_cast<Colour>(i - gaps.size()) + 1);
    }
  }
  return Colouring(std::move(c));
}

// ---------------------------------------------------------------------------
// Complete multipartite graphs. Parts occupy consecutive id blocks in the
// order given.
// ---------------------------------------------------------------------------

/// r*k + (sum of part sizes) - 1. For k = 1 (an edgeless graph) this is
/// still returned but is a loose bound; the true span is |part| - 1.
inline Colour kpartite_upper_bound(std::span<const std::size_t> sizes,
                                   const TSet& t) {
  if (sizes.empty()) throw InvalidInput("need at least one part");
  std::size_t total = 0;
  for (std::size_t m : sizes) {
    if (m == 0) throw InvalidInput("part sizes must be >= 1");
    total += m;
  }
  return t.max() * static_cast<Colour>(sizes.size()) +
         static_cast<Colour>(total) - 1;
}

/// The block construction: the first vertex of part 1 gets 0, then parts
/// 2..k and finally the rest of part 1 each take a run of consecutive
/// colours starting r+1 above the largest colour used so far.
inline Colouring kpartite_colouring(std::span<const std::size_t> sizes,
                                    const TSet& t) {
  if (sizes.size() < 2) {
    throw InvalidInput("multipartite construction needs at least two parts");
  }
  for (std::size_t m : sizes) {
    if (m == 0) throw InvalidInput("part sizes must be >= 1");
  }
  const Colour r = t.max();
  std::vector<std::size_t> first(sizes.size());
  std::size_t total = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    first[i] = total;
    total += sizes[i];
  }

  std::vector<Colour> c(total);
  c[0] = 0;
  Colour top = 0;
  auto fill_block = [&](std::size_t from, std::size_t count) {
    Colour next = top + r + 1;
    for (std::size_t i = 0; i < count; ++i) c[from + i] = next + static_cast<Colour>(i);
    top = next + static_cast<Colour>(count) - 1;
  };
  for (std::size_t part = 1; part < sizes.size(); ++part) {
    fill_block(first[part], sizes[part]);
  }
  if (sizes[0] > 1) fill_block(1, sizes[0] - 1);
  return Colouring(std::move(c));
}

// ---------------------------------------------------------------------------
// L(p,1) reference. Written separately from the L(t,1) search so the two
// can check each other: id order, full distance matrix, plain recursion.
// ---------------------------------------------------------------------------

namespace detail {

class LpOneSearch {
 public:
  LpOneSearch(const Graph& g, Colour p, std::uint64_t max_nodes)
      : p_(p), dist_(distance_matrix(g)), colour_(g.order()),
        max_nodes_(max_nodes) {}

  bool feasible(Colour s) {
    span_ = s;
    return extend(0);
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool extend(std::size_t v) {
    if (v == colour_.size()) return true;
    for (Colour x = 0; x <= span_; ++x) {
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u) {
        Colour diff = x > colour_[u] ? x - colour_[u] : colour_[u] - x;
        if (dist_[u][v] == 1) ok = diff >= p_;
        else if (dist_[u][v] == 2) ok = diff >= 1;
      }
      if (!ok) continue;
      if (++nodes_ > max_nodes_) throw BudgetHit{};
      colour_[v] = x;
      if (extend(v + 1)) return true;
    }
    return false;
  }

  Colour p_;
  std::vector<std::vector<unsigned>> dist_;
  std::vector<Colour> colour_;
  Colour span_ = 0;
  std::uint64_t nodes_ = 0;
  std::uint64_t max_nodes_;
};

}  // namespace detail

/// Span of g under L(p,1): adjacent colours at least p apart, distance-2
/// colours distinct.
inline Colour lpq_reference_span(const Graph& g, Colour p,
                                 std::uint64_t max_nodes = 10'000'000) {
  if (p == 0) throw InvalidInput("p must be >= 1");
  detail::LpOneSearch search(g, p, max_nodes);
  for (Colour s = 0;; ++s) {
    try {
      if (search.feasible(s)) return s;
    } catch (const detail::BudgetHit&) {
      throw BudgetExceeded("L(p,1) reference search exceeded its budget", s,
                           std::nullopt, search.nodes());
    }
  }
}

}  // namespace ltcol
