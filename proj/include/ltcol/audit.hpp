#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "ltcol/checker.hpp"
#include "ltcol/core.hpp"
#include "ltcol/families.hpp"
#include "ltcol/io.hpp"
#include "ltcol/solver.hpp"

namespace ltcol::audit {

// Claim identifiers used in records.
inline constexpr const char* kStarFormula = "star_span_formula";
inline constexpr const char* kStarStrict = "star_strict_bound";
inline constexpr const char* kStarConstruction = "star_construction";
inline constexpr const char* kStarSigmaStep = "star_sigma_step";
inline constexpr const char* kStarInvariance = "star_span_invariance";
inline constexpr const char* kKpartiteBound = "kpartite_bound";
inline constexpr const char* kKpartiteConstruction = "kpartite_construction";
inline constexpr const char* kCompleteReduction = "complete_graph_reduction";
inline constexpr const char* kLp1Equivalence = "lp1_equivalence";

/// One checked instance. `agree` is empty when the instance could not be
/// resolved within the budget.
struct Record {
  std::string instance;
  std::string claim;
  std::string predicted;
  std::optional<Colour> exact;
  std::optional<bool> agree;
  std::string notes;
};

struct Config {
  Colour max_r = 4;
  std::size_t max_n = 7;
  std::size_t max_tset_size = 5;
  Budget budget{};
};

struct Summary {
  std::size_t total = 0;
  std::size_t agreed = 0;
  std::size_t discrepancies = 0;
  std::size_t unresolved = 0;
};

inline Summary summarize(const std::vector<Record>& records) {
  Summary s;
  for (const auto& r : records) {
    ++s.total;
    if (!r.agree) ++s.unresolved;
    else if (*r.agree) ++s.agreed;
    else ++s.discrepancies;
  }
  return s;
}

inline nlohmann::ordered_json to_json(const Record& r) {
  nlohmann::ordered_json j;
  j["instance"] = r.instance;
  j["claim"] = r.claim;
  j["predicted"] = r.predicted;
  j["exact"] = r.exact ? nlohmann::ordered_json(*r.exact) : nullptr;
  j["agree"] = r.agree ? nlohmann::ordered_json(*r.agree) : nullptr;
  j["notes"] = r.notes;
  return j;
}

/// Every T with max{T} <= max_r and |T| <= max_size, ordered by (r, elements).
inline std::vector<TSet> enumerate_tsets(Colour max_r, std::size_t max_size) {
  std::vector<TSet> out;
  if (max_size >= 1) out.emplace_back(std::vector<Colour>{0});
  for (Colour r = 1; r <= max_r; ++r) {
    const Colour inner = r - 1;  // candidates 1..r-1
    std::vector<std::vector<Colour>> sets;
    for (std::uint32_t mask = 0; mask < (1u << inner); ++mask) {
      std::vector<Colour> e{0};
      for (Colour i = 0; i < inner; ++i)
        if (mask & (1u << i)) e.push_back(i + 1);
      e.push_back(r);
      if (e.size() <= max_size) sets.push_back(std::move(e));
    }
    std::sort(sets.begin(), sets.end());
    for (auto& e : sets) out.emplace_back(std::move(e));
  }
  return out;
}

inline std::string describe(const TSet& t) { return "T={" + format_tset(t) + "}"; }

namespace detail {

// Span for plain T-colourings (adjacency rule only), by id-order recursion.
inline std::optional<Colour> t_colouring_span(const Graph& g, const TSet& t,
                                              std::uint64_t max_nodes) {
  const std::size_t n = g.order();
  std::vector<Colour> c(n);
  std::uint64_t nodes = 0;
  Colour span = 0;
  auto extend = [&](auto&& self, std::size_t v) -> bool {
    if (v == n) return true;
    for (Colour x = 0; x <= span; ++x) {
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u) {
        if (g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
          ok = !t.contains(colour_distance(x, c[u]));
        }
      }
      if (!ok) continue;
      if (++nodes > max_nodes) return false;
      c[v] = x;
      if (self(self, v + 1)) return true;
    }
    return false;
  };
  for (;; ++span) {
    if (extend(extend, 0)) return span;
    if (nodes > max_nodes) return std::nullopt;
  }
}

// Memoised exact spans keyed by a caller-supplied instance key.
class SpanCache {
 public:
  explicit SpanCache(const Budget& b) : budget_(b) {}

  std::optional<Colour> get(const std::string& key, const Graph& g,
                            const TSet& t) {
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    std::optional<Colour> value;
    try {
      ExactOptions opts;
      opts.budget = budget_;
      value = exact_span(g, t, opts).lambda;
    } catch (const BudgetExceeded&) {
      value = std::nullopt;
    }
    cache_.emplace(key, value);
    return value;
  }

 private:
  Budget budget_;
  std::map<std::string, std::optional<Colour>> cache_;
};

inline std::string star_name(std::size_t n) {
  return "K_{1," + std::to_string(n) + "}";
}

}  // namespace detail

/// Star suite: span formula for sigma < n, strict bound for sigma >= n, the
/// construction itself, the effect of dropping one element of T, and span
/// invariance across T sets of equal size and maximum.
inline std::vector<Record> run_stars(const Config& cfg) {
  std::vector<Record> out;
  const auto tsets = enumerate_tsets(cfg.max_r, cfg.max_tset_size);
  detail::SpanCache cache(cfg.budget);
  auto span = [&](std::size_t n, const TSet& t) {
    return cache.get(detail::star_name(n) + " " + describe(t),
                     generate(family::Star{n}), t);
  };

  for (const auto& t : tsets) {
    const Colour sig = t.sigma(), r = t.max();
    const auto gaps = missing_colours(t);
    for (std::size_t n = 1; n <= cfg.max_n; ++n) {
      const std::string inst = detail::star_name(n) + " " + describe(t);
      const auto lam = span(n, t);
      const auto pred = star_span_predicted(n, t);
      Record rec{inst, "", "", lam, std::nullopt, ""};
      if (pred.mode == StarPrediction::Mode::Exact) {
        rec.claim = kStarFormula;
        rec.predicted = "= " + std::to_string(pred.value);
        if (lam) rec.agree = *lam == pred.value;
      } else {
        rec.claim = kStarStrict;
        rec.predicted = "< " + std::to_string(pred.value);
        if (lam) rec.agree = *lam < pred.value;
      }
      rec.notes = "sigma=" + std::to_string(sig) + " r=" + std::to_string(r);
      out.push_back(rec);

      // Construction: valid, and its c-span is n - sigma + r or the n-th gap.
      const Colouring c = star_colouring(n, t);
      const Graph g = generate(family::Star{n});
      const bool valid = is_valid(g, t, c);
      const Colour expect = pred.mode == StarPrediction::Mode::Exact
                                ? pred.value
                                : gaps[n - 1];
      Record con{inst, kStarConstruction, "valid, c-span " + std::to_string(expect),
                 c_span(c), valid && c_span(c) == expect,
                 valid ? "valid" : "INVALID colouring"};
      if (lam && pred.mode == StarPrediction::Mode::StrictUpperBound) {
        con.notes += *lam == c_span(c) ? ", optimal" : ", exact span is smaller";
      }
      out.push_back(con);
    }
  }

  // Dropping one interior element e of T keeps r and raises sigma by one.
  for (const auto& t : tsets) {
    const auto& el = t.elements();
    for (std::size_t i = 1; i + 1 < el.size(); ++i) {
      std::vector<Colour> smaller = el;
      smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
      const TSet t2(smaller);
      for (std::size_t n = t2.sigma() + 1; n <= cfg.max_n; ++n) {
        const auto before = span(n, t), after = span(n, t2);
        Record rec{detail::star_name(n) + " " + describe(t) + " -> " + describe(t2),
                   kStarSigmaStep, "", after, std::nullopt, ""};
        if (before) rec.predicted = "= " + std::to_string(*before - 1);
        if (before && after) {
          rec.agree = *after + 1 == *before;
          rec.notes = *after <= *before ? "did not increase" : "INCREASED";
        }
        out.push_back(rec);
      }
    }
  }

  // Same |T| and max{T}, n > sigma: spans must coincide.
  for (std::size_t a = 0; a < tsets.size(); ++a) {
    for (std::size_t b = a + 1; b < tsets.size(); ++b) {
      const TSet &t1 = tsets[a], &t2 = tsets[b];
      if (t1.size() != t2.size() || t1.max() != t2.max()) continue;
      for (std::size_t n = t1.sigma() + 1; n <= cfg.max_n; ++n) {
        const auto l1 = span(n, t1), l2 = span(n, t2);
        Record rec{detail::star_name(n) + " " + describe(t1) + " vs " + describe(t2),
                   kStarInvariance, "", l2, std::nullopt, ""};
        if (l1) rec.predicted = "= " + std::to_string(*l1);
        if (l1 && l2) rec.agree = *l1 == *l2;
        out.push_back(rec);
      }
    }
  }
  return out;
}

/// Ordered part-size tuples with k parts (each >= 1) summing to at most max_total.
inline std::vector<std::vector<std::size_t>> enumerate_part_sizes(
    std::size_t k, std::size_t max_total) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t remaining) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    const std::size_t still = k - cur.size() - 1;
    for (std::size_t m = 1; m + still <= remaining; ++m) {
      cur.push_back(m);
      self(self, remaining - m);
      cur.pop_back();
    }
  };
  if (k >= 1 && max_total >= k) rec(rec, max_total);
  return out;
}

/// Complete k-partite suite (k in {2, 3}, total size <= max_n): the exact
/// span and the block construction against r*k + sum - 1. Whether the bound
/// is attained is logged in notes, not judged.
inline std::vector<Record> run_kpartite(const Config& cfg) {
  std::vector<Record> out;
  const auto tsets = enumerate_tsets(cfg.max_r, cfg.max_tset_size);
  detail::SpanCache cache(cfg.budget);
  for (std::size_t k = 2; k <= 3; ++k) {
    for (const auto& sizes : enumerate_part_sizes(k, cfg.max_n)) {
      std::vector<std::size_t> sorted = sizes;
      std::sort(sorted.begin(), sorted.end());
      std::vector<Colour> sz(sizes.begin(), sizes.end());
      std::vector<Colour> key_sz(sorted.begin(), sorted.end());
      const std::string name = "K_{" + format_colour_list(sz) + "}";
      const Graph g = generate(family::CompleteMultipartite{sizes});
      for (const auto& t : tsets) {
        const Colour bound = kpartite_upper_bound(sizes, t);
        const bool consecutive = t.sigma() == 0;
        const std::string inst = name + " " + describe(t);
        const auto lam = cache.get(
            "K_{" + format_colour_list(key_sz) + "} " + describe(t), g, t);

        Record rec{inst, kKpartiteBound, "<= " + std::to_string(bound), lam,
                   std::nullopt, ""};
        if (lam) {
          rec.agree = *lam <= bound;
          rec.notes = *lam == bound
                          ? "attained"
                          : "not attained (gap " + std::to_string(bound - *lam) + ")";
          rec.notes += consecutive ? ", T consecutive" : ", T has gaps";
        }
        out.push_back(rec);

        const Colouring c = kpartite_colouring(sizes, t);
        const bool valid = is_valid(g, t, c);
        out.push_back({inst, kKpartiteConstruction,
                       "valid, c-span <= " + std::to_string(bound), c_span(c),
                       valid && c_span(c) <= bound,
                       valid ? "valid" : "INVALID colouring"});
      }
    }
  }
  return out;
}

/// Graphs used for the L(p,1) comparison: the named families up to max_n
/// vertices plus seeded random graphs.
inline std::vector<std::pair<std::string, Graph>> remark_graphs(std::size_t max_n) {
  std::vector<std::pair<std::string, Graph>> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    out.emplace_back("P" + std::to_string(n), generate(family::Path{n}));
    if (n >= 3) out.emplace_back("C" + std::to_string(n), generate(family::Cycle{n}));
    if (n >= 2) out.emplace_back(detail::star_name(n - 1), generate(family::Star{n - 1}));
    out.emplace_back("K" + std::to_string(n), generate(family::Complete{n}));
  }
  for (std::size_t k = 2; k <= 3; ++k) {
    for (const auto& sizes : enumerate_part_sizes(k, max_n)) {
      if (!std::is_sorted(sizes.begin(), sizes.end())) continue;
      std::vector<Colour> sz(sizes.begin(), sizes.end());
      out.emplace_back("K_{" + format_colour_list(sz) + "}",
                       generate(family::CompleteMultipartite{sizes}));
    }
  }
  const double probs[] = {0.3, 0.5, 0.7};
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const std::size_t n = 2 + seed % (max_n >= 2 ? max_n - 1 : 1);
    const double p = probs[seed % 3];
    if (n > max_n) continue;
    std::ostringstream name;
    name << "random:" << n << ',' << p << ',' << seed;
    out.emplace_back(name.str(), generate(family::Random{n, p, seed}));
  }
  return out;
}

/// Complete graphs reduce to T-colouring (no distance-2 pairs); for
/// T = {0..p-1} the span equals the L(p,1) span.
inline std::vector<Record> run_remarks(const Config& cfg) {
  std::vector<Record> out;
  const auto tsets = enumerate_tsets(cfg.max_r, cfg.max_tset_size);
  const std::size_t kn_max = std::min<std::size_t>(cfg.max_n, 5);
  detail::SpanCache cache(cfg.budget);

  for (std::size_t n = 1; n <= kn_max; ++n) {
    const Graph g = generate(family::Complete{n});
    const bool no_pairs = distance_two_pairs(g).empty();
    for (const auto& t : tsets) {
      const std::string inst = "K" + std::to_string(n) + " " + describe(t);
      const auto lam = cache.get(inst, g, t);
      const auto tspan = detail::t_colouring_span(g, t, cfg.budget.max_nodes);
      Record rec{inst, kCompleteReduction, "", lam, std::nullopt, ""};
      if (tspan) rec.predicted = "= T-span " + std::to_string(*tspan);
      if (lam && tspan) rec.agree = no_pairs && *lam == *tspan;
      rec.notes = no_pairs ? "no distance-2 pairs" : "HAS distance-2 pairs";
      out.push_back(rec);
    }
  }

  const auto graphs = remark_graphs(cfg.max_n);
  for (Colour p = 1; p <= 3; ++p) {
    const TSet t = TSet::consecutive(p);
    for (const auto& [name, g] : graphs) {
      const std::string inst = name + " p=" + std::to_string(p);
      const auto lam = cache.get(name + " " + describe(t), g, t);
      std::optional<Colour> ref;
      try {
        ref = lpq_reference_span(g, p, cfg.budget.max_nodes);
      } catch (const BudgetExceeded&) {
      }
      Record rec{inst, kLp1Equivalence, "", lam, std::nullopt, describe(t)};
      if (ref) rec.predicted = "= L(p,1) span " + std::to_string(*ref);
      if (lam && ref) rec.agree = *lam == *ref;
      out.push_back(rec);
    }
  }
  return out;
}

}  // namespace ltcol::audit
