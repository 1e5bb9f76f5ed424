#include <catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <numeric>

#include "ltcol/checker.hpp"
#include "ltcol/io.hpp"
#include "ltcol/random.hpp"
#include "ltcol/solver.hpp"

using namespace ltcol;

namespace {
const Graph kP3(3, {{0, 1}, {1, 2}});
}

TEST_CASE("validate accepts the star scheme") {
  const Graph star = generate(family::Star{3});
  CHECK(validate(star, TSet{0, 1}, Colouring{0, 2, 3, 4}).empty());
}

TEST_CASE("validate reports an adjacent difference in T") {
  const auto vs = validate(Graph(2, {{0, 1}}), TSet{0, 2}, Colouring{0, 2});
  REQUIRE(vs.size() == 1);
  CHECK(vs[0] == Violation{ViolationKind::AdjacentDiffInT, 0, 1, 2});
}

TEST_CASE("validate reports equal colours at distance two") {
  const auto vs = validate(kP3, TSet{0, 1}, Colouring{5, 9, 5});
  REQUIRE(vs.size() == 1);
  CHECK(vs[0] == Violation{ViolationKind::DistanceTwoEqual, 0, 2, 5});
}

TEST_CASE("validate is exhaustive") {
  // K_{1,3}, everything coloured 0: three adjacency breaches, three leaf pairs.
  const auto vs = validate(generate(family::Star{3}), TSet{0}, Colouring{0, 0, 0, 0});
  CHECK(vs.size() == 6);
  CHECK(std::count_if(vs.begin(), vs.end(), [](const Violation& v) {
          return v.kind == ViolationKind::DistanceTwoEqual;
        }) == 3);
}

TEST_CASE("validate rejects a colouring of the wrong length") {
  CHECK_THROWS_AS(validate(kP3, TSet{0, 1}, Colouring{0, 3}), InvalidInput);
  CHECK_THROWS_AS(validate(kP3, TSet{0, 1}, Colouring{0, 3, 1, 4}), InvalidInput);
}

TEST_CASE("c_span") {
  CHECK(c_span(Colouring{0, 3, 1}) == 3);
  CHECK(c_span(Colouring{0, 0, 0, 0}) == 0);
  CHECK(c_span(Colouring{4, 2, 0}) == 4);
  CHECK_THROWS_AS(c_span(Colouring{}), InvalidInput);
}

TEST_CASE("complement reflects and shifts") {
  CHECK(complement(Colouring{0, 2, 4}, 0) == Colouring{4, 2, 0});
  CHECK(complement(Colouring{0, 2, 4}, 3) == Colouring{7, 5, 3});
  CHECK_THROWS_AS(complement(Colouring{}, 0), InvalidInput);

  const Graph star = generate(family::Star{3});
  const TSet t{0, 1};
  const Colouring c{0, 2, 3, 4};
  REQUIRE(is_valid(star, t, c));
  CHECK(complement(c, 0) == Colouring{4, 2, 1, 0});
  CHECK(is_valid(star, t, complement(c, 0)));
}

TEST_CASE("complement span identity when colour 0 is unused") {
  // min(c) = 2: the reflected colouring spans s - min(c), not s.
  const Colouring c{2, 5, 3};
  CHECK(c_span(complement(c, 0)) == 3);
  CHECK(c_span(complement(c, 4)) == 7);
}

TEST_CASE("sigma and missing colours") {
  CHECK(sigma(TSet{0}) == 0);
  CHECK(sigma(TSet{0, 2}) == 1);
  CHECK(sigma(TSet{0, 1, 3, 4, 8}) == 4);
  CHECK(missing_colours(TSet{0, 1}).empty());
  CHECK(missing_colours(TSet{0, 2}) == std::vector<Colour>{1});
  CHECK(missing_colours(TSet{0, 1, 3, 4, 8}) == std::vector<Colour>{2, 5, 6, 7});
}

TEST_CASE("normalize") {
  CHECK(normalize(Colouring{3, 5, 7}) == Colouring{0, 2, 4});
  CHECK(normalize(Colouring{0, 2, 4}) == Colouring{0, 2, 4});
  const Colouring shifted{3, 6, 4};  // (0,3,1) + 3, valid on P3 for T={0,1}
  REQUIRE(is_valid(kP3, TSet{0, 1}, shifted));
  CHECK(is_valid(kP3, TSet{0, 1}, normalize(shifted)));
}

namespace {

TSet random_tset(Xoshiro256& rng, Colour max_r) {
  std::vector<Colour> e{0};
  const Colour r = static_cast<Colour>(rng.next_below(max_r + 1));
  for (Colour x = 1; x < r; ++x)
    if (rng.next_below(2)) e.push_back(x);
  if (r > 0) e.push_back(r);
  return TSet(e);
}

}  // namespace

TEST_CASE("complement of a solver colouring stays valid") {
  Xoshiro256 rng(2024);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t n = 1 + rng.next_below(7);
    const Graph g = generate(family::Random{n, rng.next_double(), rng()});
    const TSet t = random_tset(rng, 4);
    const Colour j = static_cast<Colour>(rng.next_below(6));
    // Shift by a random offset so min(c) > 0 is exercised as well.
    const Colour offset = static_cast<Colour>(rng.next_below(3));
    std::vector<Colour> vals = exact_span(g, t).witness.values();
    for (auto& v : vals) v += offset;
    const Colouring c(vals);
    REQUIRE(is_valid(g, t, c));

    const Colouring cc = complement(c, j);
    CHECK(is_valid(g, t, cc));
    const Colour lo = *std::min_element(c.begin(), c.end());
    CHECK(c_span(cc) == c_span(c) + j - lo);
    if (lo == 0) CHECK(complement(complement(c, 0), 0) == c);
    CHECK(sigma(t) == missing_colours(t).size());
  }
}

TEST_CASE("validate is invariant under relabelling") {
  Xoshiro256 rng(99);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t n = 1 + rng.next_below(7);
    const Graph g = generate(family::Random{n, 0.5, rng()});
    const TSet t = random_tset(rng, 3);
    std::vector<Colour> vals(n);
    for (auto& v : vals) v = static_cast<Colour>(rng.next_below(5));

    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    shuffle(perm, rng);
    std::vector<Edge> e;
    for (auto [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
    std::vector<Colour> pvals(n);
    for (Vertex v = 0; v < n; ++v) pvals[perm[v]] = vals[v];

    const auto a = validate(g, t, Colouring(vals));
    const auto b = validate(Graph(n, e), t, Colouring(pvals));
    std::map<ViolationKind, int> ka, kb;
    for (const auto& v : a) ++ka[v.kind];
    for (const auto& v : b) ++kb[v.kind];
    CHECK(ka == kb);
  }
}
