#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>

#include "ltcol/core.hpp"
#include "ltcol/io.hpp"
#include "ltcol/random.hpp"

using namespace ltcol;

TEST_CASE("TSet derived quantities") {
  TSet t{0, 1, 3, 4, 8};
  CHECK(t.max() == 8);
  CHECK(t.sigma() == 4);
  CHECK(t.contains(3));
  CHECK_FALSE(t.contains(2));
  CHECK_FALSE(t.contains(9));
  CHECK(TSet{0}.sigma() == 0);
  CHECK(TSet::consecutive(3) == TSet{0, 1, 2});
}

TEST_CASE("TSet rejects malformed sets") {
  CHECK_THROWS_AS(TSet({1, 2}), InvalidInput);
  CHECK_THROWS_AS(TSet(std::vector<Colour>{}), InvalidInput);
  CHECK_THROWS_AS(TSet({0, 2, 1}), InvalidInput);
  CHECK_THROWS_AS(TSet({0, 1, 1}), InvalidInput);
  CHECK_THROWS_WITH(TSet({1, 2}), "T must contain 0");
}

TEST_CASE("Graph construction normalises and rejects bad edges") {
  Graph g(3, {{1, 0}, {0, 1}, {2, 1}});
  CHECK(g.size() == 2);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK_THROWS_AS(Graph(2, {{0, 0}}), InvalidInput);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), InvalidInput);
  CHECK_THROWS_AS(Graph(0), InvalidInput);
}

TEST_CASE("neighbours") {
  Graph star = generate(family::Star{3});
  auto centre = neighbours(star, 0);
  CHECK(std::vector<Vertex>(centre.begin(), centre.end()) == std::vector<Vertex>{1, 2, 3});
  auto leaf = neighbours(star, 1);
  CHECK(std::vector<Vertex>(leaf.begin(), leaf.end()) == std::vector<Vertex>{0});
  Graph k2(2, {{0, 1}});
  CHECK(neighbours(k2, 0).size() == 1);
  CHECK(neighbours(k2, 0)[0] == 1);
  CHECK_THROWS_AS(neighbours(k2, 2), InvalidInput);
}

TEST_CASE("distance_two_pairs on small graphs") {
  CHECK(distance_two_pairs(Graph(3, {{0, 1}, {1, 2}})) == std::vector<Edge>{{0, 2}});
  CHECK(distance_two_pairs(generate(family::Complete{3})).empty());
  CHECK(distance_two_pairs(generate(family::Cycle{4})) ==
        std::vector<Edge>{{0, 2}, {1, 3}});
  // P4: 0-3 is at distance 3 and must not appear.
  CHECK(distance_two_pairs(generate(family::Path{4})) ==
        std::vector<Edge>{{0, 2}, {1, 3}});
  // Across components nothing is at distance 2.
  CHECK(distance_two_pairs(Graph(4, {{0, 1}, {2, 3}})).empty());
}

namespace {

// d(u,v) == 2 by BFS, test-side.
std::vector<Edge> bfs_distance_two(const Graph& g) {
  std::vector<Edge> out;
  const std::size_t n = g.order();
  for (Vertex s = 0; s < n; ++s) {
    std::vector<int> d(n, -1);
    std::vector<Vertex> q{s};
    d[s] = 0;
    for (std::size_t h = 0; h < q.size(); ++h) {
      for (Vertex w : g.neighbours(q[h])) {
        if (d[w] < 0) {
          d[w] = d[q[h]] + 1;
          q.push_back(w);
        }
      }
    }
    for (Vertex v = s + 1; v < n; ++v)
      if (d[v] == 2) out.emplace_back(s, v);
  }
  return out;
}

}  // namespace

TEST_CASE("distance_two_pairs properties on random graphs") {
  Xoshiro256 rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t n = 1 + rng.next_below(9);
    const double p = rng.next_double();
    const Graph g = generate(family::Random{n, p, rng()});
    const auto pairs = distance_two_pairs(g);

    CHECK(pairs == bfs_distance_two(g));
    for (const auto& e : pairs) {
      CHECK(e.first < e.second);
      CHECK_FALSE(std::binary_search(g.edges().begin(), g.edges().end(), e));
    }

    // Relabel by a random permutation and map the pairs back.
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    shuffle(perm, rng);
    std::vector<Edge> relabelled;
    for (auto [u, v] : g.edges()) relabelled.emplace_back(perm[u], perm[v]);
    const Graph h(n, relabelled);
    std::vector<Edge> mapped;
    for (auto [u, v] : pairs) {
      mapped.emplace_back(std::min(perm[u], perm[v]), std::max(perm[u], perm[v]));
    }
    std::sort(mapped.begin(), mapped.end());
    CHECK(distance_two_pairs(h) == mapped);
  }
}

TEST_CASE("complete graphs have no distance-2 pairs") {
  for (std::size_t n = 1; n <= 8; ++n) {
    CHECK(distance_two_pairs(generate(family::Complete{n})).empty());
  }
}
