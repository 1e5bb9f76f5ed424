#include <catch_amalgamated.hpp>

#include "ltcol/checker.hpp"
#include "ltcol/families.hpp"
#include "ltcol/io.hpp"
#include "ltcol/random.hpp"
#include "ltcol/solver.hpp"

using namespace ltcol;

using Mode = StarPrediction::Mode;
using Sizes = std::vector<std::size_t>;

TEST_CASE("star_span_predicted") {
  CHECK(star_span_predicted(3, TSet{0, 1}) == StarPrediction{Mode::Exact, 4});
  CHECK(star_span_predicted(3, TSet{0, 2}) == StarPrediction{Mode::Exact, 4});
  CHECK(star_span_predicted(2, TSet{0, 3}) ==
        StarPrediction{Mode::StrictUpperBound, 3});
  CHECK(brute_force_span(generate(family::Star{2}), TSet{0, 3}).lambda == 2);
  CHECK_THROWS_AS(star_span_predicted(0, TSet{0}), InvalidInput);
}

TEST_CASE("star_colouring") {
  const TSet t01{0, 1};
  const auto c = star_colouring(3, t01);
  CHECK(c == Colouring{0, 2, 3, 4});
  CHECK(c_span(c) == 4);
  CHECK(is_valid(generate(family::Star{3}), t01, c));

  const TSet gappy{0, 1, 3, 4, 8};
  const auto d = star_colouring(2, gappy);
  CHECK(d == Colouring{0, 2, 5});
  CHECK(c_span(d) == 5);
  CHECK(is_valid(generate(family::Star{2}), gappy, d));

  CHECK(star_colouring(1, TSet{0}) == Colouring{0, 1});

  // Gaps run out, then r+1, r+2, ...
  CHECK(star_colouring(6, gappy) == Colouring{0, 2, 5, 6, 7, 9, 10});
}

TEST_CASE("star_colouring is valid and matches the predicted span") {
  for (Colour r = 0; r <= 5; ++r) {
    for (std::uint32_t mask = 0; mask < (r > 1 ? 1u << (r - 1) : 1u); ++mask) {
      std::vector<Colour> e{0};
      for (Colour x = 1; x < r; ++x)
        if (mask & (1u << (x - 1))) e.push_back(x);
      if (r > 0) e.push_back(r);
      const TSet t(e);
      const auto gaps = missing_colours(t);
      for (std::size_t n = 1; n <= 8; ++n) {
        const auto c = star_colouring(n, t);
        CHECK(is_valid(generate(family::Star{n}), t, c));
        const auto pred = star_span_predicted(n, t);
        if (pred.mode == Mode::Exact) {
          CHECK(c_span(c) == pred.value);
        } else {
          CHECK(c_span(c) == gaps[n - 1]);
          CHECK(c_span(c) < pred.value);
        }
      }
    }
  }
}

TEST_CASE("kpartite_upper_bound") {
  CHECK(kpartite_upper_bound(Sizes{2, 2}, TSet{0, 1}) == 5);
  CHECK(kpartite_upper_bound(Sizes{1, 1}, TSet{0, 1}) == 3);
  CHECK(kpartite_upper_bound(Sizes{3}, TSet{0}) == 2);
  CHECK_THROWS_AS(kpartite_upper_bound(Sizes{}, TSet{0}), InvalidInput);
  CHECK_THROWS_AS(kpartite_upper_bound(Sizes{2, 0}, TSet{0}), InvalidInput);
}

TEST_CASE("kpartite_colouring follows the block scheme") {
  // Parts laid out as consecutive ids: (2,2) -> part1 = {0,1}, part2 = {2,3}.
  const auto c22 = kpartite_colouring(Sizes{2, 2}, TSet{0, 1});
  CHECK(c22 == Colouring{0, 5, 2, 3});
  CHECK(c_span(c22) == 5);

  const auto c11 = kpartite_colouring(Sizes{1, 1}, TSet{0, 1});
  CHECK(c11 == Colouring{0, 2});
  CHECK(c_span(c11) == 2);
  CHECK(brute_force_span(generate(family::CompleteMultipartite{{1, 1}}), TSet{0, 1}).lambda == 2);

  const auto c211 = kpartite_colouring(Sizes{2, 1, 1}, TSet{0});
  CHECK(c211 == Colouring{0, 3, 1, 2});
  CHECK(c_span(c211) == 3);
  const Graph g211 = generate(family::CompleteMultipartite{{2, 1, 1}});
  CHECK(is_valid(g211, TSet{0}, c211));
  CHECK(brute_force_span(g211, TSet{0}).lambda == 3);

  CHECK_THROWS_AS(kpartite_colouring(Sizes{3}, TSet{0, 1}), InvalidInput);
}

TEST_CASE("kpartite_colouring is valid and within the bound") {
  for (const TSet& t : {TSet{0}, TSet{0, 1}, TSet{0, 2}, TSet{0, 1, 3}, TSet{0, 2, 3, 5}}) {
    for (std::size_t a = 1; a <= 4; ++a)
      for (std::size_t b = 1; b <= 4; ++b)
        for (std::size_t c = 0; c <= 3; ++c) {
          Sizes sizes{a, b};
          if (c) sizes.push_back(c);
          const auto col = kpartite_colouring(sizes, t);
          CHECK(is_valid(generate(family::CompleteMultipartite{sizes}), t, col));
          const Colour bound = kpartite_upper_bound(sizes, t);
          CHECK(c_span(col) <= bound);
          // Equality exactly when part 1 has a second vertex (or r = 0,
          // where the skipped block costs nothing).
          CHECK((c_span(col) == bound) == (a > 1 || t.max() == 0));
        }
  }
}

TEST_CASE("lpq_reference_span") {
  CHECK(lpq_reference_span(generate(family::Star{3}), 2) == 4);
  CHECK(lpq_reference_span(Graph(3, {{0, 1}, {1, 2}}), 1) == 2);
  CHECK(lpq_reference_span(generate(family::Complete{3}), 3) == 6);
  CHECK_THROWS_AS(lpq_reference_span(Graph(1), 0), InvalidInput);
  CHECK_THROWS_AS(lpq_reference_span(generate(family::Complete{6}), 3, 10),
                  BudgetExceeded);
}

TEST_CASE("L(p,1) reference agrees with consecutive T") {
  Xoshiro256 rng(77);
  for (int iter = 0; iter < 60; ++iter) {
    const std::size_t n = 1 + rng.next_below(6);
    const Graph g = generate(family::Random{n, rng.next_double(), rng()});
    const Colour p = 1 + static_cast<Colour>(rng.next_below(3));
    CHECK(exact_span(g, TSet::consecutive(p)).lambda == lpq_reference_span(g, p));
  }
}
