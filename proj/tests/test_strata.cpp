#include <doctest.h>

#include "oracles.hpp"
#include "wps/cohom.hpp"
#include "wps/strata.hpp"

using namespace wps;

TEST_CASE("stratum charts") {
  auto c = stratum_chart({1, 2, 3, 4}, {1, 3});
  CHECK(c.torus_rank == 1);
  CHECK(c.q == 2);
  CHECK(c.cone_weights == std::vector<Weight>{1, 3});
  CHECK(c.zero_set == IndexSet{0, 2});

  c = stratum_chart({1, 1, 2}, {0, 1, 2});
  CHECK(c.torus_rank == 2);
  CHECK(c.q == 1);
  CHECK(c.cone_weights.empty());
  CHECK(c.zero_set.empty());

  c = stratum_chart({1, 1, 2}, {2});
  CHECK(c.torus_rank == 0);
  CHECK(c.q == 2);
  CHECK(c.cone_weights == std::vector<Weight>{1, 1});

  CHECK_THROWS_AS(stratum_chart({1, 1, 2}, {}), InvalidInput);
  CHECK_THROWS_AS(stratum_chart({1, 1, 2}, {3}), InvalidInput);
  CHECK_THROWS_AS(stratum_chart({1, 1, 2}, {1, 1}), InvalidInput);
}

TEST_CASE("index set parsing") {
  CHECK(parse_index_set("3,0,2") == IndexSet{0, 2, 3});
  CHECK_THROWS_AS(parse_index_set("0,0"), InvalidInput);
  CHECK_THROWS_AS(parse_index_set(""), InvalidInput);
}

TEST_CASE("local homology order") {
  CHECK(local_homology_order({1, 1, 2}, {2}) == 2);
  CHECK(local_homology_order_via_lens({1, 1, 2}, {2}) == 2);
  CHECK(lens_cohomology(2, {1, 1}).groups.at(2) == 2);

  CHECK(local_homology_order({1, 2, 3, 4}, {1, 3}) == 2);
  CHECK(lens_cohomology(2, {1, 3}).groups.at(2) == 2);
  CHECK(local_homology_order({1, 2, 3, 4}, {0, 1, 2, 3}) == 1);

  CHECK_THROWS_AS(local_homology_order({2, 4, 6}, {0}), InvalidInput);
  CHECK_THROWS_AS(local_homology_order_via_lens({1, 2, 3}, {0, 1}), InvalidInput);
}

TEST_CASE("chart ranks and the lens identity over small normalised vectors") {
  for (std::size_t len = 1; len <= 4; ++len) {
    for (const auto& v : oracle::sorted_vectors(len, 12)) {
      const WeightVector w(v);
      if (!is_normalized(w)) continue;
      for (unsigned mask = 1; mask < (1u << len); ++mask) {
        IndexSet support;
        for (std::size_t i = 0; i < len; ++i) {
          if (mask & (1u << i)) support.push_back(i);
        }
        const auto chart = stratum_chart(w, support);
        REQUIRE(chart.torus_rank + chart.cone_weights.size() == w.dim());
        const Weight q = local_homology_order(w, support);
        if (support.size() == len) REQUIRE(q == 1);
        if (chart.cone_weights.size() == 1) REQUIRE(q == 1);
        if (chart.cone_weights.size() >= 2) {
          REQUIRE(local_homology_order_via_lens(w, support) == q);
        }
      }
    }
  }
}

TEST_CASE("x_subspace") {
  auto x = x_subspace({1, 2, 3, 4}, 2);
  REQUIRE(x.has_value());
  CHECK(*x == WeightVector{2, 4});
  CHECK(x->dim() == 1);
  CHECK(x_subspace({1, 2, 3, 4}, 1) == WeightVector{1, 2, 3, 4});
  CHECK_FALSE(x_subspace({1, 2, 3, 4}, 5).has_value());

  for (const auto& v : oracle::sorted_vectors(4, 10)) {
    const WeightVector w(v);
    for (Weight d = 1; d <= 12; ++d) {
      const auto sub = x_subspace(w, d);
      REQUIRE((sub ? sub->size() : 0) == divisor_count(w, d));
    }
  }
}

TEST_CASE("cell decomposition") {
  const auto cells = cell_decomposition({1, 1, 2, 12});
  CHECK(cells.cell_dimensions == std::vector<std::size_t>{0, 1, 2, 3});
  REQUIRE(cells.filtration.size() == 4);
  CHECK(cells.filtration[0].weights == WeightVector{12});
  CHECK(cells.filtration[0].rescaled == WeightVector{1});
  CHECK(cells.filtration[1].weights == WeightVector{2, 12});
  CHECK(cells.filtration[1].rescaled == WeightVector{1, 6});
  CHECK(cells.filtration[2].weights == WeightVector{1, 2, 12});
  CHECK(cells.filtration[3].weights == WeightVector{1, 1, 2, 12});

  const auto cp1 = cell_decomposition({1, 1});
  CHECK(cp1.cell_dimensions == std::vector<std::size_t>{0, 1});

  CHECK_THROWS_AS(cell_decomposition({1, 2, 3}), InvalidInput);

  const auto scaled = cell_decomposition({3, 6, 12});
  CHECK(scaled.filtration[2].rescaled == WeightVector{1, 2, 4});
}
