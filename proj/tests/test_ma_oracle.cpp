#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "golodtight/hochster.hpp"
#include "golodtight/moment_angle.hpp"
#include "golodtight/zoo.hpp"
#include "support/random_complex.hpp"

using namespace golodtight;

namespace {

const FieldSpec Q = FieldSpec::rational();
const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F3 = FieldSpec::prime(3);

}  // namespace

TEST_CASE("real moment-angle complex of two points is a circle") {
  auto two = SimplicialComplex::build(2, {{1}, {2}});
  auto result = rzk_betti_oracle(two, Q);
  CHECK(result.betti == std::vector<int>{1, 1});
  CHECK(result.cells == 8);  // the boundary of the square
}

TEST_CASE("real moment-angle complex of the 4-cycle is the torus") {
  auto c4 = cycle(4);
  auto result = rzk_betti_oracle(c4, Q);
  CHECK(result.betti == std::vector<int>{1, 2, 1});
  CHECK(result.cells == 1 * 16 + 4 * 8 + 4 * 4);  // 3^4 = 81 cubical cells
  CHECK(result.betti == hochster_table(c4, Q).rzk_betti_predicted());
}

TEST_CASE("real moment-angle complex of the hollow triangle matches the prediction") {
  auto bd2 = boundary_simplex(2);
  for (const auto& field : {Q, F2}) {
    auto predicted = hochster_table(bd2, field).rzk_betti_predicted();
    CHECK(rzk_betti_oracle(bd2, field).betti == predicted);
  }
}

TEST_CASE("moment-angle complex of two points is the 3-sphere") {
  auto two = SimplicialComplex::build(2, {{1}, {2}});
  auto result = zk_betti_oracle(two, Q);
  CHECK(result.betti == std::vector<int>{1, 0, 0, 1});
  CHECK(result.cells == 8);
}

TEST_CASE("moment-angle complex of the 4-cycle is S^3 x S^3") {
  auto c4 = cycle(4);
  for (const auto& field : {Q, F2}) {
    auto result = zk_betti_oracle(c4, field);
    CHECK(result.betti == std::vector<int>{1, 0, 0, 2, 0, 0, 1});
    CHECK(result.betti == hochster_table(c4, field).zk_betti());
  }
}

TEST_CASE("moment-angle complex of the boundary 3-simplex: single class where predicted") {
  auto bd3 = boundary_simplex(3);
  for (const auto& field : {Q, F2}) {
    auto predicted = hochster_table(bd3, field).zk_betti();
    auto computed = zk_betti_oracle(bd3, field).betti;
    CHECK(computed == predicted);
    // the prediction puts the single reduced class in degree 2m - 1 = 7
    REQUIRE(computed.size() == 8);
    CHECK(computed[7] == 1);
  }
}

TEST_CASE("oracle budgets refuse oversized inputs") {
  OracleOptions opts;
  opts.max_vertices_rzk = 3;
  CHECK_THROWS_WITH_AS(rzk_betti_oracle(cycle(4), Q, opts), doctest::Contains("TooManyVertices"),
                       Error);
  opts.max_vertices_zk = 3;
  CHECK_THROWS_WITH_AS(zk_betti_oracle(cycle(4), Q, opts), doctest::Contains("TooManyVertices"),
                       Error);
  OracleOptions tight_budget;
  tight_budget.max_dense_entries = 4;
  CHECK_THROWS_WITH_AS(rzk_betti_oracle(cycle(4), Q, tight_budget),
                       doctest::Contains("BudgetExceeded"), Error);
}

TEST_CASE("cubical euler characteristic equals the alternating cell count") {
  std::mt19937_64 rng(616);
  for (int trial = 0; trial < 8; ++trial) {
    auto k = testsupport::random_connected_complex(rng, 4 + static_cast<int>(rng() % 3));
    auto g = build_rzk_complex(k);
    long long cell_alt = 0;
    for (std::size_t d = 0; d < g.cells_per_dim.size(); ++d)
      cell_alt += (d % 2 ? -g.cells_per_dim[d] : g.cells_per_dim[d]);
    auto betti = g.betti(Q);
    long long betti_alt = 0;
    for (std::size_t d = 0; d < betti.size(); ++d) betti_alt += (d % 2 ? -betti[d] : betti[d]);
    CHECK(cell_alt == betti_alt);
  }
}

TEST_CASE("predictions agree with oracles on random complexes") {
  std::mt19937_64 rng(12321);
  for (int trial = 0; trial < 8; ++trial) {
    int m = 4 + static_cast<int>(rng() % 3);  // 4..6
    auto k = testsupport::random_connected_complex(rng, m);
    for (const auto& field : {Q, F2, F3}) {
      auto table = hochster_table(k, field);
      CHECK(rzk_betti_oracle(k, field).betti == table.rzk_betti_predicted());
      CHECK(zk_betti_oracle(k, field).betti == table.zk_betti());
    }
  }
}

TEST_CASE("neighborliness forces low-degree vanishing of the cubical model") {
  std::mt19937_64 rng(27182);
  for (int trial = 0; trial < 6; ++trial) {
    int k_level = 1 + static_cast<int>(rng() % 2);
    int m = 4 + static_cast<int>(rng() % 3);
    auto k = testsupport::random_k_neighborly(rng, m, k_level);
    REQUIRE(is_k_neighborly(k, k_level));
    auto betti = rzk_betti_oracle(k, F2).betti;
    for (int deg = 1; deg <= k_level && deg < static_cast<int>(betti.size()); ++deg)
      CHECK(betti[static_cast<std::size_t>(deg)] == 0);
  }
}
