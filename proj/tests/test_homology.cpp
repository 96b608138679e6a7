#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "golodtight/homology.hpp"
#include "golodtight/simplicial_complex.hpp"
#include "golodtight/zoo.hpp"
#include "support/naive_oracle.hpp"
#include "support/random_complex.hpp"

using namespace golodtight;

namespace {

const FieldSpec Q = FieldSpec::rational();
const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F3 = FieldSpec::prime(3);

Mask mk(std::initializer_list<int> vs) { return from_vertices(std::vector<int>(vs)); }

std::vector<naive::Simplex> naive_facets(const SimplicialComplex& k) {
  std::vector<naive::Simplex> out;
  for (Mask f : k.facets()) out.push_back(to_vertices(f));
  return out;
}

}  // namespace

TEST_CASE("betti examples") {
  CHECK(betti_numbers(boundary_simplex(3), Q, true) == std::vector<int>{0, 0, 1});
  CHECK(betti_numbers(cycle(4), F2, true) == std::vector<int>{0, 1});

  auto rp2 = zoo::rp2_6();
  CHECK(betti_numbers(rp2, F2, true) == std::vector<int>{0, 1, 1});
  CHECK(betti_numbers(rp2, Q, true) == std::vector<int>{0, 0, 0});
  // frozen against the independent oracle
  CHECK(naive::reduced_betti(naive_facets(rp2), 2) == std::vector<int>{0, 1, 1});
  CHECK(naive::reduced_betti(naive_facets(rp2), 0) == std::vector<int>{0, 0, 0});
}

TEST_CASE("t7 torus betti") {
  auto t7 = zoo::t7_torus();
  for (const auto& f : {Q, F2, F3}) {
    CHECK(betti_numbers(t7, f, false) == std::vector<int>{1, 2, 1});
  }
  CHECK(naive::reduced_betti(naive_facets(t7), 0) == std::vector<int>{0, 2, 1});
}

TEST_CASE("homology basis examples") {
  // boundary of the 3-simplex: a single degree-2 class, the signed facet sum
  auto space = HomologySpace<RationalOps>::compute(
      ChainComplex::from_complex(boundary_simplex(3), true), RationalOps{});
  CHECK(space.betti_vector() == std::vector<int>{0, 0, 1});
  const auto& reps = space.level(2).reps;
  REQUIRE(reps.cols() == 1);
  // alternating signs over the lex-ordered facets, unique up to scalar
  mpq_class scale = reps.at(0, 0);
  CHECK(sgn(scale) != 0);
  for (int i = 0; i < 4; ++i) {
    mpq_class expected = (i % 2 == 0) ? scale : -scale;
    CHECK(reps.at(i, 0) == expected);
  }

  auto two_pts = SimplicialComplex::build(2, {{1}, {2}});
  auto space0 = HomologySpace<RationalOps>::compute(ChainComplex::from_complex(two_pts, true),
                                                    RationalOps{});
  CHECK(space0.betti_vector() == std::vector<int>{1});

  auto spc4 = HomologySpace<RationalOps>::compute(ChainComplex::from_complex(cycle(4), true),
                                                  RationalOps{});
  CHECK(spc4.betti(1) == 1);
  const auto& c4rep = spc4.level(1).reps;
  for (int i = 0; i < 4; ++i) CHECK(sgn(mpq_class(c4rep.at(i, 0))) != 0);  // all four edges used
}

TEST_CASE("projection of representatives is the identity") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 12; ++trial) {
    auto k = testsupport::random_connected_complex(rng, 4 + static_cast<int>(rng() % 3));
    auto space = HomologySpace<RationalOps>::compute(ChainComplex::from_complex(k, true),
                                                     RationalOps{});
    for (int deg = 0; deg <= space.top_dim(); ++deg) {
      const auto& level = space.level(deg);
      for (int j = 0; j < level.betti; ++j) {
        std::vector<mpq_class> z;
        for (int i = 0; i < level.reps.rows(); ++i) z.push_back(level.reps.at(i, j));
        auto coords = space.project_cycle(deg, z);
        REQUIRE(coords.has_value());
        for (int t = 0; t < level.betti; ++t)
          CHECK((*coords)[static_cast<std::size_t>(t)] == (t == j ? 1 : 0));
      }
    }
  }
}

TEST_CASE("induced inclusion maps") {
  auto c4 = cycle(4);
  auto v = is_injective_inclusion(c4, mk({1, 3}), Q);
  CHECK(!v.injective);
  CHECK(v.fail_degree == 0);  // two points into a connected space
  CHECK(v.ranks[0] == 1);
  CHECK(v.source_betti[0] == 2);

  CHECK(is_injective_inclusion(boundary_simplex(3), mk({1, 2, 3}), Q).injective);

  // a hollow triangle in the 7-vertex torus includes injectively in H_1
  auto t7 = zoo::t7_torus();
  bool found_hollow = false;
  for (Mask s : subsets_of_size(7, 3)) {
    if (t7.full_subcomplex(s) == boundary_simplex(2)) {
      found_hollow = true;
      auto verdict = is_injective_inclusion(t7, s, Q);
      CHECK(verdict.injective);
      CHECK(verdict.ranks[1] == 1);
    }
  }
  CHECK(found_hollow);

  CHECK_THROWS_AS(is_injective_inclusion(c4, 0, Q), Error);
}

TEST_CASE("fundamental classes") {
  auto fc = fundamental_class(boundary_simplex(3), Q);
  CHECK(fc.orientable);
  REQUIRE(fc.coefficients.size() == 4);
  CHECK(fc.coefficients[0] != "0");
  // alternating unit signs over lex-ordered facets
  CHECK(fc.coefficients[1] == (fc.coefficients[0] == "1" ? "-1" : "1"));

  auto rp2 = zoo::rp2_6();
  CHECK(!fundamental_class(rp2, Q).orientable);
  CHECK(!is_orientable_over(rp2, Q));
  auto fc2 = fundamental_class(rp2, F2);
  CHECK(fc2.orientable);
  REQUIRE(fc2.coefficients.size() == 10);
  for (const auto& c : fc2.coefficients) CHECK(c == "1");  // sum of all ten facets

  // two disjoint triangles: top homology has rank 2, not a pseudomanifold
  auto two_spheres = SimplicialComplex::build(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}});
  CHECK_THROWS_WITH_AS(fundamental_class(two_spheres, Q), doctest::Contains("NotPseudomanifold"),
                       Error);
}

TEST_CASE("generic chain maps: identity, zero, and rejection") {
  auto c4 = cycle(4);
  auto cc = ChainComplex::from_complex(c4, true);
  auto space = HomologySpace<RationalOps>::compute(cc, RationalOps{});

  ChainMapData identity;
  identity.images.resize(static_cast<std::size_t>(cc.top_dim) + 1);
  for (int d = 0; d <= cc.top_dim; ++d)
    for (Mask f : cc.faces[static_cast<std::size_t>(d)])
      identity.images[static_cast<std::size_t>(d)].push_back({{f, 1}});
  auto ind = chain_map_induced(identity, space, space);
  for (int d = 0; d <= cc.top_dim; ++d) {
    const auto& m = ind.degree_matrices[static_cast<std::size_t>(d)];
    CHECK(m == DenseMatrix<RationalOps>::identity(RationalOps{}, space.betti(d)));
  }

  // the zero map is a chain map only in the unreduced complex (augmentation
  // forces degree-0 images); check it there
  auto ucc = ChainComplex::from_complex(c4, false);
  auto uspace = HomologySpace<RationalOps>::compute(ucc, RationalOps{});
  ChainMapData zero;
  zero.images.resize(static_cast<std::size_t>(ucc.top_dim) + 1);
  for (int d = 0; d <= ucc.top_dim; ++d)
    zero.images[static_cast<std::size_t>(d)].resize(ucc.faces[static_cast<std::size_t>(d)].size());
  auto zind = chain_map_induced(zero, uspace, uspace);
  for (const auto& m : zind.degree_matrices)
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) CHECK(RationalOps{}.is_zero(m.at(i, j)));

  // flipping one image sign breaks the chain condition
  ChainMapData bad = identity;
  bad.images[1][0][0].second = -1;
  CHECK_THROWS_WITH_AS(chain_map_induced(bad, space, space), doctest::Contains("NotAChainMap"),
                       Error);
}

TEST_CASE("euler characteristic equals alternating betti sum over every field") {
  std::mt19937_64 rng(314);
  for (int trial = 0; trial < 15; ++trial) {
    auto k = testsupport::random_connected_complex(rng, 4 + static_cast<int>(rng() % 4));
    long long chi = k.euler_characteristic();
    for (const auto& f : {Q, F2, F3}) {
      auto b = betti_numbers(k, f, false);
      long long alt = 0;
      for (std::size_t i = 0; i < b.size(); ++i) alt += (i % 2 ? -b[i] : b[i]);
      CHECK(alt == chi);
    }
  }
}

TEST_CASE("unreduced beta_0 counts connected components") {
  auto two_pts = SimplicialComplex::build(2, {{1}, {2}});
  CHECK(betti_numbers(two_pts, Q, false)[0] == 2);
  CHECK(betti_numbers(two_pts, Q, true)[0] == 1);

  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    int m = 4 + static_cast<int>(rng() % 4);
    std::vector<Mask> facets;
    for (int v = 1; v <= m; ++v)
      if (rng() % 2 && v + 1 <= m)
        facets.push_back(single(v) | single(v + 1));
      else
        facets.push_back(single(v));
    auto k = SimplicialComplex::build_from_masks(m, facets);
    CHECK(betti_numbers(k, F2, false)[0] == k.component_count());
  }
}

TEST_CASE("cohomology ranks equal homology ranks over a field") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 10; ++trial) {
    auto k = testsupport::random_connected_complex(rng, 4 + static_cast<int>(rng() % 3));
    auto cc = ChainComplex::from_complex(k, true);
    for (const auto& field : {Q, F2}) {
      // homology from boundary ranks, cohomology from transposed (coboundary) ranks
      for (int d = 0; d <= cc.top_dim; ++d) {
        auto bd = cc.boundary_matrix(d);
        IntMatrix bdt(bd.cols, bd.rows);
        for (int i = 0; i < bd.rows; ++i)
          for (int j = 0; j < bd.cols; ++j) bdt.at(j, i) = bd.at(i, j);
        CHECK(rank_over(bd, field) == rank_over(bdt, field));
      }
    }
  }
}

TEST_CASE("closed pseudomanifold top betti") {
  for (const auto& m : {boundary_simplex(3), boundary_simplex(4), stacked_sphere(3, 2)}) {
    CHECK(betti_numbers(m, F2, false)[static_cast<std::size_t>(m.dim())] == 1);
    CHECK(betti_numbers(m, Q, false)[static_cast<std::size_t>(m.dim())] == 1);
  }
  auto rp2 = zoo::rp2_6();
  CHECK(betti_numbers(rp2, F2, false)[2] == 1);
  CHECK(betti_numbers(rp2, Q, false)[2] == 0);
}
