#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "golodtight/manifold.hpp"
#include "golodtight/tightness.hpp"
#include "golodtight/zoo.hpp"
#include "support/random_complex.hpp"

using namespace golodtight;

namespace {

const FieldSpec Q = FieldSpec::rational();
const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F3 = FieldSpec::prime(3);

Mask mk(std::initializer_list<int> vs) { return from_vertices(std::vector<int>(vs)); }

}  // namespace

TEST_CASE("neighborliness examples") {
  CHECK(is_k_neighborly(boundary_simplex(3), 1));
  CHECK(is_k_neighborly(boundary_simplex(3), 2));
  CHECK(!is_k_neighborly(boundary_simplex(3), 3));
  CHECK(!is_k_neighborly(cycle(4), 1));
  CHECK(is_k_neighborly(zoo::t7_torus(), 1));  // all C(7,2) = 21 edges present
}

TEST_CASE("tightness examples") {
  auto c4_report = is_tight(cycle(4), Q);
  CHECK(!c4_report.tight);
  CHECK(c4_report.witness == mk({1, 3}));
  CHECK(c4_report.witness_degree == 0);

  CHECK(is_tight(boundary_simplex(3), Q).tight);

  auto rp2 = zoo::rp2_6();
  CHECK(is_tight(rp2, F2).tight);
  auto rp2_q = is_tight(rp2, Q);
  CHECK(!rp2_q.tight);
  CHECK(rp2_q.witness_degree == 1);  // a cycle witness

  auto t7 = zoo::t7_torus();
  for (const auto& f : {Q, F2, F3}) CHECK(is_tight(t7, f).tight);

  auto skel = simplex_skeleton(6, 1);  // complete graph: cycle spaces inject
  CHECK(is_tight(skel, Q).tight);
  CHECK(is_tight(skel, F2).tight);
}

TEST_CASE("tightness errors") {
  auto disconnected = SimplicialComplex::build(4, {{1, 2}, {3, 4}});
  CHECK_THROWS_WITH_AS(is_tight(disconnected, Q), doctest::Contains("NotConnected"), Error);
  TightnessOptions opts;
  opts.max_vertices = 3;
  CHECK_THROWS_WITH_AS(is_tight(cycle(4), Q, opts), doctest::Contains("TooManyVertices"), Error);
}

TEST_CASE("pruned and unpruned tightness agree") {
  std::mt19937_64 rng(2718);
  std::vector<SimplicialComplex> corpus = {cycle(4),          cycle(5),       boundary_simplex(2),
                                           boundary_simplex(3), zoo::rp2_6(), simplex_skeleton(5, 1),
                                           simplex_skeleton(6, 2)};
  for (int trial = 0; trial < 15; ++trial)
    corpus.push_back(testsupport::random_connected_complex(rng, 4 + static_cast<int>(rng() % 4)));
  for (const auto& k : corpus) {
    for (const auto& field : {Q, F2}) {
      TightnessOptions pruned, unpruned;
      unpruned.use_pruning = false;
      auto a = is_tight(k, field, pruned);
      auto b = is_tight(k, field, unpruned);
      CHECK(a.tight == b.tight);
      if (!a.tight) {
        CHECK(a.witness == b.witness);
        CHECK(a.witness_degree == b.witness_degree);
      }
      if (b.tight) CHECK(b.subsets_checked == static_cast<long long>((Mask(1) << k.m()) - 1));
    }
  }
}

TEST_CASE("manifold validation examples") {
  auto bd4 = boundary_simplex(4);
  auto report = validate_manifold(bd4, {Q, F2});
  CHECK(report.dim == 3);
  CHECK(report.valid_closed_manifold());
  CHECK(report.links_sphere_certified);
  CHECK(report.orientable(Q));
  CHECK(report.orientable(F2));
  for (const auto& lv : report.link_verdicts) CHECK(lv.level == LinkLevel::sphere_certified);

  auto rp2 = zoo::rp2_6();
  auto rp2_report = validate_manifold(rp2, {Q, F2});
  CHECK(rp2_report.valid_closed_manifold());
  CHECK(!rp2_report.orientable(Q));
  CHECK(rp2_report.orientable(F2));

  // dangling edge: purity holds (dimension 1 throughout) but closedness fails
  auto dangling = SimplicialComplex::build(5, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {4, 5}});
  auto dr = validate_manifold(dangling, {Q});
  CHECK(dr.pure);
  CHECK(!dr.closed_pseudomanifold);
  CHECK(dr.closed_witness == mk({4}));
  CHECK(dr.closed_witness_count == 3);

  // impure complex: purity fails with the offending facet
  auto impure = SimplicialComplex::build(4, {{1, 2, 3}, {3, 4}});
  auto ir = validate_manifold(impure, {Q});
  CHECK(!ir.pure);
  CHECK(ir.purity_witness == mk({3, 4}));

  // dimension-4 sphere: links certified only as homology spheres
  auto bd5 = boundary_simplex(5);
  auto r5 = validate_manifold(bd5, {Q, F2});
  CHECK(r5.valid_closed_manifold());
  CHECK(!r5.links_sphere_certified);
  for (const auto& lv : r5.link_verdicts) CHECK(lv.level == LinkLevel::homology_sphere_only);
}

TEST_CASE("stacked sphere recognition") {
  auto bd4 = boundary_simplex(4);
  auto d = is_stacked_sphere(bd4);
  REQUIRE(d.has_value());
  REQUIRE(d->blocks.size() == 1);
  CHECK(d->blocks[0] == full_mask(5));

  auto s2 = stacked_sphere(3, 2);
  auto d2 = is_stacked_sphere(s2);
  REQUIRE(d2.has_value());
  CHECK(d2->blocks.size() == 2);

  CHECK(!is_stacked_sphere(zoo::t7_torus()).has_value());

  CHECK_THROWS_WITH_AS(is_stacked_sphere(SimplicialComplex::build(4, {{1, 2, 3}, {3, 4}})),
                       doctest::Contains("NotPseudomanifold"), Error);

  // 1-dimensional inputs: only the triangle is stacked
  CHECK(is_stacked_sphere(cycle(3)).has_value());
  CHECK(!is_stacked_sphere(cycle(5)).has_value());
}

TEST_CASE("stacked decomposition round trip") {
  for (int d = 2; d <= 4; ++d) {
    for (int blocks = 1; blocks <= 5; ++blocks) {
      auto s = stacked_sphere(d, blocks);
      auto decomposition = is_stacked_sphere(s);
      REQUIRE(decomposition.has_value());
      CHECK(static_cast<int>(decomposition->blocks.size()) == blocks);
      auto rebuilt = replay_stacked_decomposition(s.m(), *decomposition);
      CHECK(rebuilt == s);
    }
  }
}

TEST_CASE("locally stacked links") {
  auto bd4 = boundary_simplex(4);
  auto v4 = validate_manifold(bd4, {Q});
  auto ls = is_locally_stacked(bd4, v4);
  CHECK(ls.applicable);
  CHECK(ls.all_stacked);

  auto s3 = stacked_sphere(3, 3);
  auto vs = validate_manifold(s3, {Q});
  CHECK(is_locally_stacked(s3, vs).all_stacked);

  auto t7 = zoo::t7_torus();
  auto vt = validate_manifold(t7, {Q});
  auto lt = is_locally_stacked(t7, vt);
  CHECK(!lt.applicable);  // dimension 2: the stacked-link route is never invoked

  auto c4 = cycle(4);
  auto vc = validate_manifold(c4, {Q});
  CHECK(vc.valid_closed_manifold());
  CHECK(!is_locally_stacked(c4, vc).applicable);

  ManifoldReport bogus;
  CHECK_THROWS_WITH_AS(is_locally_stacked(bd4, bogus), doctest::Contains("PrerequisiteFailed"),
                       Error);
}

TEST_CASE("tight-neighborly arithmetic") {
  auto bd4 = boundary_simplex(4);
  auto v = validate_manifold(bd4, {Q});
  auto trace = is_tight_neighborly(bd4, Q, v);
  CHECK(trace.holds);
  CHECK(trace.lhs == 0);
  CHECK(trace.rhs == 0);

  // the binomial identity itself at (m, d, beta1) = (9, 3, 1) and (8, 3, 1)
  CHECK(binomial(9 - 3 - 1, 2) == 10);
  CHECK(binomial(3 + 2, 2) * 1 == 10);
  CHECK(binomial(8 - 3 - 1, 2) == 6);
  CHECK(binomial(8 - 3 - 1, 2) != binomial(3 + 2, 2) * 1);

  auto t7 = zoo::t7_torus();
  auto vt = validate_manifold(t7, {Q});
  CHECK_THROWS_WITH_AS(is_tight_neighborly(t7, Q, vt), doctest::Contains("DimensionTooLow"),
                       Error);
}

TEST_CASE("d=3 equivalence chain on spheres") {
  // closed connected orientable 3-manifolds in the corpus: stacked spheres
  for (int blocks = 1; blocks <= 3; ++blocks) {
    auto s = stacked_sphere(3, blocks);
    auto v = validate_manifold(s, {Q, F2});
    REQUIRE(v.valid_closed_manifold());
    for (const auto& field : {Q, F2}) {
      bool tight = is_tight(s, field).tight;
      bool tn = is_tight_neighborly(s, field, v).holds;
      bool ns = is_k_neighborly(s, 1) && is_locally_stacked(s, v).all_stacked;
      CHECK(tight == tn);
      CHECK(tn == ns);
    }
  }
}
