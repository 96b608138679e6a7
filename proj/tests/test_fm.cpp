#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "golodtight/fm.hpp"
#include "golodtight/chain_complex.hpp"
#include "golodtight/io.hpp"
#include "golodtight/zoo.hpp"

using namespace golodtight;

namespace {

const FieldSpec Q = FieldSpec::rational();
const FieldSpec F2 = FieldSpec::prime(2);

Mask mk(std::initializer_list<int> vs) { return from_vertices(std::vector<int>(vs)); }

std::optional<SimplicialComplex> load_walkup() {
  for (const char* path : {"data/walkup_9_vertex.cplx", "../data/walkup_9_vertex.cplx",
                           "../../data/walkup_9_vertex.cplx"}) {
    std::ifstream probe(path);
    if (probe) return load_complex(path);
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("F of the boundary 4-simplex is itself") {
  auto bd4 = boundary_simplex(4);
  auto validation = validate_manifold(bd4, {Q, F2});
  REQUIRE(validation.valid_closed_manifold());

  FMOptions opts;
  opts.fields = {Q, F2};
  auto result = build_fm(bd4, validation, opts);
  CHECK(result.filled.empty());  // the only minimal non-face has size d + 2
  CHECK(result.fm == bd4);
  CHECK(result.sm == std::vector<Mask>{full_mask(5)});
  CHECK(result.sm_characterizations_agree);
  for (const auto& check : result.checks) {
    INFO(check.name, ": ", check.witness);
    CHECK(check.pass);
  }
}

TEST_CASE("link decompositions of the boundary 4-simplex") {
  auto bd4 = boundary_simplex(4);
  auto blocks = link_decomposition(bd4, 1);
  REQUIRE(blocks.size() == 1);
  CHECK(blocks[0] == mk({2, 3, 4, 5}));
}

TEST_CASE("link decompositions of a two-block stacked 3-sphere") {
  auto s = stacked_sphere(3, 2);
  // vertices of the shared tetrahedron {1,2,3,4} have two-block links
  for (int v = 1; v <= s.m(); ++v) {
    auto blocks = link_decomposition(s, v);
    bool shared = contains(mk({1, 2, 3, 4}), v);
    CHECK(blocks.size() == (shared ? 2u : 1u));
  }
}

TEST_CASE("fm prerequisites") {
  auto t7 = zoo::t7_torus();
  auto validation = validate_manifold(t7, {Q});
  CHECK_THROWS_WITH_AS(build_fm(t7, validation, {}), doctest::Contains("PrerequisiteFailed"),
                       Error);
  auto c4 = cycle(4);
  auto vc = validate_manifold(c4, {Q});
  CHECK_THROWS_WITH_AS(compute_sm(c4, vc), doctest::Contains("PrerequisiteFailed"), Error);
}

TEST_CASE("stacked spheres: F fills nothing below the blocks") {
  auto s = stacked_sphere(3, 2);
  auto validation = validate_manifold(s, {Q, F2});
  REQUIRE(validation.valid_closed_manifold());
  FMOptions opts;
  opts.fields = {Q, F2};
  auto result = build_fm(s, validation, opts);
  // the shared tetrahedron {1,2,3,4} is a minimal non-face of size d+1 = 4
  CHECK(result.filled == std::vector<Mask>{mk({1, 2, 3, 4})});
  for (const auto& check : result.checks) {
    INFO(check.name, ": ", check.witness);
    CHECK(check.pass);
  }
  // the filled sphere is the boundary of the 4-simplex plus one extra vertex
  // worth of blocks: |S(M)| = beta_3(F(M)) by the homology check above
  CHECK(result.sm.size() == 2);
}

TEST_CASE("negative control: a perturbed manifold fails verification") {
  // flip one facet of the stacked sphere: replace {2,3,4,6} by {2,3,5,6}
  auto s = stacked_sphere(3, 2);
  std::vector<Mask> facets = s.facets();
  bool flipped = false;
  for (auto& f : facets) {
    if (f == mk({2, 3, 4, 6})) {
      f = mk({2, 3, 5, 6});
      flipped = true;
      break;
    }
  }
  REQUIRE(flipped);
  auto bad = SimplicialComplex::build_from_masks(6, facets);
  auto validation = validate_manifold(bad, {Q});
  CHECK(!validation.valid_closed_manifold());
}

TEST_CASE("walkup 9-vertex file, when shipped, runs the full pipeline") {
  auto loaded = load_walkup();
  if (!loaded) {
    MESSAGE("walkup data file not found; skipping");
    return;
  }
  auto m = *loaded;
  CHECK(m.m() == 9);
  auto validation = validate_manifold(m, {Q, F2});
  REQUIRE(validation.valid_closed_manifold());
  CHECK(validation.dim == 3);

  FMOptions opts;
  auto result = build_fm(m, validation, opts);
  CHECK(result.fm.facet_count() > m.facet_count());  // strictly larger
  for (const auto& check : result.checks) {
    INFO(check.name, ": ", check.witness);
    CHECK(check.pass);
  }
  auto betti = betti_numbers(result.fm, Q, true);
  CHECK(betti[1] == 1);
  CHECK(betti[3] == static_cast<int>(result.sm.size()));
}
