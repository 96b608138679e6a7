#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "golodtight/chain_complex.hpp"
#include "golodtight/errors.hpp"
#include "golodtight/io.hpp"
#include "golodtight/simplicial_complex.hpp"
#include "golodtight/zoo.hpp"
#include "support/random_complex.hpp"

using namespace golodtight;

namespace {

std::vector<std::vector<int>> all_subsets_of_size(int m, int k) {
  std::vector<std::vector<int>> out;
  for (Mask s : subsets_of_size(m, k)) out.push_back(to_vertices(s));
  return out;
}

Mask mk(std::initializer_list<int> vs) { return from_vertices(std::vector<int>(vs)); }

}  // namespace

TEST_CASE("build: boundary of the 3-simplex") {
  auto k = SimplicialComplex::build(4, all_subsets_of_size(4, 3));
  CHECK(k.dim() == 2);
  CHECK(k.facet_count() == 4);
  CHECK(k == boundary_simplex(3));
}

TEST_CASE("build: 4-cycle") {
  auto k = SimplicialComplex::build(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  CHECK(k == cycle(4));
  CHECK(k.dim() == 1);
}

TEST_CASE("build: dedup, maximalize, missing vertex") {
  CHECK_THROWS_WITH_AS(SimplicialComplex::build(3, {{1, 2}, {1, 2}, {1}}),
                       doctest::Contains("MissingVertex"), Error);
  auto k = SimplicialComplex::build(3, {{1, 2}, {1, 2}, {1}}, /*allow_isolated=*/true);
  CHECK(k.facets() == std::vector<Mask>{mk({1, 2})});
  CHECK_THROWS_AS(SimplicialComplex::build(3, {{1, 2, 4}, {3}}), Error);
  CHECK_THROWS_AS(SimplicialComplex::build(3, {}), Error);
  CHECK_THROWS_AS(SimplicialComplex::build(0, {{1}}), Error);
}

TEST_CASE("full subcomplex examples") {
  auto bd3 = boundary_simplex(3);
  auto tri = bd3.full_subcomplex(mk({1, 2, 3}));
  CHECK(tri == full_simplex(3));
  for (int v = 1; v <= 3; ++v) CHECK(tri.label(v) == v);

  auto c4 = cycle(4);
  auto pts = c4.full_subcomplex(mk({1, 3}));
  CHECK(pts.m() == 2);
  CHECK(pts.facets() == std::vector<Mask>{mk({1}), mk({2})});
  CHECK(pts.labels() == std::vector<int>{1, 3});

  auto path = c4.full_subcomplex(mk({1, 2, 3}));
  CHECK(path.facets() == std::vector<Mask>{mk({1, 2}), mk({2, 3})});

  CHECK_THROWS_AS(c4.full_subcomplex(0), Error);
}

TEST_CASE("link and deletion examples") {
  auto bd3 = boundary_simplex(3);
  auto lk = bd3.link(1);
  CHECK(lk == boundary_simplex(2));
  CHECK(lk.labels() == std::vector<int>{2, 3, 4});

  auto c4 = cycle(4);
  auto lk2 = c4.link(1);
  CHECK(lk2.m() == 2);
  CHECK(lk2.facets() == std::vector<Mask>{mk({1}), mk({2})});
  CHECK(lk2.labels() == std::vector<int>{2, 4});

  auto edge = full_simplex(2);
  auto lk3 = edge.link(1);
  CHECK(lk3.m() == 1);
  CHECK(lk3.labels() == std::vector<int>{2});

  CHECK(c4.vertex_deletion(1) == c4.full_subcomplex(mk({2, 3, 4})));
  CHECK_THROWS_AS(c4.link(9), Error);
}

TEST_CASE("minimal non-faces") {
  CHECK(boundary_simplex(3).minimal_non_faces() == std::vector<Mask>{mk({1, 2, 3, 4})});
  CHECK(cycle(4).minimal_non_faces() == std::vector<Mask>{mk({1, 3}), mk({2, 4})});
  CHECK(full_simplex(3).minimal_non_faces().empty());
}

TEST_CASE("minimal non-face iff full subcomplex is a boundary simplex") {
  std::mt19937_64 rng(20240811);
  for (int trial = 0; trial < 20; ++trial) {
    int m = 5 + static_cast<int>(rng() % 4);  // 5..8
    auto k = testsupport::random_connected_complex(rng, m);
    auto mnf = k.minimal_non_faces();
    std::set<Mask> mnf_set(mnf.begin(), mnf.end());
    int max_size = std::min(m, k.dim() + 2);
    for (int size = 2; size <= max_size; ++size) {
      for (Mask I : subsets_of_size(m, size)) {
        bool is_mnf = (k.full_subcomplex(I) == boundary_simplex(card(I) - 1));
        CHECK(is_mnf == (mnf_set.count(I) > 0));
      }
    }
  }
}

TEST_CASE("join examples") {
  auto pt = full_simplex(1);
  CHECK(join(pt, pt) == full_simplex(2));

  auto two = SimplicialComplex::build(2, {{1}, {2}});
  auto c = join(two, two);
  CHECK(c.facets() == std::vector<Mask>{mk({1, 3}), mk({1, 4}), mk({2, 3}), mk({2, 4})});
  // a 4-cycle up to relabeling
  CHECK(c.f_vector() == std::vector<long long>{4, 4});
  CHECK(c.euler_characteristic() == 0);

  auto cone = join(boundary_simplex(2), pt);
  auto reduced = betti_numbers(cone, FieldSpec::rational(), true);
  for (int b : reduced) CHECK(b == 0);
}

TEST_CASE("join is associative and f-vectors convolve") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    auto a = testsupport::random_connected_complex(rng, 3 + static_cast<int>(rng() % 2));
    auto b = testsupport::random_connected_complex(rng, 3 + static_cast<int>(rng() % 2));
    auto c = testsupport::random_connected_complex(rng, 3);
    CHECK(join(join(a, b), c) == join(a, join(b, c)));

    // (1, f(a*b)) is the convolution of (1, f(a)) and (1, f(b))
    auto fa = a.f_vector();
    auto fb = b.f_vector();
    auto fab = join(a, b).f_vector();
    std::vector<long long> ea = {1}, eb = {1};
    ea.insert(ea.end(), fa.begin(), fa.end());
    eb.insert(eb.end(), fb.begin(), fb.end());
    std::vector<long long> conv(ea.size() + eb.size() - 1, 0);
    for (std::size_t i = 0; i < ea.size(); ++i)
      for (std::size_t j = 0; j < eb.size(); ++j) conv[i + j] += ea[i] * eb[j];
    REQUIRE(conv.size() >= fab.size() + 1);
    for (std::size_t t = 0; t < fab.size(); ++t) CHECK(conv[t + 1] == fab[t]);
  }
}

TEST_CASE("generators: stacked spheres and connected sums") {
  CHECK(stacked_sphere(3, 1) == boundary_simplex(4));
  CHECK(stacked_sphere(3, 1).m() == 5);

  auto s2 = stacked_sphere(3, 2);
  CHECK(s2.m() == 6);
  CHECK(s2.f_vector() == std::vector<long long>{6, 14, 16, 8});

  for (int d = 2; d <= 4; ++d)
    for (int k = 1; k <= 5; ++k) CHECK(stacked_sphere(d, k).m() == d + k + 1);

  auto bd = boundary_simplex(3);
  Mask f = mk({1, 2, 3});
  auto s = connected_sum(bd, f, bd, f, {1, 2, 3});
  CHECK(s.f_vector() == std::vector<long long>{5, 9, 6});
  CHECK(s.euler_characteristic() == 2);

  // circ-union of two tetrahedron boundaries sharing one facet in common labels
  auto upper = SimplicialComplex::build(5, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}},
                                        /*allow_isolated=*/true);
  auto lower = SimplicialComplex::build(5, {{1, 2, 3}, {1, 2, 5}, {1, 3, 5}, {2, 3, 5}},
                                        /*allow_isolated=*/true);
  auto cu = circ_union(upper, lower, 5);
  CHECK(cu.f_vector() == std::vector<long long>{5, 9, 7});
  CHECK(glue_shared_facet(upper, lower, 5, false) == s);

  CHECK_THROWS_AS(connected_sum(bd, f, cycle(3), mk({1, 2}), {1, 2}), Error);
  CHECK_THROWS_WITH_AS(connected_sum(bd, f, bd, f, {1, 2, 4}),
                       doctest::Contains("LabelOutOfRange"), Error);

  // intersection reaching outside the shared facet
  auto a = SimplicialComplex::build(4, {{1, 2, 3}, {1, 3, 4}});
  auto b = SimplicialComplex::build(4, {{1, 2, 3}, {2, 3, 4}});
  CHECK_THROWS_WITH_AS(circ_union(a, b, 4), doctest::Contains("Overlap"), Error);
}

TEST_CASE("f-vector, euler characteristic, cones") {
  CHECK(boundary_simplex(3).f_vector() == std::vector<long long>{4, 6, 4});
  CHECK(boundary_simplex(3).euler_characteristic() == 2);
  CHECK(cycle(4).f_vector() == std::vector<long long>{4, 4});
  CHECK(cycle(4).euler_characteristic() == 0);
  CHECK(full_simplex(3).is_cone() == 1);
  CHECK(!boundary_simplex(3).is_cone().has_value());
  for (int n = 2; n <= 6; ++n)
    CHECK(boundary_simplex(n).euler_characteristic() == 1 + ((n - 1) % 2 == 0 ? 1 : -1));
}

TEST_CASE("euler characteristic equals alternating f-vector sum on random complexes") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    auto k = testsupport::random_connected_complex(rng, 4 + static_cast<int>(rng() % 4));
    auto f = k.f_vector();
    long long chi = 0;
    for (std::size_t i = 0; i < f.size(); ++i) chi += (i % 2 ? -f[i] : f[i]);
    CHECK(chi == k.euler_characteristic());
  }
}

TEST_CASE("nested full subcomplexes compose") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 20; ++trial) {
    int m = 5 + static_cast<int>(rng() % 3);
    auto k = testsupport::random_connected_complex(rng, m);
    Mask I = 0;
    while (card(I) < 4) I |= single(1 + static_cast<int>(rng() % m));
    Mask J = 0;
    for (int v : to_vertices(I))
      if (rng() % 2) J |= single(v);
    if (J == 0) J = single(lowest_vertex(I));

    auto ki = k.full_subcomplex(I);
    // express J in K_I's vertex numbering
    auto iverts = to_vertices(I);
    Mask J_in_I = 0;
    for (std::size_t pos = 0; pos < iverts.size(); ++pos)
      if (contains(J, iverts[pos])) J_in_I |= single(static_cast<int>(pos) + 1);

    auto nested = ki.full_subcomplex(J_in_I);
    auto direct = k.full_subcomplex(J);
    CHECK(nested == direct);
    CHECK(nested.labels() == direct.labels());
  }
}

TEST_CASE("t7 torus and rp2_6 basic shape") {
  auto t7 = zoo::t7_torus();
  CHECK(t7.f_vector() == std::vector<long long>{7, 21, 14});
  CHECK(t7.euler_characteristic() == 0);
  auto rp2 = zoo::rp2_6();
  CHECK(rp2.f_vector() == std::vector<long long>{6, 15, 10});
  CHECK(rp2.euler_characteristic() == 1);
}

TEST_CASE("facet file and structured round trips are byte stable") {
  auto complexes = {cycle(4), boundary_simplex(3), zoo::rp2_6(), stacked_sphere(3, 2)};
  for (const auto& k : complexes) {
    auto text = to_facet_text(k);
    std::istringstream in(text);
    auto back = read_complex(in);
    CHECK(back == k);
    CHECK(to_facet_text(back) == text);

    auto json = to_structured_text(k);
    std::istringstream jin(json);
    auto jback = read_complex(jin);
    CHECK(jback == k);
    CHECK(to_structured_text(jback) == json);
  }
}

TEST_CASE("facet file parsing errors and comments") {
  std::istringstream ok("# a complex\nm 4\n1 2\n2 3\n3 4 # trailing\n1 4\n");
  CHECK(read_complex(ok) == cycle(4));

  std::istringstream bad_header("4\n1 2\n");
  CHECK_THROWS_WITH_AS(read_complex(bad_header), doctest::Contains("ParseError"), Error);

  std::istringstream not_increasing("m 3\n2 1\n3\n");
  CHECK_THROWS_AS(read_complex(not_increasing), Error);

  std::istringstream empty("   \n");
  CHECK_THROWS_AS(read_complex(empty), Error);
}
