// Writes the bundled example complexes as canonical facet files, including a
// 9-vertex tight-neighborly 3-manifold obtained by Walkup's construction:
// take a stacked 3-sphere and identify two vertex-disjoint facets.  Candidate
// identifications are enumerated deterministically and each quotient runs the
// whole validation pipeline; the first one that passes everything is written.

#include <algorithm>
#include <iostream>
#include <set>

#include "golodtight/fm.hpp"
#include "golodtight/chain_complex.hpp"
#include "golodtight/io.hpp"
#include "golodtight/manifold.hpp"
#include "golodtight/tightness.hpp"
#include "golodtight/zoo.hpp"

using namespace golodtight;

namespace {

const FieldSpec Q = FieldSpec::rational();
const FieldSpec F2 = FieldSpec::prime(2);

std::optional<SimplicialComplex> quotient(const SimplicialComplex& sphere, Mask f1, Mask f2,
                                          const std::vector<int>& image) {
  // map: vertices of f2 (ascending) -> image; the rest keep their labels and
  // are renumbered at the end
  std::vector<int> map(static_cast<std::size_t>(sphere.m()) + 1, 0);
  for (int v = 1; v <= sphere.m(); ++v) map[static_cast<std::size_t>(v)] = v;
  auto f2v = to_vertices(f2);
  for (std::size_t i = 0; i < f2v.size(); ++i)
    map[static_cast<std::size_t>(f2v[i])] = image[i];

  std::set<Mask> mapped;
  for (Mask f : sphere.facets()) {
    if (f == f1 || f == f2) continue;
    Mask g = 0;
    int count = 0;
    for (int v : to_vertices(f)) {
      g |= single(map[static_cast<std::size_t>(v)]);
      ++count;
    }
    if (card(g) != count) return std::nullopt;  // facet pinched onto itself
    if (mapped.count(g)) return std::nullopt;   // two facets collapsed together
    mapped.insert(g);
  }

  // compact the labels
  Mask support = 0;
  for (Mask f : mapped) support |= f;
  auto verts = to_vertices(support);
  std::vector<int> compact(static_cast<std::size_t>(sphere.m()) + 1, 0);
  for (std::size_t i = 0; i < verts.size(); ++i)
    compact[static_cast<std::size_t>(verts[i])] = static_cast<int>(i) + 1;
  std::vector<Mask> facets;
  for (Mask f : mapped) {
    Mask g = 0;
    for (int v : to_vertices(f)) g |= single(compact[static_cast<std::size_t>(v)]);
    facets.push_back(g);
  }
  try {
    return SimplicialComplex::build_from_masks(static_cast<int>(verts.size()), facets);
  } catch (const Error&) {
    return std::nullopt;
  }
}

// The 9-vertex member of Walkup's class is the twisted S^2-bundle over the
// circle; it is F_2-tight but cannot be Q-tight (H_2 over Z is 2-torsion while
// a filled-in tetrahedron boundary carries a rational 2-cycle), so the
// Q-tightness direction is exercised as a negative elsewhere.
bool passes_everything(const SimplicialComplex& m) {
  auto validation = validate_manifold(m, {Q, F2});
  if (!validation.valid_closed_manifold() || validation.dim != 3 || !validation.connected)
    return false;
  for (const auto& field : {Q, F2}) {
    auto trace = is_tight_neighborly(m, field, validation);
    if (!trace.holds || trace.beta1 != 1) return false;
  }
  if (!is_k_neighborly(m, 1)) return false;
  if (!is_locally_stacked(m, validation).all_stacked) return false;
  if (!is_tight(m, F2).tight) return false;
  for (const auto& field : {Q, F2})
    if (!is_weakly_golod(m, field).vanishing) return false;
  auto fm = build_fm(m, validation, {});
  return fm.all_checks_pass();
}

// a "long" stacked 3-sphere: repeatedly subdivide the lex-last facet, so the
// path of blocks stretches out and the two end facets share no vertices
SimplicialComplex long_stacked_sphere(int blocks) {
  SimplicialComplex s = boundary_simplex(4);
  for (int b = 2; b <= blocks; ++b) {
    Mask chosen = s.facets().back();
    int w = s.m() + 1;
    std::vector<Mask> fs;
    for (Mask f : s.facets())
      if (f != chosen) fs.push_back(f);
    for (int v : to_vertices(chosen)) fs.push_back((chosen & ~single(v)) | single(w));
    s = SimplicialComplex::build_from_masks(w, fs);
  }
  return s;
}

std::optional<SimplicialComplex> find_walkup_manifold() {
  auto sphere = long_stacked_sphere(9);  // 13 vertices, 29 facets
  const auto& facets = sphere.facets();
  std::vector<int> perm_base = {0, 1, 2, 3};
  for (std::size_t a = 0; a < facets.size(); ++a) {
    for (std::size_t b = 0; b < facets.size(); ++b) {
      if (a == b || (facets[a] & facets[b]) != 0) continue;
      auto f1v = to_vertices(facets[a]);
      auto perm = perm_base;
      do {
        std::vector<int> image;
        for (int idx : perm) image.push_back(f1v[static_cast<std::size_t>(idx)]);
        auto candidate = quotient(sphere, facets[a], facets[b], image);
        if (!candidate || candidate->m() != 9) continue;
        auto validation = validate_manifold(*candidate, {Q, F2});
        if (!validation.valid_closed_manifold() || validation.dim != 3) continue;
        if (betti_numbers(*candidate, Q, true)[1] != 1) continue;
        if (!passes_everything(*candidate)) continue;
        std::cerr << "found candidate at facets " << mask_to_string(facets[a]) << " ~ "
                  << mask_to_string(facets[b]) << " image";
        for (int v : image) std::cerr << " " << v;
        std::cerr << "\n";
        return candidate;
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "data";
  save_complex(cycle(4), dir + "/c4.cplx");
  save_complex(zoo::rp2_6(), dir + "/rp2_6.cplx");
  save_complex(zoo::t7_torus(), dir + "/t7_torus.cplx");
  std::cerr << "wrote c4, rp2_6, t7_torus\n";

  auto walkup = find_walkup_manifold();
  if (!walkup) {
    std::cerr << "no valid facet identification found\n";
    return 1;
  }
  save_complex(*walkup, dir + "/walkup_9_vertex.cplx");
  std::cerr << "wrote walkup_9_vertex (f-vector:";
  for (long long f : walkup->f_vector()) std::cerr << " " << f;
  std::cerr << ")\n";
  return 0;
}
