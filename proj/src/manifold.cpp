#include "golodtight/manifold.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "golodtight/chain_complex.hpp"

namespace golodtight {

long long binomial(long long n, int k) {
  if (k < 0 || n < k) return 0;
  long long out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

namespace {

// facets sharing a ridge ((d-1)-face) are adjacent
bool facet_graph_connected(const std::vector<Mask>& facets) {
  if (facets.empty()) return false;
  std::vector<int> comp(facets.size(), -1);
  std::vector<std::size_t> stack = {0};
  comp[0] = 0;
  while (!stack.empty()) {
    std::size_t cur = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < facets.size(); ++j) {
      if (comp[j] >= 0) continue;
      if (card(facets[cur] & facets[j]) == card(facets[cur]) - 1) {
        comp[j] = 0;
        stack.push_back(j);
      }
    }
  }
  return std::all_of(comp.begin(), comp.end(), [](int c) { return c >= 0; });
}

std::map<Mask, int> ridge_cofacet_counts(const SimplicialComplex& m) {
  std::map<Mask, int> counts;
  for (Mask f : m.facets())
    for (int v : to_vertices(f)) counts[f & ~single(v)] += 1;
  return counts;
}

// link of v as facet masks over the ambient labels (v removed)
std::vector<Mask> link_facets(const std::vector<Mask>& facets, int v) {
  std::vector<Mask> out;
  for (Mask f : facets)
    if (contains(f, v)) out.push_back(f & ~single(v));
  return out;
}

bool is_single_cycle(const std::vector<Mask>& edges) {
  if (edges.size() < 3) return false;
  std::map<int, int> degree;
  for (Mask e : edges) {
    if (card(e) != 2) return false;
    for (int v : to_vertices(e)) degree[v] += 1;
  }
  for (auto& [v, deg] : degree)
    if (deg != 2) return false;
  if (degree.size() != edges.size()) return false;
  return facet_graph_connected(edges);
}

// closed surface test for masks of triangles (used on links of 3-manifolds)
bool is_closed_surface(const std::vector<Mask>& tris, std::string& why) {
  if (tris.empty()) {
    why = "empty link";
    return false;
  }
  std::map<Mask, int> edges;
  std::set<int> verts;
  for (Mask t : tris) {
    if (card(t) != 3) {
      why = "link facet " + mask_to_string(t) + " is not a triangle";
      return false;
    }
    for (int v : to_vertices(t)) {
      edges[t & ~single(v)] += 1;
      verts.insert(v);
    }
  }
  for (auto& [e, count] : edges)
    if (count != 2) {
      why = "link edge " + mask_to_string(e) + " lies in " + std::to_string(count) + " triangles";
      return false;
    }
  if (!facet_graph_connected(tris)) {
    why = "link is not strongly connected";
    return false;
  }
  // vertex links inside the surface must be single cycles
  for (int v : verts) {
    if (!is_single_cycle(link_facets(tris, v))) {
      why = "link of vertex " + std::to_string(v) + " within the link is not a cycle";
      return false;
    }
  }
  long long chi = static_cast<long long>(verts.size()) - static_cast<long long>(edges.size()) +
                  static_cast<long long>(tris.size());
  if (chi != 2) {
    why = "link Euler characteristic " + std::to_string(chi) + " != 2";
    return false;
  }
  return true;
}

SimplicialComplex complex_from_masks_on_support(const std::vector<Mask>& facets) {
  Mask support = 0;
  for (Mask f : facets) support |= f;
  int top = support == 0 ? 1 : (63 - static_cast<int>(std::countl_zero(support)) + 1);
  return union_on_support(top, facets);
}

}  // namespace

ManifoldReport validate_manifold(const SimplicialComplex& m, const std::vector<FieldSpec>& fields) {
  ManifoldReport report;
  report.dim = m.dim();
  int d = report.dim;

  report.pure = true;
  for (Mask f : m.facets())
    if (card(f) != d + 1) {
      report.pure = false;
      report.purity_witness = f;
      break;
    }

  report.connected = m.is_connected();

  if (report.pure) {
    report.closed_pseudomanifold = true;
    for (auto& [ridge, count] : ridge_cofacet_counts(m)) {
      if (count != 2) {
        report.closed_pseudomanifold = false;
        report.closed_witness = ridge;
        report.closed_witness_count = count;
        break;
      }
    }
    report.strongly_connected = facet_graph_connected(m.facets());
  }

  // per-vertex links: exact sphere certification through dimension 2 links
  report.links_sphere_certified = (d <= 3);
  report.all_links_ok = report.pure && report.closed_pseudomanifold;
  for (int v = 1; v <= m.m() && report.pure; ++v) {
    LinkVerdict verdict;
    verdict.vertex = v;
    auto lf = link_facets(m.facets(), v);
    if (lf.empty()) {
      verdict.level = LinkLevel::failed;
      verdict.detail = "isolated vertex";
    } else if (d == 1) {
      bool two_points = lf.size() == 2 && card(lf[0]) == 1 && card(lf[1]) == 1;
      verdict.level = two_points ? LinkLevel::sphere_certified : LinkLevel::failed;
      if (!two_points) verdict.detail = "link is not two points";
    } else if (d == 2) {
      bool cyc = is_single_cycle(lf);
      verdict.level = cyc ? LinkLevel::sphere_certified : LinkLevel::failed;
      if (!cyc) verdict.detail = "link is not a single cycle";
    } else if (d == 3) {
      std::string why;
      bool sphere = is_closed_surface(lf, why);
      verdict.level = sphere ? LinkLevel::sphere_certified : LinkLevel::failed;
      verdict.detail = why;
    } else {
      // structural pseudomanifold checks plus homology-sphere over each field
      auto link = complex_from_masks_on_support(lf);
      bool ok = link.dim() == d - 1;
      if (ok)
        for (Mask f : link.facets()) ok = ok && card(f) == d;
      if (ok)
        for (auto& [ridge, count] : ridge_cofacet_counts(link)) {
          (void)ridge;
          if (count != 2) {
            ok = false;
            break;
          }
        }
      if (ok) ok = facet_graph_connected(link.facets());
      if (ok) {
        for (const auto& field : fields) {
          auto betti = betti_numbers(link, field, true);
          for (std::size_t i = 0; i + 1 < betti.size(); ++i) ok = ok && betti[i] == 0;
          ok = ok && betti.back() == 1;
        }
      }
      verdict.level = ok ? LinkLevel::homology_sphere_only : LinkLevel::failed;
      if (!ok) verdict.detail = "link fails the homology-sphere checks";
    }
    if (verdict.level == LinkLevel::failed) report.all_links_ok = false;
    report.link_verdicts.push_back(std::move(verdict));
  }

  for (const auto& field : fields) {
    bool orientable = false;
    if (report.pure && report.closed_pseudomanifold)
      orientable = betti_numbers(m, field, false)[static_cast<std::size_t>(d)] == 1;
    report.orientable_over.emplace_back(field, orientable);
  }
  return report;
}

namespace {

struct StackedSearch {
  int d;
  std::set<std::vector<Mask>> dead_ends;

  bool is_boundary_simplex(const std::vector<Mask>& facets, Mask support) const {
    return card(support) == d + 2 && static_cast<int>(facets.size()) == d + 2;
  }

  // vertices whose link is the boundary of a d-simplex dDelta(W), W not a face
  std::vector<std::pair<int, Mask>> removable(const std::vector<Mask>& facets,
                                              Mask support) const {
    std::vector<std::pair<int, Mask>> out;
    for (int v : to_vertices(support)) {
      Mask w = 0;
      int count = 0;
      for (Mask f : facets)
        if (contains(f, v)) {
          w |= f & ~single(v);
          ++count;
        }
      if (card(w) != d + 1 || count != d + 1) continue;
      // link facets must be all d-subsets of W; counts suffice given the union
      bool all_present = true;
      for (int x : to_vertices(w)) {
        Mask expected = (w & ~single(x)) | single(v);
        if (!std::count(facets.begin(), facets.end(), expected)) {
          all_present = false;
          break;
        }
      }
      if (!all_present) continue;
      // filling W must not duplicate an existing face
      bool w_is_face = false;
      for (Mask f : facets)
        if (subset_of(w, f)) {
          w_is_face = true;
          break;
        }
      if (!w_is_face) out.emplace_back(v, w);
    }
    return out;
  }

  bool solve(std::vector<Mask> facets, Mask support, std::vector<Mask>& blocks) {
    if (is_boundary_simplex(facets, support)) {
      blocks.push_back(support);
      return true;
    }
    if (dead_ends.count(facets)) return false;
    for (auto& [v, w] : removable(facets, support)) {
      std::vector<Mask> next;
      next.reserve(facets.size());
      for (Mask f : facets)
        if (!contains(f, v)) next.push_back(f);
      next.push_back(w);
      std::sort(next.begin(), next.end(), lex_less);
      if (solve(std::move(next), support & ~single(v), blocks)) {
        blocks.push_back(w | single(v));
        return true;
      }
    }
    dead_ends.insert(std::move(facets));
    return false;
  }
};

}  // namespace

std::optional<StackedDecomposition> is_stacked_sphere(const SimplicialComplex& s) {
  int d = s.dim();
  if (d < 1) fail(Errc::not_pseudomanifold, "dimension 0 input");
  bool pure = true;
  for (Mask f : s.facets()) pure = pure && card(f) == d + 1;
  bool closed = true;
  for (auto& [ridge, count] : ridge_cofacet_counts(s)) {
    (void)ridge;
    closed = closed && count == 2;
  }
  if (!pure || !closed || !facet_graph_connected(s.facets()))
    fail(Errc::not_pseudomanifold, "stacked recognition needs a closed pseudomanifold");

  Mask support = 0;
  for (Mask f : s.facets()) support |= f;
  auto original = [&](Mask mask) { return s.to_original(mask); };

  if (d == 1) {
    // cycles: only the boundary of the 2-simplex is a stacked 1-sphere
    if (s.facet_count() == 3 && card(support) == 3)
      return StackedDecomposition{{original(support)}};
    return std::nullopt;
  }

  // genuine stacked spheres are spheres: cheap homology reject first
  auto betti = betti_numbers(s, FieldSpec::prime(2), true);
  for (std::size_t i = 0; i + 1 < betti.size(); ++i)
    if (betti[i] != 0) return std::nullopt;
  if (betti.back() != 1) return std::nullopt;

  StackedSearch search{d, {}};
  std::vector<Mask> blocks;
  std::vector<Mask> facets = s.facets();
  std::sort(facets.begin(), facets.end(), lex_less);
  if (!search.solve(std::move(facets), support, blocks)) return std::nullopt;

  StackedDecomposition out;
  for (Mask b : blocks) out.blocks.push_back(original(b));
  return out;
}

SimplicialComplex replay_stacked_decomposition(int m, const StackedDecomposition& d) {
  if (d.blocks.empty()) fail(Errc::empty_input, "empty decomposition");
  int block_size = card(d.blocks.front());
  std::vector<Mask> facets;
  Mask support = d.blocks.front();
  for (int v : to_vertices(d.blocks.front())) facets.push_back(d.blocks.front() & ~single(v));
  for (std::size_t i = 1; i < d.blocks.size(); ++i) {
    Mask block = d.blocks[i];
    if (card(block) != block_size) fail(Errc::dimension_mismatch, "ragged block sizes");
    Mask fresh = block & ~support;
    if (card(fresh) != 1)
      fail(Errc::overlap_too_large, "block " + mask_to_string(block) + " must add one vertex");
    Mask shared = block & ~fresh;
    auto it = std::find(facets.begin(), facets.end(), shared);
    if (it == facets.end())
      fail(Errc::overlap_too_large, "shared facet " + mask_to_string(shared) + " is not present");
    facets.erase(it);
    for (int v : to_vertices(block)) {
      Mask f = block & ~single(v);
      if (f != shared) facets.push_back(f);
    }
    support |= fresh;
  }
  return union_on_support(m, facets);
}

LocalStackedness is_locally_stacked(const SimplicialComplex& m, const ManifoldReport& validation) {
  if (!validation.valid_closed_manifold())
    fail(Errc::prerequisite_failed, "locally-stacked check needs a validated closed manifold");
  LocalStackedness out;
  out.applicable = validation.dim >= 3;
  out.all_stacked = true;
  if (!out.applicable) {
    out.all_stacked = false;
    return out;
  }
  for (int v = 1; v <= m.m(); ++v) {
    auto decomposition = is_stacked_sphere(m.link(v));
    out.per_vertex.emplace_back(v, decomposition.has_value());
    out.all_stacked = out.all_stacked && decomposition.has_value();
  }
  return out;
}

TightNeighborlyTrace is_tight_neighborly(const SimplicialComplex& m, const FieldSpec& field,
                                         const ManifoldReport& validation) {
  if (!validation.valid_closed_manifold())
    fail(Errc::prerequisite_failed, "tight-neighborliness needs a validated closed manifold");
  if (validation.dim < 3)
    fail(Errc::dimension_too_low, "tight-neighborliness is defined for d >= 3");
  TightNeighborlyTrace trace;
  trace.m = m.m();
  trace.d = validation.dim;
  trace.beta1 = betti_numbers(m, field, false)[1];
  trace.lhs = binomial(trace.m - trace.d - 1, 2);
  trace.rhs = binomial(trace.d + 2, 2) * trace.beta1;
  trace.holds = trace.lhs == trace.rhs;
  return trace;
}

}  // namespace golodtight
