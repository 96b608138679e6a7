#include "golodtight/simplicial_complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_set>

#include "golodtight/errors.hpp"

namespace golodtight {

namespace {

// Sort lex, dedup, drop members contained in another member.
std::vector<Mask> maximalize(std::vector<Mask> fs) {
  std::sort(fs.begin(), fs.end(), lex_less);
  fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
  std::vector<Mask> out;
  out.reserve(fs.size());
  for (std::size_t i = 0; i < fs.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < fs.size() && maximal; ++j)
      if (i != j && subset_of(fs[i], fs[j]) && fs[i] != fs[j]) maximal = false;
    if (maximal) out.push_back(fs[i]);
  }
  return out;
}

}  // namespace

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::empty_input: return "EmptyInput";
    case Errc::label_out_of_range: return "LabelOutOfRange";
    case Errc::missing_vertex: return "MissingVertex";
    case Errc::empty_subset: return "EmptySubset";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::overlap_too_large: return "OverlapTooLarge";
    case Errc::too_many_vertices: return "TooManyVertices";
    case Errc::not_disjoint: return "NotDisjoint";
    case Errc::not_connected: return "NotConnected";
    case Errc::not_a_chain_map: return "NotAChainMap";
    case Errc::not_pseudomanifold: return "NotPseudomanifold";
    case Errc::link_not_stacked: return "LinkNotStacked";
    case Errc::characterization_mismatch: return "CharacterizationMismatch";
    case Errc::prerequisite_failed: return "PrerequisiteFailed";
    case Errc::dimension_too_low: return "DimensionTooLow";
    case Errc::parse_error: return "ParseError";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::unknown_generator: return "UnknownGenerator";
    case Errc::internal: return "InternalError";
  }
  return "UnknownError";
}

int SimplicialComplex::dim() const {
  int d = -1;
  for (Mask f : facets_) d = std::max(d, card(f) - 1);
  return d;
}

Mask SimplicialComplex::to_original(Mask s) const {
  if (labels_.empty()) return s;
  Mask out = 0;
  for (int v : to_vertices(s)) out |= single(labels_[static_cast<std::size_t>(v - 1)]);
  return out;
}

std::vector<Mask> SimplicialComplex::facets_in_original_labels() const {
  std::vector<Mask> out;
  out.reserve(facets_.size());
  for (Mask f : facets_) out.push_back(to_original(f));
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

bool SimplicialComplex::is_face(Mask s) const {
  for (Mask f : facets_)
    if (subset_of(s, f)) return true;
  return false;
}

std::vector<std::vector<Mask>> SimplicialComplex::all_faces_by_dim() const {
  std::vector<std::unordered_set<Mask>> seen(static_cast<std::size_t>(dim() + 1));
  for (Mask f : facets_) {
    // walk the subset lattice of each facet
    Mask sub = f;
    while (true) {
      if (sub != 0) seen[static_cast<std::size_t>(card(sub) - 1)].insert(sub);
      if (sub == 0) break;
      sub = (sub - 1) & f;
    }
  }
  std::vector<std::vector<Mask>> out(seen.size());
  for (std::size_t k = 0; k < seen.size(); ++k) {
    out[k].assign(seen[k].begin(), seen[k].end());
    std::sort(out[k].begin(), out[k].end(), lex_less);
  }
  return out;
}

std::vector<Mask> SimplicialComplex::faces(int k) const {
  if (k == -1) return {Mask(0)};
  if (k < -1 || k > dim()) return {};
  std::unordered_set<Mask> seen;
  for (Mask f : facets_) {
    if (card(f) < k + 1) continue;
    // (k+1)-subsets of each facet
    auto vs = to_vertices(f);
    std::vector<int> idx(static_cast<std::size_t>(k + 1));
    std::iota(idx.begin(), idx.end(), 0);
    int n = static_cast<int>(vs.size());
    while (true) {
      Mask s = 0;
      for (int i : idx) s |= single(vs[static_cast<std::size_t>(i)]);
      seen.insert(s);
      int i = k;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - (k + 1 - i)) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j <= k; ++j)
        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  std::vector<Mask> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::vector<long long> SimplicialComplex::f_vector() const {
  auto byd = all_faces_by_dim();
  std::vector<long long> f(byd.size());
  for (std::size_t k = 0; k < byd.size(); ++k) f[k] = static_cast<long long>(byd[k].size());
  return f;
}

long long SimplicialComplex::euler_characteristic() const {
  auto f = f_vector();
  long long chi = 0;
  for (std::size_t k = 0; k < f.size(); ++k) chi += (k % 2 == 0) ? f[k] : -f[k];
  return chi;
}

std::optional<int> SimplicialComplex::is_cone() const {
  Mask common = full_mask(m_);
  for (Mask f : facets_) common &= f;
  if (common == 0) return std::nullopt;
  return lowest_vertex(common);
}

std::vector<int> SimplicialComplex::vertex_components() const {
  std::vector<int> parent(static_cast<std::size_t>(m_));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (Mask f : facets_) {
    auto vs = to_vertices(f);
    for (std::size_t i = 1; i < vs.size(); ++i) {
      int a = find(vs[0] - 1), b = find(vs[i] - 1);
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  }
  std::vector<int> comp(static_cast<std::size_t>(m_), -1);
  int next = 0;
  for (int v = 0; v < m_; ++v) {
    int r = find(v);
    if (comp[static_cast<std::size_t>(r)] == -1) comp[static_cast<std::size_t>(r)] = next++;
    comp[static_cast<std::size_t>(v)] = comp[static_cast<std::size_t>(r)];
  }
  return comp;
}

int SimplicialComplex::component_count() const {
  auto comp = vertex_components();
  return comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
}

bool SimplicialComplex::is_connected() const { return component_count() <= 1; }

std::vector<Mask> SimplicialComplex::minimal_non_faces() const {
  // A minimal non-face is F+v with F a face, F+v not, and every subset of
  // F+v of cardinality |F| a face.  Candidates therefore arise from
  // face-vertex pairs; sizes are bounded by dim+2.
  std::unordered_set<Mask> result;
  auto byd = all_faces_by_dim();
  std::unordered_set<Mask> face_set;
  for (auto& level : byd) face_set.insert(level.begin(), level.end());
  auto is_f = [&](Mask s) { return s == 0 || face_set.count(s) > 0; };

  // size-2 candidates come from vertex pairs directly
  for (int a = 1; a <= m_; ++a)
    for (int b = a + 1; b <= m_; ++b) {
      Mask s = single(a) | single(b);
      if (!is_f(s)) result.insert(s);
    }
  for (auto& level : byd) {
    for (Mask f : level) {
      if (card(f) < 2) continue;
      for (int v = 1; v <= m_; ++v) {
        if (contains(f, v)) continue;
        Mask cand = f | single(v);
        if (is_f(cand) || result.count(cand)) continue;
        bool all_sub_faces = true;
        for (int w : to_vertices(cand))
          if (!is_f(cand & ~single(w))) {
            all_sub_faces = false;
            break;
          }
        if (all_sub_faces) result.insert(cand);
      }
    }
  }
  std::vector<Mask> out(result.begin(), result.end());
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

SimplicialComplex SimplicialComplex::build(int m, const std::vector<std::vector<int>>& facets,
                                           bool allow_isolated) {
  std::vector<Mask> fs;
  fs.reserve(facets.size());
  for (const auto& f : facets) {
    if (f.empty()) fail(Errc::empty_input, "facet list contains an empty facet");
    fs.push_back(from_vertices(f));
    for (int v : f)
      if (v < 1 || v > m) fail(Errc::label_out_of_range, "vertex " + std::to_string(v) + " outside 1.." + std::to_string(m));
  }
  return build_from_masks(m, std::move(fs), allow_isolated);
}

SimplicialComplex SimplicialComplex::build_from_masks(int m, std::vector<Mask> facets,
                                                      bool allow_isolated) {
  if (m <= 0) fail(Errc::empty_input, "vertex count must be positive");
  if (m > kMaxVertices)
    fail(Errc::too_many_vertices, "m = " + std::to_string(m) + " exceeds the bitset cap of 63");
  if (facets.empty()) fail(Errc::empty_input, "no facets given");
  for (Mask f : facets) {
    if (f == 0) fail(Errc::empty_input, "facet list contains an empty facet");
    if (!subset_of(f, full_mask(m)))
      fail(Errc::label_out_of_range, "facet " + mask_to_string(f) + " outside 1.." + std::to_string(m));
  }
  SimplicialComplex k;
  k.m_ = m;
  k.facets_ = maximalize(std::move(facets));
  Mask covered = 0;
  for (Mask f : k.facets_) covered |= f;
  if (covered != full_mask(m) && !allow_isolated) {
    fail(Errc::missing_vertex,
         "vertices " + mask_to_string(full_mask(m) & ~covered) + " occur in no facet");
  }
  return k;
}

SimplicialComplex SimplicialComplex::make_relabeled(const SimplicialComplex& parent, Mask support,
                                                    const std::vector<Mask>& facets_orig) {
  auto verts = to_vertices(support);
  std::vector<int> pos(static_cast<std::size_t>(parent.m_) + 1, 0);
  for (std::size_t i = 0; i < verts.size(); ++i) pos[static_cast<std::size_t>(verts[i])] = static_cast<int>(i) + 1;

  SimplicialComplex out;
  out.m_ = static_cast<int>(verts.size());
  out.facets_.reserve(facets_orig.size());
  for (Mask f : facets_orig) {
    Mask g = 0;
    for (int v : to_vertices(f)) g |= single(pos[static_cast<std::size_t>(v)]);
    out.facets_.push_back(g);
  }
  out.facets_ = maximalize(std::move(out.facets_));
  out.labels_.reserve(verts.size());
  for (int v : verts) out.labels_.push_back(parent.label(v));
  bool identity = true;
  for (std::size_t i = 0; i < out.labels_.size(); ++i)
    if (out.labels_[i] != static_cast<int>(i) + 1) {
      identity = false;
      break;
    }
  if (identity) out.labels_.clear();
  return out;
}

SimplicialComplex SimplicialComplex::full_subcomplex(Mask vertex_subset) const {
  if (vertex_subset == 0) fail(Errc::empty_subset, "full subcomplex over the empty set");
  if (!subset_of(vertex_subset, full_mask(m_)))
    fail(Errc::label_out_of_range, "subset " + mask_to_string(vertex_subset) + " outside [m]");
  std::vector<Mask> fs;
  for (Mask f : facets_) {
    Mask g = f & vertex_subset;
    if (g != 0) fs.push_back(g);
  }
  // every singleton of the subset is a face (the complex has full vertex set)
  for (int v : to_vertices(vertex_subset)) fs.push_back(single(v));
  return make_relabeled(*this, vertex_subset, fs);
}

SimplicialComplex SimplicialComplex::link(int v) const {
  if (v < 1 || v > m_) fail(Errc::label_out_of_range, "link vertex " + std::to_string(v));
  Mask vbit = single(v);
  std::vector<Mask> fs;
  Mask support = 0;
  for (Mask f : facets_) {
    if (f & vbit) {
      Mask g = f & ~vbit;
      if (g != 0) {
        fs.push_back(g);
        support |= g;
      }
    }
  }
  if (fs.empty()) {
    // v is isolated: its link is the empty complex, which we cannot represent;
    // report it via the empty-input error (callers check beforehand).
    fail(Errc::empty_input, "vertex " + std::to_string(v) + " has empty link");
  }
  return make_relabeled(*this, support, fs);
}

SimplicialComplex SimplicialComplex::vertex_deletion(int v) const {
  if (v < 1 || v > m_) fail(Errc::label_out_of_range, "deleted vertex " + std::to_string(v));
  return full_subcomplex(full_mask(m_) & ~single(v));
}

SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l) {
  int m = k.m() + l.m();
  if (m > kMaxVertices) fail(Errc::too_many_vertices, "join exceeds the vertex cap");
  std::vector<Mask> fs;
  fs.reserve(k.facets().size() * l.facets().size());
  for (Mask a : k.facets())
    for (Mask b : l.facets()) fs.push_back(a | (b << k.m()));
  return SimplicialComplex::build_from_masks(m, std::move(fs));
}

SimplicialComplex boundary_simplex(int n) {
  if (n < 1) fail(Errc::empty_input, "boundary_simplex needs n >= 1");
  int m = n + 1;
  std::vector<Mask> fs;
  Mask all = full_mask(m);
  for (int v = 1; v <= m; ++v) fs.push_back(all & ~single(v));
  return SimplicialComplex::build_from_masks(m, std::move(fs));
}

SimplicialComplex full_simplex(int n) {
  if (n < 1) fail(Errc::empty_input, "full_simplex needs n >= 1");
  return SimplicialComplex::build_from_masks(n, {full_mask(n)});
}

SimplicialComplex cycle(int n) {
  if (n < 3) fail(Errc::empty_input, "cycle needs n >= 3");
  std::vector<Mask> fs;
  for (int v = 1; v < n; ++v) fs.push_back(single(v) | single(v + 1));
  fs.push_back(single(1) | single(n));
  return SimplicialComplex::build_from_masks(n, std::move(fs));
}

SimplicialComplex simplex_skeleton(int m, int k) {
  if (k < 0 || k >= m - 1) return full_simplex(m);
  return SimplicialComplex::build_from_masks(m, subsets_of_size(m, k + 1));
}

namespace {

std::vector<Mask> face_set_of(const std::vector<Mask>& facets) {
  std::unordered_set<Mask> seen;
  for (Mask f : facets) {
    Mask sub = f;
    while (true) {
      if (sub != 0) seen.insert(sub);
      if (sub == 0) break;
      sub = (sub - 1) & f;
    }
  }
  std::vector<Mask> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

}  // namespace

SimplicialComplex glue_shared_facet(const SimplicialComplex& k1, const SimplicialComplex& k2,
                                    int ambient_m, bool keep_shared_facet) {
  if (k1.dim() != k2.dim())
    fail(Errc::dimension_mismatch, "glued complexes have different dimensions");
  std::vector<Mask> f1 = k1.has_original_labels() ? k1.facets_in_original_labels() : k1.facets();
  std::vector<Mask> f2 = k2.has_original_labels() ? k2.facets_in_original_labels() : k2.facets();

  // shared facet: the unique common facet; the face intersection must be its closure
  Mask shared = 0;
  for (Mask a : f1)
    for (Mask b : f2)
      if (a == b) {
        if (shared != 0 && shared != a)
          fail(Errc::overlap_too_large, "complexes share more than one facet");
        shared = a;
      }
  if (shared == 0) fail(Errc::overlap_too_large, "complexes share no facet");

  auto faces1 = face_set_of(f1);
  auto faces2 = face_set_of(f2);
  std::unordered_set<Mask> set2(faces2.begin(), faces2.end());
  for (Mask s : faces1)
    if (set2.count(s) && !subset_of(s, shared))
      fail(Errc::overlap_too_large,
           "intersection face " + mask_to_string(s) + " lies outside the shared facet " +
               mask_to_string(shared));

  std::vector<Mask> fs = f1;
  fs.insert(fs.end(), f2.begin(), f2.end());
  if (!keep_shared_facet) {
    fs.erase(std::remove(fs.begin(), fs.end(), shared), fs.end());
    // edge case: both inputs consist of the shared facet alone
    if (fs.empty()) fail(Errc::empty_input, "connected sum removed the only facet");
  }
  return union_on_support(ambient_m, fs);
}

SimplicialComplex circ_union(const SimplicialComplex& k1, const SimplicialComplex& k2,
                             int ambient_m) {
  return glue_shared_facet(k1, k2, ambient_m, true);
}

SimplicialComplex connected_sum(const SimplicialComplex& k1, Mask facet1,
                                const SimplicialComplex& k2, Mask facet2,
                                const std::vector<int>& matching) {
  if (card(facet1) != card(facet2))
    fail(Errc::dimension_mismatch, "glued facets have different dimensions");
  if (!std::count(k1.facets().begin(), k1.facets().end(), facet1))
    fail(Errc::dimension_mismatch, "facet1 " + mask_to_string(facet1) + " is not a facet of K1");
  if (!std::count(k2.facets().begin(), k2.facets().end(), facet2))
    fail(Errc::dimension_mismatch, "facet2 " + mask_to_string(facet2) + " is not a facet of K2");
  auto f2 = to_vertices(facet2);
  if (matching.size() != f2.size())
    fail(Errc::dimension_mismatch, "matching size does not equal facet size");
  for (int t : matching)
    if (!contains(facet1, t)) fail(Errc::label_out_of_range, "matching target outside facet1");
  {
    auto sorted = matching;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail(Errc::dimension_mismatch, "matching is not a bijection");
  }

  // relabel K2: matched vertices -> facet1 labels, the rest -> fresh labels
  std::vector<int> map2(static_cast<std::size_t>(k2.m()) + 1, 0);
  for (std::size_t i = 0; i < f2.size(); ++i) map2[static_cast<std::size_t>(f2[i])] = matching[i];
  int next = k1.m();
  for (int v = 1; v <= k2.m(); ++v)
    if (map2[static_cast<std::size_t>(v)] == 0) map2[static_cast<std::size_t>(v)] = ++next;
  if (next > kMaxVertices) fail(Errc::too_many_vertices, "connected sum exceeds the vertex cap");

  std::vector<Mask> k2_mapped;
  for (Mask f : k2.facets()) {
    Mask g = 0;
    for (int v : to_vertices(f)) g |= single(map2[static_cast<std::size_t>(v)]);
    k2_mapped.push_back(g);
  }
  auto k2r = SimplicialComplex::build_from_masks(next, std::move(k2_mapped), /*allow_isolated=*/true);
  return glue_shared_facet(k1, k2r, next, /*keep_shared_facet=*/false);
}

SimplicialComplex union_on_support(int m, const std::vector<Mask>& facets) {
  if (facets.empty()) fail(Errc::empty_input, "union of no complexes");
  Mask support = 0;
  for (Mask f : facets) {
    if (f == 0) fail(Errc::empty_input, "empty facet in union");
    if (!subset_of(f, full_mask(m))) fail(Errc::label_out_of_range, "facet outside [m]");
    support |= f;
  }
  SimplicialComplex parent = SimplicialComplex::build_from_masks(m, {full_mask(m)});
  return SimplicialComplex::make_relabeled(parent, support, facets);
}

SimplicialComplex stacked_sphere(int d, int k) {
  if (d < 1 || k < 1) fail(Errc::empty_input, "stacked_sphere needs d >= 1, k >= 1");
  if (d + k + 1 > kMaxVertices) fail(Errc::too_many_vertices, "stacked sphere exceeds the vertex cap");
  SimplicialComplex s = boundary_simplex(d + 1);
  int last_new = 0;
  for (int block = 2; block <= k; ++block) {
    // subdivide the lex-first facet containing the most recent vertex
    Mask chosen = 0;
    for (Mask f : s.facets()) {
      if (last_new == 0 || contains(f, last_new)) {
        chosen = f;
        break;
      }
    }
    int w = s.m() + 1;
    std::vector<Mask> fs;
    for (Mask f : s.facets())
      if (f != chosen) fs.push_back(f);
    for (int v : to_vertices(chosen)) fs.push_back((chosen & ~single(v)) | single(w));
    s = SimplicialComplex::build_from_masks(w, std::move(fs));
    last_new = w;
  }
  return s;
}

bool is_k_neighborly(const SimplicialComplex& k, int neighborliness) {
  if (neighborliness < 1) fail(Errc::empty_input, "neighborliness must be >= 1");
  for (Mask s : subsets_of_size(k.m(), neighborliness + 1))
    if (!k.is_face(s)) return false;
  return true;
}

}  // namespace golodtight
