#pragma once

#include <optional>
#include <vector>

#include "golodtight/vertex_set.hpp"

namespace golodtight {

/// Finite simplicial complex on vertex set [m], stored by its inclusion-maximal
/// facets in lexicographic order.  Values are immutable after construction and
/// equality is facet-set equality.
///
/// Complexes produced by full_subcomplex/link are relabeled onto [m'] with the
/// original vertex labels kept in labels(); all other constructors leave
/// labels() as the identity.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  int m() const { return m_; }
  const std::vector<Mask>& facets() const { return facets_; }
  int facet_count() const { return static_cast<int>(facets_.size()); }

  /// Largest facet cardinality minus one; -1 for the (never constructed) void complex.
  int dim() const;

  /// Original label of vertex v (identity unless this complex arose by restriction).
  int label(int v) const { return labels_.empty() ? v : labels_[static_cast<std::size_t>(v - 1)]; }
  const std::vector<int>& labels() const { return labels_; }
  bool has_original_labels() const { return !labels_.empty(); }

  /// Map a vertex set of this complex through label() back to the parent's labels.
  Mask to_original(Mask s) const;
  /// Facets expressed in original labels, sorted lex.
  std::vector<Mask> facets_in_original_labels() const;

  bool is_face(Mask s) const;

  /// All k-dimensional faces, lex-sorted ((k+1)-subsets; k = -1 gives {empty}).
  std::vector<Mask> faces(int k) const;
  /// Faces of every dimension, grouped by dimension (index = dimension).
  std::vector<std::vector<Mask>> all_faces_by_dim() const;

  std::vector<long long> f_vector() const;
  long long euler_characteristic() const;

  /// Least apex v with every facet containing v, if any.
  std::optional<int> is_cone() const;

  bool is_connected() const;
  int component_count() const;
  /// Component id per vertex (0-based, numbered by least contained vertex).
  std::vector<int> vertex_components() const;

  std::vector<Mask> minimal_non_faces() const;

  bool operator==(const SimplicialComplex& o) const { return m_ == o.m_ && facets_ == o.facets_; }
  bool operator!=(const SimplicialComplex& o) const { return !(*this == o); }

  /// Validating constructor: sorts, dedups, drops non-maximal members.
  /// Throws EmptyInput / LabelOutOfRange / MissingVertex (the last is a
  /// warning instead when allow_isolated is set).
  static SimplicialComplex build(int m, const std::vector<std::vector<int>>& facets,
                                 bool allow_isolated = false);
  static SimplicialComplex build_from_masks(int m, std::vector<Mask> facets,
                                            bool allow_isolated = false);

  /// Restriction K_I = { s in K : s subset of I }, relabeled over I.
  SimplicialComplex full_subcomplex(Mask vertex_subset) const;

  /// lk(v) = { s : v not in s, s+v in K }, relabeled over its vertex support.
  SimplicialComplex link(int v) const;
  SimplicialComplex vertex_deletion(int v) const;

 private:
  int m_ = 0;
  std::vector<Mask> facets_;
  std::vector<int> labels_;  // empty = identity

  static SimplicialComplex make_relabeled(const SimplicialComplex& parent, Mask support,
                                          const std::vector<Mask>& facets_orig);

  friend SimplicialComplex union_on_support(int m, const std::vector<Mask>& facets);
};

/// Join K * L with L's vertices shifted past K's; facets are unions of facets.
SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l);

/// Boundary of the n-simplex: n+1 vertices, all n-subsets as facets.
SimplicialComplex boundary_simplex(int n);

/// Full simplex on n vertices.
SimplicialComplex full_simplex(int n);

/// The n-cycle 1-2-...-n-1 (n >= 3).
SimplicialComplex cycle(int n);

/// The k-skeleton of the (m-1)-simplex: facets are all (k+1)-subsets of [m].
SimplicialComplex simplex_skeleton(int m, int k);

/// Gluing of two complexes of equal dimension that live on a common ambient
/// vertex set and intersect in exactly one shared facet.  keep_shared_facet
/// distinguishes the circ-union K1 o K2 (kept) from the connected sum K1 # K2
/// (removed).  Errors: DimensionMismatch, OverlapTooLarge (the intersection
/// has a face outside the shared facet).
SimplicialComplex glue_shared_facet(const SimplicialComplex& k1, const SimplicialComplex& k2,
                                    int ambient_m, bool keep_shared_facet);

SimplicialComplex circ_union(const SimplicialComplex& k1, const SimplicialComplex& k2,
                             int ambient_m);

/// Connected sum along designated facets of disjoint complexes: `matching[i]`
/// identifies the i-th vertex of facet2 (increasing order) with a vertex of
/// facet1; K2's remaining vertices are relabeled past K1's.
SimplicialComplex connected_sum(const SimplicialComplex& k1, Mask facet1,
                                const SimplicialComplex& k2, Mask facet2,
                                const std::vector<int>& matching);

/// Union of complexes given by facets over a common ambient [m]
/// (re-maximalized).  Vertex coverage of [m] is not required here: the result
/// is relabeled onto its support like full_subcomplex.
SimplicialComplex union_on_support(int m, const std::vector<Mask>& facets);

/// Stacked d-sphere with k blocks: boundary of d+1-simplex refined by k-1
/// facet subdivisions along a deterministic linear pattern; d+k+1 vertices.
SimplicialComplex stacked_sphere(int d, int k);

bool is_k_neighborly(const SimplicialComplex& k, int neighborliness);

}  // namespace golodtight
