#pragma once

#include <utility>
#include <vector>

#include "golodtight/matrix.hpp"
#include "golodtight/simplicial_complex.hpp"

namespace golodtight {

/// Simplicial chain complex with the increasing-label orientation:
/// d[v0..vk] = sum_i (-1)^i [v0..\hat{v_i}..vk].  In the reduced flavor the
/// empty simplex is a (-1)-cell and d0 is the augmentation.  d.d = 0 is
/// asserted at construction.
struct ChainComplex {
  bool reduced = true;
  int top_dim = -1;
  std::vector<std::vector<Mask>> faces;  // faces[k] lex-sorted, k = 0..top_dim

  // boundary[k][c] = sparse column of the k-th boundary operator; rows index
  // faces[k-1] (for k = 0: the empty simplex when reduced, nothing otherwise)
  std::vector<std::vector<std::vector<std::pair<int, int>>>> boundary;

  static ChainComplex from_complex(const SimplicialComplex& k, bool reduced);

  int n_cells(int k) const {
    if (k < 0 || k > top_dim) return 0;
    return static_cast<int>(faces[static_cast<std::size_t>(k)].size());
  }
  int boundary_rows(int k) const { return k == 0 ? (reduced ? 1 : 0) : n_cells(k - 1); }

  /// Index of a k-face in the lex order, -1 if absent.
  int face_index(int k, Mask f) const;

  IntMatrix boundary_matrix(int k) const;
};

/// Generic graded chain data with sparse integer boundary columns, used by the
/// cell-model oracles; same betti machinery as the simplicial case but without
/// face masks.
struct GradedBoundaries {
  // cols[k][c] = sparse boundary column of the c-th k-cell, rows indexing
  // (k-1)-cells; cols[0] columns are empty (unreduced complexes)
  std::vector<std::vector<std::vector<std::pair<int, int>>>> cols;
  std::vector<int> cells_per_dim;

  IntMatrix boundary_matrix(int k) const;

  /// Unreduced Betti numbers over `field` in degrees 0..top.
  std::vector<int> betti(const FieldSpec& field) const;
  void assert_dd_zero() const;
};

/// Betti numbers of a simplicial complex over a field (rank computations only;
/// no basis is materialized).  reduced selects reduced or unreduced homology.
std::vector<int> betti_numbers(const SimplicialComplex& k, const FieldSpec& field, bool reduced);

}  // namespace golodtight
