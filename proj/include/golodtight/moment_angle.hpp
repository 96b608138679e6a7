#pragma once

#include <vector>

#include "golodtight/chain_complex.hpp"
#include "golodtight/simplicial_complex.hpp"

namespace golodtight {

/// Brute-force cell models for the real moment-angle complex (cubical: cells
/// (J, eps) with J a face and eps a sign pattern on the other coordinates) and
/// the moment-angle complex (one cell per coordinate assignment v/a/b with the
/// b-set a face; d(b) = a, d(a) = 0, Koszul signs).  These are the independent
/// side of the Hochster/BBCG cross-checks, so they share nothing with the
/// table machinery: cells are enumerated directly and ranks come from the
/// exact-linalg layer.  d.d = 0 is asserted at build.
struct OracleOptions {
  int max_vertices_rzk = 14;
  int max_vertices_zk = 9;
  long long max_dense_entries = 1LL << 26;  // per boundary matrix
};

GradedBoundaries build_rzk_complex(const SimplicialComplex& k, const OracleOptions& opts = {});
GradedBoundaries build_zk_complex(const SimplicialComplex& k, const OracleOptions& opts = {});

struct OracleResult {
  std::vector<int> betti;  // unreduced
  long long cells = 0;
};

OracleResult rzk_betti_oracle(const SimplicialComplex& k, const FieldSpec& field,
                              const OracleOptions& opts = {});
OracleResult zk_betti_oracle(const SimplicialComplex& k, const FieldSpec& field,
                             const OracleOptions& opts = {});

}  // namespace golodtight
