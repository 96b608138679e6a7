#pragma once

#include <vector>

#include "golodtight/field.hpp"
#include "golodtight/hochster.hpp"
#include "golodtight/simplicial_complex.hpp"

namespace golodtight {

struct TightnessOptions {
  int max_vertices = kDefaultSubsetCap;
  bool use_pruning = true;
  int threads = 0;
};

struct TightnessReport {
  bool tight = true;
  FieldSpec field;
  Mask witness = 0;       // subset whose homology fails to inject
  int witness_degree = -1;
  long long subsets_checked = 0;
  long long subsets_pruned = 0;
};

/// F-tightness: H_*(K_I) -> H_*(K) injective (unreduced) for every nonempty I.
/// Pruning ladder, each step sound: fail fast on a missing edge (tight implies
/// neighborly, and neighborliness settles degree 0); skip cones; skip subsets
/// with no reduced homology.  With pruning off the definition runs verbatim.
/// Errors: NotConnected (the definition assumes a connected complex),
/// TooManyVertices.
TightnessReport is_tight(const SimplicialComplex& k, const FieldSpec& field,
                         const TightnessOptions& opts = {});

/// Same scan reusing a precomputed Hochster table for the homology prefilter.
TightnessReport is_tight(const SimplicialComplex& k, const HochsterTable& table,
                         const TightnessOptions& opts = {});

}  // namespace golodtight
