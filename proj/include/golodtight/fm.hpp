#pragma once

#include <optional>
#include <string>
#include <vector>

#include "golodtight/manifold.hpp"
#include "golodtight/simplicial_complex.hpp"

namespace golodtight {

/// F(M): the complex obtained by filling every minimal non-face of cardinality
/// d+1, together with the per-vertex link decompositions, the family S(M) of
/// (d+2)-sets covering it, and the verification record for the structural and
/// homological claims the construction is supposed to satisfy.
struct FMResult {
  SimplicialComplex fm;
  std::vector<Mask> filled;  // the minimal non-faces of size d+1 that were added

  // link decompositions: per vertex v, blocks V(v,1)..V(v,n_v) (subsets of [m])
  std::vector<std::vector<Mask>> link_blocks;

  std::vector<Mask> sm;  // S(M), sorted size-lex
  bool sm_characterizations_agree = false;
  std::string sm_mismatch_witness;

  struct Check {
    std::string name;
    bool pass = false;
    std::string witness;
  };
  std::vector<Check> checks;

  bool all_checks_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

struct FMOptions {
  // fields for the homological claims; rank agreement across them is the
  // torsion-freeness surrogate
  std::vector<FieldSpec> fields;
  bool run_verification = true;
};

/// Construct F(M) and optionally verify: (i) every V(v,k)+v is a minimal
/// non-face of F(M); (ii) lk_{F(M)}(v) is the circ-union of the dDelta(V(v,k));
/// (iii) F(M) is the union of dDelta(I) over S(M); (iv) per field, reduced
/// homology of F(M) is |S(M)| in degree d, beta_1(M) in degree 1, zero
/// elsewhere, with cross-field agreement; (v) each M_{V(v,k)+v} is
/// (d-1)-neighborly.  On inputs violating the paper-side hypotheses the
/// builder still constructs and reports; failed checks are data.
FMResult build_fm(const SimplicialComplex& m, const ManifoldReport& validation,
                  const FMOptions& opts = {});

/// Stacked-link blocks of one vertex; LinkNotStacked when the link is not a
/// stacked sphere.
std::vector<Mask> link_decomposition(const SimplicialComplex& m, int v);

/// S(M) both ways: from link decompositions, and directly as the (d+2)-sets I
/// with lk_{M_I}(v) (d-2)-neighborly (relative to I-v) for some v in I.
/// CharacterizationMismatch if the two disagree.
std::vector<Mask> compute_sm(const SimplicialComplex& m, const ManifoldReport& validation);

}  // namespace golodtight
