#pragma once

#include <optional>
#include <string>
#include <vector>

#include "golodtight/field.hpp"
#include "golodtight/simplicial_complex.hpp"

namespace golodtight {

enum class LinkLevel { sphere_certified, homology_sphere_only, failed };

struct LinkVerdict {
  int vertex = 0;
  LinkLevel level = LinkLevel::failed;
  std::string detail;
};

/// Everything the "closed connected d-manifold triangulation" hypotheses need,
/// each claim independently recomputable.  Sphere links are certified exactly
/// for d <= 3 (links of dimension <= 2); beyond that only homology spheres can
/// be recognized at this scope and the verdict says so.
struct ManifoldReport {
  int dim = -1;
  bool pure = false;
  Mask purity_witness = 0;
  bool closed_pseudomanifold = false;
  Mask closed_witness = 0;  // a ridge not in exactly two facets
  int closed_witness_count = -1;
  bool strongly_connected = false;
  bool connected = false;
  std::vector<LinkVerdict> link_verdicts;
  bool all_links_ok = false;
  bool links_sphere_certified = false;
  std::vector<std::pair<FieldSpec, bool>> orientable_over;

  bool valid_closed_manifold() const {
    return pure && closed_pseudomanifold && strongly_connected && connected && all_links_ok;
  }
  bool orientable(const FieldSpec& f) const {
    for (const auto& [field, o] : orientable_over)
      if (field == f) return o;
    return false;
  }
};

ManifoldReport validate_manifold(const SimplicialComplex& m, const std::vector<FieldSpec>& fields);

/// Blocks V_1..V_k (original labels, |V_i| = dim+2) with
/// S = dDelta(V_1) # ... # dDelta(V_k); replaying the sums rebuilds S.
struct StackedDecomposition {
  std::vector<Mask> blocks;
};

/// Greedy reverse-subdivision recognition with backtracking over the removable
/// frontier.  Cycles (dimension 1) are stacked only as the boundary of the
/// 2-simplex.  Throws NotPseudomanifold unless S is a closed pseudomanifold.
std::optional<StackedDecomposition> is_stacked_sphere(const SimplicialComplex& s);

/// Rebuild the sphere a decomposition describes (for round-trip checks).
SimplicialComplex replay_stacked_decomposition(int m, const StackedDecomposition& d);

struct LocalStackedness {
  bool applicable = false;  // stacked links only speak below dimension d-1 >= 2
  bool all_stacked = false;
  std::vector<std::pair<int, bool>> per_vertex;  // (vertex, link stacked)
};

/// Vertex-by-vertex stacked-link check; requires a validated closed manifold.
LocalStackedness is_locally_stacked(const SimplicialComplex& m, const ManifoldReport& validation);

struct TightNeighborlyTrace {
  bool holds = false;
  int m = 0;
  int d = 0;
  int beta1 = 0;
  long long lhs = 0;  // C(m-d-1, 2)
  long long rhs = 0;  // C(d+2, 2) * beta1
};

/// The binomial identity C(m-d-1,2) = C(d+2,2) beta_1(M;F), defined for d >= 3.
TightNeighborlyTrace is_tight_neighborly(const SimplicialComplex& m, const FieldSpec& field,
                                         const ManifoldReport& validation);

long long binomial(long long n, int k);

}  // namespace golodtight
