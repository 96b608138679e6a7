#pragma once

#include <map>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "golodtight/homology.hpp"
#include "golodtight/simplicial_complex.hpp"

namespace golodtight {

constexpr int kDefaultSubsetCap = 20;

struct HochsterOptions {
  int max_vertices = kDefaultSubsetCap;
  int threads = 0;  // 0 = GOLODTIGHT_THREADS or serial
};

/// Reduced Betti numbers of every full subcomplex: the bigraded Betti table of
/// the Stanley-Reisner ring.  Rows with no homology are dropped (but counted);
/// kept rows are ordered by subset size then lex.
struct HochsterTable {
  int m = 0;
  FieldSpec field;

  struct Row {
    Mask subset;
    std::vector<int> reduced_betti;  // index p
  };
  std::vector<Row> rows;
  long long subsets_scanned = 0;
  long long cones_skipped = 0;

  const Row* row_for(Mask subset) const;
  int entry(Mask subset, int p) const;

  /// Total Koszul ranks: sum over rows at homological degree i = p + |I| + 1,
  /// with the unit in degree 0.
  std::vector<int> zk_betti() const;
  /// Additive prediction for the real moment-angle complex: unreduced Betti
  /// with beta_i = sum of reduced Betti at p = i - 1 and beta_0 = 1.
  std::vector<int> rzk_betti_predicted() const;

  /// (|I|, p) -> total rank aggregation.
  std::map<std::pair<int, int>, long long> by_size_and_degree() const;
};

HochsterTable hochster_table(const SimplicialComplex& k, const FieldSpec& field,
                             const HochsterOptions& opts = {});

struct PoincareSeries {
  enum class Role { tor_series, golod_bound, zk_cohomology };
  Role role = Role::tor_series;
  std::vector<mpz_class> coeff;  // degree-indexed, truncated

  std::string to_string() const;
};

/// P(Tor^S(F[K], F); t) = 1 + sum over (I,p) of beta^p(K_I) t^{p+|I|+1}.
PoincareSeries tor_poincare_series(const HochsterTable& table, int truncate_degree);

/// Serre/Golod upper bound (1+t^2)^m / (1 - t (P(Tor)-1)) as a truncated
/// formal power series.
PoincareSeries golod_bound_series(const HochsterTable& table, int truncate_degree);

PoincareSeries zk_cohomology_series(const HochsterTable& table);

/// The inclusion iota_{I,J}: K_{I u J} -> K_I * K_J, sigma -> (sigma n I, sigma n J),
/// as a signed chain map.  The sign of a simplex is the shuffle sign sorting
/// its vertex list into (increasing on I, then increasing on J).
struct IotaChainMap {
  SimplicialComplex source;  // K_{I u J}, relabeled
  SimplicialComplex target;  // K_I * K_J
  ChainMapData data;
};

IotaChainMap iota_chain_map(const SimplicialComplex& k, Mask i_set, Mask j_set);

/// Per-degree ranks of the iota-induced map on reduced homology; this is the
/// rank of the Koszul product against the (I,J) splitting.  The degree
/// alignment prefilter skips pairs whose join cannot receive a nonzero class;
/// disable it to audit that skipped pairs really compute to zero.
struct ProductRankOptions {
  bool use_prefilter = true;
};

std::vector<int> product_rank(const SimplicialComplex& k, Mask i_set, Mask j_set,
                              const FieldSpec& field, const ProductRankOptions& opts = {});

struct GolodCertificate {
  bool vanishing = true;
  // first witness in lexicographic pair order when products do not vanish
  Mask witness_i = 0, witness_j = 0;
  int degree = -1;               // homological degree of the nonzero product map
  std::pair<int, int> pq{-1, -1};  // aligned (p, q) with p + q + 1 = degree
  int rank = 0;
  long long pairs_scanned = 0;
  long long pairs_computed = 0;
};

struct GolodOptions {
  int max_vertices = kDefaultSubsetCap;
  bool use_prefilter = true;
  int threads = 0;
};

GolodCertificate is_weakly_golod(const SimplicialComplex& k, const FieldSpec& field,
                                 const GolodOptions& opts = {});
GolodCertificate is_weakly_golod(const SimplicialComplex& k, const HochsterTable& table,
                                 const GolodOptions& opts = {});

}  // namespace golodtight
