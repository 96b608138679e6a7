#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "golodtight/chain_complex.hpp"
#include "golodtight/field.hpp"
#include "golodtight/matrix.hpp"

namespace golodtight {

/// Homology of a chain complex with representative cycle bases and enough
/// projection data to express any cycle in those bases (modulo boundaries):
/// per degree we keep A = [B' | R] (column basis of the boundary space
/// followed by the chosen representatives) and a row transform E with
/// E*A = [I; 0], so a cycle z has class coordinates (E*z)[b..b+h).
template <class Ops>
class HomologySpace {
 public:
  using Elem = typename Ops::Elem;

  struct Level {
    DenseMatrix<Ops> reps;       // n_k x h_k cycle representatives
    DenseMatrix<Ops> transform;  // E, n_k x n_k
    int boundary_rank = 0;       // b
    int betti = 0;               // h
  };

  static HomologySpace compute(ChainComplex cc, Ops ops) {
    HomologySpace h;
    h.ops_ = ops;
    h.cc_ = std::move(cc);
    int top = h.cc_.top_dim;
    h.levels_.resize(static_cast<std::size_t>(top) + 1);
    for (int k = 0; k <= top; ++k) h.build_level(k);
    return h;
  }

  const ChainComplex& chain_complex() const { return cc_; }
  const Ops& ops() const { return ops_; }
  int top_dim() const { return cc_.top_dim; }

  int betti(int k) const {
    if (k < 0 || k > top_dim()) return 0;
    return levels_[static_cast<std::size_t>(k)].betti;
  }
  std::vector<int> betti_vector() const {
    std::vector<int> out;
    for (const auto& l : levels_) out.push_back(l.betti);
    return out;
  }
  const Level& level(int k) const { return levels_[static_cast<std::size_t>(k)]; }

  /// Class coordinates of a cycle in the degree-k representative basis;
  /// nullopt when the chain is not a cycle (not in span[B'|R]).
  std::optional<std::vector<Elem>> project_cycle(int k, const std::vector<Elem>& z) const {
    const Level& l = levels_[static_cast<std::size_t>(k)];
    auto y = apply(l.transform, z);
    int r = l.boundary_rank + l.betti;
    for (std::size_t i = static_cast<std::size_t>(r); i < y.size(); ++i)
      if (!ops_.is_zero(y[i])) return std::nullopt;
    return std::vector<Elem>(y.begin() + l.boundary_rank, y.begin() + r);
  }

 private:
  Ops ops_{};
  ChainComplex cc_;
  std::vector<Level> levels_;

  void build_level(int k) {
    Level& l = levels_[static_cast<std::size_t>(k)];
    int n = cc_.n_cells(k);
    auto dk = to_field_matrix(cc_.boundary_matrix(k), ops_);
    auto dk1 = to_field_matrix(cc_.boundary_matrix(k + 1), ops_);

    DenseMatrix<Ops> cycles = kernel_basis(dk);  // n x z
    auto bnd_rref = rref(dk1);
    l.boundary_rank = static_cast<int>(bnd_rref.pivot_cols.size());
    int z = cycles.cols();
    l.betti = z - l.boundary_rank;

    // B' = pivot columns of d_{k+1}
    DenseMatrix<Ops> bprime(ops_, n, l.boundary_rank);
    for (std::size_t j = 0; j < bnd_rref.pivot_cols.size(); ++j)
      for (int i = 0; i < n; ++i)
        bprime.at(i, static_cast<int>(j)) = dk1.at(i, bnd_rref.pivot_cols[j]);

    // choose representatives: columns of `cycles` that extend B' to Z_k
    DenseMatrix<Ops> bz(ops_, n, l.boundary_rank + z);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < l.boundary_rank; ++j) bz.at(i, j) = bprime.at(i, j);
      for (int j = 0; j < z; ++j) bz.at(i, l.boundary_rank + j) = cycles.at(i, j);
    }
    auto ext = rref(bz);
    std::vector<int> chosen;
    for (int c : ext.pivot_cols)
      if (c >= l.boundary_rank) chosen.push_back(c - l.boundary_rank);
    if (static_cast<int>(chosen.size()) != l.betti)
      fail(Errc::internal, "representative count mismatch");

    l.reps = DenseMatrix<Ops>(ops_, n, l.betti);
    for (std::size_t j = 0; j < chosen.size(); ++j)
      for (int i = 0; i < n; ++i)
        l.reps.at(i, static_cast<int>(j)) = cycles.at(i, chosen[j]);

    // E from rref([A | I]) where A = [B' | reps] has full column rank
    int r = l.boundary_rank + l.betti;
    DenseMatrix<Ops> aug(ops_, n, r + n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < l.boundary_rank; ++j) aug.at(i, j) = bprime.at(i, j);
      for (int j = 0; j < l.betti; ++j) aug.at(i, l.boundary_rank + j) = l.reps.at(i, j);
      aug.at(i, r + i) = ops_.one();
    }
    auto solved = rref(std::move(aug));
    for (int j = 0; j < r; ++j)
      if (j >= static_cast<int>(solved.pivot_cols.size()) || solved.pivot_cols[static_cast<std::size_t>(j)] != j)
        fail(Errc::internal, "cycle basis is not independent");
    l.transform = DenseMatrix<Ops>(ops_, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) l.transform.at(i, j) = solved.r.at(i, r + j);
  }
};

/// A chain map between two simplicial chain complexes, one sparse signed
/// column per source face.  Degrees beyond the source dimension are empty.
struct ChainMapData {
  // entry: per degree k, per source k-face index, list of (target k-face mask, coeff)
  std::vector<std::vector<std::vector<std::pair<Mask, int>>>> images;
};

template <class Ops>
struct InducedMap {
  std::vector<DenseMatrix<Ops>> degree_matrices;  // target reps x source reps per degree

  /// Full column rank in every degree (the tightness condition).
  bool injective(int* fail_degree = nullptr) const {
    for (std::size_t k = 0; k < degree_matrices.size(); ++k) {
      const auto& m = degree_matrices[k];
      if (m.cols() == 0) continue;
      if (rank(m) < m.cols()) {
        if (fail_degree) *fail_degree = static_cast<int>(k);
        return false;
      }
    }
    return true;
  }

  std::vector<int> ranks() const {
    std::vector<int> out;
    for (const auto& m : degree_matrices) out.push_back(m.cols() == 0 ? 0 : rank(m));
    return out;
  }
};

/// Verify d(f(s)) = f(d(s)) face by face and return the map on homology.
/// Throws NotAChainMap with the offending simplex otherwise.
template <class Ops>
InducedMap<Ops> chain_map_induced(const ChainMapData& f, const HomologySpace<Ops>& source,
                                  const HomologySpace<Ops>& target) {
  const Ops& ops = source.ops();
  const ChainComplex& sc = source.chain_complex();
  const ChainComplex& tc = target.chain_complex();
  if (sc.reduced != tc.reduced) fail(Errc::internal, "mixed reduced/unreduced chain map");

  auto image_of = [&](int k, int c) -> const std::vector<std::pair<Mask, int>>& {
    static const std::vector<std::pair<Mask, int>> empty;
    if (k >= static_cast<int>(f.images.size())) return empty;
    const auto& level = f.images[static_cast<std::size_t>(k)];
    if (c >= static_cast<int>(level.size())) return empty;
    return level[static_cast<std::size_t>(c)];
  };

  // chain-map check: compare d(f(s)) with f(d(s)) over the target face basis
  for (int k = 0; k <= sc.top_dim; ++k) {
    for (int c = 0; c < sc.n_cells(k); ++c) {
      std::map<int, typename Ops::Elem> lhs;  // rows in target degree k-1
      for (auto [tmask, coef] : image_of(k, c)) {
        int tcol = tc.face_index(k, tmask);
        if (tcol < 0) fail(Errc::not_a_chain_map, "image face is not in the target complex");
        for (auto [row, s] : tc.boundary[static_cast<std::size_t>(k)][static_cast<std::size_t>(tcol)]) {
          auto add = ops.mul(ops.from_long(coef), ops.from_long(s));
          auto it = lhs.find(row);
          if (it == lhs.end()) lhs.emplace(row, add);
          else it->second = ops.add(it->second, add);
        }
      }
      std::map<int, typename Ops::Elem> rhs;
      if (k >= 1) {
        for (auto [mid, s] : sc.boundary[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)]) {
          for (auto [tmask, coef] : image_of(k - 1, mid)) {
            int trow = tc.face_index(k - 1, tmask);
            if (trow < 0) fail(Errc::not_a_chain_map, "image face is not in the target complex");
            auto add = ops.mul(ops.from_long(s), ops.from_long(coef));
            auto it = rhs.find(trow);
            if (it == rhs.end()) rhs.emplace(trow, add);
            else it->second = ops.add(it->second, add);
          }
        }
      } else if (sc.reduced) {
        // augmentation: d0(s) = [empty], f([empty]) = [empty]
        rhs.emplace(0, ops.one());
      }
      auto nonzero_equal = [&](const std::map<int, typename Ops::Elem>& a,
                               const std::map<int, typename Ops::Elem>& b) {
        for (const auto& [row, v] : a) {
          if (ops.is_zero(v)) continue;
          auto it = b.find(row);
          if (it == b.end() || !ops.equal(it->second, v)) return false;
        }
        for (const auto& [row, v] : b) {
          if (ops.is_zero(v)) continue;
          auto it = a.find(row);
          if (it == a.end() || !ops.equal(it->second, v)) return false;
        }
        return true;
      };
      if (!nonzero_equal(lhs, rhs))
        fail(Errc::not_a_chain_map,
             "d.f != f.d on simplex " +
                 mask_to_string(sc.faces[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)]) +
                 " in degree " + std::to_string(k));
    }
  }

  InducedMap<Ops> out;
  int degrees = sc.top_dim + 1;
  out.degree_matrices.reserve(static_cast<std::size_t>(degrees));
  for (int k = 0; k < degrees; ++k) {
    int h_src = source.betti(k);
    int h_tgt = target.betti(k);
    DenseMatrix<Ops> mk(ops, h_tgt, h_src);
    if (h_src > 0 && h_tgt >= 0) {
      const auto& reps = source.level(k).reps;
      for (int j = 0; j < h_src; ++j) {
        // push the j-th representative through f into target chains
        std::vector<typename Ops::Elem> chain(static_cast<std::size_t>(tc.n_cells(k)), ops.zero());
        for (int c = 0; c < sc.n_cells(k); ++c) {
          const auto& coef = reps.at(c, j);
          if (ops.is_zero(coef)) continue;
          for (auto [tmask, icoef] : image_of(k, c)) {
            int tcol = tc.face_index(k, tmask);
            chain[static_cast<std::size_t>(tcol)] = ops.add(
                chain[static_cast<std::size_t>(tcol)], ops.mul(coef, ops.from_long(icoef)));
          }
        }
        if (h_tgt > 0) {
          auto coords = target.project_cycle(k, chain);
          if (!coords) fail(Errc::internal, "chain map image is not a cycle");
          for (int i = 0; i < h_tgt; ++i) mk.at(i, j) = (*coords)[static_cast<std::size_t>(i)];
        } else {
          // target homology is zero; still verify the image is a cycle
          auto coords = target.project_cycle(k, chain);
          if (!coords) fail(Errc::internal, "chain map image is not a cycle");
        }
      }
    }
    out.degree_matrices.push_back(std::move(mk));
  }
  return out;
}

/// Chain data of the simplicial inclusion K_I -> K (relabeling is monotone, so
/// every coefficient is +1).  `sub` must be K.full_subcomplex(subset).
ChainMapData inclusion_chain_map(const SimplicialComplex& k, Mask subset,
                                 const SimplicialComplex& sub);

template <class Ops>
InducedMap<Ops> inclusion_induced_map(const SimplicialComplex& k, Mask subset,
                                      const SimplicialComplex& sub,
                                      const HomologySpace<Ops>& sub_space,
                                      const HomologySpace<Ops>& k_space) {
  return chain_map_induced(inclusion_chain_map(k, subset, sub), sub_space, k_space);
}

/// Induced map on unreduced homology of K_I -> K in every degree, and the
/// injectivity verdict used by tightness.
struct InclusionVerdict {
  bool injective = true;
  int fail_degree = -1;
  std::vector<int> ranks;       // per degree, rank of the induced matrix
  std::vector<int> source_betti;
};

InclusionVerdict is_injective_inclusion(const SimplicialComplex& k, Mask subset,
                                        const FieldSpec& field);

/// Fundamental-class data for a closed pseudomanifold (caller validates).
struct FundamentalClass {
  bool orientable = false;
  // facet coefficients of the generating top cycle, aligned with K.facets();
  // exact values rendered as strings ("1", "-1", ...)
  std::vector<std::string> coefficients;
};

FundamentalClass fundamental_class(const SimplicialComplex& m, const FieldSpec& field);

bool is_orientable_over(const SimplicialComplex& m, const FieldSpec& field);

}  // namespace golodtight
