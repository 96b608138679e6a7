#include "golodtight/chain_complex.hpp"

#include <algorithm>
#include <map>

#include "golodtight/errors.hpp"

namespace golodtight {

namespace {

// indices of the (k-1)-subfaces of f, with alternating signs
std::vector<std::pair<int, int>> boundary_of(const std::vector<Mask>& lower, Mask f) {
  std::vector<std::pair<int, int>> col;
  auto vs = to_vertices(f);
  int sign = 1;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    Mask sub = f & ~single(vs[i]);
    auto it = std::lower_bound(lower.begin(), lower.end(), sub, lex_less);
    if (it == lower.end() || *it != sub) fail(Errc::internal, "missing subface in chain complex");
    col.emplace_back(static_cast<int>(it - lower.begin()), sign);
    sign = -sign;
  }
  return col;
}

}  // namespace

ChainComplex ChainComplex::from_complex(const SimplicialComplex& k, bool reduced) {
  ChainComplex cc;
  cc.reduced = reduced;
  cc.faces = k.all_faces_by_dim();
  cc.top_dim = static_cast<int>(cc.faces.size()) - 1;
  cc.boundary.resize(cc.faces.size());

  for (int d = 0; d <= cc.top_dim; ++d) {
    auto& cols = cc.boundary[static_cast<std::size_t>(d)];
    const auto& level = cc.faces[static_cast<std::size_t>(d)];
    cols.resize(level.size());
    if (d == 0) {
      if (reduced)
        for (std::size_t c = 0; c < level.size(); ++c) cols[c] = {{0, 1}};
      continue;
    }
    const auto& lower = cc.faces[static_cast<std::size_t>(d - 1)];
    for (std::size_t c = 0; c < level.size(); ++c) cols[c] = boundary_of(lower, level[c]);
  }

  // d.d = 0, composed sparsely cell by cell
  for (int d = 1; d <= cc.top_dim; ++d) {
    for (const auto& col : cc.boundary[static_cast<std::size_t>(d)]) {
      std::map<int, long long> acc;
      for (auto [mid, s1] : col)
        for (auto [row, s2] : cc.boundary[static_cast<std::size_t>(d - 1)][static_cast<std::size_t>(mid)])
          acc[row] += static_cast<long long>(s1) * s2;
      for (auto& [row, v] : acc)
        if (v != 0) fail(Errc::internal, "boundary of boundary is nonzero");
    }
  }
  return cc;
}

int ChainComplex::face_index(int k, Mask f) const {
  if (k < 0 || k > top_dim) return -1;
  const auto& level = faces[static_cast<std::size_t>(k)];
  auto it = std::lower_bound(level.begin(), level.end(), f, lex_less);
  if (it == level.end() || *it != f) return -1;
  return static_cast<int>(it - level.begin());
}

IntMatrix ChainComplex::boundary_matrix(int k) const {
  IntMatrix m(boundary_rows(k), n_cells(k));
  if (k < 0 || k > top_dim) return m;
  const auto& cols = boundary[static_cast<std::size_t>(k)];
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (auto [row, s] : cols[c]) m.at(row, static_cast<int>(c)) = s;
  return m;
}

IntMatrix GradedBoundaries::boundary_matrix(int k) const {
  int rows = (k >= 1 && k < static_cast<int>(cells_per_dim.size()))
                 ? cells_per_dim[static_cast<std::size_t>(k - 1)]
                 : 0;
  int columns = (k >= 0 && k < static_cast<int>(cells_per_dim.size()))
                    ? cells_per_dim[static_cast<std::size_t>(k)]
                    : 0;
  IntMatrix m(rows, columns);
  if (k < 1 || k >= static_cast<int>(cols.size())) return m;
  const auto& level = cols[static_cast<std::size_t>(k)];
  for (std::size_t c = 0; c < level.size(); ++c)
    for (auto [row, s] : level[c]) m.at(row, static_cast<int>(c)) = s;
  return m;
}

std::vector<int> GradedBoundaries::betti(const FieldSpec& field) const {
  std::vector<int> out(cells_per_dim.size(), 0);
  std::vector<int> ranks(cells_per_dim.size() + 1, 0);
  for (std::size_t k = 1; k < cells_per_dim.size(); ++k)
    ranks[k] = rank_over(boundary_matrix(static_cast<int>(k)), field);
  for (std::size_t k = 0; k < cells_per_dim.size(); ++k)
    out[k] = cells_per_dim[k] - ranks[k] - ranks[k + 1];
  return out;
}

void GradedBoundaries::assert_dd_zero() const {
  for (std::size_t k = 2; k < cols.size(); ++k) {
    for (const auto& col : cols[k]) {
      std::map<int, long long> acc;
      for (auto [mid, s1] : col)
        for (auto [row, s2] : cols[k - 1][static_cast<std::size_t>(mid)])
          acc[row] += static_cast<long long>(s1) * s2;
      for (auto& [row, v] : acc)
        if (v != 0) fail(Errc::internal, "cell model boundary of boundary is nonzero");
    }
  }
}

std::vector<int> betti_numbers(const SimplicialComplex& k, const FieldSpec& field, bool reduced) {
  ChainComplex cc = ChainComplex::from_complex(k, reduced);
  std::vector<int> out(static_cast<std::size_t>(cc.top_dim) + 1, 0);
  std::vector<int> ranks(static_cast<std::size_t>(cc.top_dim) + 2, 0);
  for (int d = 0; d <= cc.top_dim; ++d)
    ranks[static_cast<std::size_t>(d)] = rank_over(cc.boundary_matrix(d), field);
  for (int d = 0; d <= cc.top_dim; ++d) {
    int rk1 = (d + 1 <= cc.top_dim) ? ranks[static_cast<std::size_t>(d + 1)] : 0;
    out[static_cast<std::size_t>(d)] = cc.n_cells(d) - ranks[static_cast<std::size_t>(d)] - rk1;
  }
  return out;
}

}  // namespace golodtight
