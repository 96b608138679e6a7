#include "golodtight/moment_angle.hpp"

#include <algorithm>

#include "golodtight/errors.hpp"

namespace golodtight {

namespace {

// all faces of K including the empty face, grouped by cardinality
std::vector<std::vector<Mask>> faces_with_empty(const SimplicialComplex& k) {
  auto byd = k.all_faces_by_dim();
  std::vector<std::vector<Mask>> out(byd.size() + 1);
  out[0] = {Mask(0)};
  for (std::size_t i = 0; i < byd.size(); ++i) out[i + 1] = byd[i];
  return out;
}

// scatter the low bits of `packed` onto the set bits of `positions`
Mask expand_bits(Mask packed, Mask positions) {
  Mask out = 0;
  int bit = 0;
  for (Mask p = positions; p; p &= p - 1, ++bit)
    if ((packed >> bit) & 1) out |= p & (~p + 1);
  return out;
}

// inverse of expand_bits: gather the bits of `value` at `positions`
Mask compress_bits(Mask value, Mask positions) {
  Mask out = 0;
  int bit = 0;
  for (Mask p = positions; p; p &= p - 1, ++bit)
    if (value & (p & (~p + 1))) out |= Mask(1) << bit;
  return out;
}

void check_budget(const std::vector<int>& cells_per_dim, long long max_entries) {
  for (std::size_t k = 1; k < cells_per_dim.size(); ++k) {
    long long entries =
        static_cast<long long>(cells_per_dim[k - 1]) * static_cast<long long>(cells_per_dim[k]);
    if (entries > max_entries)
      fail(Errc::budget_exceeded,
           "boundary matrix would need " + std::to_string(entries) + " entries (cap " +
               std::to_string(max_entries) + ")");
  }
}

}  // namespace

GradedBoundaries build_rzk_complex(const SimplicialComplex& k, const OracleOptions& opts) {
  if (k.m() > opts.max_vertices_rzk)
    fail(Errc::too_many_vertices, "cubical model enumerates 3^m cells; m = " +
                                      std::to_string(k.m()) + " exceeds the cap " +
                                      std::to_string(opts.max_vertices_rzk));
  int m = k.m();
  auto faces = faces_with_empty(k);  // faces[c] = faces of cardinality c
  int top = static_cast<int>(faces.size()) - 1;

  // cells of dimension c: (J, eps), J a face of cardinality c, eps on [m]-J
  GradedBoundaries g;
  g.cells_per_dim.assign(static_cast<std::size_t>(top) + 1, 0);
  for (int c = 0; c <= top; ++c) {
    long long count = static_cast<long long>(faces[static_cast<std::size_t>(c)].size())
                      << (m - c);
    if (count > (1LL << 62)) fail(Errc::budget_exceeded, "cell count overflow");
    g.cells_per_dim[static_cast<std::size_t>(c)] = static_cast<int>(count);
  }
  check_budget(g.cells_per_dim, opts.max_dense_entries);

  // cell id in dimension c: face_index * 2^(m-c) + packed eps (bit t of the
  // packed word = sign of the t-th coordinate outside J, + = 1)
  auto face_index = [&](int c, Mask j_mask) {
    const auto& level = faces[static_cast<std::size_t>(c)];
    auto it = std::lower_bound(level.begin(), level.end(), j_mask, lex_less);
    return static_cast<int>(it - level.begin());
  };

  g.cols.resize(static_cast<std::size_t>(top) + 1);
  g.cols[0].assign(static_cast<std::size_t>(g.cells_per_dim[0]), {});
  Mask all = full_mask(m);
  for (int c = 1; c <= top; ++c) {
    const auto& level = faces[static_cast<std::size_t>(c)];
    auto& cols = g.cols[static_cast<std::size_t>(c)];
    cols.resize(static_cast<std::size_t>(g.cells_per_dim[static_cast<std::size_t>(c)]));
    long long eps_count = 1LL << (m - c);
    for (std::size_t f = 0; f < level.size(); ++f) {
      Mask j_mask = level[f];
      Mask comp = all & ~j_mask;
      for (long long packed = 0; packed < eps_count; ++packed) {
        Mask eps = expand_bits(static_cast<Mask>(packed), comp);
        auto& col = cols[static_cast<std::size_t>(f) * static_cast<std::size_t>(eps_count) +
                         static_cast<std::size_t>(packed)];
        int pos = 0;
        for (int j : to_vertices(j_mask)) {
          Mask sub = j_mask & ~single(j);
          Mask sub_comp = all & ~sub;
          int sub_face = face_index(c - 1, sub);
          int sign = (pos % 2 == 0) ? 1 : -1;
          long long base = static_cast<long long>(sub_face) << (m - c + 1);
          Mask plus = eps | single(j);
          Mask minus = eps;
          col.emplace_back(static_cast<int>(base + static_cast<long long>(
                                                       compress_bits(plus, sub_comp))),
                           sign);
          col.emplace_back(static_cast<int>(base + static_cast<long long>(
                                                       compress_bits(minus, sub_comp))),
                           -sign);
          ++pos;
        }
      }
    }
  }
  g.assert_dd_zero();
  return g;
}

GradedBoundaries build_zk_complex(const SimplicialComplex& k, const OracleOptions& opts) {
  if (k.m() > opts.max_vertices_zk)
    fail(Errc::too_many_vertices, "moment-angle cell model cap is m <= " +
                                      std::to_string(opts.max_vertices_zk) + ", got m = " +
                                      std::to_string(k.m()));
  int m = k.m();
  auto faces = faces_with_empty(k);
  Mask all = full_mask(m);

  // a cell is (bmask, amask), bmask a face (or empty), amask inside the rest;
  // dimension = |a| + 2|b|
  struct Cell {
    Mask b, a;
    bool operator<(const Cell& o) const { return b != o.b ? b < o.b : a < o.a; }
    bool operator==(const Cell& o) const { return b == o.b && a == o.a; }
  };
  int top = 2 * k.m();
  std::vector<std::vector<Cell>> cells(static_cast<std::size_t>(top) + 1);
  for (const auto& level : faces) {
    for (Mask b : level) {
      Mask comp = all & ~b;
      int comp_size = card(comp);
      for (long long packed = 0; packed < (1LL << comp_size); ++packed) {
        Mask a = expand_bits(static_cast<Mask>(packed), comp);
        int dim = card(a) + 2 * card(b);
        cells[static_cast<std::size_t>(dim)].push_back({b, a});
      }
    }
  }
  while (!cells.empty() && cells.back().empty()) cells.pop_back();
  top = static_cast<int>(cells.size()) - 1;

  GradedBoundaries g;
  g.cells_per_dim.resize(cells.size());
  for (std::size_t d = 0; d < cells.size(); ++d) {
    std::sort(cells[d].begin(), cells[d].end());
    g.cells_per_dim[d] = static_cast<int>(cells[d].size());
  }
  check_budget(g.cells_per_dim, opts.max_dense_entries);

  auto cell_index = [&](int dim, const Cell& c) {
    const auto& level = cells[static_cast<std::size_t>(dim)];
    auto it = std::lower_bound(level.begin(), level.end(), c);
    return static_cast<int>(it - level.begin());
  };

  g.cols.resize(cells.size());
  g.cols[0].assign(static_cast<std::size_t>(g.cells_per_dim[0]), {});
  for (int d = 1; d <= top; ++d) {
    auto& cols = g.cols[static_cast<std::size_t>(d)];
    cols.resize(cells[static_cast<std::size_t>(d)].size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const Cell& cell = cells[static_cast<std::size_t>(d)][c];
      // d(b at i) = a at i, with the Koszul sign of the degree to the left
      for (int i : to_vertices(cell.b)) {
        int left_degree = 0;
        for (int j = 1; j < i; ++j) {
          if (contains(cell.a, j)) left_degree += 1;
          else if (contains(cell.b, j)) left_degree += 2;
        }
        Cell image{cell.b & ~single(i), cell.a | single(i)};
        cols[c].emplace_back(cell_index(d - 1, image), (left_degree % 2 == 0) ? 1 : -1);
      }
    }
  }
  g.assert_dd_zero();
  return g;
}

OracleResult rzk_betti_oracle(const SimplicialComplex& k, const FieldSpec& field,
                              const OracleOptions& opts) {
  auto g = build_rzk_complex(k, opts);
  OracleResult out;
  out.betti = g.betti(field);
  for (int c : g.cells_per_dim) out.cells += c;
  while (!out.betti.empty() && out.betti.back() == 0) out.betti.pop_back();
  return out;
}

OracleResult zk_betti_oracle(const SimplicialComplex& k, const FieldSpec& field,
                             const OracleOptions& opts) {
  auto g = build_zk_complex(k, opts);
  OracleResult out;
  out.betti = g.betti(field);
  for (int c : g.cells_per_dim) out.cells += c;
  while (!out.betti.empty() && out.betti.back() == 0) out.betti.pop_back();
  return out;
}

}  // namespace golodtight
