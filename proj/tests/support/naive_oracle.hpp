#pragma once

// Brute-force homology oracle used to freeze derived expected values.  It is
// deliberately independent of the library: faces are enumerated with
// std::set<vector<int>>, boundary matrices are rebuilt from scratch and ranks
// come from a plain textbook elimination over mpq / F_p.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include <gmpxx.h>

namespace naive {

using Simplex = std::vector<int>;  // strictly increasing vertex list

inline std::map<int, std::set<Simplex>> faces_by_dim(const std::vector<Simplex>& facets) {
  std::map<int, std::set<Simplex>> out;
  for (const auto& f : facets) {
    int n = static_cast<int>(f.size());
    for (std::uint32_t bits = 1; bits < (1u << n); ++bits) {
      Simplex s;
      for (int i = 0; i < n; ++i)
        if (bits & (1u << i)) s.push_back(f[static_cast<std::size_t>(i)]);
      out[static_cast<int>(s.size()) - 1].insert(s);
    }
  }
  return out;
}

// rows: (k-1)-faces in sorted order (or the empty simplex for k = 0 when
// reduced); cols: k-faces in sorted order
inline std::vector<std::vector<long>> boundary_matrix(const std::set<Simplex>& lower,
                                                      const std::set<Simplex>& upper) {
  std::vector<Simplex> rows(lower.begin(), lower.end());
  std::vector<Simplex> cols(upper.begin(), upper.end());
  std::vector<std::vector<long>> m(rows.size(), std::vector<long>(cols.size(), 0));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    long sign = 1;
    for (std::size_t drop = 0; drop < cols[c].size(); ++drop) {
      Simplex s;
      for (std::size_t i = 0; i < cols[c].size(); ++i)
        if (i != drop) s.push_back(cols[c][i]);
      auto it = std::find(rows.begin(), rows.end(), s);
      if (it != rows.end()) m[static_cast<std::size_t>(it - rows.begin())][c] += sign;
      sign = -sign;
    }
  }
  return m;
}

inline int rank_q(std::vector<std::vector<mpq_class>> m) {
  if (m.empty() || m[0].empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size();
  int r = 0;
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(r) < rows; ++c) {
    std::size_t pr = rows;
    for (std::size_t i = static_cast<std::size_t>(r); i < rows; ++i)
      if (sgn(m[i][c]) != 0) {
        pr = i;
        break;
      }
    if (pr == rows) continue;
    std::swap(m[static_cast<std::size_t>(r)], m[pr]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == static_cast<std::size_t>(r) || sgn(m[i][c]) == 0) continue;
      mpq_class f = m[i][c] / m[static_cast<std::size_t>(r)][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[static_cast<std::size_t>(r)][j];
    }
    ++r;
  }
  return r;
}

inline int rank_q(const std::vector<std::vector<long>>& m) {
  std::vector<std::vector<mpq_class>> q(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (long v : m[i]) q[i].emplace_back(v);
  return rank_q(std::move(q));
}

inline int rank_p(const std::vector<std::vector<long>>& m0, long p) {
  if (m0.empty() || m0[0].empty()) return 0;
  std::vector<std::vector<long>> m(m0.size());
  for (std::size_t i = 0; i < m0.size(); ++i)
    for (long v : m0[i]) m[i].push_back(((v % p) + p) % p);
  std::size_t rows = m.size(), cols = m[0].size();
  auto inv = [&](long a) {
    long t = 0, nt = 1, r = p, nr = a;
    while (nr) {
      long q = r / nr;
      std::swap(t -= q * nt, nt);
      std::swap(r -= q * nr, nr);
    }
    return ((t % p) + p) % p;
  };
  int r = 0;
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(r) < rows; ++c) {
    std::size_t pr = rows;
    for (std::size_t i = static_cast<std::size_t>(r); i < rows; ++i)
      if (m[i][c] != 0) {
        pr = i;
        break;
      }
    if (pr == rows) continue;
    std::swap(m[static_cast<std::size_t>(r)], m[pr]);
    long piv_inv = inv(m[static_cast<std::size_t>(r)][c]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == static_cast<std::size_t>(r) || m[i][c] == 0) continue;
      long f = m[i][c] * piv_inv % p;
      for (std::size_t j = 0; j < cols; ++j)
        m[i][j] = ((m[i][j] - f * m[static_cast<std::size_t>(r)][j]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

/// Reduced Betti numbers; p = 0 means over the rationals.
inline std::vector<int> reduced_betti(const std::vector<Simplex>& facets, long p) {
  auto faces = faces_by_dim(facets);
  int top = faces.rbegin()->first;
  std::set<Simplex> empty_level = {Simplex{}};
  auto level = [&](int k) -> const std::set<Simplex>& {
    static const std::set<Simplex> none;
    if (k == -1) return empty_level;
    auto it = faces.find(k);
    return it == faces.end() ? none : it->second;
  };
  std::vector<int> ranks(static_cast<std::size_t>(top) + 2, 0);
  for (int k = 0; k <= top; ++k) {
    auto m = boundary_matrix(level(k - 1), level(k));
    ranks[static_cast<std::size_t>(k)] = p == 0 ? rank_q(m) : rank_p(m, p);
  }
  std::vector<int> betti(static_cast<std::size_t>(top) + 1, 0);
  for (int k = 0; k <= top; ++k) {
    int above = (k + 1 <= top) ? ranks[static_cast<std::size_t>(k + 1)] : 0;
    betti[static_cast<std::size_t>(k)] =
        static_cast<int>(level(k).size()) - ranks[static_cast<std::size_t>(k)] - above;
  }
  return betti;
}

}  // namespace naive
