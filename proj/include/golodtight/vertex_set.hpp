#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace golodtight {

/// Vertex subsets of [m] as 64-bit masks (vertex i <-> bit i-1).  Every
/// analysis in this library is subset-intersection heavy, so simplices and
/// vertex sets share this representation; m is capped at 63 by build().
using Mask = std::uint64_t;

constexpr int kMaxVertices = 63;

inline Mask full_mask(int m) { return (m >= 64) ? ~Mask(0) : ((Mask(1) << m) - 1); }

inline Mask single(int v) { return Mask(1) << (v - 1); }

inline bool contains(Mask s, int v) { return (s >> (v - 1)) & 1; }

inline int card(Mask s) { return std::popcount(s); }

inline bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

inline int lowest_vertex(Mask s) { return std::countr_zero(s) + 1; }

inline std::vector<int> to_vertices(Mask s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(card(s)));
  while (s) {
    out.push_back(std::countr_zero(s) + 1);
    s &= s - 1;
  }
  return out;
}

inline Mask from_vertices(const std::vector<int>& vs) {
  Mask s = 0;
  for (int v : vs) s |= single(v);
  return s;
}

/// Lexicographic order on the increasing vertex sequences, e.g.
/// {1,4} < {2,3}.  Plain numeric order on masks would be colex.
inline bool lex_less(Mask a, Mask b) {
  while (a && b) {
    int va = std::countr_zero(a), vb = std::countr_zero(b);
    if (va != vb) return va < vb;
    a &= a - 1;
    b &= b - 1;
  }
  return !a && b;  // proper prefix is smaller
}

inline bool size_lex_less(Mask a, Mask b) {
  int ca = card(a), cb = card(b);
  if (ca != cb) return ca < cb;
  return lex_less(a, b);
}

std::string mask_to_string(Mask s);

/// All C(m, k) subsets of [m] of size k, in lexicographic order.
std::vector<Mask> subsets_of_size(int m, int k);

/// All 2^m - 1 nonempty subsets of [m], ordered by size then lexicographic.
std::vector<Mask> nonempty_subsets_by_size(int m);

}  // namespace golodtight
