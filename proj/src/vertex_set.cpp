#include "golodtight/vertex_set.hpp"

#include <algorithm>

namespace golodtight {

std::string mask_to_string(Mask s) {
  std::string out = "{";
  bool first = true;
  for (int v : to_vertices(s)) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  out += "}";
  return out;
}

std::vector<Mask> subsets_of_size(int m, int k) {
  std::vector<Mask> out;
  if (k < 0 || k > m) return out;
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  std::vector<int> combo(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) combo[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.push_back(from_vertices(combo));
    int i = k - 1;
    while (i >= 0 && combo[static_cast<std::size_t>(i)] == m - (k - 1 - i)) --i;
    if (i < 0) break;
    ++combo[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

std::vector<Mask> nonempty_subsets_by_size(int m) {
  std::vector<Mask> out;
  out.reserve((Mask(1) << m) - 1);
  for (int k = 1; k <= m; ++k) {
    auto sz = subsets_of_size(m, k);
    out.insert(out.end(), sz.begin(), sz.end());
  }
  return out;
}

}  // namespace golodtight
