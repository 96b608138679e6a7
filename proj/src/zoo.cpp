#include "golodtight/zoo.hpp"

namespace golodtight::zoo {

SimplicialComplex rp2_6() {
  return SimplicialComplex::build(6, {{1, 2, 3},
                                      {1, 2, 4},
                                      {1, 3, 5},
                                      {1, 4, 6},
                                      {1, 5, 6},
                                      {2, 3, 6},
                                      {2, 4, 5},
                                      {2, 5, 6},
                                      {3, 4, 5},
                                      {3, 4, 6}});
}

SimplicialComplex t7_torus() {
  std::vector<std::vector<int>> facets;
  for (int i = 0; i < 7; ++i) {
    auto tri = [&](int a, int b, int c) {
      std::vector<int> t = {(i + a) % 7 + 1, (i + b) % 7 + 1, (i + c) % 7 + 1};
      std::sort(t.begin(), t.end());
      return t;
    };
    facets.push_back(tri(0, 1, 3));
    facets.push_back(tri(0, 2, 3));
  }
  return SimplicialComplex::build(7, facets);
}

}  // namespace golodtight::zoo
