#include "golodtight/homology.hpp"

#include <sstream>

namespace golodtight {

ChainMapData inclusion_chain_map(const SimplicialComplex& k, Mask subset,
                                 const SimplicialComplex& sub) {
  // position i (1-based) of sub corresponds to the i-th smallest vertex of `subset` in k
  auto verts = to_vertices(subset);
  ChainMapData f;
  auto levels = sub.all_faces_by_dim();
  f.images.resize(levels.size());
  for (std::size_t d = 0; d < levels.size(); ++d) {
    f.images[d].resize(levels[d].size());
    for (std::size_t c = 0; c < levels[d].size(); ++c) {
      Mask orig = 0;
      for (int v : to_vertices(levels[d][c])) orig |= single(verts[static_cast<std::size_t>(v - 1)]);
      f.images[d][c] = {{orig, 1}};
    }
  }
  (void)k;
  return f;
}

InclusionVerdict is_injective_inclusion(const SimplicialComplex& k, Mask subset,
                                        const FieldSpec& field) {
  if (subset == 0) fail(Errc::empty_subset, "inclusion over the empty subset");
  SimplicialComplex sub = k.full_subcomplex(subset);
  return with_field(field, [&](auto ops) {
    auto sub_space = HomologySpace<decltype(ops)>::compute(ChainComplex::from_complex(sub, false), ops);
    auto k_space = HomologySpace<decltype(ops)>::compute(ChainComplex::from_complex(k, false), ops);
    auto map = inclusion_induced_map(k, subset, sub, sub_space, k_space);
    InclusionVerdict v;
    v.ranks = map.ranks();
    v.source_betti = sub_space.betti_vector();
    int fail_deg = -1;
    v.injective = map.injective(&fail_deg);
    v.fail_degree = fail_deg;
    return v;
  });
}

FundamentalClass fundamental_class(const SimplicialComplex& m, const FieldSpec& field) {
  int d = m.dim();
  auto betti = betti_numbers(m, field, false);
  int top = betti[static_cast<std::size_t>(d)];
  if (top > 1)
    fail(Errc::not_pseudomanifold,
         "top homology has rank " + std::to_string(top) + "; input is not a closed pseudomanifold");
  FundamentalClass out;
  out.orientable = (top == 1);
  if (!out.orientable) return out;

  with_field(field, [&](auto ops) {
    auto space =
        HomologySpace<decltype(ops)>::compute(ChainComplex::from_complex(m, false), ops);
    const auto& reps = space.level(d).reps;
    for (int i = 0; i < reps.rows(); ++i) {
      std::ostringstream s;
      s << reps.at(i, 0);
      out.coefficients.push_back(s.str());
    }
  });
  return out;
}

bool is_orientable_over(const SimplicialComplex& m, const FieldSpec& field) {
  auto betti = betti_numbers(m, field, false);
  return betti[static_cast<std::size_t>(m.dim())] == 1;
}

}  // namespace golodtight
