#include "golodtight/fm.hpp"

#include <algorithm>
#include <set>

#include "golodtight/chain_complex.hpp"

namespace golodtight {

namespace {

// every (size)-subset of `universe` is a face together with `extra` (0 = alone)
bool neighborly_within(const SimplicialComplex& m, Mask universe, int size, Mask extra) {
  auto verts = to_vertices(universe);
  if (static_cast<int>(verts.size()) < size) return false;
  for (Mask rel : subsets_of_size(static_cast<int>(verts.size()), size)) {
    Mask s = extra;
    for (int pos : to_vertices(rel)) s |= single(verts[static_cast<std::size_t>(pos - 1)]);
    if (!m.is_face(s)) return false;
  }
  return true;
}

}  // namespace

std::vector<Mask> link_decomposition(const SimplicialComplex& m, int v) {
  auto decomposition = is_stacked_sphere(m.link(v));
  if (!decomposition)
    fail(Errc::link_not_stacked,
         "link of vertex " + std::to_string(v) + " is not a stacked sphere");
  return decomposition->blocks;
}

std::vector<Mask> compute_sm(const SimplicialComplex& m, const ManifoldReport& validation) {
  if (!validation.valid_closed_manifold() || validation.dim < 3)
    fail(Errc::prerequisite_failed, "S(M) needs a validated closed manifold of dimension >= 3");
  int d = validation.dim;

  // characterization 1: V(v,k) + v over the stacked link decompositions
  std::set<Mask> from_links;
  for (int v = 1; v <= m.m(); ++v)
    for (Mask block : link_decomposition(m, v)) from_links.insert(block | single(v));

  // characterization 2: (d+2)-subsets I with lk_{M_I}(v) being (d-2)-neighborly
  // relative to I - v for some v in I
  std::set<Mask> direct;
  for (Mask i_set : subsets_of_size(m.m(), d + 2)) {
    for (int v : to_vertices(i_set)) {
      // faces of lk_{M_I}(v) are exactly the s with s+v in M, s inside I-v
      if (neighborly_within(m, i_set & ~single(v), d - 1, single(v))) {
        direct.insert(i_set);
        break;
      }
    }
  }

  if (from_links != direct) {
    std::string witness;
    for (Mask s : from_links)
      if (!direct.count(s)) witness = "link-only " + mask_to_string(s);
    for (Mask s : direct)
      if (!from_links.count(s)) witness = "scan-only " + mask_to_string(s);
    fail(Errc::characterization_mismatch,
         "the S(M) characterizations disagree (" + witness + "); a hypothesis is violated");
  }

  std::vector<Mask> out(from_links.begin(), from_links.end());
  std::sort(out.begin(), out.end(), size_lex_less);
  return out;
}

FMResult build_fm(const SimplicialComplex& m, const ManifoldReport& validation,
                  const FMOptions& opts) {
  if (!validation.valid_closed_manifold() || validation.dim < 3)
    fail(Errc::prerequisite_failed, "F(M) needs a validated closed manifold of dimension >= 3");
  int d = validation.dim;

  FMResult result;
  for (Mask nf : m.minimal_non_faces())
    if (card(nf) == d + 1) result.filled.push_back(nf);

  std::vector<Mask> facets = m.facets();
  facets.insert(facets.end(), result.filled.begin(), result.filled.end());
  result.fm = SimplicialComplex::build_from_masks(m.m(), std::move(facets));

  if (!opts.run_verification) return result;

  auto fields = opts.fields;
  if (fields.empty())
    fields = {FieldSpec::rational(), FieldSpec::prime(2), FieldSpec::prime(3), FieldSpec::prime(5)};

  auto add_check = [&](const std::string& name, bool pass, const std::string& witness) {
    result.checks.push_back({name, pass, pass ? "" : witness});
  };

  // link decompositions (these also power S(M)); a non-stacked link is a
  // verification failure, not a refusal
  bool links_ok = true;
  std::string link_witness;
  result.link_blocks.assign(static_cast<std::size_t>(m.m()) + 1, {});
  for (int v = 1; v <= m.m(); ++v) {
    try {
      result.link_blocks[static_cast<std::size_t>(v)] = link_decomposition(m, v);
    } catch (const Error& e) {
      links_ok = false;
      link_witness = e.what();
    }
  }
  add_check("links are stacked spheres", links_ok, link_witness);

  if (links_ok) {
    try {
      result.sm = compute_sm(m, validation);
      result.sm_characterizations_agree = true;
    } catch (const Error& e) {
      result.sm_characterizations_agree = false;
      result.sm_mismatch_witness = e.what();
      // fall back to the link characterization so later checks can still run
      std::set<Mask> from_links;
      for (int v = 1; v <= m.m(); ++v)
        for (Mask block : result.link_blocks[static_cast<std::size_t>(v)])
          from_links.insert(block | single(v));
      result.sm.assign(from_links.begin(), from_links.end());
      std::sort(result.sm.begin(), result.sm.end(), size_lex_less);
    }
    add_check("S(M) characterizations agree", result.sm_characterizations_agree,
              result.sm_mismatch_witness);

    // (i) every V(v,k)+v is a minimal non-face of F(M)
    auto fm_mnf = result.fm.minimal_non_faces();
    std::set<Mask> mnf_set(fm_mnf.begin(), fm_mnf.end());
    bool all_mnf = true;
    std::string mnf_witness;
    for (Mask s : result.sm)
      if (!mnf_set.count(s)) {
        all_mnf = false;
        mnf_witness = mask_to_string(s);
        break;
      }
    add_check("blocks V(v,k)+v are minimal non-faces of F(M)", all_mnf, mnf_witness);

    // (ii) lk_{F(M)}(v) equals the circ-union of the dDelta(V(v,k))
    bool links_match = true;
    std::string lk_witness;
    for (int v = 1; v <= m.m() && links_match; ++v) {
      std::vector<Mask> union_facets;
      for (Mask block : result.link_blocks[static_cast<std::size_t>(v)])
        for (int w : to_vertices(block)) union_facets.push_back(block & ~single(w));
      auto circ = union_on_support(m.m(), union_facets);
      auto lk = result.fm.link(v);
      if (lk.facets_in_original_labels() != circ.facets_in_original_labels()) {
        links_match = false;
        lk_witness = "vertex " + std::to_string(v);
      }
    }
    add_check("lk_{F(M)}(v) is the circ-union of the blocks", links_match, lk_witness);

    // (iii) F(M) = union of dDelta(I) over S(M)
    {
      std::vector<Mask> cover_facets;
      for (Mask i_set : result.sm)
        for (int w : to_vertices(i_set)) cover_facets.push_back(i_set & ~single(w));
      bool equal = false;
      std::string why;
      if (!cover_facets.empty()) {
        auto cover = union_on_support(m.m(), cover_facets);
        equal = cover.facets_in_original_labels() == result.fm.facets();
        if (!equal) why = "facet sets differ";
      } else {
        why = "S(M) is empty";
      }
      add_check("F(M) is covered by the boundaries over S(M)", equal, why);
    }

    // (v) each M_{V(v,k)+v} is (d-1)-neighborly
    {
      bool all_neighborly = true;
      std::string witness;
      for (Mask s : result.sm) {
        if (!neighborly_within(m, s, d, 0)) {
          all_neighborly = false;
          witness = mask_to_string(s);
          break;
        }
      }
      add_check("restrictions to V(v,k)+v are (d-1)-neighborly", all_neighborly, witness);
    }
  }

  // (iv) homology of F(M): |S(M)| in degree d, beta_1(M) in degree 1, zero
  // elsewhere, for every requested field; cross-field rank agreement is the
  // torsion-freeness surrogate
  {
    long long expected_top = static_cast<long long>(result.sm.size());
    std::vector<std::vector<int>> per_field;
    bool homology_ok = true;
    std::string witness;
    for (const auto& field : fields) {
      auto fm_betti = betti_numbers(result.fm, field, true);
      auto m_beta1 = betti_numbers(m, field, true)[1];
      per_field.push_back(fm_betti);
      for (int deg = 0; deg < static_cast<int>(fm_betti.size()); ++deg) {
        int b = fm_betti[static_cast<std::size_t>(deg)];
        int expect = (deg == d)   ? static_cast<int>(expected_top)
                     : (deg == 1) ? m_beta1
                                  : 0;
        if (b != expect) {
          homology_ok = false;
          witness = "over " + field.name() + ": reduced beta_" + std::to_string(deg) + " = " +
                    std::to_string(b) + ", expected " + std::to_string(expect);
        }
      }
    }
    for (std::size_t f = 1; f < per_field.size() && homology_ok; ++f)
      if (per_field[f] != per_field[0]) {
        homology_ok = false;
        witness = "ranks differ between " + fields[0].name() + " and " + fields[f].name();
      }
    add_check("homology of F(M) matches |S(M)| and beta_1", homology_ok, witness);
  }

  return result;
}

}  // namespace golodtight
