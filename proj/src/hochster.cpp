#include "golodtight/hochster.hpp"

#include <algorithm>
#include <sstream>

#include "golodtight/parallel.hpp"

namespace golodtight {

const HochsterTable::Row* HochsterTable::row_for(Mask subset) const {
  for (const auto& r : rows)
    if (r.subset == subset) return &r;
  return nullptr;
}

int HochsterTable::entry(Mask subset, int p) const {
  const Row* r = row_for(subset);
  if (!r || p < 0 || p >= static_cast<int>(r->reduced_betti.size())) return 0;
  return r->reduced_betti[static_cast<std::size_t>(p)];
}

std::vector<int> HochsterTable::zk_betti() const {
  std::vector<int> out(1, 1);  // unit in degree 0
  for (const auto& r : rows) {
    int size = card(r.subset);
    for (std::size_t p = 0; p < r.reduced_betti.size(); ++p) {
      if (r.reduced_betti[p] == 0) continue;
      std::size_t degree = p + static_cast<std::size_t>(size) + 1;
      if (out.size() <= degree) out.resize(degree + 1, 0);
      out[degree] += r.reduced_betti[p];
    }
  }
  return out;
}

std::vector<int> HochsterTable::rzk_betti_predicted() const {
  std::vector<int> out(1, 1);
  for (const auto& r : rows) {
    for (std::size_t p = 0; p < r.reduced_betti.size(); ++p) {
      if (r.reduced_betti[p] == 0) continue;
      std::size_t degree = p + 1;
      if (out.size() <= degree) out.resize(degree + 1, 0);
      out[degree] += r.reduced_betti[p];
    }
  }
  return out;
}

std::map<std::pair<int, int>, long long> HochsterTable::by_size_and_degree() const {
  std::map<std::pair<int, int>, long long> agg;
  for (const auto& r : rows)
    for (std::size_t p = 0; p < r.reduced_betti.size(); ++p)
      if (r.reduced_betti[p] != 0)
        agg[{card(r.subset), static_cast<int>(p)}] += r.reduced_betti[p];
  return agg;
}

HochsterTable hochster_table(const SimplicialComplex& k, const FieldSpec& field,
                             const HochsterOptions& opts) {
  if (k.m() > opts.max_vertices)
    fail(Errc::too_many_vertices, "hochster table needs 2^m subsets; m = " + std::to_string(k.m()) +
                                      " exceeds the cap " + std::to_string(opts.max_vertices));
  HochsterTable table;
  table.m = k.m();
  table.field = field;

  auto subsets = nonempty_subsets_by_size(k.m());
  table.subsets_scanned = static_cast<long long>(subsets.size());

  struct Slot {
    bool cone = false;
    std::vector<int> betti;
  };
  std::vector<Slot> slots(subsets.size());
  parallel_for(subsets.size(), opts.threads, [&](std::size_t idx) {
    auto sub = k.full_subcomplex(subsets[idx]);
    if (sub.is_cone()) {
      slots[idx].cone = true;
      return;
    }
    slots[idx].betti = betti_numbers(sub, field, /*reduced=*/true);
  });

  for (std::size_t idx = 0; idx < subsets.size(); ++idx) {
    if (slots[idx].cone) {
      ++table.cones_skipped;
      continue;
    }
    bool nonzero = false;
    for (int b : slots[idx].betti) nonzero = nonzero || b != 0;
    if (nonzero) table.rows.push_back({subsets[idx], std::move(slots[idx].betti)});
  }
  return table;
}

std::string PoincareSeries::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t d = 0; d < coeff.size(); ++d) {
    if (coeff[d] == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (coeff[d] != 1 || d == 0) out << coeff[d].get_str();
    if (d > 0) {
      out << "t";
      if (d > 1) out << "^" << d;
    }
  }
  if (first) out << "0";
  return out.str();
}

PoincareSeries tor_poincare_series(const HochsterTable& table, int truncate_degree) {
  if (truncate_degree < 1) fail(Errc::empty_input, "series truncation must be >= 1");
  PoincareSeries s;
  s.role = PoincareSeries::Role::tor_series;
  s.coeff.assign(static_cast<std::size_t>(truncate_degree) + 1, 0);
  s.coeff[0] = 1;
  for (const auto& r : table.rows) {
    int size = card(r.subset);
    for (std::size_t p = 0; p < r.reduced_betti.size(); ++p) {
      std::size_t degree = p + static_cast<std::size_t>(size) + 1;
      if (degree < s.coeff.size()) s.coeff[degree] += r.reduced_betti[p];
    }
  }
  return s;
}

PoincareSeries golod_bound_series(const HochsterTable& table, int truncate_degree) {
  auto tor = tor_poincare_series(table, truncate_degree);
  std::size_t n = tor.coeff.size();

  // denominator 1 - t (P(Tor) - 1); the degree-1 term vanishes since P - 1
  // has no constant term
  std::vector<mpz_class> den(n, 0);
  den[0] = 1;
  for (std::size_t d = 2; d < n; ++d) den[d] = -tor.coeff[d - 1];

  // series inverse of the denominator
  std::vector<mpz_class> inv(n, 0);
  inv[0] = 1;
  for (std::size_t d = 1; d < n; ++d) {
    mpz_class acc = 0;
    for (std::size_t j = 1; j <= d; ++j) acc += den[j] * inv[d - j];
    inv[d] = -acc;
  }

  // numerator (1 + t^2)^m: binomials at even degrees
  std::vector<mpz_class> num(n, 0);
  mpz_class binom = 1;
  for (int j = 0; 2 * j < static_cast<int>(n); ++j) {
    if (j > 0) {
      binom *= table.m - j + 1;
      mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(j));
    }
    if (j <= table.m) num[static_cast<std::size_t>(2 * j)] = binom;
  }

  PoincareSeries s;
  s.role = PoincareSeries::Role::golod_bound;
  s.coeff.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) s.coeff[i + j] += num[i] * inv[j];
  return s;
}

PoincareSeries zk_cohomology_series(const HochsterTable& table) {
  PoincareSeries s;
  s.role = PoincareSeries::Role::zk_cohomology;
  auto betti = table.zk_betti();
  s.coeff.reserve(betti.size());
  for (int b : betti) s.coeff.emplace_back(b);
  return s;
}

IotaChainMap iota_chain_map(const SimplicialComplex& k, Mask i_set, Mask j_set) {
  if (i_set == 0 || j_set == 0) fail(Errc::empty_subset, "iota needs nonempty I and J");
  if ((i_set & j_set) != 0)
    fail(Errc::not_disjoint, "iota needs disjoint subsets, got " + mask_to_string(i_set) + " and " +
                                 mask_to_string(j_set));

  IotaChainMap out;
  Mask union_set = i_set | j_set;
  out.source = k.full_subcomplex(union_set);
  auto ki = k.full_subcomplex(i_set);
  auto kj = k.full_subcomplex(j_set);
  out.target = join(ki, kj);

  auto union_verts = to_vertices(union_set);
  auto i_verts = to_vertices(i_set);
  auto j_verts = to_vertices(j_set);
  auto pos_in = [](const std::vector<int>& verts, int v) {
    return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin()) + 1;
  };

  auto levels = out.source.all_faces_by_dim();
  out.data.images.resize(levels.size());
  for (std::size_t d = 0; d < levels.size(); ++d) {
    out.data.images[d].resize(levels[d].size());
    for (std::size_t c = 0; c < levels[d].size(); ++c) {
      // original labels of the face
      Mask orig = 0;
      for (int v : to_vertices(levels[d][c]))
        orig |= single(union_verts[static_cast<std::size_t>(v - 1)]);

      Mask in_i = orig & i_set, in_j = orig & j_set;
      // shuffle sign: inversions are pairs (a in I-part, b in J-part) with a > b
      int inversions = 0;
      for (int a : to_vertices(in_i))
        for (int b : to_vertices(in_j))
          if (a > b) ++inversions;

      Mask image = 0;
      for (int a : to_vertices(in_i)) image |= single(pos_in(i_verts, a));
      for (int b : to_vertices(in_j)) image |= single(ki.m() + pos_in(j_verts, b));
      out.data.images[d][c] = {{image, (inversions % 2 == 0) ? 1 : -1}};
    }
  }
  return out;
}

namespace {

bool prefilter_passes(const std::vector<int>& bi, const std::vector<int>& bj,
                      const std::vector<int>& bu, std::pair<int, int>* first_pq = nullptr,
                      int* first_degree = nullptr) {
  for (int p = 0; p < static_cast<int>(bi.size()); ++p) {
    if (bi[static_cast<std::size_t>(p)] == 0) continue;
    for (int q = 0; q < static_cast<int>(bj.size()); ++q) {
      if (bj[static_cast<std::size_t>(q)] == 0) continue;
      int degree = p + q + 1;
      if (degree < static_cast<int>(bu.size()) && bu[static_cast<std::size_t>(degree)] != 0) {
        if (first_pq) *first_pq = {p, q};
        if (first_degree) *first_degree = degree;
        return true;
      }
    }
  }
  return false;
}

std::vector<int> reduced_betti_of_subcomplex(const SimplicialComplex& k, Mask subset,
                                             const FieldSpec& field) {
  return betti_numbers(k.full_subcomplex(subset), field, /*reduced=*/true);
}

}  // namespace

std::vector<int> product_rank(const SimplicialComplex& k, Mask i_set, Mask j_set,
                              const FieldSpec& field, const ProductRankOptions& opts) {
  if (i_set == 0 || j_set == 0) fail(Errc::empty_subset, "product needs nonempty I and J");
  if ((i_set & j_set) != 0) fail(Errc::not_disjoint, "product needs disjoint subsets");

  auto bu = reduced_betti_of_subcomplex(k, i_set | j_set, field);
  if (opts.use_prefilter) {
    auto bi = reduced_betti_of_subcomplex(k, i_set, field);
    auto bj = reduced_betti_of_subcomplex(k, j_set, field);
    if (!prefilter_passes(bi, bj, bu)) return std::vector<int>(bu.size(), 0);
  }

  auto iota = iota_chain_map(k, i_set, j_set);
  return with_field(field, [&](auto ops) {
    auto src = HomologySpace<decltype(ops)>::compute(
        ChainComplex::from_complex(iota.source, /*reduced=*/true), ops);
    auto tgt = HomologySpace<decltype(ops)>::compute(
        ChainComplex::from_complex(iota.target, /*reduced=*/true), ops);
    auto induced = chain_map_induced(iota.data, src, tgt);
    auto ranks = induced.ranks();
    ranks.resize(bu.size(), 0);
    return ranks;
  });
}

GolodCertificate is_weakly_golod(const SimplicialComplex& k, const FieldSpec& field,
                                 const GolodOptions& opts) {
  if (k.m() > opts.max_vertices)
    fail(Errc::too_many_vertices,
         "weak-Golod scan needs all disjoint subset pairs; m exceeds the cap");
  HochsterOptions ho;
  ho.max_vertices = opts.max_vertices;
  ho.threads = opts.threads;
  return is_weakly_golod(k, hochster_table(k, field, ho), opts);
}

GolodCertificate is_weakly_golod(const SimplicialComplex& k, const HochsterTable& table,
                                 const GolodOptions& opts) {
  if (k.m() > opts.max_vertices)
    fail(Errc::too_many_vertices,
         "weak-Golod scan needs all disjoint subset pairs; m exceeds the cap");
  const FieldSpec& field = table.field;

  // pairs {I, J}, I < J in size-lex order; overlapping pairs are never
  // computed (their products are trivial), and the map is symmetric in (I, J)
  auto subsets = nonempty_subsets_by_size(k.m());
  std::vector<std::pair<Mask, Mask>> pairs;
  for (std::size_t a = 0; a < subsets.size(); ++a)
    for (std::size_t b = a + 1; b < subsets.size(); ++b)
      if ((subsets[a] & subsets[b]) == 0) pairs.emplace_back(subsets[a], subsets[b]);

  GolodCertificate cert;
  cert.pairs_scanned = static_cast<long long>(pairs.size());

  struct Slot {
    bool computed = false;
    bool nonzero = false;
    int degree = -1;
    int rank = 0;
    std::pair<int, int> pq{-1, -1};
  };
  std::vector<Slot> slots(pairs.size());

  auto betti_of = [&](Mask s) -> std::vector<int> {
    const auto* row = table.row_for(s);
    return row ? row->reduced_betti : std::vector<int>{};
  };

  auto run_pair = [&](std::size_t idx) {
    auto [i_set, j_set] = pairs[idx];
    auto bi = betti_of(i_set);
    auto bj = betti_of(j_set);
    auto bu = betti_of(i_set | j_set);
    if (opts.use_prefilter && !prefilter_passes(bi, bj, bu)) return;

    ProductRankOptions pr;
    pr.use_prefilter = false;  // alignment already established (or audit mode)
    auto ranks = product_rank(k, i_set, j_set, field, pr);
    slots[idx].computed = true;
    for (std::size_t d = 0; d < ranks.size(); ++d) {
      if (ranks[d] != 0) {
        slots[idx].nonzero = true;
        slots[idx].degree = static_cast<int>(d);
        slots[idx].rank = ranks[d];
        // aligned (p, q) witness for the report
        for (int p = 0; p < static_cast<int>(bi.size()) && slots[idx].pq.first < 0; ++p)
          if (bi[static_cast<std::size_t>(p)] != 0) {
            int q = static_cast<int>(d) - 1 - p;
            if (q >= 0 && q < static_cast<int>(bj.size()) && bj[static_cast<std::size_t>(q)] != 0)
              slots[idx].pq = {p, q};
          }
        break;
      }
    }
  };

  // block-wise scan with early exit: the first witness in pair order lives in
  // the first block containing any witness, so the result is order-independent
  int threads = resolve_thread_count(opts.threads);
  std::size_t block = std::max<std::size_t>(64, static_cast<std::size_t>(threads) * 16);
  for (std::size_t base = 0; base < pairs.size(); base += block) {
    std::size_t count = std::min(block, pairs.size() - base);
    parallel_for(count, opts.threads, [&](std::size_t off) { run_pair(base + off); });
    for (std::size_t idx = base; idx < base + count; ++idx) {
      if (slots[idx].computed) ++cert.pairs_computed;
      if (slots[idx].nonzero) {
        cert.vanishing = false;
        cert.witness_i = pairs[idx].first;
        cert.witness_j = pairs[idx].second;
        cert.degree = slots[idx].degree;
        cert.rank = slots[idx].rank;
        cert.pq = slots[idx].pq;
        return cert;
      }
    }
  }
  return cert;
}

}  // namespace golodtight
