#include "golodtight/tightness.hpp"

#include "golodtight/parallel.hpp"

namespace golodtight {

namespace {

TightnessReport run_tightness(const SimplicialComplex& k, const FieldSpec& field,
                              const HochsterTable* table, const TightnessOptions& opts) {
  if (k.m() > opts.max_vertices)
    fail(Errc::too_many_vertices, "tightness scans 2^m subsets; m = " + std::to_string(k.m()) +
                                      " exceeds the cap " + std::to_string(opts.max_vertices));
  if (!k.is_connected()) fail(Errc::not_connected, "tightness is defined for connected complexes");

  TightnessReport report;
  report.field = field;

  if (opts.use_pruning) {
    // a missing edge {u,v} gives K_{u,v} = two points, whose H_0 cannot inject
    for (Mask pair : subsets_of_size(k.m(), 2)) {
      if (!k.is_face(pair)) {
        report.tight = false;
        report.witness = pair;
        report.witness_degree = 0;
        report.subsets_checked = 1;
        return report;
      }
    }
  }

  auto subsets = nonempty_subsets_by_size(k.m());

  return with_field(field, [&](auto ops) {
    using Ops = decltype(ops);
    // pruned mode: K is neighborly here, every K_I is connected, degree 0 is
    // settled; reduced homology carries the remaining conditions
    bool reduced = opts.use_pruning;
    auto k_space = HomologySpace<Ops>::compute(ChainComplex::from_complex(k, reduced), ops);

    struct Slot {
      bool pruned = false;
      bool failed = false;
      int degree = -1;
    };
    std::vector<Slot> slots(subsets.size());

    auto run_subset = [&](std::size_t idx) {
      Mask subset = subsets[idx];
      auto sub = k.full_subcomplex(subset);
      if (opts.use_pruning) {
        if (sub.is_cone()) {
          slots[idx].pruned = true;
          return;
        }
        bool any = false;
        if (table) {
          const auto* row = table->row_for(subset);
          if (row)
            for (int b : row->reduced_betti) any = any || b != 0;
        } else {
          for (int b : betti_numbers(sub, field, true)) any = any || b != 0;
        }
        if (!any) {
          slots[idx].pruned = true;
          return;
        }
      }
      auto sub_space = HomologySpace<Ops>::compute(ChainComplex::from_complex(sub, reduced), ops);
      auto map = inclusion_induced_map(k, subset, sub, sub_space, k_space);
      int deg = -1;
      if (!map.injective(&deg)) {
        slots[idx].failed = true;
        slots[idx].degree = deg;
      }
    };

    // block-wise deterministic early exit on the first failing subset
    int threads = resolve_thread_count(opts.threads);
    std::size_t block = std::max<std::size_t>(64, static_cast<std::size_t>(threads) * 16);
    for (std::size_t base = 0; base < subsets.size(); base += block) {
      std::size_t count = std::min(block, subsets.size() - base);
      parallel_for(count, opts.threads, [&](std::size_t off) { run_subset(base + off); });
      for (std::size_t idx = base; idx < base + count; ++idx) {
        if (slots[idx].pruned) ++report.subsets_pruned;
        else ++report.subsets_checked;
        if (slots[idx].failed) {
          report.tight = false;
          report.witness = subsets[idx];
          report.witness_degree = slots[idx].degree;
          return report;
        }
      }
    }
    return report;
  });
}

}  // namespace

TightnessReport is_tight(const SimplicialComplex& k, const FieldSpec& field,
                         const TightnessOptions& opts) {
  return run_tightness(k, field, nullptr, opts);
}

TightnessReport is_tight(const SimplicialComplex& k, const HochsterTable& table,
                         const TightnessOptions& opts) {
  return run_tightness(k, table.field, &table, opts);
}

}  // namespace golodtight
