#include "golodtight/report.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

#include "golodtight/io.hpp"

namespace golodtight {

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
  std::vector<std::pair<std::string, double>>& sink;
  std::string label;
  Clock::time_point start = Clock::now();
  Timer(std::vector<std::pair<std::string, double>>& s, std::string l)
      : sink(s), label(std::move(l)) {}
  ~Timer() {
    sink.emplace_back(label, std::chrono::duration<double>(Clock::now() - start).count());
  }
};

std::string status_name(AuditItem::Status s) {
  switch (s) {
    case AuditItem::Status::pass: return "pass";
    case AuditItem::Status::violated: return "violated";
    case AuditItem::Status::not_applicable: return "not applicable";
  }
  return "?";
}

std::string betti_string(const std::vector<int>& b) {
  std::string out = "(";
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(b[i]);
  }
  return out + ")";
}

void run_audit(AnalysisReport& r, const SimplicialComplex& k) {
  auto add = [&](const std::string& name, AuditItem::Status status, const std::string& detail) {
    r.audit.push_back({name, status, detail});
    if (status == AuditItem::Status::violated) r.audit_clean = false;
  };
  // The audit flags combinations the theorems exclude.  A violation reports a
  // failure of the input's hypotheses (a mislabeled or non-manifold file),
  // never a refutation of the theorems.
  bool is_manifold = r.manifold.valid_closed_manifold() && r.connected;
  int d = r.dim;

  for (const auto& fa : r.per_field) {
    std::string suffix = " over " + fa.field.name();
    if (fa.tight_ran && fa.tightness.tight && !r.neighborly)
      add("tight complexes are neighborly" + suffix, AuditItem::Status::violated,
          "tight but not neighborly");
    else if (fa.tight_ran)
      add("tight complexes are neighborly" + suffix, AuditItem::Status::pass, "");

    if (fa.tight_ran && fa.golod_ran) {
      if (fa.tightness.tight && !fa.golod.vanishing)
        add("tight complexes are weakly Golod" + suffix, AuditItem::Status::violated,
            "tight with a nonvanishing product " + mask_to_string(fa.golod.witness_i) + "," +
                mask_to_string(fa.golod.witness_j));
      else
        add("tight complexes are weakly Golod" + suffix, AuditItem::Status::pass, "");
    }

    // manifold-conditional directions need F-orientability
    if (is_manifold && fa.orientable && fa.tight_ran && fa.golod_ran) {
      if (fa.golod.vanishing && !fa.tightness.tight)
        add("weakly Golod orientable manifolds are tight" + suffix, AuditItem::Status::violated,
            "weakly Golod but not tight; witness subset " + mask_to_string(fa.tightness.witness));
      else
        add("weakly Golod orientable manifolds are tight" + suffix, AuditItem::Status::pass, "");
    } else {
      add("weakly Golod orientable manifolds are tight" + suffix,
          AuditItem::Status::not_applicable,
          is_manifold ? "not orientable over this field" : "not a validated closed manifold");
    }

    if (is_manifold && d >= 3 && fa.orientable && fa.tight_ran && fa.tight_neighborly_ran) {
      if (fa.tight_neighborly.holds && !fa.tightness.tight)
        add("tight-neighborly orientable manifolds are tight" + suffix,
            AuditItem::Status::violated, "tight-neighborly but not tight");
      else
        add("tight-neighborly orientable manifolds are tight" + suffix, AuditItem::Status::pass,
            "");
    }

    if (is_manifold && d == 3 && fa.orientable && fa.tight_ran && fa.tight_neighborly_ran &&
        r.locally_stacked_ran) {
      bool tight = fa.tightness.tight;
      bool tn = fa.tight_neighborly.holds;
      bool ns = r.neighborly && r.locally_stacked.all_stacked;
      if (tight == tn && tn == ns)
        add("dimension-3 equivalence: tight <=> tight-neighborly <=> neighborly+stacked" + suffix,
            AuditItem::Status::pass, "");
      else
        add("dimension-3 equivalence: tight <=> tight-neighborly <=> neighborly+stacked" + suffix,
            AuditItem::Status::violated,
            std::string("tight=") + (tight ? "yes" : "no") + " tight-neighborly=" +
                (tn ? "yes" : "no") + " neighborly+stacked=" + (ns ? "yes" : "no"));
    }

    if (is_manifold && d == 2 && fa.orientable && fa.tight_ran && fa.golod_ran) {
      bool tight = fa.tightness.tight;
      bool golod = fa.golod.vanishing;
      if (tight == r.neighborly && r.neighborly == golod)
        add("surface equivalence: tight <=> neighborly <=> weakly Golod" + suffix,
            AuditItem::Status::pass, "");
      else
        add("surface equivalence: tight <=> neighborly <=> weakly Golod" + suffix,
            AuditItem::Status::violated,
            std::string("tight=") + (tight ? "yes" : "no") + " neighborly=" +
                (r.neighborly ? "yes" : "no") + " weaklyGolod=" + (golod ? "yes" : "no"));
    }
  }

  // (d-1)-connected 2d-manifolds: tight over every tested field <=> d-neighborly
  if (is_manifold && d >= 2 && d % 2 == 0) {
    int half = d / 2;
    bool connected_enough = true;
    bool all_ran = !r.per_field.empty();
    for (const auto& fa : r.per_field) {
      if (!fa.tight_ran) all_ran = false;
      const auto* row = fa.table.row_for(full_mask(r.m));
      for (int deg = 0; deg < half; ++deg)
        if (fa.table.entry(full_mask(r.m), deg) != 0) connected_enough = false;
      (void)row;
    }
    if (all_ran && connected_enough) {
      bool tight_all = true;
      for (const auto& fa : r.per_field) tight_all = tight_all && fa.tightness.tight;
      bool half_neighborly = is_k_neighborly(k, half);
      if (tight_all == half_neighborly)
        add("highly connected even-dimensional equivalence: tight(all fields) <=> mid-neighborly",
            AuditItem::Status::pass, "");
      else
        add("highly connected even-dimensional equivalence: tight(all fields) <=> mid-neighborly",
            AuditItem::Status::violated,
            std::string("tight over all tested fields=") + (tight_all ? "yes" : "no") +
                " mid-neighborly=" + (half_neighborly ? "yes" : "no"));
    }
  }

  // beta_1 used by tight-neighborliness must not depend on the field
  if (is_manifold && d >= 3) {
    int seen = -1;
    bool mismatch = false;
    for (const auto& fa : r.per_field) {
      if (!fa.tight_neighborly_ran) continue;
      if (seen < 0) seen = fa.tight_neighborly.beta1;
      else if (seen != fa.tight_neighborly.beta1) mismatch = true;
    }
    if (seen >= 0) {
      if (mismatch)
        add("beta_1 agreement across fields for tight-neighborliness",
            AuditItem::Status::violated,
            "beta_1 differs between tested fields; the manifold hypotheses are suspect");
      else
        add("beta_1 agreement across fields for tight-neighborliness", AuditItem::Status::pass,
            "");
    }
  }
}

}  // namespace

std::vector<FieldSpec> default_fields() { return {FieldSpec::prime(2), FieldSpec::rational()}; }

FieldSpec parse_field(const std::string& text) {
  if (text == "q" || text == "Q" || text == "0") return FieldSpec::rational();
  try {
    unsigned long p = std::stoul(text);
    return FieldSpec::prime(static_cast<std::uint32_t>(p));
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(Errc::parse_error, "bad field spec '" + text + "' (use q or a prime)");
  }
}

std::string facet_hash(const SimplicialComplex& k) {
  std::string text = to_facet_text(k);
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

AnalysisReport analyze(const SimplicialComplex& k, const AnalyzeOptions& opts) {
  AnalysisReport r;
  r.m = k.m();
  r.dim = k.dim();
  r.f_vector = k.f_vector();
  r.facet_hash = facet_hash(k);
  r.connected = k.is_connected();

  auto fields = opts.fields.empty() ? default_fields() : opts.fields;

  {
    Timer t(r.timings_seconds, "neighborliness");
    r.neighborly = is_k_neighborly(k, 1);
    r.max_neighborliness = 0;
    for (int level = 1; level <= k.m() - 1; ++level) {
      if (is_k_neighborly(k, level)) r.max_neighborliness = level;
      else break;
    }
  }

  {
    Timer t(r.timings_seconds, "manifold validation");
    r.manifold = validate_manifold(k, fields);
  }

  for (const auto& field : fields) {
    FieldAnalysis fa;
    fa.field = field;
    {
      Timer t(r.timings_seconds, "hochster table over " + field.name());
      HochsterOptions ho;
      ho.max_vertices = opts.max_vertices;
      ho.threads = opts.threads;
      fa.table = hochster_table(k, field, ho);
      fa.zk_betti = fa.table.zk_betti();
      fa.rzk_predicted = fa.table.rzk_betti_predicted();
      fa.tor_series = tor_poincare_series(fa.table, opts.truncate);
      fa.bound_series = golod_bound_series(fa.table, opts.truncate);
    }
    {
      Timer t(r.timings_seconds, "tightness over " + field.name());
      TightnessOptions to;
      to.max_vertices = opts.max_vertices;
      to.use_pruning = !opts.no_prune;
      to.threads = opts.threads;
      try {
        fa.tightness = opts.no_prune ? is_tight(k, field, to) : is_tight(k, fa.table, to);
        fa.tight_ran = true;
      } catch (const Error& e) {
        fa.tight_error = e.what();
      }
    }
    {
      Timer t(r.timings_seconds, "weak Golodness over " + field.name());
      GolodOptions go;
      go.max_vertices = opts.max_vertices;
      go.use_prefilter = !opts.no_prune;
      go.threads = opts.threads;
      try {
        fa.golod = is_weakly_golod(k, fa.table, go);
        fa.golod_ran = true;
      } catch (const Error& e) {
        fa.golod_error = e.what();
      }
    }
    fa.orientable = r.manifold.orientable(field);
    if (r.manifold.valid_closed_manifold() && r.dim >= 3 && r.connected) {
      Timer t(r.timings_seconds, "tight-neighborliness over " + field.name());
      fa.tight_neighborly = is_tight_neighborly(k, field, r.manifold);
      fa.tight_neighborly_ran = true;
    }
    r.per_field.push_back(std::move(fa));
  }

  if (r.manifold.valid_closed_manifold() && r.dim >= 3) {
    Timer t(r.timings_seconds, "locally stacked links");
    r.locally_stacked = is_locally_stacked(k, r.manifold);
    r.locally_stacked_ran = true;
  }

  if (opts.with_fm && r.manifold.valid_closed_manifold() && r.dim >= 3 && r.connected) {
    Timer t(r.timings_seconds, "F(M) verification");
    FMOptions fo;
    try {
      r.fm = build_fm(k, r.manifold, fo);
      r.fm_ran = true;
    } catch (const Error& e) {
      r.fm_skip_reason = e.what();
    }
  } else if (opts.with_fm) {
    r.fm_skip_reason = "needs a validated closed connected manifold of dimension >= 3";
  }

  {
    Timer t(r.timings_seconds, "equivalence audit");
    run_audit(r, k);
  }
  return r;
}

std::string render_text(const AnalysisReport& r, bool include_timings) {
  std::ostringstream out;
  out << r.tool_version << "\n";
  out << "input: m=" << r.m << " dim=" << r.dim << " f=(";
  for (std::size_t i = 0; i < r.f_vector.size(); ++i) out << (i ? "," : "") << r.f_vector[i];
  out << ") hash=" << r.facet_hash << "\n";
  out << "connected: " << (r.connected ? "yes" : "no") << "\n";
  out << "neighborly: " << (r.neighborly ? "yes" : "no")
      << " (max k: " << r.max_neighborliness << ")\n";

  out << "manifold: pure=" << (r.manifold.pure ? "yes" : "no")
      << " closed-pseudomanifold=" << (r.manifold.closed_pseudomanifold ? "yes" : "no")
      << " strongly-connected=" << (r.manifold.strongly_connected ? "yes" : "no")
      << " links=" << (r.manifold.all_links_ok
                           ? (r.manifold.links_sphere_certified ? "sphere-certified"
                                                                : "homology-sphere-only")
                           : "failed")
      << "\n";
  if (!r.manifold.pure && r.manifold.purity_witness)
    out << "  purity witness: facet " << mask_to_string(r.manifold.purity_witness) << "\n";
  if (r.manifold.pure && !r.manifold.closed_pseudomanifold && r.manifold.closed_witness_count >= 0)
    out << "  closedness witness: ridge " << mask_to_string(r.manifold.closed_witness) << " in "
        << r.manifold.closed_witness_count << " facets\n";

  for (const auto& fa : r.per_field) {
    out << "field " << fa.field.name() << ":\n";
    if (fa.tight_ran) {
      out << "  tight: " << (fa.tightness.tight ? "yes" : "no");
      if (!fa.tightness.tight)
        out << " (witness " << mask_to_string(fa.tightness.witness) << " degree "
            << fa.tightness.witness_degree << ")";
      out << " [checked " << fa.tightness.subsets_checked << ", pruned "
          << fa.tightness.subsets_pruned << "]\n";
    } else {
      out << "  tight: error " << fa.tight_error << "\n";
    }
    if (fa.golod_ran) {
      out << "  weakly Golod: " << (fa.golod.vanishing ? "yes" : "no");
      if (!fa.golod.vanishing)
        out << " (witness " << mask_to_string(fa.golod.witness_i) << ","
            << mask_to_string(fa.golod.witness_j) << " degree " << fa.golod.degree << " (p,q)=("
            << fa.golod.pq.first << "," << fa.golod.pq.second << ") rank " << fa.golod.rank << ")";
      out << " [pairs " << fa.golod.pairs_scanned << ", computed " << fa.golod.pairs_computed
          << "]\n";
    } else {
      out << "  weakly Golod: error " << fa.golod_error << "\n";
    }
    out << "  orientable: " << (fa.orientable ? "yes" : "no") << "\n";
    if (fa.tight_neighborly_ran) {
      const auto& tn = fa.tight_neighborly;
      out << "  tight-neighborly: " << (tn.holds ? "yes" : "no") << " [C(" << tn.m - tn.d - 1
          << ",2)=" << tn.lhs << " vs C(" << tn.d + 2 << ",2)*beta1=" << tn.rhs
          << ", beta1=" << tn.beta1 << "]\n";
    }
    out << "  hochster rows (nonzero): " << fa.table.rows.size() << " of "
        << fa.table.subsets_scanned << " subsets (" << fa.table.cones_skipped
        << " cones skipped)\n";
    for (const auto& row : fa.table.rows) {
      out << "    " << mask_to_string(row.subset) << " :";
      for (std::size_t p = 0; p < row.reduced_betti.size(); ++p)
        if (row.reduced_betti[p] != 0)
          out << " p=" << p << " rank=" << row.reduced_betti[p];
      out << "\n";
    }
    out << "  Z_K betti: " << betti_string(fa.zk_betti) << "\n";
    out << "  RZ_K betti (predicted): " << betti_string(fa.rzk_predicted) << "\n";
    out << "  P(Tor) = " << fa.tor_series.to_string() << "\n";
    out << "  Golod bound = " << fa.bound_series.to_string() << "\n";
  }

  if (r.locally_stacked_ran) {
    if (r.locally_stacked.applicable)
      out << "locally stacked: " << (r.locally_stacked.all_stacked ? "yes" : "no") << "\n";
    else
      out << "locally stacked: not applicable in this dimension\n";
  }

  if (r.fm_ran) {
    out << "F(M): filled " << r.fm.filled.size() << " minimal non-faces; |S(M)| = "
        << r.fm.sm.size() << "\n";
    for (const auto& check : r.fm.checks)
      out << "  " << (check.pass ? "pass" : "FAIL") << ": " << check.name
          << (check.pass ? "" : " (" + check.witness + ")") << "\n";
  } else if (!r.fm_skip_reason.empty()) {
    out << "F(M): skipped (" << r.fm_skip_reason << ")\n";
  }

  out << "audit:\n";
  for (const auto& item : r.audit) {
    out << "  [" << status_name(item.status) << "] " << item.name;
    if (!item.detail.empty()) out << " -- " << item.detail;
    out << "\n";
  }
  out << "audit clean: " << (r.audit_clean ? "yes" : "no") << "\n";

  if (include_timings) {
    out << "timings:\n";
    for (const auto& [label, seconds] : r.timings_seconds) {
      std::ostringstream sec;
      sec.setf(std::ios::fixed);
      sec.precision(3);
      sec << seconds;
      out << "  " << label << ": " << sec.str() << "s\n";
    }
  }
  return out.str();
}

std::string render_structured(const AnalysisReport& r, bool include_timings) {
  nlohmann::ordered_json doc;
  doc["tool"] = r.tool_version;
  doc["input"] = {{"m", r.m}, {"dim", r.dim}, {"f_vector", r.f_vector}, {"hash", r.facet_hash}};
  doc["connected"] = r.connected;
  doc["neighborly"] = r.neighborly;
  doc["max_neighborliness"] = r.max_neighborliness;

  nlohmann::ordered_json manifold;
  manifold["pure"] = r.manifold.pure;
  manifold["closed_pseudomanifold"] = r.manifold.closed_pseudomanifold;
  manifold["strongly_connected"] = r.manifold.strongly_connected;
  manifold["all_links_ok"] = r.manifold.all_links_ok;
  manifold["link_level"] = r.manifold.all_links_ok
                               ? (r.manifold.links_sphere_certified ? "sphere-certified"
                                                                    : "homology-sphere-only")
                               : "failed";
  nlohmann::ordered_json orient = nlohmann::ordered_json::object();
  for (const auto& [field, o] : r.manifold.orientable_over) orient[field.name()] = o;
  manifold["orientable_over"] = orient;
  doc["manifold"] = manifold;

  nlohmann::ordered_json fields = nlohmann::ordered_json::array();
  for (const auto& fa : r.per_field) {
    nlohmann::ordered_json f;
    f["field"] = fa.field.name();
    if (fa.tight_ran) {
      f["tight"] = fa.tightness.tight;
      if (!fa.tightness.tight) {
        f["tight_witness"] = mask_to_string(fa.tightness.witness);
        f["tight_witness_degree"] = fa.tightness.witness_degree;
      }
      f["tight_subsets_checked"] = fa.tightness.subsets_checked;
      f["tight_subsets_pruned"] = fa.tightness.subsets_pruned;
    } else {
      f["tight_error"] = fa.tight_error;
    }
    if (fa.golod_ran) {
      f["weakly_golod"] = fa.golod.vanishing;
      if (!fa.golod.vanishing) {
        f["golod_witness"] = {mask_to_string(fa.golod.witness_i),
                              mask_to_string(fa.golod.witness_j)};
        f["golod_witness_degree"] = fa.golod.degree;
        f["golod_witness_pq"] = {fa.golod.pq.first, fa.golod.pq.second};
        f["golod_witness_rank"] = fa.golod.rank;
      }
      f["golod_pairs_scanned"] = fa.golod.pairs_scanned;
      f["golod_pairs_computed"] = fa.golod.pairs_computed;
    } else {
      f["golod_error"] = fa.golod_error;
    }
    f["orientable"] = fa.orientable;
    if (fa.tight_neighborly_ran) {
      f["tight_neighborly"] = fa.tight_neighborly.holds;
      f["tight_neighborly_trace"] = {{"m", fa.tight_neighborly.m},
                                     {"d", fa.tight_neighborly.d},
                                     {"beta1", fa.tight_neighborly.beta1},
                                     {"lhs", fa.tight_neighborly.lhs},
                                     {"rhs", fa.tight_neighborly.rhs}};
    }
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : fa.table.rows) {
      nlohmann::ordered_json jr;
      jr["subset"] = mask_to_string(row.subset);
      jr["reduced_betti"] = row.reduced_betti;
      rows.push_back(std::move(jr));
    }
    f["hochster_rows"] = std::move(rows);
    f["zk_betti"] = fa.zk_betti;
    f["rzk_betti_predicted"] = fa.rzk_predicted;
    std::vector<std::string> tor, bound;
    for (const auto& c : fa.tor_series.coeff) tor.push_back(c.get_str());
    for (const auto& c : fa.bound_series.coeff) bound.push_back(c.get_str());
    f["tor_series"] = tor;
    f["golod_bound_series"] = bound;
    fields.push_back(std::move(f));
  }
  doc["fields"] = std::move(fields);

  if (r.locally_stacked_ran) {
    doc["locally_stacked"] =
        r.locally_stacked.applicable
            ? nlohmann::ordered_json(r.locally_stacked.all_stacked)
            : nlohmann::ordered_json("not applicable");
  }
  if (r.fm_ran) {
    nlohmann::ordered_json fm;
    fm["filled"] = r.fm.filled.size();
    fm["sm_size"] = r.fm.sm.size();
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& check : r.fm.checks)
      checks.push_back({{"name", check.name}, {"pass", check.pass}, {"witness", check.witness}});
    fm["checks"] = std::move(checks);
    doc["fm"] = std::move(fm);
  } else if (!r.fm_skip_reason.empty()) {
    doc["fm"] = r.fm_skip_reason;
  }

  nlohmann::ordered_json audit = nlohmann::ordered_json::array();
  for (const auto& item : r.audit)
    audit.push_back(
        {{"name", item.name}, {"status", status_name(item.status)}, {"detail", item.detail}});
  doc["audit"] = std::move(audit);
  doc["audit_clean"] = r.audit_clean;

  if (include_timings) {
    nlohmann::ordered_json timings = nlohmann::ordered_json::array();
    for (const auto& [label, seconds] : r.timings_seconds)
      timings.push_back({{"step", label}, {"seconds", seconds}});
    doc["timings"] = std::move(timings);
  }
  return doc.dump(2) + "\n";
}

}  // namespace golodtight
