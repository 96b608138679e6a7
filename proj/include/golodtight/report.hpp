#pragma once

#include <optional>
#include <string>
#include <vector>

#include "golodtight/fm.hpp"
#include "golodtight/hochster.hpp"
#include "golodtight/manifold.hpp"
#include "golodtight/moment_angle.hpp"
#include "golodtight/tightness.hpp"

namespace golodtight {

inline constexpr const char* kToolVersion = "golodtight 0.1.0";

struct AnalyzeOptions {
  std::vector<FieldSpec> fields;  // default: F_2 then Q
  int max_vertices = kDefaultSubsetCap;
  int truncate = 16;
  bool no_prune = false;
  int threads = 0;
  bool with_fm = true;
};

/// Everything `analyze` computed for one coefficient field.
struct FieldAnalysis {
  FieldSpec field = FieldSpec::rational();

  bool tight_ran = false;
  TightnessReport tightness;
  std::string tight_error;

  bool golod_ran = false;
  GolodCertificate golod;
  std::string golod_error;

  HochsterTable table;
  std::vector<int> zk_betti;
  std::vector<int> rzk_predicted;
  PoincareSeries tor_series;
  PoincareSeries bound_series;

  bool orientable = false;

  bool tight_neighborly_ran = false;
  TightNeighborlyTrace tight_neighborly;
};

struct AuditItem {
  std::string name;
  enum class Status { pass, violated, not_applicable } status = Status::not_applicable;
  std::string detail;
};

struct AnalysisReport {
  std::string tool_version = kToolVersion;
  int m = 0;
  int dim = -1;
  std::vector<long long> f_vector;
  std::string facet_hash;
  bool connected = false;
  bool neighborly = false;
  int max_neighborliness = 0;  // largest k with K k-neighborly (0 = none)

  ManifoldReport manifold;
  bool locally_stacked_ran = false;
  LocalStackedness locally_stacked;

  bool fm_ran = false;
  std::string fm_skip_reason;
  FMResult fm;

  std::vector<FieldAnalysis> per_field;

  std::vector<AuditItem> audit;
  bool audit_clean = true;

  // segregated from the deterministic body
  std::vector<std::pair<std::string, double>> timings_seconds;
};

AnalysisReport analyze(const SimplicialComplex& k, const AnalyzeOptions& opts = {});

std::string render_text(const AnalysisReport& report, bool include_timings);
std::string render_structured(const AnalysisReport& report, bool include_timings);

/// FNV-1a over the canonical facet text; the input digest in reports.
std::string facet_hash(const SimplicialComplex& k);

std::vector<FieldSpec> default_fields();
FieldSpec parse_field(const std::string& text);

}  // namespace golodtight
