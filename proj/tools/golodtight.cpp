// golodtight: batch analyzer for tightness, weak Golodness, and moment-angle
// Betti predictions of finite simplicial complexes with field coefficients.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "golodtight/io.hpp"
#include "golodtight/report.hpp"
#include "golodtight/zoo.hpp"

using namespace golodtight;

namespace {

// exit codes: 0 ok, 1 internal, 2 parse, 3 budget/cap, 4 audit contradiction,
// 5 predicate reported "no" in a single-predicate command
constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;
constexpr int kExitAudit = 4;
constexpr int kExitNegative = 5;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::parse_error:
    case Errc::empty_input:
    case Errc::label_out_of_range:
    case Errc::missing_vertex:
      return kExitParse;
    case Errc::too_many_vertices:
    case Errc::budget_exceeded:
      return kExitBudget;
    default:
      return kExitError;
  }
}

std::vector<FieldSpec> fields_from(const std::vector<std::string>& flags) {
  if (flags.empty()) return default_fields();
  std::vector<FieldSpec> out;
  for (const auto& f : flags) out.push_back(parse_field(f));
  return out;
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::parse_error, "cannot write " + path);
  out << text;
}

std::vector<int> parse_vertex_list(const std::string& text) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) out.push_back(std::stoi(token));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tightness / weak-Golodness analyzer for simplicial complexes"};
  app.require_subcommand(1);

  std::vector<std::string> field_flags;
  int max_vertices = kDefaultSubsetCap;
  int truncate = 16;
  bool no_prune = false;
  int parallel = 0;
  bool allow_isolated = false;
  std::string report_format = "text";
  bool no_timings = false;
  std::string out_path;

  app.add_option("--field", field_flags, "coefficient field: q or a prime (repeatable)");
  app.add_option("--max-vertices", max_vertices, "cap for the 2^m subset scans");
  app.add_option("--truncate", truncate, "Poincare series truncation degree");
  app.add_flag("--no-prune", no_prune, "disable pruning/prefilters (audit mode)");
  app.add_option("--parallel", parallel, "worker threads (GOLODTIGHT_THREADS overrides)");
  app.add_flag("--allow-isolated", allow_isolated,
               "downgrade missing vertices to a warning when loading");
  app.add_option("--report", report_format, "report format: text | structured");
  app.add_flag("--no-timings", no_timings, "omit the timing section");
  app.add_option("--out", out_path, "write output to a file instead of stdout");

  // analyze
  auto* analyze_cmd = app.add_subcommand("analyze", "run the full predicate suite on a complex");
  std::string analyze_file;
  analyze_cmd->add_option("file", analyze_file, "facet file (text or structured)")->required();

  // tight / golod
  auto* tight_cmd = app.add_subcommand("tight", "tightness only");
  std::string tight_file;
  tight_cmd->add_option("file", tight_file)->required();
  auto* golod_cmd = app.add_subcommand("golod", "weak Golodness only");
  std::string golod_file;
  golod_cmd->add_option("file", golod_file)->required();

  // hochster
  auto* hochster_cmd = app.add_subcommand("hochster", "dump the bigraded Betti table");
  std::string hochster_file;
  hochster_cmd->add_option("file", hochster_file)->required();

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "compare predicted vs brute-force Betti");
  std::string oracle_kind, oracle_file;
  oracle_cmd->add_option("which", oracle_kind, "rzk | zk")->required();
  oracle_cmd->add_option("file", oracle_file)->required();

  // fm
  auto* fm_cmd = app.add_subcommand("fm", "construct and verify F(M)");
  std::string fm_file;
  fm_cmd->add_option("file", fm_file)->required();

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "write a generated complex as a facet file");
  std::string gen_name;
  std::vector<std::string> gen_args;
  gen_cmd->add_option("name", gen_name,
                      "boundary-simplex | cycle | stacked-sphere | join | connected-sum")
      ->required();
  gen_cmd->add_option("args", gen_args, "generator arguments");
  std::string gen_match;
  gen_cmd->add_option("--match", gen_match, "connected-sum matching, e.g. 1,2,3");

  CLI11_PARSE(app, argc, argv);

  try {
    auto fields = fields_from(field_flags);

    if (*analyze_cmd || *tight_cmd || *golod_cmd) {
      std::string file = *analyze_cmd ? analyze_file : (*tight_cmd ? tight_file : golod_file);
      auto k = load_complex(file, allow_isolated);
      AnalyzeOptions opts;
      opts.fields = fields;
      opts.max_vertices = max_vertices;
      opts.truncate = truncate;
      opts.no_prune = no_prune;
      opts.threads = parallel;
      if (*tight_cmd || *golod_cmd) opts.with_fm = false;

      if (*analyze_cmd) {
        auto report = analyze(k, opts);
        write_output(report_format == "structured" ? render_structured(report, !no_timings)
                                                   : render_text(report, !no_timings),
                     out_path);
        for (const auto& fa : report.per_field)
          if (!fa.tight_ran || !fa.golod_ran) return kExitError;
        return report.audit_clean ? kExitOk : kExitAudit;
      }
      if (*tight_cmd) {
        bool all = true;
        for (const auto& field : fields) {
          TightnessOptions to;
          to.max_vertices = max_vertices;
          to.use_pruning = !no_prune;
          to.threads = parallel;
          auto rep = is_tight(k, field, to);
          std::cout << "tight over " << field.name() << ": " << (rep.tight ? "yes" : "no");
          if (!rep.tight)
            std::cout << " (witness " << mask_to_string(rep.witness) << " degree "
                      << rep.witness_degree << ")";
          std::cout << " [checked " << rep.subsets_checked << ", pruned " << rep.subsets_pruned
                    << "]\n";
          all = all && rep.tight;
        }
        return all ? kExitOk : kExitNegative;
      }
      bool all = true;
      for (const auto& field : fields) {
        GolodOptions go;
        go.max_vertices = max_vertices;
        go.use_prefilter = !no_prune;
        go.threads = parallel;
        auto cert = is_weakly_golod(k, field, go);
        std::cout << "weakly Golod over " << field.name() << ": "
                  << (cert.vanishing ? "yes" : "no");
        if (!cert.vanishing)
          std::cout << " (witness " << mask_to_string(cert.witness_i) << ","
                    << mask_to_string(cert.witness_j) << " degree " << cert.degree << " rank "
                    << cert.rank << ")";
        std::cout << "\n";
        all = all && cert.vanishing;
      }
      return all ? kExitOk : kExitNegative;
    }

    if (*hochster_cmd) {
      auto k = load_complex(hochster_file, allow_isolated);
      for (const auto& field : fields) {
        HochsterOptions ho;
        ho.max_vertices = max_vertices;
        ho.threads = parallel;
        auto table = hochster_table(k, field, ho);
        std::cout << "hochster table over " << field.name() << " (" << table.rows.size()
                  << " nonzero rows of " << table.subsets_scanned << " subsets)\n";
        for (const auto& row : table.rows)
          for (std::size_t p = 0; p < row.reduced_betti.size(); ++p)
            if (row.reduced_betti[p] != 0)
              std::cout << mask_to_string(row.subset) << " p=" << p
                        << " rank=" << row.reduced_betti[p] << "\n";
      }
      return kExitOk;
    }

    if (*oracle_cmd) {
      auto k = load_complex(oracle_file, allow_isolated);
      bool all_pass = true;
      for (const auto& field : fields) {
        HochsterOptions ho;
        ho.max_vertices = max_vertices;
        ho.threads = parallel;
        auto table = hochster_table(k, field, ho);
        std::vector<int> predicted, computed;
        if (oracle_kind == "rzk") {
          predicted = table.rzk_betti_predicted();
          computed = rzk_betti_oracle(k, field).betti;
        } else if (oracle_kind == "zk") {
          predicted = table.zk_betti();
          computed = zk_betti_oracle(k, field).betti;
        } else {
          fail(Errc::unknown_generator, "oracle kind must be rzk or zk, got '" + oracle_kind + "'");
        }
        auto show = [](const std::vector<int>& b) {
          std::string s = "(";
          for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
          return s + ")";
        };
        bool same = predicted == computed;
        std::cout << oracle_kind << " over " << field.name() << ": predicted "
                  << show(predicted) << " computed " << show(computed) << " "
                  << (same ? "PASS" : "FAIL") << "\n";
        all_pass = all_pass && same;
      }
      return all_pass ? kExitOk : kExitNegative;
    }

    if (*fm_cmd) {
      auto k = load_complex(fm_file, allow_isolated);
      auto validation = validate_manifold(k, fields);
      FMOptions fo;
      fo.fields = fields;
      auto result = build_fm(k, validation, fo);
      std::cout << "F(M): filled " << result.filled.size() << " minimal non-faces, |S(M)| = "
                << result.sm.size() << "\n";
      for (Mask s : result.sm) std::cout << "  S(M) member " << mask_to_string(s) << "\n";
      bool all = true;
      for (const auto& check : result.checks) {
        std::cout << (check.pass ? "pass" : "FAIL") << ": " << check.name
                  << (check.pass ? "" : " (" + check.witness + ")") << "\n";
        all = all && check.pass;
      }
      return all ? kExitOk : kExitNegative;
    }

    if (*gen_cmd) {
      SimplicialComplex k;
      if (gen_name == "boundary-simplex") {
        if (gen_args.size() != 1) fail(Errc::parse_error, "usage: gen boundary-simplex <n>");
        k = boundary_simplex(std::stoi(gen_args[0]));
      } else if (gen_name == "cycle") {
        if (gen_args.size() != 1) fail(Errc::parse_error, "usage: gen cycle <n>");
        k = cycle(std::stoi(gen_args[0]));
      } else if (gen_name == "stacked-sphere") {
        if (gen_args.size() != 2) fail(Errc::parse_error, "usage: gen stacked-sphere <d> <k>");
        k = stacked_sphere(std::stoi(gen_args[0]), std::stoi(gen_args[1]));
      } else if (gen_name == "join") {
        if (gen_args.size() != 2) fail(Errc::parse_error, "usage: gen join <file1> <file2>");
        k = join(load_complex(gen_args[0], allow_isolated),
                 load_complex(gen_args[1], allow_isolated));
      } else if (gen_name == "connected-sum") {
        if (gen_args.size() != 4 || gen_match.empty())
          fail(Errc::parse_error,
               "usage: gen connected-sum <file1> <facet1> <file2> <facet2> --match a,b,c");
        auto k1 = load_complex(gen_args[0], allow_isolated);
        auto k2 = load_complex(gen_args[2], allow_isolated);
        k = connected_sum(k1, from_vertices(parse_vertex_list(gen_args[1])), k2,
                          from_vertices(parse_vertex_list(gen_args[3])),
                          parse_vertex_list(gen_match));
      } else {
        fail(Errc::unknown_generator, "unknown generator '" + gen_name + "'");
      }
      write_output(to_facet_text(k), out_path);
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
