#pragma once

#include <stdexcept>
#include <string>

namespace golodtight {

enum class Errc {
  empty_input,
  label_out_of_range,
  missing_vertex,
  empty_subset,
  dimension_mismatch,
  overlap_too_large,
  too_many_vertices,
  not_disjoint,
  not_connected,
  not_a_chain_map,
  not_pseudomanifold,
  link_not_stacked,
  characterization_mismatch,
  prerequisite_failed,
  dimension_too_low,
  parse_error,
  budget_exceeded,
  unknown_generator,
  internal,
};

const char* errc_name(Errc c);

/// All library failures are reported through this exception; `code()` is the
/// stable machine-readable part, `what()` carries the witness text.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace golodtight
