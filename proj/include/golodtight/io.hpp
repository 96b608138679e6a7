#pragma once

#include <iosfwd>
#include <string>

#include "golodtight/simplicial_complex.hpp"

namespace golodtight {

/// Facet text format: first line `m <count>`, then one increasing vertex list
/// per line; `#` starts a comment.  The structured format is a JSON document
/// {"m": <int>, "facets": [[...], ...]}.  Writers are canonical (facets sorted
/// lex, single spaces), so save/load round-trips byte-stably.

SimplicialComplex read_complex(std::istream& in, bool allow_isolated = false);
SimplicialComplex load_complex(const std::string& path, bool allow_isolated = false);

std::string to_facet_text(const SimplicialComplex& k);
std::string to_structured_text(const SimplicialComplex& k);

void save_complex(const SimplicialComplex& k, const std::string& path, bool structured = false);

}  // namespace golodtight
