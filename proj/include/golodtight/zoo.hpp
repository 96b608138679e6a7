#pragma once

#include "golodtight/simplicial_complex.hpp"

namespace golodtight::zoo {

/// The 6-vertex triangulation of the real projective plane (icosahedron
/// antipodal quotient): 10 facets, neighborly, vertex links are 5-cycles.
SimplicialComplex rp2_6();

/// The 7-vertex Moebius-Kuehnel torus: facets {i,i+1,i+3} and {i,i+2,i+3}
/// mod 7; neighborly with f = (7,21,14).
SimplicialComplex t7_torus();

}  // namespace golodtight::zoo
