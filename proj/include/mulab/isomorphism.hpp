#pragma once

#include "mulab/complex.hpp"

namespace mulab {

// Canonical facet list under vertex relabeling, by brute force over all
// permutations; only for small complexes (vertex count capped).
std::vector<Face> canonical_form(const SimplicialComplex& x, int max_vertices = 8);

bool is_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b,
                   int max_vertices = 8);

}  // namespace mulab
