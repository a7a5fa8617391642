#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mulab/complex.hpp"
#include "mulab/pair.hpp"

namespace mulab {

// Bookkeeping carried along by the generators; fields are set only when the
// construction guarantees them.
struct Certificate {
  std::optional<std::int64_t> m;   // minimal handle/generator count
  std::optional<std::int64_t> b1;  // first Betti number (field-independent here)
  std::optional<std::int64_t> g2;
  std::vector<std::string> trace;  // human-readable construction log
};

struct CertifiedComplex {
  SimplicialComplex complex;
  Certificate cert;
};

// Boundary of the (d+1)-simplex: a d-sphere on d+2 vertices.
CertifiedComplex simplex_boundary(int d);

// Glue b to a along facets fa ⊆ a, fb ⊆ b via the matching (default: sorted
// order pairing), removing the glued facet from both sides.
CertifiedComplex connected_sum(const CertifiedComplex& a, const CertifiedComplex& b,
                               const Face& fa, const Face& fb,
                               const std::vector<std::pair<VertexId, VertexId>>& matching = {});

// Identify two disjoint facets f1, f2 of a (default matching: sorted order)
// and remove them. Rejects identifications that would double a face.
CertifiedComplex handle_addition(const CertifiedComplex& a, const Face& f1, const Face& f2,
                                 const std::vector<std::pair<VertexId, VertexId>>& matching = {});

// Start from the boundary of a (d+1)-simplex, stellarly subdivide `stackings`
// random facets, then perform `handles` admissible handle additions (growing
// by extra subdivisions when no admissible pair exists).
CertifiedComplex stacked_manifold(int d, int stackings, int handles, std::uint64_t seed);

// Boundary of the cyclic 4-polytope on n >= 6 vertices (Gale evenness).
CertifiedComplex cyclic_boundary(int n);

// 7-vertex triangulation of the torus.
CertifiedComplex csaszar_torus();
// 6-vertex triangulation of the real projective plane.
CertifiedComplex projective_plane_6();

// Seeded random generators used by the test corpus.
SimplicialComplex random_complex(int n, int max_dim, std::uint64_t seed);
RelativePair random_pair(int n, int max_dim, std::uint64_t seed);

}  // namespace mulab
