#pragma once

#include <string>
#include <vector>

#include "mulab/field.hpp"
#include "mulab/homology.hpp"
#include "mulab/pair.hpp"

namespace mulab {

struct RecognizerWitness {
  std::string clause;  // which requirement failed (or was vacuous)
  Face face;           // offending face, when one exists
  std::string detail;
};

struct RecognizerVerdict {
  bool holds = true;
  std::vector<RecognizerWitness> witnesses;  // failures
  std::vector<std::string> notes;            // vacuous cases, skips
};

struct RecognizerOptions {
  bool all_witnesses = false;  // keep scanning after the first failure
  HomologyOptions hom;
  std::int64_t face_budget = 1 << 22;
};

// Every facet of Δ outside Γ has the dimension of the pair.
RecognizerVerdict is_pure(const RelativePair& p);
RecognizerVerdict is_pure(const SimplicialComplex& x);

// Pure, connected, every (d-1)-face in exactly two facets, and links of all
// faces of dimension <= d-2 (including ∅) connected.
RecognizerVerdict is_normal_pseudomanifold(const SimplicialComplex& x,
                                           const RecognizerOptions& opt = {});

// Homological depth condition: for every F ∈ Δ (including ∅),
// H~_i(lk_Δ F, lk_Γ F; K) = 0 for -1 <= i < min(r-1, dim of the link pair).
// Link pairs with no faces are skipped and noted.
RecognizerVerdict serre_condition(const RelativePair& p, int r, FieldSpec k,
                                  const RecognizerOptions& opt = {});

// Pure + every vertex link pair satisfies (S_d), d the pair dimension.
RecognizerVerdict is_buchsbaum(const RelativePair& p, FieldSpec k,
                               const RecognizerOptions& opt = {});

// Per-vertex (S_r) check of link pairs, as required by the h-vector bounds.
RecognizerVerdict vertex_links_serre(const RelativePair& p, int r, FieldSpec k,
                                     const RecognizerOptions& opt = {});

// Combinatorial characterization of (S_2) for complexes: pure and links of
// faces of dimension <= dim-2 are connected. Kept separate from
// serre_condition so the two can be cross-checked.
RecognizerVerdict serre2_combinatorial(const SimplicialComplex& x,
                                       const RecognizerOptions& opt = {});

}  // namespace mulab
