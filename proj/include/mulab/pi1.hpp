#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mulab/complex.hpp"
#include "mulab/field.hpp"

namespace mulab {

// Finite group presentation; generator i appears in relators as ±(i+1).
struct GroupPresentation {
  std::vector<std::string> generator_names;
  std::vector<std::vector<int>> relators;
  int generators() const { return static_cast<int>(generator_names.size()); }
};

// Edge-path presentation of the fundamental group of a connected complex:
// one generator per non-tree edge of a BFS spanning tree, one relator per
// triangle. Throws InputError when the complex is not connected.
GroupPresentation edge_path_presentation(const SimplicialComplex& x);

struct SimplifyResult {
  GroupPresentation pres;
  std::int64_t moves = 0;
  bool exhausted = false;  // move budget ran out before stabilizing
};

// Deterministic Tietze simplification: free/cyclic reduction, duplicate
// removal, elimination of generators with a length-1 or single-occurrence
// relator, and shortening by overlapping relator substitution.
SimplifyResult tietze_simplify(const GroupPresentation& g, std::int64_t move_budget = 10000);

// Σ of exponents per (relator, generator); rows follow relators.
std::vector<std::vector<std::int64_t>> exponent_matrix(const GroupPresentation& g);
// dim over F_p of the abelianization tensored with F_p: #generators - rank_p
// of the exponent matrix. Invariant under Tietze moves.
int abelianization_corank(const GroupPresentation& g, std::uint32_t p);

struct MBracket {
  std::int64_t lower = 0;            // max dim H_1 over the probed fields
  std::int64_t upper = 0;            // generators surviving simplification
  bool exact = false;                // lower == upper and budget not exhausted
  bool budget_exhausted = false;
  std::map<std::string, std::int64_t> h1_by_field;
  std::int64_t moves = 0;
};

// Bracket for the minimal number of generators of π₁; probes H₁ over the
// rationals and F_p for the given primes.
MBracket m_bracket(const SimplicialComplex& x, const std::vector<std::uint32_t>& primes = {2, 3,
                                                                                           5},
                   std::int64_t move_budget = 10000);

}  // namespace mulab
