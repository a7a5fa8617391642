#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mulab/face.hpp"
#include "mulab/field.hpp"
#include "mulab/pair.hpp"

namespace mulab {

struct SparseMatrix {
  int rows = 0, cols = 0;
  // col[j] = (row, coefficient) entries, rows strictly increasing
  std::vector<std::vector<std::pair<int, int>>> col;
};

struct HomologyOptions {
  std::int64_t face_budget = 1 << 22;
  // Heuristic rational rank via two large primes; results are marked
  // "modular" and are not exact certificates. Off by default.
  bool rational_fast_path = false;
};

struct BettiVector {
  FieldSpec field;
  int top_dim = -2;  // dimension of the pair; -2 when it has no faces
  // reduced[i+1] = b~_i for i = -1..top_dim
  std::vector<std::int64_t> reduced;
  // unreduced[i] = b_i for i = 0..top_dim
  std::vector<std::int64_t> unreduced;
  // "" for F_p; "bareiss", "bareiss-mpz" or "modular" over the rationals
  std::string rational_path;

  std::int64_t reduced_at(int i) const;    // 0 outside the stored range
  std::int64_t unreduced_at(int i) const;  // 0 outside the stored range
};

// Augmented relative chain complex of (Δ,Γ): basis[k] lists the (k-1)-faces
// of Δ∖Γ, and boundary[k] maps level k to level k-1 (faces missing from the
// lower level lie in Γ and are dropped by the quotient). ∂∘∂ = 0 is checked
// at construction.
struct ChainComplex {
  int top_dim = -2;
  std::vector<std::vector<Face>> basis;
  std::vector<SparseMatrix> boundary;  // boundary[0] is the 0x|basis[0]| map
};

ChainComplex boundary_matrices(const PairFacets& p, std::int64_t face_budget = 1 << 22);

BettiVector reduced_betti(const PairFacets& p, FieldSpec k, const HomologyOptions& opt = {});
BettiVector reduced_betti(const RelativePair& p, FieldSpec k, const HomologyOptions& opt = {});
BettiVector reduced_betti(const SimplicialComplex& x, FieldSpec k,
                          const HomologyOptions& opt = {});

// Exact matrix rank over the field; for the rationals `path` reports which
// pipeline produced the answer.
int matrix_rank(const SparseMatrix& m, FieldSpec k, const HomologyOptions& opt = {},
                std::string* path = nullptr);
int rank_mod_p(const SparseMatrix& m, std::uint32_t p);
int rank_rational(const SparseMatrix& m, std::string* path = nullptr);

}  // namespace mulab
