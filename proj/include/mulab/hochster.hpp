#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "mulab/field.hpp"
#include "mulab/homology.hpp"
#include "mulab/pair.hpp"
#include "mulab/util.hpp"

namespace mulab {

struct MuOptions {
  // 2^n subset sums refuse to run past this many vertices
  int subset_budget = 22;
  // full-permutation averaging refuses past this many vertices
  int enumerate_budget = 8;
  HomologyOptions hom;
  // re-derive the first two entries over F_2 and Q and assert agreement
  bool debug_field_checks = false;
};

// Multigraded Betti numbers aggregated by total degree: entry (a, k) holds
// β_{a,k} = Σ_{|W|=k} dim H~_{k-a-1}(Δ_W, Γ_W; K), W ranging over subsets of
// the pair's vertex set.
struct GradedBettiTable {
  int n = 0;
  FieldSpec field;
  std::map<std::pair<int, int>, std::int64_t> beta;
  std::int64_t at(int a, int k) const;
};

// sigma[i] = σ~_{i-1}, i = 0..dim+1: the C(n,k)-weighted average of graded
// Betti numbers, Σ_k β_{k-i,k} / ((n+1)·C(n,k)).
struct SigmaVector {
  FieldSpec field;
  int n = 0;
  std::vector<Rational> sigma;
  Rational at_index(int i_minus_1) const;  // σ~_{i_minus_1}, 0 outside range
};

GradedBettiTable graded_betti(const RelativePair& p, FieldSpec k, const MuOptions& opt = {});
// Core over an explicit vertex universe (sorted); used for link pairs whose
// supports are smaller than the ambient complex.
GradedBettiTable graded_betti_over(const PairFacets& p, const Face& universe, FieldSpec k,
                                   const MuOptions& opt = {});

SigmaVector sigma_tilde(const RelativePair& p, FieldSpec k, const MuOptions& opt = {});
// Uses the support of delta as the universe (σ~ is unchanged by vertices
// that lie in no face).
SigmaVector sigma_tilde(const PairFacets& p, FieldSpec k, const MuOptions& opt = {});
SigmaVector sigma_from_table(const GradedBettiTable& t, int pair_dim);

}  // namespace mulab
