#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mulab/hochster.hpp"
#include "mulab/pair.hpp"
#include "mulab/util.hpp"

namespace mulab {

// A linear order on the vertices of a complex: perm[k] is the (k+1)-st vertex.
struct Ordering {
  std::vector<VertexId> perm;
  static Ordering identity(int n);
  void validate(int n) const;  // throws InputError unless a permutation of 0..n-1
};

enum class MuMethod { ordering, exact, enumerated, sampled };

struct MuProvenance {
  MuMethod method = MuMethod::exact;
  std::optional<Ordering> ordering;  // for method == ordering
  std::int64_t samples = 0;          // for method == sampled
  std::uint64_t seed = 0;            // for method == sampled
  std::vector<double> stderrs;       // per coordinate, for method == sampled
};

struct MuVector {
  FieldSpec field;
  std::vector<Rational> mu;  // mu[i], i = 0..dim of the pair
  MuProvenance prov;
};

// μ^ς: step-k contribution is b~_{i-1} of the restricted vertex link pair
// (lk(v_k, Δ|first k), lk(v_k, Γ|first k)).
MuVector mu_ordering(const RelativePair& p, const Ordering& s, FieldSpec k,
                     const MuOptions& opt = {});
// Average over all orderings via the link-wise σ~ identity (no permutation
// enumeration).
MuVector mu_exact(const RelativePair& p, FieldSpec k, const MuOptions& opt = {});
// Average over all n! orderings by literal enumeration (independent oracle;
// n is capped by opt.enumerate_budget).
MuVector mu_enumerated(const RelativePair& p, FieldSpec k, const MuOptions& opt = {});
// Monte-Carlo average over `samples` random orderings drawn from (seed, i).
MuVector mu_sampled(const RelativePair& p, FieldSpec k, std::int64_t samples,
                    std::uint64_t seed, const MuOptions& opt = {});

// defect[i] = Σ_{j<=i} (-1)^{i-j} (μ_j - b_j), using unreduced Betti numbers
// of the pair; nonnegative for μ coming from any ordering or average.
std::vector<Rational> morse_defect(const RelativePair& p, const MuVector& mu, FieldSpec k,
                                   const MuOptions& opt = {});

}  // namespace mulab
