#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mulab/complex.hpp"
#include "mulab/face.hpp"

namespace mulab {

// Facet lists of a pair (X, Y), Y a subcomplex of X, over a shared id space.
// An empty delta list means X is void; an empty gamma list means Y is void.
struct PairFacets {
  std::vector<Face> delta;
  std::vector<Face> gamma;
};

// A relative pair (Δ, Γ): Γ is a subcomplex of Δ, stored in Δ's id space.
// Γ void corresponds to ordinary (non-relative) homology of Δ.
class RelativePair {
 public:
  explicit RelativePair(SimplicialComplex delta);
  RelativePair(SimplicialComplex delta, const SimplicialComplex& gamma);
  static RelativePair with_gamma_facets(SimplicialComplex delta, std::vector<Face> gamma_facets);

  const SimplicialComplex& delta() const { return delta_; }
  const std::vector<Face>& gamma_facets() const { return gamma_facets_; }
  SimplicialComplex gamma_complex() const;  // relabeled standalone copy
  bool gamma_void() const { return gamma_facets_.empty(); }

  bool in_gamma(const Face& f) const;
  // f ∈ Δ∖Γ
  bool in_pair(const Face& f) const;
  // max dimension over Δ∖Γ: -2 when no faces (Δ void), else >= -1.
  int dim() const;
  int vertex_count() const { return delta_.vertex_count(); }

  PairFacets facets() const { return {delta_.facets(), gamma_facets_}; }

 private:
  RelativePair() = default;
  SimplicialComplex delta_;
  std::vector<Face> gamma_facets_;
};

// Links and restrictions taken in both members, ambient ids preserved.
PairFacets link_pair(const PairFacets& p, const Face& f);
PairFacets restrict_pair(const PairFacets& p, const Face& w);
int pair_dim(const PairFacets& p);

// Faces of Δ∖Γ grouped by dimension: out[k] holds the faces of dimension k-1,
// so out[0] is {∅} exactly when Γ is void and Δ is not. Empty when Δ is void.
std::vector<std::vector<Face>> pair_faces_by_dim(const PairFacets& p,
                                                 std::int64_t budget = 1 << 22);

struct FHVectors {
  // f[j] = number of (j-1)-faces of the pair, j = 0..dim+1 (empty if no faces)
  std::vector<std::int64_t> f;
  // h[i], i = 0..d
  std::vector<std::int64_t> h;
  int d = 0;           // h-vector parameter
  bool void_pair = false;
  std::int64_t g2() const;  // h[2] - h[1]; requires d >= 2
};

// d defaults to dim+1; an explicit d must be >= dim+1 (faces above d-1 make
// the length-d h-vector meaningless). A void pair yields zero vectors and the
// void_pair flag.
FHVectors f_h_vectors(const PairFacets& p, std::optional<int> d = std::nullopt,
                      std::int64_t budget = 1 << 22);
FHVectors f_h_vectors(const RelativePair& p, std::optional<int> d = std::nullopt,
                      std::int64_t budget = 1 << 22);
FHVectors f_h_vectors(const SimplicialComplex& x, std::optional<int> d = std::nullopt,
                      std::int64_t budget = 1 << 22);

}  // namespace mulab
