#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mulab/complex.hpp"
#include "mulab/field.hpp"
#include "mulab/homology.hpp"
#include "mulab/hochster.hpp"
#include "mulab/mu.hpp"
#include "mulab/pair.hpp"

namespace mulab {

// One nonempty face of a simplicial poset.
struct PosetFace {
  std::string ext_id;       // external identifier (unique)
  int rank = 0;             // number of vertices, = dim + 1
  std::vector<int> covers;  // indices of the faces covered (rank-1 lower covers)
};

// A finite poset with a unique minimum (the empty face, kept implicit) in
// which every lower interval [∅, F] is Boolean. Faces of rank 1 are the
// vertices; distinct faces may share a vertex set (e.g. parallel edges).
class SimplicialPoset {
 public:
  // Validates the Boolean-interval property; throws InputError otherwise.
  static SimplicialPoset from_faces(std::vector<PosetFace> faces);

  int size() const { return static_cast<int>(faces_.size()); }  // nonempty faces
  int dim() const;  // -1 when only the minimum exists
  const PosetFace& face(int i) const { return faces_[static_cast<std::size_t>(i)]; }
  int face_index(const std::string& ext_id) const;  // -1 if absent

  int vertex_count() const { return static_cast<int>(vertex_faces_.size()); }
  // face index of vertex number v (rank-1 faces in input order)
  int vertex_face(int v) const { return vertex_faces_[static_cast<std::size_t>(v)]; }
  // vertex numbers of face i, sorted
  const Face& vertex_set(int i) const { return vsets_[static_cast<std::size_t>(i)]; }
  bool leq(int i, int j) const { return leq_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

  // counts per rank: result[k] = number of rank-k faces (k = 0 counts ∅)
  std::vector<std::int64_t> rank_counts() const;

 private:
  std::vector<PosetFace> faces_;
  std::vector<int> vertex_faces_;
  std::vector<Face> vsets_;
  std::vector<std::vector<bool>> leq_;
};

// A relative pair of posets: gamma is a lower ideal of delta. A nonempty
// ideal always contains the minimum; `gamma_has_min` distinguishes the void
// ideal (no faces at all) from the ideal {∅}.
struct PosetPair {
  SimplicialPoset delta;
  std::vector<bool> gamma;  // per face index
  bool gamma_has_min = false;

  static PosetPair whole(SimplicialPoset p);  // gamma void
  static PosetPair with_ideal(SimplicialPoset p, const std::vector<int>& gamma_faces);
  int dim() const;  // max rank-1 over Δ∖Γ; -2 when empty
};

// Link of vertex number v: the faces above its rank-1 face, re-rooted.
PosetPair poset_link(const PosetPair& p, int v);
// Link of an arbitrary face (by face index): faces above it, re-rooted.
PosetPair poset_face_link(const PosetPair& p, int face_index);
// Restriction to a set of vertex numbers (downward closed automatically).
PosetPair poset_restrict(const PosetPair& p, const std::vector<int>& verts);

// Barycentric subdivision: the order complex of Δ∖{∅}, one complex vertex
// per poset face (labels are the external ids, vertex id = face index).
SimplicialComplex barycentric_subdivision(const SimplicialPoset& p);
// Facets of sd(Γ) inside sd(Δ)'s id space ({} when Γ void, {{}} when Γ={∅}).
std::vector<Face> sd_gamma_facets(const PosetPair& p);
PairFacets sd_pair(const PosetPair& p);

// Relative homology of the poset pair, computed through sd.
BettiVector poset_betti(const PosetPair& p, FieldSpec k, const HomologyOptions& opt = {});

FHVectors poset_f_h(const PosetPair& p, std::optional<int> d = std::nullopt);

// μ^ς for an ordering of the vertex numbers; links/restrictions are poset
// operations, homology goes through sd of the link pairs.
MuVector poset_mu_ordering(const PosetPair& p, const Ordering& s, FieldSpec k,
                           const MuOptions& opt = {});
MuVector poset_mu_exact(const PosetPair& p, FieldSpec k, const MuOptions& opt = {});
MuVector poset_mu_enumerated(const PosetPair& p, FieldSpec k, const MuOptions& opt = {});
SigmaVector poset_sigma_tilde(const PosetPair& p, FieldSpec k, const MuOptions& opt = {});

// The induced ordering on sd(Δ)'s vertices: after each vertex v_k of ς, the
// barycenters of the higher faces of Δ|{v_1..v_k} containing v_k enter first
// (by increasing rank, ties by face index), followed by v_k itself.
Ordering sd_ordering(const SimplicialPoset& p, const Ordering& s);
// Same block structure with seeded random tie-breaking inside equal ranks.
Ordering sd_ordering_sampled(const SimplicialPoset& p, const Ordering& s, std::uint64_t seed);

// Face poset of a simplicial complex.
SimplicialPoset face_poset(const SimplicialComplex& x);

// Two vertices joined by three parallel edges: the smallest poset that is
// not a simplicial complex.
SimplicialPoset parallel_edges(int count = 3);

// Seeded generator: face poset of a random complex with some faces doubled.
SimplicialPoset random_poset(int n, int max_dim, std::uint64_t seed);

}  // namespace mulab
