#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mulab/face.hpp"

namespace mulab {

// A finite simplicial complex stored by its facets (inclusion-maximal faces).
// Vertex ids are dense 0..n-1; each id carries a free-form text label.
//
// Two degenerate complexes are distinguished:
//   * the void complex: no faces at all (no facets);
//   * the empty complex {∅}: exactly one facet, the empty face.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;  // void

  static SimplicialComplex void_complex() { return {}; }
  static SimplicialComplex empty_complex();
  // Builds from facet lists of labels. Distinct labels become vertices
  // (ids in order of first appearance); non-maximal entries are pruned.
  static SimplicialComplex build(const std::vector<std::vector<std::string>>& facet_labels);
  // Builds from faces over ids 0..labels.size()-1. Entries may be
  // non-maximal or duplicated; they are pruned. Every id in [0,n) must
  // appear in some facet unless allow_unused_labels.
  static SimplicialComplex from_faces(std::vector<Face> facets, std::vector<std::string> labels,
                                      bool allow_unused_labels = false);

  bool is_void() const { return facets_.empty(); }
  bool is_empty_complex() const { return facets_.size() == 1 && facets_[0].empty(); }
  // -2 for void, -1 for {∅}, else the max facet dimension.
  int dim() const;
  int vertex_count() const { return static_cast<int>(labels_.size()); }
  const std::vector<Face>& facets() const { return facets_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(VertexId v) const;
  // -1 when no vertex has this label.
  VertexId id_of(const std::string& label) const;

  bool contains(const Face& f) const;
  // Faces grouped by dimension: result[d+1] = faces of dimension d
  // (the empty face is included for any nonvoid complex). Throws
  // ResourceError if the total face count would exceed the budget.
  std::vector<std::vector<Face>> faces_by_dim(std::int64_t budget = 1 << 22) const;
  std::int64_t face_count(std::int64_t budget = 1 << 22) const;

  // Equality as labeled complexes: same facet set after mapping ids to labels.
  bool operator==(const SimplicialComplex& o) const;

 private:
  std::vector<std::string> labels_;
  std::vector<Face> facets_;  // canonical: maximal, sorted by face_less
};

// Facet-level helpers that keep the ambient id space (no relabeling).
namespace facets_ops {
bool member(const std::vector<Face>& facets, const Face& f);
// Facets of lk(f, X) given the facets of X; void (empty list) when f ∉ X.
std::vector<Face> link_facets(const std::vector<Face>& facets, const Face& f);
// Facets of the restriction X_W; W must be sorted.
std::vector<Face> restrict_facets(const std::vector<Face>& facets, const Face& w);
// Vertices appearing in the facet list, sorted.
Face support(const std::vector<Face>& facets);
}  // namespace facets_ops

// Subcomplex operations; results are re-labeled complexes whose vertex set is
// exactly the support of the result (labels preserved from the parent).
SimplicialComplex link(const SimplicialComplex& x, const Face& f);
SimplicialComplex induced(const SimplicialComplex& x, std::vector<VertexId> w);
// Cone with a fresh apex label; apex must not collide with existing labels.
// cone over void = the single point {apex}; cone over {∅} = {apex} as well
// (the apex closes the empty face into a vertex).
SimplicialComplex cone(const std::string& apex_label, const SimplicialComplex& x);
// Vertex sets of connected components (singleton vertices included); empty
// for void and {∅}.
std::vector<std::vector<VertexId>> connected_components(const SimplicialComplex& x);
// Disjoint union; label collisions are resolved by suffixing only the
// colliding labels from the right operand.
SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b);

}  // namespace mulab
