#include "mulab/isomorphism.hpp"

#include <algorithm>
#include <numeric>

#include "mulab/util.hpp"

namespace mulab {

std::vector<Face> canonical_form(const SimplicialComplex& x, int max_vertices) {
  const int n = x.vertex_count();
  if (n > max_vertices)
    throw ResourceError("canonical form capped at " + std::to_string(max_vertices) +
                        " vertices");
  std::vector<VertexId> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Face> best;
  bool first = true;
  do {
    std::vector<Face> relabeled;
    relabeled.reserve(x.facets().size());
    for (const auto& f : x.facets()) {
      Face g;
      g.reserve(f.size());
      for (VertexId v : f) g.push_back(perm[static_cast<std::size_t>(v)]);
      std::sort(g.begin(), g.end());
      relabeled.push_back(std::move(g));
    }
    std::sort(relabeled.begin(), relabeled.end(), face_less);
    if (first || relabeled < best) {
      best = std::move(relabeled);
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool is_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b, int max_vertices) {
  if (a.vertex_count() != b.vertex_count()) return false;
  if (a.facets().size() != b.facets().size()) return false;
  return canonical_form(a, max_vertices) == canonical_form(b, max_vertices);
}

}  // namespace mulab
