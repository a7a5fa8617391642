#pragma once

#include <string>
#include <vector>

#include "mulab/complex.hpp"
#include "mulab/pair.hpp"

namespace testutil {

inline mulab::SimplicialComplex cx(const std::vector<std::vector<std::string>>& facets) {
  return mulab::SimplicialComplex::build(facets);
}

inline mulab::RelativePair pr(const std::vector<std::vector<std::string>>& delta,
                              const std::vector<std::vector<std::string>>& gamma = {}) {
  mulab::SimplicialComplex d = cx(delta);
  if (gamma.empty()) return mulab::RelativePair(std::move(d));
  return mulab::RelativePair(std::move(d), cx(gamma));
}

// all faces of the pair by brute-force subset enumeration of the facets
inline std::vector<mulab::Face> brute_faces(const std::vector<mulab::Face>& facets) {
  std::vector<mulab::Face> out;
  std::vector<mulab::Face> seen;
  for (const auto& f : facets) {
    const std::size_t m = f.size();
    for (std::size_t s = 0; s < (std::size_t{1} << m); ++s) {
      mulab::Face g;
      for (std::size_t i = 0; i < m; ++i)
        if (s & (std::size_t{1} << i)) g.push_back(f[i]);
      out.push_back(g);
    }
  }
  std::sort(out.begin(), out.end(), mulab::face_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace testutil
