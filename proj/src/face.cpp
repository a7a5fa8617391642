#include "mulab/face.hpp"

#include <algorithm>

#include "mulab/util.hpp"

namespace mulab {

Face make_face(std::vector<VertexId> verts) {
  std::sort(verts.begin(), verts.end());
  if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
    throw InputError("face has a repeated vertex");
  return verts;
}

bool face_subset(const Face& a, const Face& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool face_contains_vertex(const Face& f, VertexId v) {
  return std::binary_search(f.begin(), f.end(), v);
}

Face face_union(const Face& a, const Face& b) {
  Face out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Face face_intersect(const Face& a, const Face& b) {
  Face out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Face face_minus_vertex(const Face& f, VertexId v) {
  Face out;
  out.reserve(f.size());
  for (VertexId x : f)
    if (x != v) out.push_back(x);
  return out;
}

Face face_with_vertex(const Face& f, VertexId v) {
  Face out;
  out.reserve(f.size() + 1);
  auto it = std::lower_bound(f.begin(), f.end(), v);
  out.insert(out.end(), f.begin(), it);
  out.push_back(v);
  out.insert(out.end(), it, f.end());
  return out;
}

std::uint64_t face_mask(const Face& f) {
  std::uint64_t m = 0;
  for (VertexId v : f) {
    if (v < 0 || v >= 64) throw ResourceError("face_mask: vertex id out of [0,64)");
    m |= 1ULL << v;
  }
  return m;
}

Face face_from_mask(std::uint64_t m) {
  Face f;
  while (m) {
    int v = __builtin_ctzll(m);
    f.push_back(v);
    m &= m - 1;
  }
  return f;
}

std::size_t FaceHash::operator()(const Face& f) const {
  std::size_t h = 0x9e3779b97f4a7c15ULL ^ f.size();
  for (VertexId v : f) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

bool face_less(const Face& a, const Face& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::vector<Face> maximal_faces(std::vector<Face> faces) {
  std::sort(faces.begin(), faces.end(), face_less);
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<Face> out;
  out.reserve(faces.size());
  // larger faces sit later in the sorted order, so scan from the back
  for (std::size_t i = 0; i < faces.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = faces.size(); j-- > i + 1;) {
      if (faces[j].size() <= faces[i].size()) break;
      if (face_subset(faces[i], faces[j])) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(faces[i]);
  }
  return out;
}

}  // namespace mulab
