#pragma once

#include <cstdint>
#include <vector>

namespace mulab {

using VertexId = int;

// A face is a strictly increasing vertex list; {} is the empty face.
using Face = std::vector<VertexId>;

// Sorts and validates; throws InputError on repeated vertices.
Face make_face(std::vector<VertexId> verts);

inline int face_dim(const Face& f) { return static_cast<int>(f.size()) - 1; }

bool face_subset(const Face& a, const Face& b);  // a ⊆ b
bool face_contains_vertex(const Face& f, VertexId v);
Face face_union(const Face& a, const Face& b);
Face face_intersect(const Face& a, const Face& b);
Face face_minus_vertex(const Face& f, VertexId v);
Face face_with_vertex(const Face& f, VertexId v);

// Bitmask form; requires every vertex id in [0, 64).
std::uint64_t face_mask(const Face& f);
Face face_from_mask(std::uint64_t m);

struct FaceHash {
  std::size_t operator()(const Face& f) const;
};

// Removes duplicates and faces dominated by another; result sorted
// (by dimension, then lexicographically).
std::vector<Face> maximal_faces(std::vector<Face> faces);

// Sort order used for chain-complex bases: dimension, then lexicographic.
bool face_less(const Face& a, const Face& b);

}  // namespace mulab
