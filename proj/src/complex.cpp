#include "mulab/complex.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "mulab/util.hpp"

namespace mulab {

SimplicialComplex SimplicialComplex::empty_complex() {
  SimplicialComplex c;
  c.facets_.push_back({});
  return c;
}

SimplicialComplex SimplicialComplex::build(
    const std::vector<std::vector<std::string>>& facet_labels) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, VertexId> id;
  std::vector<Face> facets;
  facets.reserve(facet_labels.size());
  for (const auto& fl : facet_labels) {
    std::vector<VertexId> verts;
    verts.reserve(fl.size());
    for (const auto& lab : fl) {
      if (lab.empty()) throw InputError("empty vertex label");
      auto [it, fresh] = id.try_emplace(lab, static_cast<VertexId>(labels.size()));
      if (fresh) labels.push_back(lab);
      verts.push_back(it->second);
    }
    facets.push_back(make_face(std::move(verts)));
  }
  return from_faces(std::move(facets), std::move(labels));
}

SimplicialComplex SimplicialComplex::from_faces(std::vector<Face> facets,
                                                std::vector<std::string> labels,
                                                bool allow_unused_labels) {
  const int n = static_cast<int>(labels.size());
  std::vector<bool> used(n, false);
  for (const auto& f : facets) {
    if (!std::is_sorted(f.begin(), f.end()) ||
        std::adjacent_find(f.begin(), f.end()) != f.end())
      throw InputError("facet is not a strictly increasing vertex list");
    for (VertexId v : f) {
      if (v < 0 || v >= n) throw InputError("facet vertex id out of range");
      used[v] = true;
    }
  }
  if (!allow_unused_labels)
    for (int v = 0; v < n; ++v)
      if (!used[v])
        throw InputError("vertex '" + labels[v] + "' appears in no facet");
  SimplicialComplex c;
  c.labels_ = std::move(labels);
  c.facets_ = maximal_faces(std::move(facets));
  return c;
}

int SimplicialComplex::dim() const {
  if (is_void()) return -2;
  return face_dim(facets_.back());  // facets sorted by size
}

const std::string& SimplicialComplex::label(VertexId v) const {
  if (v < 0 || v >= vertex_count()) throw InputError("vertex id out of range");
  return labels_[v];
}

VertexId SimplicialComplex::id_of(const std::string& label) const {
  for (VertexId v = 0; v < vertex_count(); ++v)
    if (labels_[v] == label) return v;
  return -1;
}

bool SimplicialComplex::contains(const Face& f) const {
  return facets_ops::member(facets_, f);
}

std::vector<std::vector<Face>> SimplicialComplex::faces_by_dim(std::int64_t budget) const {
  std::vector<std::vector<Face>> out;
  if (is_void()) return out;
  std::set<Face> seen;
  // enumerate all subsets of each facet
  for (const auto& fac : facets_) {
    const std::size_t k = fac.size();
    if (k > 62) throw ResourceError("facet too large for subset enumeration");
    for (std::uint64_t m = 0;; ++m) {
      if (m >= (1ULL << k)) break;
      Face f;
      for (std::size_t i = 0; i < k; ++i)
        if (m & (1ULL << i)) f.push_back(fac[i]);
      seen.insert(std::move(f));
      if (static_cast<std::int64_t>(seen.size()) > budget)
        throw ResourceError("face enumeration exceeds budget");
    }
  }
  out.resize(static_cast<std::size_t>(dim() + 2));
  for (const auto& f : seen) out[f.size()].push_back(f);
  for (auto& level : out) std::sort(level.begin(), level.end(), face_less);
  return out;
}

std::int64_t SimplicialComplex::face_count(std::int64_t budget) const {
  if (is_void()) return 0;
  auto levels = faces_by_dim(budget);
  std::int64_t total = 0;
  for (const auto& l : levels) total += static_cast<std::int64_t>(l.size());
  return total;
}

bool SimplicialComplex::operator==(const SimplicialComplex& o) const {
  if (facets_.size() != o.facets_.size()) return false;
  auto key = [](const SimplicialComplex& c) {
    std::vector<std::vector<std::string>> k;
    k.reserve(c.facets_.size());
    for (const auto& f : c.facets_) {
      std::vector<std::string> fl;
      fl.reserve(f.size());
      for (VertexId v : f) fl.push_back(c.labels_[v]);
      std::sort(fl.begin(), fl.end());
      k.push_back(std::move(fl));
    }
    std::sort(k.begin(), k.end());
    return k;
  };
  return key(*this) == key(o);
}

namespace facets_ops {

bool member(const std::vector<Face>& facets, const Face& f) {
  for (const auto& fac : facets)
    if (face_subset(f, fac)) return true;
  return false;
}

std::vector<Face> link_facets(const std::vector<Face>& facets, const Face& f) {
  std::vector<Face> out;
  for (const auto& fac : facets) {
    if (!face_subset(f, fac)) continue;
    Face rest;
    rest.reserve(fac.size() - f.size());
    std::set_difference(fac.begin(), fac.end(), f.begin(), f.end(),
                        std::back_inserter(rest));
    out.push_back(std::move(rest));
  }
  // facets of X containing f give exactly the facets of the link, but the
  // same residual can repeat
  std::sort(out.begin(), out.end(), face_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Face> restrict_facets(const std::vector<Face>& facets, const Face& w) {
  std::vector<Face> cand;
  cand.reserve(facets.size());
  for (const auto& fac : facets) cand.push_back(face_intersect(fac, w));
  return maximal_faces(std::move(cand));
}

Face support(const std::vector<Face>& facets) {
  std::set<VertexId> s;
  for (const auto& f : facets) s.insert(f.begin(), f.end());
  return Face(s.begin(), s.end());
}

}  // namespace facets_ops

namespace {
// Rebuild a complex from facets in the parent's id space, relabeling vertices
// to the dense range in parent-id order.
SimplicialComplex relabel(const std::vector<Face>& facets,
                          const std::vector<std::string>& parent_labels) {
  Face sup = facets_ops::support(facets);
  std::unordered_map<VertexId, VertexId> to_new;
  std::vector<std::string> labels;
  labels.reserve(sup.size());
  for (VertexId v : sup) {
    to_new[v] = static_cast<VertexId>(labels.size());
    labels.push_back(parent_labels[v]);
  }
  std::vector<Face> out;
  out.reserve(facets.size());
  for (const auto& f : facets) {
    Face g;
    g.reserve(f.size());
    for (VertexId v : f) g.push_back(to_new[v]);
    out.push_back(std::move(g));
  }
  return SimplicialComplex::from_faces(std::move(out), std::move(labels));
}
}  // namespace

SimplicialComplex link(const SimplicialComplex& x, const Face& f) {
  if (!x.contains(f)) return SimplicialComplex::void_complex();
  return relabel(facets_ops::link_facets(x.facets(), f), x.labels());
}

SimplicialComplex induced(const SimplicialComplex& x, std::vector<VertexId> w) {
  if (x.is_void()) return SimplicialComplex::void_complex();
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  for (VertexId v : w)
    if (v < 0 || v >= x.vertex_count()) throw InputError("restriction vertex out of range");
  return relabel(facets_ops::restrict_facets(x.facets(), w), x.labels());
}

SimplicialComplex cone(const std::string& apex_label, const SimplicialComplex& x) {
  if (apex_label.empty()) throw InputError("empty apex label");
  if (x.id_of(apex_label) >= 0)
    throw InputError("apex label '" + apex_label + "' already used");
  std::vector<std::string> labels = x.labels();
  VertexId apex = static_cast<VertexId>(labels.size());
  labels.push_back(apex_label);
  std::vector<Face> facets;
  if (x.is_void() || x.is_empty_complex()) {
    facets.push_back({apex});
  } else {
    for (const auto& f : x.facets()) facets.push_back(face_with_vertex(f, apex));
  }
  return SimplicialComplex::from_faces(std::move(facets), std::move(labels));
}

std::vector<std::vector<VertexId>> connected_components(const SimplicialComplex& x) {
  const int n = x.vertex_count();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& f : x.facets())
    for (std::size_t i = 1; i < f.size(); ++i) {
      int ra = find(f[0]), rb = find(f[i]);
      if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
  std::map<int, std::vector<VertexId>> comps;
  for (int v = 0; v < n; ++v) comps[find(v)].push_back(v);
  std::vector<std::vector<VertexId>> out;
  out.reserve(comps.size());
  for (auto& [root, verts] : comps) out.push_back(std::move(verts));
  return out;
}

SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b) {
  // {∅} ⊔ X has no meaning facet-wise beyond X ∪ {∅}; unions are taken at
  // the facet level, so {∅} contributes nothing new unless both are degenerate
  std::unordered_set<std::string> taken(a.labels().begin(), a.labels().end());
  std::vector<std::string> labels = a.labels();
  std::vector<VertexId> remap(b.vertex_count());
  for (VertexId v = 0; v < b.vertex_count(); ++v) {
    std::string lab = b.label(v);
    if (taken.count(lab)) {
      int suffix = 1;
      std::string fresh;
      do {
        fresh = lab + "_" + std::to_string(suffix++);
      } while (taken.count(fresh));
      lab = fresh;
    }
    taken.insert(lab);
    remap[v] = static_cast<VertexId>(labels.size());
    labels.push_back(lab);
  }
  std::vector<Face> facets = a.facets();
  for (const auto& f : b.facets()) {
    Face g;
    g.reserve(f.size());
    for (VertexId v : f) g.push_back(remap[v]);
    facets.push_back(make_face(std::move(g)));
  }
  return SimplicialComplex::from_faces(std::move(facets), std::move(labels), true);
}

}  // namespace mulab
