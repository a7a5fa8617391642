#include "mulab/constructors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <map>
#include <set>
#include <unordered_map>

#include "mulab/util.hpp"

namespace mulab {

namespace {

std::vector<std::string> vlabels(int n, const std::string& prefix = "v") {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

std::string face_str(const Face& f) {
  std::string s = "{";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(f[i]);
  }
  return s + "}";
}

std::vector<std::pair<VertexId, VertexId>> default_matching(const Face& fa, const Face& fb) {
  std::vector<std::pair<VertexId, VertexId>> m;
  m.reserve(fa.size());
  for (std::size_t i = 0; i < fa.size(); ++i) m.emplace_back(fa[i], fb[i]);
  return m;
}

void validate_matching(const Face& fa, const Face& fb,
                       const std::vector<std::pair<VertexId, VertexId>>& m) {
  if (fa.size() != fb.size()) throw InputError("glued facets have different sizes");
  if (m.size() != fa.size()) throw InputError("matching size differs from facet size");
  Face left, right;
  for (auto [a, b] : m) {
    left.push_back(a);
    right.push_back(b);
  }
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());
  if (left != fa || right != fb)
    throw InputError("matching is not a bijection between the glued facets");
}

// all subsets of `fac` as a sorted face list
std::vector<Face> all_subsets(const Face& fac) {
  std::vector<Face> out;
  const std::size_t k = fac.size();
  for (std::uint64_t m = 0; m < (1ULL << k); ++m) {
    Face f;
    for (std::size_t i = 0; i < k; ++i)
      if (m & (1ULL << i)) f.push_back(fac[i]);
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

CertifiedComplex simplex_boundary(int d) {
  if (d < 0) throw InputError("simplex boundary needs d >= 0");
  const int n = d + 2;
  std::vector<Face> facets;
  for (int skip = 0; skip < n; ++skip) {
    Face f;
    for (int v = 0; v < n; ++v)
      if (v != skip) f.push_back(v);
    facets.push_back(std::move(f));
  }
  CertifiedComplex out{SimplicialComplex::from_faces(std::move(facets), vlabels(n)), {}};
  out.cert.m = 0;
  out.cert.b1 = 0;
  if (d >= 2) out.cert.g2 = 0;
  out.cert.trace.push_back("simplex-boundary d=" + std::to_string(d));
  return out;
}

CertifiedComplex connected_sum(const CertifiedComplex& a, const CertifiedComplex& b,
                               const Face& fa, const Face& fb,
                               const std::vector<std::pair<VertexId, VertexId>>& matching) {
  const auto& A = a.complex;
  const auto& B = b.complex;
  if (std::find(A.facets().begin(), A.facets().end(), fa) == A.facets().end())
    throw InputError("fa is not a facet of the left complex");
  if (std::find(B.facets().begin(), B.facets().end(), fb) == B.facets().end())
    throw InputError("fb is not a facet of the right complex");
  auto m = matching.empty() ? default_matching(fa, fb) : matching;
  validate_matching(fa, fb, m);

  // map B's ids: matched ones to A's ids, the rest to fresh ids
  std::unordered_map<VertexId, VertexId> bmap;
  for (auto [av, bv] : m) bmap[bv] = av;
  std::vector<std::string> labels = A.labels();
  std::set<std::string> taken(labels.begin(), labels.end());
  for (VertexId v = 0; v < B.vertex_count(); ++v) {
    if (bmap.count(v)) continue;
    std::string lab = B.label(v);
    if (taken.count(lab)) {
      int suffix = 1;
      std::string fresh;
      do {
        fresh = lab + "_" + std::to_string(suffix++);
      } while (taken.count(fresh));
      lab = fresh;
    }
    taken.insert(lab);
    bmap[v] = static_cast<VertexId>(labels.size());
    labels.push_back(lab);
  }

  std::vector<Face> facets;
  std::set<Face> seen;
  for (const auto& f : A.facets()) {
    if (f == fa) continue;
    facets.push_back(f);
    seen.insert(f);
  }
  for (const auto& f : B.facets()) {
    if (f == fb) continue;
    Face g;
    g.reserve(f.size());
    for (VertexId v : f) g.push_back(bmap[v]);
    g = make_face(std::move(g));
    if (!seen.insert(g).second)
      throw InputError("connected sum would identify two facets: " + face_str(g));
    facets.push_back(std::move(g));
  }

  CertifiedComplex out{SimplicialComplex::from_faces(std::move(facets), std::move(labels)), {}};
  if (a.cert.m && b.cert.m) out.cert.m = *a.cert.m + *b.cert.m;
  if (a.cert.b1 && b.cert.b1) out.cert.b1 = *a.cert.b1 + *b.cert.b1;
  if (a.cert.g2 && b.cert.g2 && A.dim() == B.dim()) out.cert.g2 = *a.cert.g2 + *b.cert.g2;
  out.cert.trace = a.cert.trace;
  out.cert.trace.push_back("connected-sum along " + face_str(fa) + " ~ " + face_str(fb));
  for (const auto& t : b.cert.trace) out.cert.trace.push_back("  (right) " + t);
  return out;
}

CertifiedComplex handle_addition(const CertifiedComplex& a, const Face& f1, const Face& f2,
                                 const std::vector<std::pair<VertexId, VertexId>>& matching) {
  const auto& A = a.complex;
  if (std::find(A.facets().begin(), A.facets().end(), f1) == A.facets().end() ||
      std::find(A.facets().begin(), A.facets().end(), f2) == A.facets().end())
    throw InputError("handle addition needs two facets of the complex");
  if (!face_intersect(f1, f2).empty())
    throw InputError("handle facets must be vertex-disjoint");
  auto m = matching.empty() ? default_matching(f1, f2) : matching;
  validate_matching(f1, f2, m);

  std::unordered_map<VertexId, VertexId> q;  // f2 vertex -> f1 vertex
  for (auto [u, w] : m) q[w] = u;
  auto apply_q = [&](const Face& f) {
    Face g;
    g.reserve(f.size());
    for (VertexId v : f) {
      auto it = q.find(v);
      g.push_back(it == q.end() ? v : it->second);
    }
    std::sort(g.begin(), g.end());
    if (std::adjacent_find(g.begin(), g.end()) != g.end())
      throw InputError("handle addition collapses a face onto itself");
    return g;
  };

  // the quotient must be injective on all faces except the subsets of f2,
  // which are meant to merge with the matching subsets of f1; a doubled
  // face of any dimension forces a doubled (or collapsed) vertex or edge,
  // so checking the 1-skeleton is exact
  std::set<Face> f2_faces;
  for (auto& s : all_subsets(f2)) f2_faces.insert(std::move(s));
  std::set<Face> skeleton;
  for (const auto& fac : A.facets())
    for (std::size_t i = 0; i < fac.size(); ++i) {
      skeleton.insert(Face{fac[i]});
      for (std::size_t j = i + 1; j < fac.size(); ++j)
        skeleton.insert(Face{fac[i], fac[j]});
    }
  std::set<Face> image;
  for (const auto& f : skeleton) {
    if (f2_faces.count(f)) continue;
    Face g = apply_q(f);
    if (!image.insert(std::move(g)).second)
      throw InputError("handle addition would double the face " +
                       face_str(apply_q(f)));
  }

  std::vector<Face> facets;
  for (const auto& f : A.facets()) {
    if (f == f1 || f == f2) continue;
    facets.push_back(apply_q(f));
  }
  // ids stay dense except the removed f2 vertices: compact them
  std::vector<VertexId> old_ids;
  for (const auto& f : facets) old_ids.insert(old_ids.end(), f.begin(), f.end());
  std::sort(old_ids.begin(), old_ids.end());
  old_ids.erase(std::unique(old_ids.begin(), old_ids.end()), old_ids.end());
  std::unordered_map<VertexId, VertexId> compact;
  std::vector<std::string> labels;
  for (VertexId v : old_ids) {
    compact[v] = static_cast<VertexId>(labels.size());
    labels.push_back(A.label(v));
  }
  for (auto& f : facets) {
    for (auto& v : f) v = compact[v];
    f = make_face(std::move(f));
  }

  CertifiedComplex out{SimplicialComplex::from_faces(std::move(facets), std::move(labels)), {}};
  const int d = A.dim();
  if (a.cert.m) out.cert.m = *a.cert.m + 1;
  if (a.cert.b1) out.cert.b1 = *a.cert.b1 + 1;
  if (a.cert.g2 && d >= 2) out.cert.g2 = *a.cert.g2 + binom64(d + 2, 2);
  out.cert.trace = a.cert.trace;
  out.cert.trace.push_back("handle " + face_str(f1) + " ~ " + face_str(f2));
  return out;
}

namespace {

// stellar subdivision of a facet: replace it by the cone over its boundary
CertifiedComplex subdivide_facet(const CertifiedComplex& a, const Face& fac, int counter) {
  const auto& A = a.complex;
  std::vector<std::string> labels = A.labels();
  std::string lab;
  do {
    lab = "c" + std::to_string(counter++);
  } while (std::find(labels.begin(), labels.end(), lab) != labels.end());
  VertexId c = static_cast<VertexId>(labels.size());
  labels.push_back(lab);
  std::vector<Face> facets;
  for (const auto& f : A.facets()) {
    if (f == fac) {
      for (VertexId skip : fac) {
        Face g = face_minus_vertex(fac, skip);
        facets.push_back(face_with_vertex(g, c));
      }
    } else {
      facets.push_back(f);
    }
  }
  CertifiedComplex out{SimplicialComplex::from_faces(std::move(facets), std::move(labels)),
                       a.cert};
  out.cert.trace.push_back("stellar subdivision of " + face_str(fac));
  return out;
}

}  // namespace

CertifiedComplex stacked_manifold(int d, int stackings, int handles, std::uint64_t seed) {
  if (d < 2) throw InputError("stacked manifolds need d >= 2");
  if (stackings < 0 || handles < 0) throw InputError("negative counts");
  Rng rng(seed);
  CertifiedComplex cur = simplex_boundary(d);
  int new_vertex_counter = 0;
  auto subdivide_random = [&]() {
    const auto& facets = cur.complex.facets();
    std::size_t idx = static_cast<std::size_t>(rng.next_below(facets.size()));
    cur = subdivide_facet(cur, facets[idx], new_vertex_counter);
    ++new_vertex_counter;
  };
  for (int s = 0; s < stackings; ++s) subdivide_random();

  // nested subdivisions: after 2(d+1) rounds the innermost facet consists of
  // fresh apexes adjacent only to tower vertices, so two towers always
  // provide an admissible handle pair
  auto build_tower = [&]() {
    const auto& facets0 = cur.complex.facets();
    Face f = facets0[static_cast<std::size_t>(rng.next_below(facets0.size()))];
    std::deque<VertexId> order(f.begin(), f.end());
    for (int step = 0; step < 2 * (d + 1); ++step) {
      cur = subdivide_facet(cur, f, new_vertex_counter);
      ++new_vertex_counter;
      VertexId apex = static_cast<VertexId>(cur.complex.vertex_count() - 1);
      VertexId drop = order.front();
      order.pop_front();
      order.push_back(apex);
      f = face_with_vertex(face_minus_vertex(f, drop), apex);
    }
  };

  int grown = 0;
  for (int h = 0; h < handles; ++h) {
    bool done = false;
    while (!done) {
      // candidate pairs must be at graph distance >= 2; anything closer
      // doubles an edge, so the cheap adjacency filter loses nothing
      const auto facets = cur.complex.facets();
      const int nv = cur.complex.vertex_count();
      std::vector<std::vector<bool>> adj(static_cast<std::size_t>(nv),
                                         std::vector<bool>(static_cast<std::size_t>(nv)));
      for (const auto& f : facets)
        for (std::size_t i = 0; i < f.size(); ++i)
          for (std::size_t j = i + 1; j < f.size(); ++j)
            adj[static_cast<std::size_t>(f[i])][static_cast<std::size_t>(f[j])] =
                adj[static_cast<std::size_t>(f[j])][static_cast<std::size_t>(f[i])] = true;
      auto far_apart = [&](const Face& a, const Face& b) {
        for (VertexId u : a)
          for (VertexId w : b)
            if (u == w || adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)])
              return false;
        return true;
      };
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t i = 0; i < facets.size(); ++i)
        for (std::size_t j = i + 1; j < facets.size(); ++j)
          if (far_apart(facets[i], facets[j])) pairs.emplace_back(i, j);
      rng.shuffle(pairs);
      for (auto [i, j] : pairs) {
        try {
          cur = handle_addition(cur, facets[i], facets[j]);
          done = true;
          break;
        } catch (const InputError&) {
          continue;  // inadmissible pair; try the next one
        }
      }
      if (!done) {
        if (grown >= 8) throw ResourceError("could not find an admissible handle pair");
        build_tower();
        ++grown;
      }
    }
  }
  if (grown > 0)
    cur.cert.trace.push_back("grew " + std::to_string(grown) +
                             " subdivision towers to admit handles");
  return cur;
}

CertifiedComplex cyclic_boundary(int n) {
  if (n < 6) throw InputError("cyclic boundary needs n >= 6");
  if (n > 40) throw ResourceError("cyclic boundary capped at n = 40");
  std::vector<Face> facets;
  // Gale evenness on vertices 0..n-1: S is a facet iff between any two
  // elements not in S there is an even number of elements of S
  std::vector<int> idx(4);
  for (idx[0] = 0; idx[0] < n; ++idx[0])
    for (idx[1] = idx[0] + 1; idx[1] < n; ++idx[1])
      for (idx[2] = idx[1] + 1; idx[2] < n; ++idx[2])
        for (idx[3] = idx[2] + 1; idx[3] < n; ++idx[3]) {
          std::vector<bool> in_s(static_cast<std::size_t>(n), false);
          for (int t = 0; t < 4; ++t) in_s[static_cast<std::size_t>(idx[t])] = true;
          bool ok = true;
          for (int i = 0; i < n && ok; ++i) {
            if (in_s[static_cast<std::size_t>(i)]) continue;
            for (int j = i + 1; j < n && ok; ++j) {
              if (in_s[static_cast<std::size_t>(j)]) continue;
              int between = 0;
              for (int t = 0; t < 4; ++t)
                if (idx[t] > i && idx[t] < j) ++between;
              if (between % 2 == 1) ok = false;
            }
          }
          if (ok) facets.push_back({idx[0], idx[1], idx[2], idx[3]});
        }
  CertifiedComplex out{SimplicialComplex::from_faces(std::move(facets), vlabels(n)), {}};
  out.cert.m = 0;
  out.cert.b1 = 0;
  // polytope boundary sphere: g2 from the f-vector, f1 = C(n,2) by
  // 2-neighborliness
  out.cert.g2 = binom64(n, 2) - 4 * n + 10;
  out.cert.trace.push_back("cyclic-boundary n=" + std::to_string(n));
  return out;
}

CertifiedComplex csaszar_torus() {
  std::vector<Face> facets;
  for (int i = 0; i < 7; ++i) {
    auto tri = [&](int a, int b, int c) {
      return make_face({a % 7, b % 7, c % 7});
    };
    facets.push_back(tri(i, i + 1, i + 3));
    facets.push_back(tri(i, i + 2, i + 3));
  }
  CertifiedComplex out{SimplicialComplex::from_faces(std::move(facets), vlabels(7)), {}};
  out.cert.m = 2;
  out.cert.b1 = 2;
  out.cert.trace.push_back("csaszar-torus");
  return out;
}

CertifiedComplex projective_plane_6() {
  std::vector<Face> facets = {{0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 5}, {0, 4, 5},
                              {1, 2, 5}, {1, 3, 4}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}};
  CertifiedComplex out{SimplicialComplex::from_faces(std::move(facets), vlabels(6)), {}};
  out.cert.m = 1;
  out.cert.trace.push_back("projective-plane-6");
  return out;
}

SimplicialComplex random_complex(int n, int max_dim, std::uint64_t seed) {
  if (n < 1) throw InputError("random complex needs n >= 1");
  if (max_dim < 0) throw InputError("random complex needs max_dim >= 0");
  Rng rng(seed);
  const int facet_count = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(2 * n)));
  std::vector<Face> facets;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (int t = 0; t < facet_count; ++t) {
    int k = 1 + static_cast<int>(rng.next_below(
                    static_cast<std::uint64_t>(std::min(n, max_dim + 1))));
    std::vector<VertexId> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);
    rng.shuffle(pool);
    Face f(pool.begin(), pool.begin() + k);
    std::sort(f.begin(), f.end());
    for (VertexId v : f) used[static_cast<std::size_t>(v)] = true;
    facets.push_back(std::move(f));
  }
  for (VertexId v = 0; v < n; ++v)
    if (!used[static_cast<std::size_t>(v)]) facets.push_back({v});
  return SimplicialComplex::from_faces(std::move(facets), vlabels(n));
}

RelativePair random_pair(int n, int max_dim, std::uint64_t seed) {
  SimplicialComplex delta = random_complex(n, max_dim, seed);
  Rng rng(seed, 1);
  std::vector<Face> gamma;
  if (rng.next_below(4) != 0) {  // one quarter of the pairs have a void gamma
    for (const auto& fac : delta.facets()) {
      std::uint64_t mode = rng.next_below(3);
      if (mode == 0) continue;  // facet not in gamma
      if (mode == 1) {
        gamma.push_back(fac);  // whole facet
      } else {
        // random proper subface (possibly empty)
        Face sub;
        for (VertexId v : fac)
          if (rng.next_below(2)) sub.push_back(v);
        if (sub.size() == fac.size() && !sub.empty()) sub.pop_back();
        gamma.push_back(std::move(sub));
      }
    }
  }
  return RelativePair::with_gamma_facets(std::move(delta), std::move(gamma));
}

}  // namespace mulab
