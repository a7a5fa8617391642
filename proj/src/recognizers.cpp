#include "mulab/recognizers.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "mulab/util.hpp"

namespace mulab {

namespace {

std::string face_str(const Face& f) {
  std::string s = "{";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(f[i]);
  }
  return s + "}";
}

// number of connected components of a facet list over its support
int component_count(const std::vector<Face>& facets) {
  Face sup = facets_ops::support(facets);
  if (sup.empty()) return 0;
  std::map<VertexId, VertexId> parent;
  for (VertexId v : sup) parent[v] = v;
  std::function<VertexId(VertexId)> find = [&](VertexId a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& f : facets)
    for (std::size_t i = 1; i < f.size(); ++i) {
      VertexId ra = find(f[0]), rb = find(f[i]);
      if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
  int comps = 0;
  for (VertexId v : sup)
    if (find(v) == v) ++comps;
  return comps;
}

bool facets_connected(const std::vector<Face>& facets) {
  return component_count(facets) == 1;
}

}  // namespace

RecognizerVerdict is_pure(const RelativePair& p) {
  RecognizerVerdict v;
  const int dim = p.dim();
  if (dim < 0) {
    v.notes.push_back("pair has no faces; purity is vacuous");
    return v;
  }
  for (const auto& f : p.delta().facets()) {
    if (p.in_gamma(f)) continue;
    if (face_dim(f) != dim) {
      v.holds = false;
      v.witnesses.push_back({"facet-dimension", f,
                             "facet " + face_str(f) + " has dimension " +
                                 std::to_string(face_dim(f)) + ", pair dimension is " +
                                 std::to_string(dim)});
    }
  }
  return v;
}

RecognizerVerdict is_pure(const SimplicialComplex& x) {
  return is_pure(RelativePair(x));
}

RecognizerVerdict is_normal_pseudomanifold(const SimplicialComplex& x,
                                           const RecognizerOptions& opt) {
  RecognizerVerdict v;
  const int d = x.dim();
  if (d < 0) {
    v.holds = false;
    v.witnesses.push_back({"nonempty", {}, "complex has no vertices"});
    return v;
  }
  RecognizerVerdict purity = is_pure(x);
  if (!purity.holds) {
    v.holds = false;
    for (auto& w : purity.witnesses) v.witnesses.push_back(w);
    if (!opt.all_witnesses) return v;
  }
  if (!facets_connected(x.facets())) {
    v.holds = false;
    v.witnesses.push_back({"connected", {}, "complex is disconnected"});
    if (!opt.all_witnesses) return v;
  }
  auto levels = x.faces_by_dim(opt.face_budget);
  // ridges lie in exactly two facets
  if (d >= 1 && d + 1 < static_cast<int>(levels.size())) {
    for (const auto& ridge : levels[static_cast<std::size_t>(d)]) {
      int count = 0;
      for (const auto& fac : x.facets())
        if (face_subset(ridge, fac)) ++count;
      if (count != 2) {
        v.holds = false;
        v.witnesses.push_back({"ridge-degree", ridge,
                               "ridge " + face_str(ridge) + " lies in " +
                                   std::to_string(count) + " facets"});
        if (!opt.all_witnesses) return v;
      }
    }
  }
  // links of low faces connected (∅ included: that repeats connectivity)
  for (int fd = -1; fd <= d - 2; ++fd) {
    for (const auto& f : levels[static_cast<std::size_t>(fd) + 1]) {
      auto lk = facets_ops::link_facets(x.facets(), f);
      if (!facets_connected(lk)) {
        v.holds = false;
        v.witnesses.push_back({"link-connected", f,
                               "link of " + face_str(f) + " is disconnected"});
        if (!opt.all_witnesses) return v;
      }
    }
  }
  return v;
}

RecognizerVerdict serre_condition(const RelativePair& p, int r, FieldSpec k,
                                  const RecognizerOptions& opt) {
  if (r < 1) throw InputError("Serre parameter r must be >= 1");
  RecognizerVerdict v;
  if (p.delta().is_void()) {
    v.notes.push_back("void complex; condition is vacuous");
    return v;
  }
  auto levels = p.delta().faces_by_dim(opt.face_budget);
  PairFacets pf = p.facets();
  // higher-dimensional faces have smaller links and fail faster
  for (int li = static_cast<int>(levels.size()); li-- > 0;) {
    for (const auto& f : levels[static_cast<std::size_t>(li)]) {
      PairFacets lk = link_pair(pf, f);
      int ldim = pair_dim(lk);
      if (ldim < -1) {
        v.notes.push_back("link pair of " + face_str(f) + " has no faces; skipped");
        continue;
      }
      int upto = std::min(r - 1, ldim);  // exclusive upper bound for i
      if (upto <= -1) continue;
      BettiVector b = reduced_betti(lk, k, opt.hom);
      for (int i = -1; i < upto; ++i) {
        if (b.reduced_at(i) != 0) {
          v.holds = false;
          v.witnesses.push_back({"vanishing", f,
                                 "link pair of " + face_str(f) + " has reduced b_" +
                                     std::to_string(i) + " = " +
                                     std::to_string(b.reduced_at(i))});
          if (!opt.all_witnesses) return v;
          break;
        }
      }
    }
  }
  return v;
}

RecognizerVerdict is_buchsbaum(const RelativePair& p, FieldSpec k,
                               const RecognizerOptions& opt) {
  RecognizerVerdict v = is_pure(p);
  if (!v.holds && !opt.all_witnesses) return v;
  const int d = p.dim();
  if (d < 0) {
    v.notes.push_back("pair has no faces; Buchsbaum is vacuous");
    return v;
  }
  RecognizerVerdict links = vertex_links_serre(p, d, k, opt);
  if (!links.holds) v.holds = false;
  for (auto& w : links.witnesses) v.witnesses.push_back(w);
  for (auto& n : links.notes) v.notes.push_back(n);
  return v;
}

RecognizerVerdict vertex_links_serre(const RelativePair& p, int r, FieldSpec k,
                                     const RecognizerOptions& opt) {
  RecognizerVerdict v;
  PairFacets pf = p.facets();
  for (VertexId u = 0; u < p.vertex_count(); ++u) {
    if (!p.delta().contains({u})) continue;
    PairFacets lk = link_pair(pf, Face{u});
    if (pair_dim(lk) < -1) {
      v.notes.push_back("link pair of vertex " + std::to_string(u) +
                        " has no faces; vacuously fine");
      continue;
    }
    RelativePair lkp = RelativePair::with_gamma_facets(
        SimplicialComplex::from_faces(lk.delta, p.delta().labels(), true), lk.gamma);
    RecognizerVerdict sub = serre_condition(lkp, r, k, opt);
    if (!sub.holds) {
      v.holds = false;
      for (auto& w : sub.witnesses)
        v.witnesses.push_back({"vertex-link(" + std::to_string(u) + "):" + w.clause, w.face,
                               w.detail});
      if (!opt.all_witnesses) return v;
    }
  }
  return v;
}

RecognizerVerdict serre2_combinatorial(const SimplicialComplex& x,
                                       const RecognizerOptions& opt) {
  RecognizerVerdict v = is_pure(x);
  if (!v.holds && !opt.all_witnesses) return v;
  const int d = x.dim();
  if (d < 0) {
    v.notes.push_back("no faces; vacuous");
    return v;
  }
  auto levels = x.faces_by_dim(opt.face_budget);
  for (int fd = -1; fd <= d - 2; ++fd) {
    for (const auto& f : levels[static_cast<std::size_t>(fd) + 1]) {
      auto lk = facets_ops::link_facets(x.facets(), f);
      if (!facets_connected(lk)) {
        v.holds = false;
        v.witnesses.push_back({"link-connected", f,
                               "link of " + face_str(f) + " is disconnected"});
        if (!opt.all_witnesses) return v;
      }
    }
  }
  return v;
}

}  // namespace mulab
