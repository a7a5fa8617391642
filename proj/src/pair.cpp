#include "mulab/pair.hpp"

#include <algorithm>
#include <set>

#include "mulab/util.hpp"

namespace mulab {

RelativePair::RelativePair(SimplicialComplex delta) : delta_(std::move(delta)) {}

RelativePair::RelativePair(SimplicialComplex delta, const SimplicialComplex& gamma) {
  std::vector<Face> gfacets;
  gfacets.reserve(gamma.facets().size());
  for (const auto& gf : gamma.facets()) {
    Face mapped;
    mapped.reserve(gf.size());
    for (VertexId v : gf) {
      VertexId dv = delta.id_of(gamma.label(v));
      if (dv < 0)
        throw InputError("gamma vertex '" + gamma.label(v) + "' is not a vertex of delta");
      mapped.push_back(dv);
    }
    gfacets.push_back(make_face(std::move(mapped)));
  }
  *this = with_gamma_facets(std::move(delta), std::move(gfacets));
}

RelativePair RelativePair::with_gamma_facets(SimplicialComplex delta,
                                             std::vector<Face> gamma_facets) {
  gamma_facets = maximal_faces(std::move(gamma_facets));
  for (const auto& f : gamma_facets)
    if (!delta.contains(f)) throw InputError("gamma is not a subcomplex of delta");
  RelativePair p;
  p.delta_ = std::move(delta);
  p.gamma_facets_ = std::move(gamma_facets);
  return p;
}

SimplicialComplex RelativePair::gamma_complex() const {
  if (gamma_void()) return SimplicialComplex::void_complex();
  std::vector<std::vector<std::string>> facet_labels;
  facet_labels.reserve(gamma_facets_.size());
  for (const auto& f : gamma_facets_) {
    std::vector<std::string> fl;
    for (VertexId v : f) fl.push_back(delta_.label(v));
    facet_labels.push_back(std::move(fl));
  }
  // build() ignores the empty facet list entries only through maximal_faces;
  // {∅} survives as the single empty facet
  SimplicialComplex g = SimplicialComplex::build(facet_labels);
  return g;
}

bool RelativePair::in_gamma(const Face& f) const {
  return facets_ops::member(gamma_facets_, f);
}

bool RelativePair::in_pair(const Face& f) const {
  return delta_.contains(f) && !in_gamma(f);
}

int RelativePair::dim() const { return pair_dim(facets()); }

PairFacets link_pair(const PairFacets& p, const Face& f) {
  return {facets_ops::link_facets(p.delta, f), facets_ops::link_facets(p.gamma, f)};
}

PairFacets restrict_pair(const PairFacets& p, const Face& w) {
  PairFacets out;
  if (!p.delta.empty()) out.delta = facets_ops::restrict_facets(p.delta, w);
  if (!p.gamma.empty()) out.gamma = facets_ops::restrict_facets(p.gamma, w);
  return out;
}

int pair_dim(const PairFacets& p) {
  // a facet of Δ lying in Γ contributes nothing; Γ=Δ leaves no faces
  int d = -2;
  for (const auto& f : p.delta)
    if (face_dim(f) > d && !facets_ops::member(p.gamma, f)) d = face_dim(f);
  return d;
}

std::vector<std::vector<Face>> pair_faces_by_dim(const PairFacets& p, std::int64_t budget) {
  std::vector<std::vector<Face>> out;
  if (p.delta.empty()) return out;
  std::set<Face> all;
  std::int64_t count = 0;
  for (const auto& fac : p.delta) {
    const std::size_t k = fac.size();
    if (k > 62) throw ResourceError("facet too large for subset enumeration");
    for (std::uint64_t m = 0; m < (1ULL << k); ++m) {
      Face f;
      for (std::size_t i = 0; i < k; ++i)
        if (m & (1ULL << i)) f.push_back(fac[i]);
      if (all.insert(std::move(f)).second && ++count > budget)
        throw ResourceError("face enumeration exceeds budget");
    }
  }
  int dmax = -2;
  std::vector<Face> kept;
  kept.reserve(all.size());
  for (const auto& f : all) {
    if (facets_ops::member(p.gamma, f)) continue;
    dmax = std::max(dmax, face_dim(f));
    kept.push_back(f);
  }
  if (dmax == -2) return out;
  out.resize(static_cast<std::size_t>(dmax + 2));
  for (auto& f : kept) out[f.size()].push_back(std::move(f));
  for (auto& level : out) std::sort(level.begin(), level.end(), face_less);
  return out;
}

std::int64_t FHVectors::g2() const {
  if (d < 2 || static_cast<int>(h.size()) < 3)
    throw InputError("g2 needs an h-vector with d >= 2");
  return h[2] - h[1];
}

FHVectors f_h_vectors(const PairFacets& p, std::optional<int> d_opt, std::int64_t budget) {
  FHVectors out;
  auto levels = pair_faces_by_dim(p, budget);
  const int dim = static_cast<int>(levels.size()) - 2;  // -2 when empty
  if (levels.empty()) {
    out.void_pair = true;
    out.d = d_opt.value_or(0);
    if (out.d < 0) throw InputError("h-vector parameter must be >= 0");
    out.h.assign(static_cast<std::size_t>(out.d) + 1, 0);
    return out;
  }
  out.d = d_opt.value_or(dim + 1);
  if (out.d < dim + 1)
    throw InputError("h-vector parameter d=" + std::to_string(out.d) +
                     " is below dim+1=" + std::to_string(dim + 1));
  out.f.resize(levels.size());
  for (std::size_t k = 0; k < levels.size(); ++k)
    out.f[k] = static_cast<std::int64_t>(levels[k].size());
  out.h.assign(static_cast<std::size_t>(out.d) + 1, 0);
  for (int i = 0; i <= out.d; ++i) {
    std::int64_t acc = 0;
    for (int j = 0; j <= i; ++j) {
      std::int64_t fj = (j < static_cast<int>(out.f.size())) ? out.f[j] : 0;
      std::int64_t term = binom64(out.d - j, i - j) * fj;
      acc += ((i - j) % 2 == 0) ? term : -term;
    }
    out.h[i] = acc;
  }
  return out;
}

FHVectors f_h_vectors(const RelativePair& p, std::optional<int> d, std::int64_t budget) {
  return f_h_vectors(p.facets(), d, budget);
}

FHVectors f_h_vectors(const SimplicialComplex& x, std::optional<int> d, std::int64_t budget) {
  return f_h_vectors(PairFacets{x.facets(), {}}, d, budget);
}

}  // namespace mulab
