#include "mulab/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "mulab/constructors.hpp"
#include "mulab/util.hpp"

namespace mulab {

SimplicialPoset SimplicialPoset::from_faces(std::vector<PosetFace> faces) {
  SimplicialPoset p;
  p.faces_ = std::move(faces);
  const int n = p.size();
  std::set<std::string> ids;
  for (const auto& f : p.faces_) {
    if (f.ext_id.empty()) throw InputError("poset face with empty id");
    if (!ids.insert(f.ext_id).second)
      throw InputError("duplicate poset face id '" + f.ext_id + "'");
    if (f.rank < 1) throw InputError("face '" + f.ext_id + "' has rank < 1");
  }
  for (int i = 0; i < n; ++i) {
    const auto& f = p.faces_[static_cast<std::size_t>(i)];
    if (f.rank == 1 && !f.covers.empty())
      throw InputError("vertex '" + f.ext_id + "' lists covers other than the minimum");
    if (f.rank >= 2 && static_cast<int>(f.covers.size()) != f.rank)
      throw InputError("face '" + f.ext_id + "' of rank " + std::to_string(f.rank) +
                       " must cover exactly " + std::to_string(f.rank) + " faces");
    for (int c : f.covers) {
      if (c < 0 || c >= n) throw InputError("cover index out of range in '" + f.ext_id + "'");
      if (p.faces_[static_cast<std::size_t>(c)].rank != f.rank - 1)
        throw InputError("cover of '" + f.ext_id + "' has wrong rank");
    }
  }
  // vertex numbering in input order
  for (int i = 0; i < n; ++i)
    if (p.faces_[static_cast<std::size_t>(i)].rank == 1)
      p.vertex_faces_.push_back(i);
  std::unordered_map<int, int> vnum;
  for (std::size_t v = 0; v < p.vertex_faces_.size(); ++v)
    vnum[p.vertex_faces_[v]] = static_cast<int>(v);

  // vertex sets bottom-up, by rank
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return p.faces_[static_cast<std::size_t>(a)].rank < p.faces_[static_cast<std::size_t>(b)].rank;
  });
  p.vsets_.resize(static_cast<std::size_t>(n));
  for (int i : order) {
    const auto& f = p.faces_[static_cast<std::size_t>(i)];
    if (f.rank == 1) {
      p.vsets_[static_cast<std::size_t>(i)] = {vnum[i]};
      continue;
    }
    std::set<int> u;
    std::set<Face> cover_sets;
    for (int c : f.covers) {
      const Face& cv = p.vsets_[static_cast<std::size_t>(c)];
      if (!cover_sets.insert(cv).second)
        throw InputError("face '" + f.ext_id + "' has two covers with the same vertex set");
      u.insert(cv.begin(), cv.end());
    }
    if (static_cast<int>(u.size()) != f.rank)
      throw InputError("face '" + f.ext_id + "' does not span " + std::to_string(f.rank) +
                       " vertices");
    p.vsets_[static_cast<std::size_t>(i)] = Face(u.begin(), u.end());
  }

  // partial order as reflexive-transitive closure of the cover relation
  p.leq_.assign(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int i : order) {
    auto& row_i = p.leq_;
    row_i[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = true;
    for (int c : p.faces_[static_cast<std::size_t>(i)].covers)
      for (int j = 0; j < n; ++j)
        if (p.leq_[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)])
          p.leq_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = true;
  }

  // Boolean lower intervals: the downset of a rank-r face must contain
  // exactly C(r,k) faces of rank k, with distinct vertex sets
  for (int i = 0; i < n; ++i) {
    const int r = p.faces_[static_cast<std::size_t>(i)].rank;
    std::vector<std::set<Face>> per_rank(static_cast<std::size_t>(r) + 1);
    std::vector<std::int64_t> count(static_cast<std::size_t>(r) + 1, 0);
    for (int j = 0; j < n; ++j) {
      if (!p.leq_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) continue;
      int rj = p.faces_[static_cast<std::size_t>(j)].rank;
      ++count[static_cast<std::size_t>(rj)];
      if (!per_rank[static_cast<std::size_t>(rj)].insert(p.vsets_[static_cast<std::size_t>(j)]).second)
        throw InputError("interval below '" + p.faces_[static_cast<std::size_t>(i)].ext_id +
                         "' has two faces with the same vertex set");
    }
    for (int k = 1; k <= r; ++k)
      if (count[static_cast<std::size_t>(k)] != binom64(r, k))
        throw InputError("interval below '" + p.faces_[static_cast<std::size_t>(i)].ext_id +
                         "' is not Boolean (rank " + std::to_string(k) + " count " +
                         std::to_string(count[static_cast<std::size_t>(k)]) + " != C(" +
                         std::to_string(r) + "," + std::to_string(k) + "))");
  }
  return p;
}

int SimplicialPoset::dim() const {
  int d = -1;
  for (const auto& f : faces_) d = std::max(d, f.rank - 1);
  return d;
}

int SimplicialPoset::face_index(const std::string& ext_id) const {
  for (int i = 0; i < size(); ++i)
    if (faces_[static_cast<std::size_t>(i)].ext_id == ext_id) return i;
  return -1;
}

std::vector<std::int64_t> SimplicialPoset::rank_counts() const {
  std::vector<std::int64_t> out(static_cast<std::size_t>(dim()) + 2, 0);
  out[0] = 1;
  for (const auto& f : faces_) ++out[static_cast<std::size_t>(f.rank)];
  return out;
}

PosetPair PosetPair::whole(SimplicialPoset p) {
  PosetPair out;
  out.gamma.assign(static_cast<std::size_t>(p.size()), false);
  out.delta = std::move(p);
  out.gamma_has_min = false;
  return out;
}

PosetPair PosetPair::with_ideal(SimplicialPoset p, const std::vector<int>& gamma_faces) {
  PosetPair out;
  out.gamma.assign(static_cast<std::size_t>(p.size()), false);
  for (int i : gamma_faces) {
    if (i < 0 || i >= p.size()) throw InputError("gamma face index out of range");
    out.gamma[static_cast<std::size_t>(i)] = true;
  }
  // lower-closed check
  for (int i = 0; i < p.size(); ++i)
    if (out.gamma[static_cast<std::size_t>(i)])
      for (int c : p.face(i).covers)
        if (!out.gamma[static_cast<std::size_t>(c)])
          throw InputError("gamma is not a lower ideal: '" + p.face(i).ext_id +
                           "' is in gamma but '" + p.face(c).ext_id + "' is not");
  out.gamma_has_min = true;  // a named ideal always contains the minimum
  out.delta = std::move(p);
  return out;
}

int PosetPair::dim() const {
  int d = gamma_has_min ? -2 : -1;  // the minimum itself counts unless in Γ
  for (int i = 0; i < delta.size(); ++i)
    if (!gamma[static_cast<std::size_t>(i)]) d = std::max(d, delta.face(i).rank - 1);
  return d;
}

namespace {

// rebuild a SimplicialPoset from a subset of faces (by index), keeping ids;
// `shift_rank` subtracts from every rank (used by links)
SimplicialPoset subposet(const SimplicialPoset& p, const std::vector<bool>& keep,
                         int shift_rank, const std::vector<bool>* keep_cover_filter) {
  std::vector<int> remap(static_cast<std::size_t>(p.size()), -1);
  std::vector<PosetFace> faces;
  for (int i = 0; i < p.size(); ++i) {
    if (!keep[static_cast<std::size_t>(i)]) continue;
    remap[static_cast<std::size_t>(i)] = static_cast<int>(faces.size());
    PosetFace f;
    f.ext_id = p.face(i).ext_id;
    f.rank = p.face(i).rank - shift_rank;
    faces.push_back(std::move(f));
  }
  for (int i = 0; i < p.size(); ++i) {
    if (remap[static_cast<std::size_t>(i)] < 0) continue;
    auto& f = faces[static_cast<std::size_t>(remap[static_cast<std::size_t>(i)])];
    if (f.rank == 1) continue;  // covers the new minimum only
    for (int c : p.face(i).covers) {
      bool ok = keep[static_cast<std::size_t>(c)];
      if (ok && keep_cover_filter) ok = (*keep_cover_filter)[static_cast<std::size_t>(c)];
      if (ok) f.covers.push_back(remap[static_cast<std::size_t>(c)]);
    }
  }
  return SimplicialPoset::from_faces(std::move(faces));
}

}  // namespace

PosetPair poset_face_link(const PosetPair& p, int face_index) {
  if (face_index < 0 || face_index >= p.delta.size())
    throw InputError("face index out of range");
  std::vector<bool> keep(static_cast<std::size_t>(p.delta.size()), false);
  for (int i = 0; i < p.delta.size(); ++i)
    if (i != face_index && p.delta.leq(face_index, i)) keep[static_cast<std::size_t>(i)] = true;
  SimplicialPoset link = subposet(p.delta, keep, p.delta.face(face_index).rank, nullptr);

  PosetPair out;
  out.delta = std::move(link);
  out.gamma.assign(static_cast<std::size_t>(out.delta.size()), false);
  out.gamma_has_min = p.gamma[static_cast<std::size_t>(face_index)];
  for (int i = 0; i < p.delta.size(); ++i)
    if (keep[static_cast<std::size_t>(i)] && p.gamma[static_cast<std::size_t>(i)]) {
      int idx = out.delta.face_index(p.delta.face(i).ext_id);
      out.gamma[static_cast<std::size_t>(idx)] = true;
    }
  return out;
}

PosetPair poset_link(const PosetPair& p, int v) {
  if (v < 0 || v >= p.delta.vertex_count()) throw InputError("vertex number out of range");
  return poset_face_link(p, p.delta.vertex_face(v));
}

PosetPair poset_restrict(const PosetPair& p, const std::vector<int>& verts) {
  std::vector<bool> in_w(static_cast<std::size_t>(p.delta.vertex_count()), false);
  for (int v : verts) {
    if (v < 0 || v >= p.delta.vertex_count()) throw InputError("vertex number out of range");
    in_w[static_cast<std::size_t>(v)] = true;
  }
  std::vector<bool> keep(static_cast<std::size_t>(p.delta.size()), false);
  for (int i = 0; i < p.delta.size(); ++i) {
    bool ok = true;
    for (int v : p.delta.vertex_set(i))
      if (!in_w[static_cast<std::size_t>(v)]) {
        ok = false;
        break;
      }
    keep[static_cast<std::size_t>(i)] = ok;
  }
  PosetPair out;
  SimplicialPoset sub = subposet(p.delta, keep, 0, nullptr);
  out.gamma.assign(static_cast<std::size_t>(sub.size()), false);
  out.gamma_has_min = p.gamma_has_min;
  for (int i = 0; i < p.delta.size(); ++i)
    if (keep[static_cast<std::size_t>(i)] && p.gamma[static_cast<std::size_t>(i)]) {
      int idx = sub.face_index(p.delta.face(i).ext_id);
      out.gamma[static_cast<std::size_t>(idx)] = true;
    }
  out.delta = std::move(sub);
  return out;
}

namespace {

// maximal chains of the induced subposet on `keep`; chain entries are face
// indices of p. Assumes keep is lower-closed within itself for covers, which
// holds for ideals, links and restrictions used here.
std::vector<Face> max_chains(const SimplicialPoset& p, const std::vector<bool>& keep) {
  std::vector<Face> chains;
  std::vector<int> kept;
  for (int i = 0; i < p.size(); ++i)
    if (keep[static_cast<std::size_t>(i)]) kept.push_back(i);
  if (kept.empty()) {
    chains.push_back({});  // the order complex of the empty poset is {∅}
    return chains;
  }
  // top elements: kept faces with no kept face strictly above
  std::vector<bool> has_upper(static_cast<std::size_t>(p.size()), false);
  for (int i : kept)
    for (int j : kept)
      if (i != j && p.leq(i, j)) has_upper[static_cast<std::size_t>(i)] = true;
  // depth-first over strictly-lower kept elements; within the Boolean
  // world every maximal chain of a lower interval is saturated, so we can
  // follow covers, but restrictions can erase covers—walk leq instead
  std::vector<int> chain;
  std::function<void(int)> descend = [&](int top) {
    chain.push_back(top);
    // maximal kept elements strictly below `top`
    std::vector<int> below;
    for (int j : kept)
      if (j != top && p.leq(j, top)) below.push_back(j);
    std::vector<int> maximal_below;
    for (int j : below) {
      bool is_max = true;
      for (int l : below)
        if (l != j && p.leq(j, l)) {
          is_max = false;
          break;
        }
      if (is_max) maximal_below.push_back(j);
    }
    if (maximal_below.empty()) {
      Face c(chain.begin(), chain.end());
      std::sort(c.begin(), c.end());
      chains.push_back(std::move(c));
    } else {
      for (int j : maximal_below) descend(j);
    }
    chain.pop_back();
  };
  for (int i : kept)
    if (!has_upper[static_cast<std::size_t>(i)]) descend(i);
  std::sort(chains.begin(), chains.end(), face_less);
  chains.erase(std::unique(chains.begin(), chains.end()), chains.end());
  return chains;
}

}  // namespace

SimplicialComplex barycentric_subdivision(const SimplicialPoset& p) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) labels.push_back(p.face(i).ext_id);
  std::vector<bool> keep(static_cast<std::size_t>(p.size()), true);
  std::vector<Face> chains = max_chains(p, keep);
  if (p.size() == 0) return SimplicialComplex::empty_complex();
  return SimplicialComplex::from_faces(std::move(chains), std::move(labels));
}

std::vector<Face> sd_gamma_facets(const PosetPair& p) {
  if (!p.gamma_has_min) return {};
  bool any = false;
  for (bool b : p.gamma) any = any || b;
  if (!any) return {{}};
  return max_chains(p.delta, p.gamma);
}

PairFacets sd_pair(const PosetPair& p) {
  PairFacets out;
  std::vector<bool> keep(static_cast<std::size_t>(p.delta.size()), true);
  out.delta = max_chains(p.delta, keep);
  out.gamma = sd_gamma_facets(p);
  return out;
}

BettiVector poset_betti(const PosetPair& p, FieldSpec k, const HomologyOptions& opt) {
  return reduced_betti(sd_pair(p), k, opt);
}

FHVectors poset_f_h(const PosetPair& p, std::optional<int> d_opt) {
  FHVectors out;
  const int dim = p.dim();
  if (dim < -1) {
    out.void_pair = true;
    out.d = d_opt.value_or(0);
    out.h.assign(static_cast<std::size_t>(out.d) + 1, 0);
    return out;
  }
  out.d = d_opt.value_or(dim + 1);
  if (out.d < dim + 1) throw InputError("h-vector parameter below dim+1");
  out.f.assign(static_cast<std::size_t>(dim) + 2, 0);
  if (!p.gamma_has_min) out.f[0] = 1;
  for (int i = 0; i < p.delta.size(); ++i)
    if (!p.gamma[static_cast<std::size_t>(i)]) ++out.f[static_cast<std::size_t>(p.delta.face(i).rank)];
  out.h.assign(static_cast<std::size_t>(out.d) + 1, 0);
  for (int i = 0; i <= out.d; ++i) {
    std::int64_t acc = 0;
    for (int j = 0; j <= i; ++j) {
      std::int64_t fj = (j < static_cast<int>(out.f.size())) ? out.f[static_cast<std::size_t>(j)] : 0;
      std::int64_t term = binom64(out.d - j, i - j) * fj;
      acc += ((i - j) % 2 == 0) ? term : -term;
    }
    out.h[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}

MuVector poset_mu_ordering(const PosetPair& p, const Ordering& s, FieldSpec field,
                           const MuOptions& opt) {
  const int n = p.delta.vertex_count();
  s.validate(n);
  MuVector out;
  out.field = field;
  out.prov.method = MuMethod::ordering;
  out.prov.ordering = s;
  const int dim = p.dim();
  if (dim < 0) return out;
  out.mu.assign(static_cast<std::size_t>(dim) + 1, Rational(0));
  std::vector<int> w;
  for (int k = 0; k < n; ++k) {
    const int v = s.perm[static_cast<std::size_t>(k)];
    w.push_back(v);
    PosetPair rest = poset_restrict(p, w);
    // vertex numbers change under restriction: find v's new number
    int vr = -1;
    const std::string& vid = p.delta.face(p.delta.vertex_face(v)).ext_id;
    for (int t = 0; t < rest.delta.vertex_count(); ++t)
      if (rest.delta.face(rest.delta.vertex_face(t)).ext_id == vid) {
        vr = t;
        break;
      }
    PosetPair lk = poset_link(rest, vr);
    BettiVector b = reduced_betti(sd_pair(lk), field, opt.hom);
    for (int i = 0; i <= dim; ++i)
      out.mu[static_cast<std::size_t>(i)] += b.reduced_at(i - 1);
  }
  return out;
}

MuVector poset_mu_enumerated(const PosetPair& p, FieldSpec field, const MuOptions& opt) {
  const int n = p.delta.vertex_count();
  if (n > opt.enumerate_budget)
    throw ResourceError("permutation enumeration over " + std::to_string(n) +
                        " vertices exceeds budget");
  MuVector out;
  out.field = field;
  out.prov.method = MuMethod::enumerated;
  const int dim = p.dim();
  if (dim < 0) return out;
  std::vector<Rational> total(static_cast<std::size_t>(dim) + 1, Rational(0));
  std::vector<VertexId> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::int64_t count = 0;
  do {
    Ordering s;
    s.perm = perm;
    MuVector m = poset_mu_ordering(p, s, field, opt);
    for (int i = 0; i <= dim; ++i) total[static_cast<std::size_t>(i)] += m.mu[static_cast<std::size_t>(i)];
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  out.mu.resize(static_cast<std::size_t>(dim) + 1);
  for (int i = 0; i <= dim; ++i) {
    Rational q = total[static_cast<std::size_t>(i)] / Rational(count);
    q.canonicalize();
    out.mu[static_cast<std::size_t>(i)] = q;
  }
  return out;
}

SigmaVector poset_sigma_tilde(const PosetPair& p, FieldSpec field, const MuOptions& opt) {
  const int n = p.delta.vertex_count();
  if (n > opt.subset_budget)
    throw ResourceError("subset enumeration over " + std::to_string(n) +
                        " vertices exceeds budget");
  GradedBettiTable t;
  t.n = n;
  t.field = field;
  for (std::uint64_t wm = 0; wm < (1ULL << n); ++wm) {
    std::vector<int> w;
    for (int v = 0; v < n; ++v)
      if (wm & (1ULL << v)) w.push_back(v);
    PosetPair rest = poset_restrict(p, w);
    BettiVector b = reduced_betti(sd_pair(rest), field, opt.hom);
    const int k = static_cast<int>(w.size());
    for (int i = -1; i <= b.top_dim; ++i) {
      std::int64_t v = b.reduced_at(i);
      if (v != 0) t.beta[{k - i - 1, k}] += v;
    }
  }
  return sigma_from_table(t, p.dim());
}

MuVector poset_mu_exact(const PosetPair& p, FieldSpec field, const MuOptions& opt) {
  MuVector out;
  out.field = field;
  out.prov.method = MuMethod::exact;
  const int dim = p.dim();
  if (dim < 0) return out;
  const int n = p.delta.vertex_count();
  if (n > opt.subset_budget)
    throw ResourceError("subset enumeration over " + std::to_string(n) +
                        " vertices exceeds budget");
  out.mu.assign(static_cast<std::size_t>(dim) + 1, Rational(0));
  // μ_i = Σ_v Σ_{W ⊆ V∖v} b̃_{i-1}(lk(v, Δ|_{W∪v}), lk(v, Γ|_{W∪v})) / (n·C(n-1,|W|)):
  // grouping the orderings by the prefix set W∪{v} ending in v gives weight
  // |W|!(n-1-|W|)!/n!, so this sum telescopes to the full ordering average.
  // Distinct link faces may share a vertex set, so the inner sum must range
  // over ambient vertex subsets; the link's own vertex set is not enough.
  std::vector<Rational> weight(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k)
    weight[static_cast<std::size_t>(k)] =
        Rational(1) / (Rational(n) * Rational(binom64(n - 1, k)));
  for (int v = 0; v < n; ++v) {
    std::vector<int> others;
    for (int u = 0; u < n; ++u)
      if (u != v) others.push_back(u);
    const std::string& vid = p.delta.face(p.delta.vertex_face(v)).ext_id;
    for (std::uint64_t wm = 0; wm < (1ULL << others.size()); ++wm) {
      std::vector<int> verts{v};
      for (std::size_t j = 0; j < others.size(); ++j)
        if (wm & (1ULL << j)) verts.push_back(others[j]);
      PosetPair rest = poset_restrict(p, verts);
      int vr = -1;
      for (int t = 0; t < rest.delta.vertex_count(); ++t)
        if (rest.delta.face(rest.delta.vertex_face(t)).ext_id == vid) {
          vr = t;
          break;
        }
      PosetPair lk = poset_link(rest, vr);
      BettiVector b = reduced_betti(sd_pair(lk), field, opt.hom);
      const Rational& w = weight[verts.size() - 1];
      for (int i = 0; i <= dim; ++i) {
        std::int64_t bi = b.reduced_at(i - 1);
        if (bi != 0) out.mu[static_cast<std::size_t>(i)] += Rational(bi) * w;
      }
    }
  }
  for (auto& q : out.mu) q.canonicalize();
  return out;
}

namespace {

Ordering sd_ordering_impl(const SimplicialPoset& p, const Ordering& s, Rng* tiebreak) {
  const int n = p.vertex_count();
  s.validate(n);
  Ordering out;
  std::vector<bool> in_w(static_cast<std::size_t>(n), false);
  for (int k = 0; k < n; ++k) {
    const int v = s.perm[static_cast<std::size_t>(k)];
    in_w[static_cast<std::size_t>(v)] = true;
    // faces of Δ restricted to the current prefix that contain v, rank >= 2
    std::vector<int> block;
    for (int i = 0; i < p.size(); ++i) {
      if (p.face(i).rank < 2) continue;
      const Face& vs = p.vertex_set(i);
      if (!face_contains_vertex(vs, v)) continue;
      bool inside = true;
      for (int u : vs)
        if (!in_w[static_cast<std::size_t>(u)]) {
          inside = false;
          break;
        }
      if (inside) block.push_back(i);
    }
    if (tiebreak) {
      // shuffle then stable-sort by rank: random order within equal ranks
      std::vector<int> shuffled = block;
      tiebreak->shuffle(shuffled);
      std::stable_sort(shuffled.begin(), shuffled.end(), [&](int a, int b) {
        return p.face(a).rank < p.face(b).rank;
      });
      block = std::move(shuffled);
    } else {
      std::sort(block.begin(), block.end(), [&](int a, int b) {
        if (p.face(a).rank != p.face(b).rank) return p.face(a).rank < p.face(b).rank;
        return a < b;
      });
    }
    for (int i : block) out.perm.push_back(i);
    out.perm.push_back(p.vertex_face(v));
  }
  return out;
}

}  // namespace

Ordering sd_ordering(const SimplicialPoset& p, const Ordering& s) {
  return sd_ordering_impl(p, s, nullptr);
}

Ordering sd_ordering_sampled(const SimplicialPoset& p, const Ordering& s, std::uint64_t seed) {
  Rng rng(seed, 0x5d);
  return sd_ordering_impl(p, s, &rng);
}

SimplicialPoset face_poset(const SimplicialComplex& x) {
  auto levels = x.faces_by_dim();
  std::vector<PosetFace> faces;
  std::map<Face, int> index;
  for (std::size_t li = 1; li < levels.size(); ++li) {
    for (const auto& f : levels[li]) {
      PosetFace pf;
      std::string id;
      for (std::size_t t = 0; t < f.size(); ++t) {
        if (t) id += ".";
        id += x.label(f[static_cast<std::size_t>(t)]);
      }
      pf.ext_id = id;
      pf.rank = static_cast<int>(li);
      if (li >= 2) {
        for (std::size_t t = 0; t < f.size(); ++t) {
          Face sub = f;
          sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(t));
          pf.covers.push_back(index.at(sub));
        }
      }
      index[f] = static_cast<int>(faces.size());
      faces.push_back(std::move(pf));
    }
  }
  return SimplicialPoset::from_faces(std::move(faces));
}

SimplicialPoset parallel_edges(int count) {
  if (count < 1) throw InputError("parallel_edges needs count >= 1");
  std::vector<PosetFace> faces;
  faces.push_back({"a", 1, {}});
  faces.push_back({"b", 1, {}});
  for (int i = 0; i < count; ++i) faces.push_back({"e" + std::to_string(i), 2, {0, 1}});
  return SimplicialPoset::from_faces(std::move(faces));
}

SimplicialPoset random_poset(int n, int max_dim, std::uint64_t seed) {
  SimplicialComplex base = random_complex(n, max_dim, seed);
  SimplicialPoset p = face_poset(base);
  // double a few faces of rank >= 2 to leave the simplicial-complex world
  Rng rng(seed, 2);
  std::vector<PosetFace> faces;
  for (int i = 0; i < p.size(); ++i) faces.push_back(p.face(i));
  int doubled = 0;
  for (int i = 0; i < p.size() && doubled < 2; ++i) {
    if (faces[static_cast<std::size_t>(i)].rank < 2) continue;
    if (rng.next_below(3) == 0) {
      PosetFace copy = faces[static_cast<std::size_t>(i)];
      copy.ext_id += "'";
      faces.push_back(std::move(copy));
      ++doubled;
    }
  }
  return SimplicialPoset::from_faces(std::move(faces));
}

}  // namespace mulab
