#include "mulab/mu.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "mulab/homology.hpp"

namespace mulab {

Ordering Ordering::identity(int n) {
  Ordering s;
  s.perm.resize(static_cast<std::size_t>(n));
  std::iota(s.perm.begin(), s.perm.end(), 0);
  return s;
}

void Ordering::validate(int n) const {
  if (static_cast<int>(perm.size()) != n)
    throw InputError("ordering has " + std::to_string(perm.size()) + " entries, expected " +
                     std::to_string(n));
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (VertexId v : perm) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
      throw InputError("ordering is not a permutation of 0.." + std::to_string(n - 1));
    seen[static_cast<std::size_t>(v)] = true;
  }
}

namespace {

// facets of lk(v, X restricted to W): maximal (F ∩ W) ∖ v over facets F ∋ v
std::vector<Face> restricted_link_facets(const std::vector<Face>& facets, const Face& w,
                                         VertexId v) {
  std::vector<Face> cand;
  for (const auto& f : facets) {
    if (!face_contains_vertex(f, v)) continue;
    Face fw = face_intersect(f, w);
    if (!face_contains_vertex(fw, v)) continue;  // cannot happen when v ∈ w
    cand.push_back(face_minus_vertex(fw, v));
  }
  return maximal_faces(std::move(cand));
}

std::vector<std::int64_t> step_betti(const PairFacets& p, const Face& w, VertexId v,
                                     FieldSpec field, const MuOptions& opt, int dim) {
  PairFacets lk{restricted_link_facets(p.delta, w, v),
                restricted_link_facets(p.gamma, w, v)};
  BettiVector b = reduced_betti(lk, field, opt.hom);
  std::vector<std::int64_t> out(static_cast<std::size_t>(dim) + 1, 0);
  for (int i = 0; i <= dim; ++i) out[static_cast<std::size_t>(i)] = b.reduced_at(i - 1);
  if (opt.debug_field_checks) {
    BettiVector b2 = reduced_betti(lk, FieldSpec::prime(2), opt.hom);
    BettiVector bq = reduced_betti(lk, FieldSpec::rationals(), opt.hom);
    for (int i = -1; i <= 0; ++i)
      if (b2.reduced_at(i) != bq.reduced_at(i) || b2.reduced_at(i) != b.reduced_at(i))
        throw std::logic_error("first two reduced Betti numbers depend on the field");
  }
  return out;
}

}  // namespace

MuVector mu_ordering(const RelativePair& p, const Ordering& s, FieldSpec field,
                     const MuOptions& opt) {
  const int n = p.vertex_count();
  s.validate(n);
  MuVector out;
  out.field = field;
  out.prov.method = MuMethod::ordering;
  out.prov.ordering = s;
  const int dim = p.dim();
  if (dim < 0) return out;
  out.mu.assign(static_cast<std::size_t>(dim) + 1, Rational(0));
  PairFacets pf = p.facets();
  Face w;
  for (int k = 0; k < n; ++k) {
    VertexId v = s.perm[static_cast<std::size_t>(k)];
    w = face_with_vertex(w, v);
    auto contrib = step_betti(pf, w, v, field, opt, dim);
    for (int i = 0; i <= dim; ++i) out.mu[static_cast<std::size_t>(i)] += contrib[i];
  }
  return out;
}

MuVector mu_exact(const RelativePair& p, FieldSpec field, const MuOptions& opt) {
  MuVector out;
  out.field = field;
  out.prov.method = MuMethod::exact;
  const int dim = p.dim();
  if (dim < 0) return out;
  out.mu.assign(static_cast<std::size_t>(dim) + 1, Rational(0));
  PairFacets pf = p.facets();
  for (VertexId v = 0; v < p.vertex_count(); ++v) {
    PairFacets lk = link_pair(pf, Face{v});
    SigmaVector sig = sigma_tilde(lk, field, opt);
    for (int i = 0; i <= dim; ++i) out.mu[static_cast<std::size_t>(i)] += sig.at_index(i - 1);
  }
  for (auto& q : out.mu) q.canonicalize();
  return out;
}

MuVector mu_enumerated(const RelativePair& p, FieldSpec field, const MuOptions& opt) {
  const int n = p.vertex_count();
  if (n > opt.enumerate_budget)
    throw ResourceError("permutation enumeration over " + std::to_string(n) +
                        " vertices exceeds budget " + std::to_string(opt.enumerate_budget));
  MuVector out;
  out.field = field;
  out.prov.method = MuMethod::enumerated;
  const int dim = p.dim();
  if (dim < 0) return out;
  out.mu.assign(static_cast<std::size_t>(dim) + 1, Rational(0));
  PairFacets pf = p.facets();

  // (prefix mask, last vertex) -> per-degree contributions; the link pair
  // only depends on that pair, not on the order inside the prefix
  std::unordered_map<std::uint64_t, std::vector<std::int64_t>> cache;
  std::vector<std::int64_t> total(static_cast<std::size_t>(dim) + 1, 0);

  std::vector<VertexId> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::int64_t count = 0;
  do {
    std::uint64_t wmask = 0;
    for (int k = 0; k < n; ++k) {
      VertexId v = perm[static_cast<std::size_t>(k)];
      wmask |= 1ULL << v;
      std::uint64_t key = (wmask << 6) | static_cast<std::uint64_t>(v);
      auto it = cache.find(key);
      if (it == cache.end()) {
        Face w = face_from_mask(wmask);
        it = cache.emplace(key, step_betti(pf, w, v, field, opt, dim)).first;
      }
      for (int i = 0; i <= dim; ++i) total[static_cast<std::size_t>(i)] += it->second[i];
    }
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));

  for (int i = 0; i <= dim; ++i) {
    Rational q(total[static_cast<std::size_t>(i)]);
    q /= Rational(count);
    q.canonicalize();
    out.mu[static_cast<std::size_t>(i)] = q;
  }
  return out;
}

MuVector mu_sampled(const RelativePair& p, FieldSpec field, std::int64_t samples,
                    std::uint64_t seed, const MuOptions& opt) {
  if (samples <= 0) throw InputError("sample count must be positive");
  const int n = p.vertex_count();
  MuVector out;
  out.field = field;
  out.prov.method = MuMethod::sampled;
  out.prov.samples = samples;
  out.prov.seed = seed;
  const int dim = p.dim();
  if (dim < 0) return out;

  std::vector<std::vector<std::int64_t>> draws(
      static_cast<std::size_t>(samples),
      std::vector<std::int64_t>(static_cast<std::size_t>(dim) + 1, 0));
  PairFacets pf = p.facets();
  parallel_chunks(samples, [&](std::int64_t begin, std::int64_t end, int) {
    for (std::int64_t si = begin; si < end; ++si) {
      Rng rng(seed, static_cast<std::uint64_t>(si));
      std::vector<VertexId> perm(static_cast<std::size_t>(n));
      std::iota(perm.begin(), perm.end(), 0);
      rng.shuffle(perm);
      Face w;
      for (int k = 0; k < n; ++k) {
        VertexId v = perm[static_cast<std::size_t>(k)];
        w = face_with_vertex(w, v);
        auto contrib = step_betti(pf, w, v, field, opt, dim);
        for (int i = 0; i <= dim; ++i)
          draws[static_cast<std::size_t>(si)][static_cast<std::size_t>(i)] += contrib[i];
      }
    }
  });

  out.mu.assign(static_cast<std::size_t>(dim) + 1, Rational(0));
  out.prov.stderrs.assign(static_cast<std::size_t>(dim) + 1, 0.0);
  for (int i = 0; i <= dim; ++i) {
    std::int64_t sum = 0;
    for (const auto& d : draws) sum += d[static_cast<std::size_t>(i)];
    Rational mean(sum);
    mean /= Rational(samples);
    mean.canonicalize();
    out.mu[static_cast<std::size_t>(i)] = mean;
    if (samples > 1) {
      double mu_d = mean.get_d(), ss = 0;
      for (const auto& d : draws) {
        double diff = static_cast<double>(d[static_cast<std::size_t>(i)]) - mu_d;
        ss += diff * diff;
      }
      out.prov.stderrs[static_cast<std::size_t>(i)] =
          std::sqrt(ss / (static_cast<double>(samples) * (static_cast<double>(samples) - 1)));
    }
  }
  return out;
}

std::vector<Rational> morse_defect(const RelativePair& p, const MuVector& mu, FieldSpec field,
                                   const MuOptions& opt) {
  const int dim = p.dim();
  if (dim < 0) return {};
  if (static_cast<int>(mu.mu.size()) != dim + 1)
    throw InputError("mu vector length does not match the pair dimension");
  BettiVector b = reduced_betti(p, field, opt.hom);
  std::vector<Rational> defect(static_cast<std::size_t>(dim) + 1, Rational(0));
  for (int i = 0; i <= dim; ++i) {
    Rational acc(0);
    for (int j = 0; j <= i; ++j) {
      Rational diff = mu.mu[static_cast<std::size_t>(j)] - Rational(b.unreduced_at(j));
      if ((i - j) % 2 == 0)
        acc += diff;
      else
        acc -= diff;
    }
    acc.canonicalize();
    defect[static_cast<std::size_t>(i)] = acc;
  }
  return defect;
}

}  // namespace mulab
