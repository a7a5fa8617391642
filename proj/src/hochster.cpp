#include "mulab/hochster.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

namespace mulab {

std::int64_t GradedBettiTable::at(int a, int k) const {
  auto it = beta.find({a, k});
  return it == beta.end() ? 0 : it->second;
}

Rational SigmaVector::at_index(int i_minus_1) const {
  int idx = i_minus_1 + 1;
  if (idx < 0 || idx >= static_cast<int>(sigma.size())) return 0;
  return sigma[idx];
}

namespace {

// Faces of Δ∖Γ re-coded as bitmasks over positions in `universe`, with the
// boundary relation precomputed once; the 2^n loop then only filters by mask.
struct RelFaceTable {
  int n = 0;
  int levels = 0;                       // pair dim + 2
  std::vector<std::uint64_t> mask;      // per gid, grouped by level
  std::vector<int> level_of;            // per gid
  std::vector<int> level_begin;         // size levels+1
  std::vector<std::vector<std::pair<int, int>>> sub;  // gid -> (sub gid, sign)
};

RelFaceTable build_table(const PairFacets& p, const Face& universe, const MuOptions& opt) {
  RelFaceTable t;
  t.n = static_cast<int>(universe.size());
  if (t.n > opt.subset_budget)
    throw ResourceError("subset enumeration over " + std::to_string(t.n) +
                        " vertices exceeds budget " + std::to_string(opt.subset_budget));
  std::unordered_map<VertexId, int> pos;
  for (int i = 0; i < t.n; ++i) pos[universe[i]] = i;

  auto levels = pair_faces_by_dim(p, opt.hom.face_budget);
  t.levels = static_cast<int>(levels.size());
  t.level_begin.assign(t.levels + 1, 0);
  std::unordered_map<std::uint64_t, int> gid_of;
  for (int l = 0; l < t.levels; ++l) {
    t.level_begin[l] = static_cast<int>(t.mask.size());
    for (const auto& f : levels[l]) {
      std::uint64_t m = 0;
      for (VertexId v : f) {
        auto it = pos.find(v);
        if (it == pos.end()) throw InputError("face vertex outside the given universe");
        m |= 1ULL << it->second;
      }
      gid_of[m] = static_cast<int>(t.mask.size());
      t.mask.push_back(m);
      t.level_of.push_back(l);
    }
  }
  t.level_begin[t.levels] = static_cast<int>(t.mask.size());

  t.sub.resize(t.mask.size());
  for (std::size_t g = 0; g < t.mask.size(); ++g) {
    std::uint64_t m = t.mask[g];
    int seen = 0;
    for (std::uint64_t rest = m; rest; rest &= rest - 1, ++seen) {
      std::uint64_t bit = rest & (~rest + 1);
      auto it = gid_of.find(m ^ bit);
      if (it != gid_of.end())
        t.sub[g].emplace_back(it->second, (seen % 2 == 0) ? 1 : -1);
    }
  }
  return t;
}

// scratch reused across subsets within one worker
struct SubsetScratch {
  std::vector<int> local;        // gid -> local column index, valid for collected gids
  std::vector<std::vector<int>> collected;  // per level, gids in table order
  std::map<std::pair<int, int>, std::int64_t> acc;
};

void process_subset(const RelFaceTable& t, std::uint64_t w, FieldSpec field,
                    const MuOptions& opt, SubsetScratch& s) {
  for (auto& level : s.collected) level.clear();
  bool any = false;
  for (std::size_t g = 0; g < t.mask.size(); ++g) {
    if ((t.mask[g] & ~w) != 0) continue;
    s.local[g] = static_cast<int>(s.collected[t.level_of[g]].size());
    s.collected[t.level_of[g]].push_back(static_cast<int>(g));
    any = true;
  }
  if (!any) return;
  const int k = __builtin_popcountll(w);

  std::vector<int> rk(t.levels + 1, 0);
  for (int l = 1; l < t.levels; ++l) {
    if (s.collected[l].empty() || s.collected[l - 1].empty()) continue;
    SparseMatrix m;
    m.rows = static_cast<int>(s.collected[l - 1].size());
    m.cols = static_cast<int>(s.collected[l].size());
    m.col.resize(m.cols);
    for (int j = 0; j < m.cols; ++j) {
      for (auto [sg, sign] : t.sub[s.collected[l][j]])
        m.col[j].emplace_back(s.local[sg], sign);
      std::sort(m.col[j].begin(), m.col[j].end());
    }
    rk[l] = matrix_rank(m, field, opt.hom, nullptr);
  }
  for (int l = 0; l < t.levels; ++l) {
    std::int64_t b = static_cast<std::int64_t>(s.collected[l].size()) - rk[l] - rk[l + 1];
    if (b != 0) {
      // reduced degree l-1 at subset size k lands in β_{k-l, k}
      s.acc[{k - l, k}] += b;
    }
  }
}

}  // namespace

GradedBettiTable graded_betti_over(const PairFacets& p, const Face& universe, FieldSpec field,
                                   const MuOptions& opt) {
  GradedBettiTable out;
  out.n = static_cast<int>(universe.size());
  out.field = field;
  if (p.delta.empty()) return out;
  RelFaceTable t = build_table(p, universe, opt);

  const std::uint64_t total = 1ULL << t.n;
  std::vector<std::map<std::pair<int, int>, std::int64_t>> partial;
  std::mutex mtx;
  parallel_chunks(static_cast<std::int64_t>(total),
                  [&](std::int64_t begin, std::int64_t end, int chunk) {
                    SubsetScratch s;
                    s.local.resize(t.mask.size());
                    s.collected.resize(t.levels);
                    for (std::int64_t w = begin; w < end; ++w)
                      process_subset(t, static_cast<std::uint64_t>(w), field, opt, s);
                    std::lock_guard<std::mutex> lk(mtx);
                    if (static_cast<int>(partial.size()) <= chunk) partial.resize(chunk + 1);
                    partial[chunk] = std::move(s.acc);
                  });
  for (const auto& part : partial)
    for (const auto& [key, v] : part) out.beta[key] += v;
  return out;
}

GradedBettiTable graded_betti(const RelativePair& p, FieldSpec k, const MuOptions& opt) {
  Face universe(static_cast<std::size_t>(p.vertex_count()));
  for (int i = 0; i < p.vertex_count(); ++i) universe[static_cast<std::size_t>(i)] = i;
  return graded_betti_over(p.facets(), universe, k, opt);
}

SigmaVector sigma_from_table(const GradedBettiTable& t, int pair_dim) {
  SigmaVector out;
  out.field = t.field;
  out.n = t.n;
  if (pair_dim < -1) return out;
  out.sigma.assign(static_cast<std::size_t>(pair_dim) + 2, Rational(0));
  const int n = t.n;
  for (int idx = 0; idx < static_cast<int>(out.sigma.size()); ++idx) {
    const int i = idx;  // σ~_{i-1} with i = idx
    Rational acc(0);
    for (int k = 0; k <= n; ++k) {
      std::int64_t b = t.at(k - i, k);
      if (b == 0) continue;
      Rational term(b);
      term /= Rational(binom_mpz(n, k));
      acc += term;
    }
    acc /= Rational(n + 1);
    acc.canonicalize();
    out.sigma[static_cast<std::size_t>(idx)] = acc;
  }
  return out;
}

SigmaVector sigma_tilde(const PairFacets& p, FieldSpec k, const MuOptions& opt) {
  Face universe = facets_ops::support(p.delta);
  GradedBettiTable t = graded_betti_over(p, universe, k, opt);
  return sigma_from_table(t, pair_dim(p));
}

SigmaVector sigma_tilde(const RelativePair& p, FieldSpec k, const MuOptions& opt) {
  GradedBettiTable t = graded_betti(p, k, opt);
  return sigma_from_table(t, p.dim());
}

}  // namespace mulab
