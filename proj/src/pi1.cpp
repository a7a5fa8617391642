#include "mulab/pi1.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "mulab/homology.hpp"
#include "mulab/util.hpp"

namespace mulab {

namespace {

std::vector<int> inv_word(const std::vector<int>& w) {
  std::vector<int> out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

std::vector<int> free_reduce(const std::vector<int>& w) {
  std::vector<int> out;
  out.reserve(w.size());
  for (int x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

std::vector<int> cyclic_reduce(std::vector<int> w) {
  w = free_reduce(w);
  while (w.size() >= 2 && w.front() == -w.back()) {
    w.erase(w.begin());
    w.pop_back();
    w = free_reduce(w);
  }
  return w;
}

// canonical representative of a relator up to rotation and inversion
std::vector<int> cyclic_canonical(const std::vector<int>& w) {
  if (w.empty()) return w;
  std::vector<int> best = w;
  auto consider = [&](const std::vector<int>& u) {
    std::vector<int> rot = u;
    for (std::size_t k = 0; k < u.size(); ++k) {
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      if (rot < best) best = rot;
    }
  };
  std::vector<int> w2 = w;
  if (w2 < best) best = w2;
  consider(w2);
  std::vector<int> wi = inv_word(w);
  if (wi < best) best = wi;
  consider(wi);
  return best;
}

}  // namespace

GroupPresentation edge_path_presentation(const SimplicialComplex& x) {
  const int n = x.vertex_count();
  if (n == 0) throw InputError("fundamental group needs a nonempty complex");
  if (connected_components(x).size() != 1)
    throw InputError("fundamental group bracket needs a connected complex");

  auto levels = x.faces_by_dim();
  std::vector<Face> edges = levels.size() > 2 ? levels[2] : std::vector<Face>{};
  std::vector<Face> triangles = levels.size() > 3 ? levels[3] : std::vector<Face>{};

  // BFS spanning tree from vertex 0
  std::vector<std::vector<VertexId>> adj(static_cast<std::size_t>(n));
  for (const auto& e : edges) {
    adj[static_cast<std::size_t>(e[0])].push_back(e[1]);
    adj[static_cast<std::size_t>(e[1])].push_back(e[0]);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  std::set<Face> tree;
  std::vector<bool> visited(static_cast<std::size_t>(n), false);
  std::deque<VertexId> queue{0};
  visited[0] = true;
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    for (VertexId v : adj[static_cast<std::size_t>(u)]) {
      if (visited[static_cast<std::size_t>(v)]) continue;
      visited[static_cast<std::size_t>(v)] = true;
      tree.insert(make_face({u, v}));
      queue.push_back(v);
    }
  }

  GroupPresentation g;
  std::map<Face, int> gen_of;
  for (const auto& e : edges) {
    if (tree.count(e)) continue;
    gen_of[e] = g.generators();
    g.generator_names.push_back("x" + std::to_string(e[0]) + "_" + std::to_string(e[1]));
  }
  // directed edge u->v contributes the generator of {u,v} with sign +1 when
  // u < v; tree edges contribute nothing
  auto letter = [&](VertexId u, VertexId v) -> int {
    Face e = make_face({u, v});
    auto it = gen_of.find(e);
    if (it == gen_of.end()) return 0;
    int base = it->second + 1;
    return u < v ? base : -base;
  };
  for (const auto& t : triangles) {
    std::vector<int> w;
    for (auto [u, v] : {std::pair{t[0], t[1]}, {t[1], t[2]}, {t[2], t[0]}}) {
      int l = letter(u, v);
      if (l != 0) w.push_back(l);
    }
    g.relators.push_back(cyclic_reduce(w));
  }
  return g;
}

namespace {

void drop_generator(GroupPresentation& g, int gen) {
  // relator entries referencing `gen` must already be gone
  g.generator_names.erase(g.generator_names.begin() + gen);
  for (auto& r : g.relators)
    for (int& x : r) {
      int idx = std::abs(x) - 1;
      if (idx > gen) x = (x > 0) ? x - 1 : x + 1;
    }
}

std::vector<int> substitute(const std::vector<int>& word, int gen,
                            const std::vector<int>& rep) {
  std::vector<int> out;
  out.reserve(word.size() * (rep.size() + 1));
  const int plus = gen + 1;
  std::vector<int> rep_inv = inv_word(rep);
  for (int x : word) {
    if (x == plus)
      out.insert(out.end(), rep.begin(), rep.end());
    else if (x == -plus)
      out.insert(out.end(), rep_inv.begin(), rep_inv.end());
    else
      out.push_back(x);
  }
  return free_reduce(out);
}

}  // namespace

SimplifyResult tietze_simplify(const GroupPresentation& input, std::int64_t move_budget) {
  SimplifyResult res;
  res.pres = input;
  GroupPresentation& g = res.pres;
  auto spend = [&]() -> bool {
    if (res.moves >= move_budget) {
      res.exhausted = true;
      return false;
    }
    ++res.moves;
    return true;
  };

  bool progress = true;
  while (progress && !res.exhausted) {
    progress = false;

    // normalize: cyclic reduction, drop trivial, dedupe up to rotation/inversion
    {
      std::vector<std::vector<int>> kept;
      std::set<std::vector<int>> seen;
      bool changed = false;
      for (const auto& r : g.relators) {
        std::vector<int> c = cyclic_reduce(r);
        if (c.size() != r.size()) changed = true;
        if (c.empty()) {
          changed = true;
          continue;
        }
        if (!seen.insert(cyclic_canonical(c)).second) {
          changed = true;
          continue;
        }
        kept.push_back(std::move(c));
      }
      if (changed) {
        g.relators = std::move(kept);
        if (!spend()) break;
        progress = true;
      }
    }

    // eliminate via a relator in which some generator appears exactly once
    {
      // candidate scoring: shortest relator, then fewest outside occurrences
      long best_score_len = -1, best_other = 0;
      int best_gen = -1, best_rel = -1;
      std::vector<std::vector<int>> occ_count(
          g.relators.size(), std::vector<int>(static_cast<std::size_t>(g.generators()), 0));
      for (std::size_t ri = 0; ri < g.relators.size(); ++ri)
        for (int x : g.relators[ri]) ++occ_count[ri][static_cast<std::size_t>(std::abs(x) - 1)];
      for (std::size_t ri = 0; ri < g.relators.size(); ++ri) {
        for (int gen = 0; gen < g.generators(); ++gen) {
          if (occ_count[ri][static_cast<std::size_t>(gen)] != 1) continue;
          long other = 0;
          for (std::size_t rj = 0; rj < g.relators.size(); ++rj)
            if (rj != ri) other += occ_count[rj][static_cast<std::size_t>(gen)];
          long len = static_cast<long>(g.relators[ri].size());
          if (best_gen < 0 || std::tie(len, other, gen) <
                                  std::tie(best_score_len, best_other, best_gen)) {
            best_score_len = len;
            best_other = other;
            best_gen = gen;
            best_rel = static_cast<int>(ri);
          }
        }
      }
      if (best_gen >= 0) {
        if (!spend()) break;
        std::vector<int> r = g.relators[static_cast<std::size_t>(best_rel)];
        // rotate so ±best_gen comes first
        std::size_t pos = 0;
        while (std::abs(r[pos]) != best_gen + 1) ++pos;
        std::rotate(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(pos), r.end());
        std::vector<int> w(r.begin() + 1, r.end());
        std::vector<int> rep = (r[0] > 0) ? inv_word(w) : w;
        g.relators.erase(g.relators.begin() + best_rel);
        for (auto& s : g.relators) s = substitute(s, best_gen, rep);
        for (auto& s : g.relators) s = cyclic_reduce(s);
        drop_generator(g, best_gen);
        progress = true;
        continue;
      }
    }

    // drop generators that occur in no relator only when they cannot matter:
    // they are free factors and stay (they witness rank), so no move here

    // shorten a relator using a longer-than-half overlap with another
    {
      bool applied = false;
      for (std::size_t ri = 0; ri < g.relators.size() && !applied; ++ri) {
        const std::vector<int>& r = g.relators[ri];
        const std::size_t L = r.size();
        if (L < 2) continue;
        std::vector<std::vector<int>> rotations;
        for (const std::vector<int>& base : {r, inv_word(r)}) {
          std::vector<int> rot = base;
          for (std::size_t k = 0; k < L; ++k) {
            rotations.push_back(rot);
            std::rotate(rot.begin(), rot.begin() + 1, rot.end());
          }
        }
        for (std::size_t t = L - 1; t > L / 2 && !applied; --t) {
          for (std::size_t sj = 0; sj < g.relators.size() && !applied; ++sj) {
            if (sj == ri) continue;
            std::vector<int>& s = g.relators[sj];
            if (s.size() < t) continue;
            for (const auto& u : rotations) {
              auto it = std::search(s.begin(), s.end(), u.begin(),
                                    u.begin() + static_cast<std::ptrdiff_t>(t));
              if (it == s.end()) continue;
              // u = p q with |p| = t; p occurs in s; p = q^{-1} as group
              // elements, so replace the occurrence by q^{-1}
              std::vector<int> q(u.begin() + static_cast<std::ptrdiff_t>(t), u.end());
              std::vector<int> qinv = inv_word(q);
              std::vector<int> ns(s.begin(), it);
              ns.insert(ns.end(), qinv.begin(), qinv.end());
              ns.insert(ns.end(), it + static_cast<std::ptrdiff_t>(t), s.end());
              ns = cyclic_reduce(ns);
              if (ns.size() >= s.size()) continue;
              if (!spend()) break;
              s = std::move(ns);
              applied = true;
              progress = true;
              break;
            }
          }
        }
      }
      if (res.exhausted) break;
      if (applied) continue;
    }
  }

  return res;
}

std::vector<std::vector<std::int64_t>> exponent_matrix(const GroupPresentation& g) {
  std::vector<std::vector<std::int64_t>> m(
      g.relators.size(), std::vector<std::int64_t>(static_cast<std::size_t>(g.generators()), 0));
  for (std::size_t ri = 0; ri < g.relators.size(); ++ri)
    for (int x : g.relators[ri]) m[ri][static_cast<std::size_t>(std::abs(x) - 1)] +=
        (x > 0) ? 1 : -1;
  return m;
}

int abelianization_corank(const GroupPresentation& g, std::uint32_t p) {
  auto m = exponent_matrix(g);
  const int rows = static_cast<int>(m.size());
  const int cols = g.generators();
  std::vector<std::vector<std::int64_t>> a(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    a[i].resize(static_cast<std::size_t>(cols));
    for (int j = 0; j < cols; ++j) {
      std::int64_t v = m[i][static_cast<std::size_t>(j)] % static_cast<std::int64_t>(p);
      if (v < 0) v += p;
      a[i][static_cast<std::size_t>(j)] = v;
    }
  }
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int i = rank; i < rows; ++i)
      if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[static_cast<std::size_t>(rank)], a[static_cast<std::size_t>(pivot)]);
    // scale-free elimination mod p
    std::int64_t inv = 1, base = a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)],
                 e = p - 2;
    while (e) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    for (int i = rank + 1; i < rows; ++i) {
      std::int64_t f = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] * inv % p;
      if (f == 0) continue;
      for (int j = c; j < cols; ++j) {
        auto& cell = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        cell = (cell - f * a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)]) % p;
        if (cell < 0) cell += p;
      }
    }
    ++rank;
  }
  return cols - rank;
}

MBracket m_bracket(const SimplicialComplex& x, const std::vector<std::uint32_t>& primes,
                   std::int64_t move_budget) {
  MBracket out;
  BettiVector bq = reduced_betti(x, FieldSpec::rationals());
  out.h1_by_field["q"] = bq.reduced_at(1);
  out.lower = bq.reduced_at(1);
  for (std::uint32_t p : primes) {
    BettiVector bp = reduced_betti(x, FieldSpec::prime(p));
    out.h1_by_field["p:" + std::to_string(p)] = bp.reduced_at(1);
    out.lower = std::max(out.lower, bp.reduced_at(1));
  }
  GroupPresentation g = edge_path_presentation(x);
  SimplifyResult s = tietze_simplify(g, move_budget);
  out.upper = s.pres.generators();
  out.moves = s.moves;
  out.budget_exhausted = s.exhausted;
  out.exact = !s.exhausted && out.lower == out.upper;
  if (out.upper < out.lower)
    throw std::logic_error("fundamental group bracket inverted: upper < lower");
  return out;
}

}  // namespace mulab
