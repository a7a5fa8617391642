#include "mulab/homology.hpp"

#include <algorithm>
#include <optional>
#include <unordered_map>

#include "mulab/util.hpp"

namespace mulab {

std::int64_t BettiVector::reduced_at(int i) const {
  int idx = i + 1;
  if (idx < 0 || idx >= static_cast<int>(reduced.size())) return 0;
  return reduced[idx];
}

std::int64_t BettiVector::unreduced_at(int i) const {
  if (i < 0 || i >= static_cast<int>(unreduced.size())) return 0;
  return unreduced[i];
}

namespace {

void check_dd_zero(const SparseMatrix& lo, const SparseMatrix& hi) {
  // lo ∘ hi must vanish; entries are small so plain int accumulation is exact
  if (hi.cols == 0 || lo.cols == 0) return;
  for (int j = 0; j < hi.cols; ++j) {
    std::unordered_map<int, long long> acc;
    for (auto [mid, c1] : hi.col[j])
      for (auto [row, c2] : lo.col[mid]) acc[row] += static_cast<long long>(c1) * c2;
    for (auto& [row, v] : acc)
      if (v != 0) throw std::logic_error("boundary composition is nonzero");
  }
}

}  // namespace

ChainComplex boundary_matrices(const PairFacets& p, std::int64_t face_budget) {
  ChainComplex cc;
  cc.basis = pair_faces_by_dim(p, face_budget);
  cc.top_dim = static_cast<int>(cc.basis.size()) - 2;
  if (cc.basis.empty()) return cc;

  std::vector<std::unordered_map<Face, int, FaceHash>> index(cc.basis.size());
  for (std::size_t k = 0; k < cc.basis.size(); ++k)
    for (std::size_t i = 0; i < cc.basis[k].size(); ++i)
      index[k].emplace(cc.basis[k][i], static_cast<int>(i));

  cc.boundary.resize(cc.basis.size());
  for (std::size_t k = 0; k < cc.basis.size(); ++k) {
    SparseMatrix& m = cc.boundary[k];
    m.cols = static_cast<int>(cc.basis[k].size());
    m.rows = (k == 0) ? 0 : static_cast<int>(cc.basis[k - 1].size());
    m.col.resize(m.cols);
    if (k == 0) continue;
    for (int j = 0; j < m.cols; ++j) {
      const Face& f = cc.basis[k][j];
      for (std::size_t t = 0; t < f.size(); ++t) {
        Face sub = f;
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(t));
        auto it = index[k - 1].find(sub);
        if (it == index[k - 1].end()) continue;  // sub lies in Γ
        m.col[j].emplace_back(it->second, (t % 2 == 0) ? 1 : -1);
      }
      std::sort(m.col[j].begin(), m.col[j].end());
    }
  }
  for (std::size_t k = 1; k < cc.boundary.size(); ++k)
    check_dd_zero(cc.boundary[k - 1], cc.boundary[k]);
  return cc;
}

namespace {

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  // Fermat: a^(p-2) mod p
  std::uint64_t r = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = (__uint128_t)r * base % p;
    base = (__uint128_t)base * base % p;
    e >>= 1;
  }
  return r;
}

// rank over F_p by row-echelon elimination on a dense copy
int rank_dense_mod_p(const SparseMatrix& m, std::uint64_t p) {
  if (m.rows == 0 || m.cols == 0) return 0;
  std::vector<std::vector<std::uint64_t>> a(
      static_cast<std::size_t>(m.rows), std::vector<std::uint64_t>(m.cols, 0));
  for (int j = 0; j < m.cols; ++j)
    for (auto [i, c] : m.col[j])
      a[i][j] = static_cast<std::uint64_t>(((c % static_cast<int>(p)) + static_cast<int>(p)) %
                                           static_cast<int>(p));
  int rank = 0;
  for (int c = 0; c < m.cols && rank < m.rows; ++c) {
    int pivot = -1;
    for (int i = rank; i < m.rows; ++i)
      if (a[i][c] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    std::uint64_t inv = mod_inverse(a[rank][c], p);
    for (int i = rank + 1; i < m.rows; ++i) {
      if (a[i][c] == 0) continue;
      std::uint64_t f = (__uint128_t)a[i][c] * inv % p;
      for (int j = c; j < m.cols; ++j) {
        std::uint64_t sub = (__uint128_t)f * a[rank][j] % p;
        a[i][j] = (a[i][j] + p - sub) % p;
      }
    }
    ++rank;
  }
  return rank;
}

// fraction-free Bareiss over int64; returns nullopt when an intermediate
// value leaves the safe range
std::optional<int> rank_bareiss_i64(const SparseMatrix& m) {
  if (m.rows == 0 || m.cols == 0) return 0;
  std::vector<std::vector<std::int64_t>> a(
      static_cast<std::size_t>(m.rows), std::vector<std::int64_t>(m.cols, 0));
  for (int j = 0; j < m.cols; ++j)
    for (auto [i, c] : m.col[j]) a[i][j] = c;
  const std::int64_t LIMIT = (std::int64_t{1} << 62);
  std::int64_t prev = 1;
  int rank = 0;
  for (int c = 0; c < m.cols && rank < m.rows; ++c) {
    int pivot = -1;
    for (int i = rank; i < m.rows; ++i)
      if (a[i][c] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    for (int i = rank + 1; i < m.rows; ++i) {
      for (int j = c + 1; j < m.cols; ++j) {
        __int128 num = (__int128)a[rank][c] * a[i][j] - (__int128)a[i][c] * a[rank][j];
        __int128 q = num / prev;  // exact by Bareiss
        if (q > LIMIT || q < -LIMIT) return std::nullopt;
        a[i][j] = static_cast<std::int64_t>(q);
      }
      a[i][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

int rank_bareiss_mpz(const SparseMatrix& m) {
  if (m.rows == 0 || m.cols == 0) return 0;
  std::vector<std::vector<mpz_class>> a(
      static_cast<std::size_t>(m.rows), std::vector<mpz_class>(m.cols));
  for (int j = 0; j < m.cols; ++j)
    for (auto [i, c] : m.col[j]) a[i][j] = c;
  mpz_class prev = 1;
  int rank = 0;
  for (int c = 0; c < m.cols && rank < m.rows; ++c) {
    int pivot = -1;
    for (int i = rank; i < m.rows; ++i)
      if (a[i][c] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    for (int i = rank + 1; i < m.rows; ++i) {
      for (int j = c + 1; j < m.cols; ++j) {
        mpz_class num = a[rank][c] * a[i][j] - a[i][c] * a[rank][j];
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = q;
      }
      a[i][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

}  // namespace

int rank_mod_p(const SparseMatrix& m, std::uint32_t p) { return rank_dense_mod_p(m, p); }

int rank_rational(const SparseMatrix& m, std::string* path) {
  if (auto r = rank_bareiss_i64(m)) {
    if (path) *path = "bareiss";
    return *r;
  }
  if (path) *path = "bareiss-mpz";
  return rank_bareiss_mpz(m);
}

int matrix_rank(const SparseMatrix& m, FieldSpec k, const HomologyOptions& opt,
                std::string* path) {
  if (!k.is_rational()) {
    if (path) *path = "";
    return rank_mod_p(m, k.p);
  }
  if (opt.rational_fast_path) {
    // rank mod p is a lower bound for the rational rank; agreement of two
    // large primes is strong evidence but not a proof, hence the marker
    int r1 = rank_dense_mod_p(m, 2147483629u);
    int r2 = rank_dense_mod_p(m, 2147483587u);
    if (r1 == r2) {
      if (path) *path = "modular";
      return r1;
    }
  }
  return rank_rational(m, path);
}

BettiVector reduced_betti(const PairFacets& p, FieldSpec k, const HomologyOptions& opt) {
  BettiVector out;
  out.field = k;
  ChainComplex cc = boundary_matrices(p, opt.face_budget);
  out.top_dim = cc.top_dim;
  if (cc.basis.empty()) return out;

  const std::size_t levels = cc.basis.size();
  std::vector<int> rk(levels + 1, 0);
  std::string worst_path;
  for (std::size_t i = 0; i < levels; ++i) {
    std::string path;
    rk[i] = matrix_rank(cc.boundary[i], k, opt, &path);
    // keep the weakest guarantee seen across all levels
    auto strength = [](const std::string& s) {
      if (s == "modular") return 2;
      if (s == "bareiss-mpz") return 1;
      return 0;
    };
    if (k.is_rational() && (worst_path.empty() || strength(path) > strength(worst_path)))
      worst_path = path;
  }
  out.rational_path = k.is_rational() ? worst_path : "";

  out.reduced.resize(levels);
  for (std::size_t i = 0; i < levels; ++i) {
    std::int64_t dim_ci = static_cast<std::int64_t>(cc.basis[i].size());
    out.reduced[i] = dim_ci - rk[i] - rk[i + 1];
  }

  // unreduced: only a void Γ (augmented complex with ∅ present) differs
  const bool gamma_void = !cc.basis[0].empty() && cc.basis[0][0].empty();
  if (out.top_dim >= 0) {
    out.unreduced.assign(static_cast<std::size_t>(out.top_dim) + 1, 0);
    for (int i = 0; i <= out.top_dim; ++i) out.unreduced[i] = out.reduced_at(i);
    if (gamma_void) out.unreduced[0] = out.reduced_at(0) + 1 - out.reduced_at(-1);
  }
  return out;
}

BettiVector reduced_betti(const RelativePair& p, FieldSpec k, const HomologyOptions& opt) {
  return reduced_betti(p.facets(), k, opt);
}

BettiVector reduced_betti(const SimplicialComplex& x, FieldSpec k, const HomologyOptions& opt) {
  return reduced_betti(PairFacets{x.facets(), {}}, k, opt);
}

}  // namespace mulab
