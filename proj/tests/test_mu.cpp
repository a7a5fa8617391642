#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "mulab/constructors.hpp"
#include "mulab/mu.hpp"
#include "mulab/util.hpp"

using namespace mulab;
using testutil::pr;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F3 = FieldSpec::prime(3);

// Brute-force link of v inside the restriction to W, from first principles:
// enumerate every face of the input, keep those inside W through v, strip v.
std::vector<Face> brute_restricted_link(const std::vector<Face>& facets, const Face& W,
                                        VertexId v) {
  std::set<Face> out;
  for (const Face& f : testutil::brute_faces(facets))
    if (face_contains_vertex(f, v) && face_subset(f, W)) out.insert(face_minus_vertex(f, v));
  return {out.begin(), out.end()};
}

MuVector brute_mu_ordering(const RelativePair& p, const Ordering& s, FieldSpec k) {
  const int dim = p.dim();
  MuVector out;
  out.field = k;
  out.mu.assign(static_cast<std::size_t>(dim + 1), Rational(0));
  PairFacets pf = p.facets();
  Face W;
  for (VertexId v : s.perm) {
    W = face_with_vertex(W, v);
    std::vector<Face> dl = brute_restricted_link(pf.delta, W, v);
    if (dl.empty()) continue;  // v in no face of the restriction
    std::vector<Face> gl = brute_restricted_link(pf.gamma, W, v);
    SimplicialComplex dc =
        SimplicialComplex::from_faces(dl, p.delta().labels(), /*allow_unused=*/true);
    RelativePair lk = RelativePair::with_gamma_facets(std::move(dc), gl);
    BettiVector b = reduced_betti(lk, k);
    for (int i = 0; i <= dim; ++i) out.mu[static_cast<std::size_t>(i)] += b.reduced_at(i - 1);
  }
  return out;
}

}  // namespace

TEST_CASE("mu of one ordering matches the brute-force definition") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    RelativePair p = random_pair(6, 3, seed);
    if (p.dim() < 0) continue;
    Rng rng(seed, 17);
    for (int t = 0; t < 3; ++t) {
      Ordering s = Ordering::identity(p.vertex_count());
      rng.shuffle(s.perm);
      for (FieldSpec k : {Q, F2}) {
        MuVector fast = mu_ordering(p, s, k);
        MuVector brute = brute_mu_ordering(p, s, k);
        REQUIRE(fast.mu.size() == brute.mu.size());
        for (std::size_t i = 0; i < fast.mu.size(); ++i) CHECK(fast.mu[i] == brute.mu[i]);
      }
    }
  }
}

TEST_CASE("averaged mu by the sigma identity equals literal permutation averaging") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    RelativePair p = random_pair(6, 3, seed);
    if (p.dim() < 0) continue;
    for (FieldSpec k : {Q, F2, F3}) {
      MuVector ex = mu_exact(p, k);
      MuVector en = mu_enumerated(p, k);
      REQUIRE(ex.mu.size() == en.mu.size());
      for (std::size_t i = 0; i < ex.mu.size(); ++i) CHECK(ex.mu[i] == en.mu[i]);
    }
  }
}

TEST_CASE("mu of spheres is concentrated at the ends") {
  for (int d = 1; d <= 3; ++d) {
    MuVector m = mu_exact(RelativePair(simplex_boundary(d).complex), Q);
    REQUIRE(m.mu.size() == static_cast<std::size_t>(d + 1));
    CHECK(m.mu.front() == 1);
    CHECK(m.mu.back() == 1);
    for (std::size_t i = 1; i + 1 < m.mu.size(); ++i) CHECK(m.mu[i] == 0);
  }
}

TEST_CASE("mu of the 4-cycle") {
  RelativePair p = pr({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
  MuVector m = mu_exact(p, Q);
  REQUIRE(m.mu.size() == 2);
  CHECK(m.mu[0] == Rational(4, 3));
  CHECK(m.mu[1] == Rational(4, 3));
  auto defects = morse_defect(p, m, Q);
  CHECK(defects[0] == Rational(1, 3));
  CHECK(defects[1] == 0);
}

TEST_CASE("Morse defects are nonnegative and vanish at the top") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    RelativePair p = random_pair(6, 3, seed);
    if (p.dim() < 0) continue;
    Rng rng(seed, 31);
    for (int t = 0; t < 4; ++t) {
      Ordering s = Ordering::identity(p.vertex_count());
      rng.shuffle(s.perm);
      for (FieldSpec k : {Q, F2}) {
        MuVector m = mu_ordering(p, s, k);
        auto defects = morse_defect(p, m, k);
        REQUIRE(defects.size() == m.mu.size());
        for (const auto& dft : defects) CHECK(dft >= 0);
        // the top defect is the Euler identity, an exact equality
        CHECK(defects.back() == 0);
      }
    }
  }
}

TEST_CASE("sampled mu is deterministic for a fixed seed and varies with the seed") {
  RelativePair p(csaszar_torus().complex);
  MuVector a = mu_sampled(p, Q, 40, 123);
  MuVector b = mu_sampled(p, Q, 40, 123);
  REQUIRE(a.mu.size() == b.mu.size());
  for (std::size_t i = 0; i < a.mu.size(); ++i) CHECK(a.mu[i] == b.mu[i]);
  CHECK(a.prov.stderrs.size() == a.mu.size());
  // a 2-neighborly complex gives the same mu under every ordering, so the
  // estimate has zero spread and already equals the exact value
  for (double s : a.prov.stderrs) CHECK(s == 0.0);
  MuVector ex = mu_exact(p, Q);
  REQUIRE(ex.mu.size() == a.mu.size());
  for (std::size_t i = 0; i < a.mu.size(); ++i) CHECK(a.mu[i] == ex.mu[i]);

  // a path has ordering-dependent mu, so different seeds land on
  // different averages
  RelativePair path = pr({{"a", "b"}, {"b", "c"}});
  MuVector c = mu_sampled(path, Q, 5, 123);
  MuVector d = mu_sampled(path, Q, 5, 124);
  REQUIRE(c.mu.size() == d.mu.size());
  bool same = true;
  for (std::size_t i = 0; i < c.mu.size(); ++i) same = same && c.mu[i] == d.mu[i];
  CHECK(!same);
}

TEST_CASE("enumeration budget") {
  SimplicialComplex big = cyclic_boundary(10).complex;
  CHECK_THROWS_AS(mu_enumerated(RelativePair(big), Q), ResourceError);
}

TEST_CASE("ordering validation") {
  RelativePair p = pr({{"a", "b"}});
  Ordering bad;
  bad.perm = {0, 0};
  CHECK_THROWS_AS(mu_ordering(p, bad, Q), InputError);
  Ordering offsize;
  offsize.perm = {0};
  CHECK_THROWS_AS(mu_ordering(p, offsize, Q), InputError);
}

TEST_CASE("mu respects the relative structure") {
  // cone minus its base: (cone over square, square) concentrates everything up top
  SimplicialComplex sq = pr({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}}).delta();
  SimplicialComplex cn = cone("t", sq);
  RelativePair p(cn, sq);
  MuVector m = mu_exact(p, Q);
  MuVector e = mu_enumerated(p, Q);
  REQUIRE(m.mu.size() == e.mu.size());
  for (std::size_t i = 0; i < m.mu.size(); ++i) CHECK(m.mu[i] == e.mu[i]);
  auto defects = morse_defect(p, m, Q);
  for (const auto& dft : defects) CHECK(dft >= 0);
}
