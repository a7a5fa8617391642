#include <doctest.h>

#include <cstdint>

#include "helpers.hpp"
#include "mulab/constructors.hpp"
#include "mulab/homology.hpp"
#include "mulab/pair.hpp"
#include "mulab/recognizers.hpp"
#include "mulab/util.hpp"

using namespace mulab;
using testutil::cx;

namespace {

const FieldSpec Q = FieldSpec::rationals();

std::int64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

Face face_of(const SimplicialComplex& x, std::initializer_list<const char*> labels) {
  Face f;
  for (const char* l : labels) f.push_back(x.id_of(l));
  std::sort(f.begin(), f.end());
  return f;
}

}  // namespace

TEST_CASE("simplex boundaries have binomial face counts") {
  for (int d = 1; d <= 4; ++d) {
    CertifiedComplex s = simplex_boundary(d);
    CHECK(s.complex.vertex_count() == d + 2);
    auto fh = f_h_vectors(RelativePair(s.complex));
    REQUIRE(static_cast<int>(fh.f.size()) == d + 2);
    for (int j = 0; j <= d + 1; ++j) CHECK(fh.f[static_cast<std::size_t>(j)] == binom(d + 2, j));
    CHECK(*s.cert.m == 0);
    CHECK(*s.cert.b1 == 0);
    if (d >= 2) CHECK(*s.cert.g2 == 0);
    CHECK(is_normal_pseudomanifold(s.complex).holds);
  }
  CHECK_THROWS_AS(simplex_boundary(-1), InputError);
}

TEST_CASE("connected sum of two 3-spheres is a 3-sphere") {
  CertifiedComplex a = simplex_boundary(3);
  CertifiedComplex b = simplex_boundary(3);
  Face fa = face_of(a.complex, {"v0", "v1", "v2", "v3"});
  CertifiedComplex s = connected_sum(a, b, fa, fa);
  CHECK(s.complex.vertex_count() == 6);
  CHECK(s.complex.facets().size() == 8);
  BettiVector bv = reduced_betti(s.complex, Q);
  CHECK(bv.reduced_at(0) == 0);
  CHECK(bv.reduced_at(1) == 0);
  CHECK(bv.reduced_at(2) == 0);
  CHECK(bv.reduced_at(3) == 1);
  CHECK(*s.cert.m == 0);
  CHECK(*s.cert.g2 == 0);
  CHECK(is_normal_pseudomanifold(s.complex).holds);

  CHECK_THROWS_AS(connected_sum(a, b, fa, Face{0, 1, 2}), InputError);
}

TEST_CASE("gluing two far-apart edges of a hexagon leaves a shorter cycle") {
  SimplicialComplex hex = cx({{"v0", "v1"}, {"v1", "v2"}, {"v2", "v3"},
                              {"v3", "v4"}, {"v4", "v5"}, {"v5", "v0"}});
  CertifiedComplex in{hex, {}};
  Face f1 = face_of(hex, {"v0", "v1"});
  Face f2 = face_of(hex, {"v3", "v4"});
  // both glued edges are removed, so the two remaining arcs close up into
  // a 4-cycle
  CertifiedComplex out = handle_addition(in, f1, f2);
  CHECK(out.complex.vertex_count() == 4);
  CHECK(out.complex.facets().size() == 4);
  BettiVector bv = reduced_betti(out.complex, Q);
  CHECK(bv.reduced_at(0) == 0);
  CHECK(bv.reduced_at(1) == 1);
}

TEST_CASE("antipodal facets of the octahedron are not an admissible handle pair") {
  SimplicialComplex oct = cx({{"a", "b", "c"}, {"A", "B", "C"},
                              {"a", "b", "C"}, {"a", "B", "c"}, {"A", "b", "c"},
                              {"a", "B", "C"}, {"A", "b", "C"}, {"A", "B", "c"}});
  CertifiedComplex in{oct, {}};
  Face f1 = face_of(oct, {"a", "b", "c"});
  Face f2 = face_of(oct, {"A", "B", "C"});
  CHECK_THROWS_AS(handle_addition(in, f1, f2), InputError);
  // overlapping facets are rejected outright
  SimplicialComplex s2 = simplex_boundary(2).complex;
  CHECK_THROWS_AS(handle_addition({s2, {}}, Face{0, 1, 2}, Face{1, 2, 3}), InputError);
}

TEST_CASE("stacked spheres and handle counts") {
  CertifiedComplex s = stacked_manifold(3, 2, 0, 5);
  CHECK(s.complex.vertex_count() == 7);
  CHECK(s.complex.facets().size() == 11);
  CHECK(*s.cert.m == 0);
  CHECK(*s.cert.g2 == 0);
  BettiVector bv = reduced_betti(s.complex, Q);
  CHECK(bv.reduced_at(3) == 1);
  CHECK(bv.reduced_at(1) == 0);

  CertifiedComplex h = stacked_manifold(3, 2, 1, 5);
  CHECK(*h.cert.m == 1);
  CHECK(*h.cert.b1 == 1);
  CHECK(*h.cert.g2 == 10);
  CHECK(is_normal_pseudomanifold(h.complex).holds);
  BettiVector hv = reduced_betti(h.complex, Q);
  CHECK(hv.reduced_at(0) == 0);
  CHECK(hv.reduced_at(1) == 1);
  CHECK(hv.reduced_at(2) == 1);
  CHECK(hv.reduced_at(3) == 1);
  auto fh = f_h_vectors(RelativePair(h.complex));
  CHECK(fh.g2() == 10);

  CertifiedComplex d4 = stacked_manifold(4, 3, 2, 9);
  CHECK(*d4.cert.g2 == 30);
  CHECK(f_h_vectors(RelativePair(d4.complex)).g2() == 30);
  CHECK(is_normal_pseudomanifold(d4.complex).holds);

  CHECK_THROWS_AS(stacked_manifold(1, 0, 0, 1), InputError);
}

TEST_CASE("cyclic polytope boundaries") {
  for (int n = 6; n <= 9; ++n) {
    CertifiedComplex c = cyclic_boundary(n);
    CHECK(c.complex.vertex_count() == n);
    CHECK(static_cast<int>(c.complex.facets().size()) == n * (n - 3) / 2);
    auto fh = f_h_vectors(RelativePair(c.complex));
    // 2-neighborly: every pair of vertices spans an edge
    CHECK(fh.f[2] == binom(n, 2));
    // Dehn-Sommerville symmetry of the h-vector
    REQUIRE(fh.h.size() == 5);
    CHECK(fh.h[0] == fh.h[4]);
    CHECK(fh.h[1] == fh.h[3]);
    CHECK(fh.g2() == *c.cert.g2);
    CHECK(*c.cert.g2 == binom(n, 2) - 4 * n + 10);
    BettiVector bv = reduced_betti(c.complex, Q);
    CHECK(bv.reduced_at(1) == 0);
    CHECK(bv.reduced_at(2) == 0);
    CHECK(bv.reduced_at(3) == 1);
    CHECK(is_normal_pseudomanifold(c.complex).holds);
  }
  CHECK_THROWS_AS(cyclic_boundary(5), InputError);
}

TEST_CASE("the two small fixed triangulations") {
  CertifiedComplex t = csaszar_torus();
  auto tf = f_h_vectors(RelativePair(t.complex));
  CHECK(tf.f == std::vector<std::int64_t>{1, 7, 21, 14});
  CHECK(*t.cert.m == 2);
  CHECK(*t.cert.b1 == 2);
  CHECK(is_normal_pseudomanifold(t.complex).holds);

  CertifiedComplex p = projective_plane_6();
  auto pf = f_h_vectors(RelativePair(p.complex));
  CHECK(pf.f == std::vector<std::int64_t>{1, 6, 15, 10});
  CHECK(*p.cert.m == 1);
  CHECK(is_normal_pseudomanifold(p.complex).holds);
}

TEST_CASE("random generators are deterministic in the seed") {
  for (std::uint64_t seed : {1ull, 42ull}) {
    CHECK(random_complex(6, 3, seed) == random_complex(6, 3, seed));
    RelativePair p = random_pair(6, 3, seed);
    RelativePair q = random_pair(6, 3, seed);
    CHECK(p.delta() == q.delta());
    CHECK(p.gamma_facets() == q.gamma_facets());
  }
  CHECK(!(random_complex(6, 3, 1) == random_complex(6, 3, 2)));
  CHECK(stacked_manifold(3, 3, 1, 4).complex == stacked_manifold(3, 3, 1, 4).complex);
}
