#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "mulab/constructors.hpp"
#include "mulab/homology.hpp"
#include "mulab/mu.hpp"
#include "mulab/pair.hpp"
#include "mulab/poset.hpp"
#include "mulab/util.hpp"

using namespace mulab;
using testutil::cx;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);

std::vector<Rational> ratvec(const std::vector<long>& v) {
  return std::vector<Rational>(v.begin(), v.end());
}

// id-space helper: gamma facets of an edge ideal as sd faces
Face sdface(std::initializer_list<int> ids) {
  Face f(ids);
  std::sort(f.begin(), f.end());
  return f;
}

RelativePair sd_as_pair(const PosetPair& p) {
  return RelativePair::with_gamma_facets(barycentric_subdivision(p.delta), sd_gamma_facets(p));
}

}  // namespace

TEST_CASE("parallel edges form a simplicial poset that is not a complex") {
  SimplicialPoset p = parallel_edges(3);
  CHECK(p.size() == 5);
  CHECK(p.dim() == 1);
  CHECK(p.vertex_count() == 2);
  CHECK(p.rank_counts() == std::vector<std::int64_t>{1, 2, 3});
  CHECK(p.face_index("a") == 0);
  CHECK(p.face_index("e2") == 4);
  CHECK(p.face_index("zzz") == -1);
  for (int e = 2; e <= 4; ++e) {
    CHECK(p.face(e).rank == 2);
    CHECK(p.vertex_set(e) == Face{0, 1});
    CHECK(p.leq(p.vertex_face(0), e));
    CHECK(p.leq(p.vertex_face(1), e));
    CHECK_FALSE(p.leq(e, p.vertex_face(0)));
  }
  CHECK_FALSE(p.leq(2, 3));
  CHECK_THROWS_AS(parallel_edges(0), InputError);
}

TEST_CASE("face validation rejects malformed posets") {
  auto build = [](std::vector<PosetFace> fs) { return SimplicialPoset::from_faces(std::move(fs)); };
  CHECK_THROWS_AS(build({{"a", 0, {}}}), InputError);
  CHECK_THROWS_AS(build({{"", 1, {}}}), InputError);
  CHECK_THROWS_AS(build({{"a", 1, {}}, {"a", 1, {}}}), InputError);
  CHECK_THROWS_AS(build({{"a", 1, {}}, {"b", 1, {0}}}), InputError);
  CHECK_THROWS_AS(build({{"a", 1, {}}, {"b", 1, {}}, {"e", 2, {0}}}), InputError);
  CHECK_THROWS_AS(build({{"a", 1, {}}, {"e", 2, {0, 0}}}), InputError);
  CHECK_THROWS_AS(build({{"a", 1, {}}, {"e", 2, {0, 9}}}), InputError);
  // covers of a rank-3 face span four vertices
  CHECK_THROWS_AS(build({{"a", 1, {}},
                         {"b", 1, {}},
                         {"c", 1, {}},
                         {"d", 1, {}},
                         {"ab", 2, {0, 1}},
                         {"bc", 2, {1, 2}},
                         {"bd", 2, {1, 3}},
                         {"t", 3, {4, 5, 6}}}),
                  InputError);
}

TEST_CASE("ideals must be lower closed") {
  SimplicialPoset p = parallel_edges(3);
  CHECK_THROWS_AS(PosetPair::with_ideal(p, {2}), InputError);
  CHECK_THROWS_AS(PosetPair::with_ideal(p, {0, 5}), InputError);

  PosetPair whole = PosetPair::whole(p);
  CHECK_FALSE(whole.gamma_has_min);
  CHECK(whole.dim() == 1);

  PosetPair just_min = PosetPair::with_ideal(p, {});
  CHECK(just_min.gamma_has_min);
  CHECK(just_min.dim() == 1);
  CHECK(std::count(just_min.gamma.begin(), just_min.gamma.end(), true) == 0);

  PosetPair edge = PosetPair::with_ideal(p, {0, 1, 2});
  CHECK(edge.gamma[2]);
  CHECK_FALSE(edge.gamma[3]);
  CHECK(edge.dim() == 1);
}

TEST_CASE("f and h vectors of the parallel-edge pairs") {
  SimplicialPoset p = parallel_edges(3);
  FHVectors whole = poset_f_h(PosetPair::whole(p));
  CHECK(whole.f == std::vector<std::int64_t>{1, 2, 3});
  CHECK(whole.h == std::vector<std::int64_t>{1, 0, 2});
  CHECK(whole.d == 2);
  CHECK(whole.g2() == 2);

  FHVectors wide = poset_f_h(PosetPair::whole(p), 3);
  CHECK(wide.h == std::vector<std::int64_t>{1, -1, 2, -2});
  CHECK_THROWS_AS(poset_f_h(PosetPair::whole(p), 1), InputError);

  FHVectors rel = poset_f_h(PosetPair::with_ideal(p, {}));
  CHECK(rel.f == std::vector<std::int64_t>{0, 2, 3});
  CHECK(rel.h == std::vector<std::int64_t>{0, 2, 1});

  FHVectors edge = poset_f_h(PosetPair::with_ideal(p, {0, 1, 2}));
  CHECK(edge.f == std::vector<std::int64_t>{0, 0, 2});
  CHECK(edge.h == std::vector<std::int64_t>{0, 0, 2});
}

TEST_CASE("homology of the parallel-edge pairs") {
  SimplicialPoset p = parallel_edges(3);
  for (FieldSpec k : {Q, F2}) {
    BettiVector whole = poset_betti(PosetPair::whole(p), k);
    CHECK(whole.reduced_at(-1) == 0);
    CHECK(whole.reduced_at(0) == 0);
    CHECK(whole.reduced_at(1) == 2);

    BettiVector rel = poset_betti(PosetPair::with_ideal(p, {}), k);
    CHECK(rel.reduced_at(0) == 1);
    CHECK(rel.reduced_at(1) == 2);

    BettiVector edge = poset_betti(PosetPair::with_ideal(p, {0, 1, 2}), k);
    CHECK(edge.reduced_at(0) == 0);
    CHECK(edge.reduced_at(1) == 2);
  }
}

TEST_CASE("restrictions keep doubled faces and reach the empty poset") {
  PosetPair whole = PosetPair::whole(parallel_edges(3));
  PosetPair both = poset_restrict(whole, {0, 1});
  CHECK(both.delta.size() == 5);

  PosetPair one = poset_restrict(whole, {0});
  CHECK(one.delta.size() == 1);
  CHECK(poset_betti(one, Q).reduced_at(0) == 0);

  PosetPair none = poset_restrict(whole, {});
  CHECK(none.delta.size() == 0);
  CHECK(none.dim() == -1);
  CHECK(poset_betti(none, Q).reduced_at(-1) == 1);
}

TEST_CASE("subdivision of parallel edges is a graph with two loops") {
  SimplicialPoset p = parallel_edges(3);
  SimplicialComplex sd = barycentric_subdivision(p);
  CHECK(sd.vertex_count() == 5);
  CHECK(sd.label(0) == "a");
  CHECK(sd.label(4) == "e2");
  CHECK(sd.facets().size() == 6);
  for (const Face& f : sd.facets()) CHECK(f.size() == 2);
  BettiVector b = reduced_betti(sd, Q);
  CHECK(b.reduced_at(0) == 0);
  CHECK(b.reduced_at(1) == 2);

  CHECK(sd_gamma_facets(PosetPair::whole(p)).empty());
  CHECK(sd_gamma_facets(PosetPair::with_ideal(p, {})) == std::vector<Face>{Face{}});
  std::vector<Face> eg = sd_gamma_facets(PosetPair::with_ideal(p, {0, 1, 2}));
  std::sort(eg.begin(), eg.end(), face_less);
  CHECK(eg == std::vector<Face>{sdface({0, 2}), sdface({1, 2})});

  PairFacets pf = sd_pair(PosetPair::whole(p));
  CHECK(pf.delta == sd.facets());
  CHECK(pf.gamma.empty());
}

TEST_CASE("links in the parallel-edge poset") {
  SimplicialPoset p = parallel_edges(3);
  PosetPair whole = PosetPair::whole(p);

  PosetPair lk = poset_link(whole, 0);
  CHECK(lk.delta.size() == 3);
  CHECK(lk.delta.vertex_count() == 3);
  CHECK(lk.delta.face_index("e1") >= 0);
  CHECK(poset_betti(lk, Q).reduced_at(0) == 2);
  CHECK_THROWS_AS(poset_link(whole, 2), InputError);

  PosetPair elk = poset_face_link(whole, 2);
  CHECK(elk.delta.size() == 0);
  CHECK(elk.dim() == -1);
  CHECK(poset_betti(elk, Q).reduced_at(-1) == 1);

  PosetPair edge = PosetPair::with_ideal(p, {0, 1, 2});
  PosetPair lkg = poset_link(edge, 0);
  CHECK(lkg.gamma_has_min);
  int le0 = lkg.delta.face_index("e0");
  REQUIRE(le0 >= 0);
  CHECK(lkg.gamma[static_cast<std::size_t>(le0)]);
  CHECK_FALSE(lkg.gamma[static_cast<std::size_t>(lkg.delta.face_index("e1"))]);

  PosetPair gone = poset_face_link(edge, 2);
  CHECK(gone.gamma_has_min);
  CHECK(gone.dim() == -2);
  CHECK(poset_betti(gone, Q).reduced_at(-1) == 0);
}

TEST_CASE("mu of the parallel-edge pairs by every method") {
  SimplicialPoset p = parallel_edges(3);
  PosetPair whole = PosetPair::whole(p);
  Ordering ab = Ordering::identity(2);
  Ordering ba;
  ba.perm = {1, 0};

  for (FieldSpec k : {Q, F2}) {
    CHECK(poset_mu_ordering(whole, ab, k).mu == ratvec({1, 2}));
    CHECK(poset_mu_ordering(whole, ba, k).mu == ratvec({1, 2}));
    CHECK(poset_mu_exact(whole, k).mu == ratvec({1, 2}));
    CHECK(poset_mu_enumerated(whole, k).mu == ratvec({1, 2}));
  }

  PosetPair just_min = PosetPair::with_ideal(p, {});
  CHECK(poset_mu_exact(just_min, Q).mu == ratvec({1, 2}));
  CHECK(poset_mu_enumerated(just_min, Q).mu == ratvec({1, 2}));

  PosetPair edge = PosetPair::with_ideal(p, {0, 1, 2});
  CHECK(poset_mu_ordering(edge, ab, Q).mu == ratvec({0, 2}));
  CHECK(poset_mu_exact(edge, Q).mu == ratvec({0, 2}));
  CHECK(poset_mu_enumerated(edge, Q).mu == ratvec({0, 2}));
}

TEST_CASE("mu budgets refuse oversized enumerations") {
  PosetPair whole = PosetPair::whole(parallel_edges(3));
  MuOptions tight;
  tight.subset_budget = 1;
  CHECK_THROWS_AS(poset_mu_exact(whole, Q, tight), ResourceError);
  tight.enumerate_budget = 1;
  CHECK_THROWS_AS(poset_mu_enumerated(whole, Q, tight), ResourceError);
}

TEST_CASE("restriction-sum sigma of the parallel-edge pair") {
  SigmaVector s = poset_sigma_tilde(PosetPair::whole(parallel_edges(3)), Q);
  CHECK(s.n == 2);
  CHECK(s.at_index(-1) == Rational(1) / 3);
  CHECK(s.at_index(0) == 0);
  CHECK(s.at_index(1) == Rational(2) / 3);
  CHECK(s.at_index(5) == 0);
}

TEST_CASE("subdivision ordering inserts barycenters before each vertex") {
  SimplicialPoset p = parallel_edges(3);
  Ordering ab = Ordering::identity(2);
  Ordering ba;
  ba.perm = {1, 0};
  CHECK(sd_ordering(p, ab).perm == std::vector<VertexId>{0, 2, 3, 4, 1});
  CHECK(sd_ordering(p, ba).perm == std::vector<VertexId>{1, 2, 3, 4, 0});

  Ordering s1 = sd_ordering_sampled(p, ab, 11);
  Ordering s2 = sd_ordering_sampled(p, ab, 11);
  CHECK(s1.perm == s2.perm);
  s1.validate(5);
  CHECK(s1.perm.front() == 0);
  CHECK(s1.perm.back() == 1);
  std::vector<VertexId> mid(s1.perm.begin() + 1, s1.perm.end() - 1);
  std::sort(mid.begin(), mid.end());
  CHECK(mid == std::vector<VertexId>{2, 3, 4});
}

TEST_CASE("ordering mu matches the induced ordering on the subdivision") {
  SimplicialPoset p = parallel_edges(3);
  std::vector<PosetPair> pairs = {PosetPair::whole(p), PosetPair::with_ideal(p, {}),
                                  PosetPair::with_ideal(p, {0, 1, 2})};
  std::vector<Ordering> orders(2);
  orders[0] = Ordering::identity(2);
  orders[1].perm = {1, 0};
  for (const PosetPair& pair : pairs) {
    RelativePair sdp = sd_as_pair(pair);
    for (const Ordering& s : orders) {
      MuVector direct = poset_mu_ordering(pair, s, Q);
      MuVector via_sd = mu_ordering(sdp, sd_ordering(p, s), Q);
      CHECK(direct.mu == via_sd.mu);
    }
  }

  // same identity on a poset with doubled faces picked at random
  SimplicialPoset rp = random_poset(5, 2, 7);
  PosetPair rwhole = PosetPair::whole(rp);
  RelativePair rsd = sd_as_pair(rwhole);
  Ordering id = Ordering::identity(rp.vertex_count());
  CHECK(poset_mu_ordering(rwhole, id, Q).mu == mu_ordering(rsd, sd_ordering(rp, id), Q).mu);
  Ordering sampled = sd_ordering_sampled(rp, id, 3);
  CHECK(poset_mu_ordering(rwhole, id, F2).mu == mu_ordering(rsd, sampled, F2).mu);
}

TEST_CASE("face posets reproduce complex invariants") {
  SimplicialComplex rp2 = projective_plane_6().complex;
  SimplicialComplex sphere = simplex_boundary(2).complex;
  for (const SimplicialComplex& x : {rp2, sphere}) {
    SimplicialPoset fp = face_poset(x);
    PosetPair whole = PosetPair::whole(fp);
    RelativePair direct(x);
    FHVectors pf = poset_f_h(whole);
    FHVectors cf = f_h_vectors(direct);
    CHECK(pf.f == cf.f);
    CHECK(pf.h == cf.h);
    for (FieldSpec k : {Q, F2}) {
      BettiVector pb = poset_betti(whole, k);
      BettiVector cb = reduced_betti(direct, k);
      for (int i = -1; i <= x.dim(); ++i) CHECK(pb.reduced_at(i) == cb.reduced_at(i));
    }
  }

  Ordering id6 = Ordering::identity(6);
  for (FieldSpec k : {Q, F2}) {
    MuVector via_poset = poset_mu_ordering(PosetPair::whole(face_poset(rp2)), id6, k);
    MuVector direct = mu_ordering(RelativePair(rp2), id6, k);
    CHECK(via_poset.mu == direct.mu);
  }

  SimplicialComplex two = cx({{"a", "b", "c"}, {"b", "c", "d"}});
  CHECK(poset_mu_exact(PosetPair::whole(face_poset(two)), Q).mu ==
        mu_exact(RelativePair(two), Q).mu);
}

TEST_CASE("averaged mu agrees with full enumeration on random posets") {
  for (std::uint64_t seed : {1, 2, 3}) {
    PosetPair p = PosetPair::whole(random_poset(5, 2, seed));
    MuVector ex = poset_mu_exact(p, Q);
    MuVector en = poset_mu_enumerated(p, Q);
    CHECK(ex.mu == en.mu);
  }
  PosetPair p1 = PosetPair::whole(random_poset(5, 2, 1));
  CHECK(poset_mu_exact(p1, F2).mu == poset_mu_enumerated(p1, F2).mu);
}

TEST_CASE("random posets are deterministic per seed") {
  SimplicialComplex a = barycentric_subdivision(random_poset(6, 2, 4));
  SimplicialComplex b = barycentric_subdivision(random_poset(6, 2, 4));
  SimplicialComplex c = barycentric_subdivision(random_poset(6, 2, 5));
  CHECK(a.facets() == b.facets());
  CHECK(a.facets() != c.facets());
}
