#include <doctest.h>

#include "helpers.hpp"
#include "mulab/constructors.hpp"
#include "mulab/recognizers.hpp"

using namespace mulab;
using testutil::cx;
using testutil::pr;

namespace {
const FieldSpec Q = FieldSpec::rationals();
}

TEST_CASE("purity") {
  CHECK(is_pure(simplex_boundary(3).complex).holds);
  SimplicialComplex x = cx({{"a", "b", "c"}, {"c", "d"}});
  RecognizerVerdict v = is_pure(x);
  CHECK(!v.holds);
  CHECK(!v.witnesses.empty());
  CHECK(is_pure(SimplicialComplex::void_complex()).holds);
}

TEST_CASE("normal pseudomanifolds") {
  CHECK(is_normal_pseudomanifold(simplex_boundary(2).complex).holds);
  CHECK(is_normal_pseudomanifold(simplex_boundary(4).complex).holds);
  CHECK(is_normal_pseudomanifold(csaszar_torus().complex).holds);
  CHECK(is_normal_pseudomanifold(cyclic_boundary(8).complex).holds);

  // a ball has boundary ridges of degree 1
  SimplicialComplex ball = cx({{"a", "b", "c"}, {"b", "c", "d"}});
  CHECK(!is_normal_pseudomanifold(ball).holds);

  // two spheres wedged at a vertex: the link of the wedge point is disconnected
  SimplicialComplex s1 = simplex_boundary(2).complex;
  SimplicialComplex wedge = cx({{"a", "b", "w"}, {"a", "b", "c"}, {"a", "c", "w"},
                                {"b", "c", "w"}, {"x", "y", "w"}, {"x", "y", "z"},
                                {"x", "z", "w"}, {"y", "z", "w"}});
  CHECK(is_pure(wedge).holds);
  RecognizerVerdict v = is_normal_pseudomanifold(wedge);
  CHECK(!v.holds);

  // disconnected union of spheres fails the connectivity requirement
  SimplicialComplex two = disjoint_union(s1, s1);
  CHECK(!is_normal_pseudomanifold(two).holds);
}

TEST_CASE("Serre conditions separate the sphere, the torus, and the wedge") {
  RelativePair sphere(simplex_boundary(3).complex);
  for (int r = 1; r <= 3; ++r) CHECK(serre_condition(sphere, r, Q).holds);

  // the torus satisfies (S_2) but not (S_3): b~_1 of the whole complex is not 0
  RelativePair torus(csaszar_torus().complex);
  CHECK(serre_condition(torus, 2, Q).holds);
  RecognizerVerdict s3 = serre_condition(torus, 3, Q);
  CHECK(!s3.holds);

  CHECK(is_buchsbaum(torus, Q).holds);
  CHECK(is_buchsbaum(sphere, Q).holds);
}

TEST_CASE("combinatorial and homological versions of the depth-2 condition agree when pure") {
  for (std::uint64_t seed = 1; seed <= 16; ++seed) {
    SimplicialComplex x = random_complex(6, 3, seed);
    if (x.dim() < 1) continue;
    bool comb = serre2_combinatorial(x).holds;
    if (!is_pure(x).holds) {
      CHECK(!comb);
      continue;
    }
    bool hom = serre_condition(RelativePair(x), 2, Q).holds;
    CHECK(comb == hom);
  }
}

TEST_CASE("vertex links of spheres satisfy every depth condition") {
  RelativePair p(simplex_boundary(3).complex);
  for (int r = 1; r <= 3; ++r) CHECK(vertex_links_serre(p, r, Q).holds);
  // torus links are circles: (S_2) holds for them, (S_3) is out of range anyway
  RelativePair t(csaszar_torus().complex);
  CHECK(vertex_links_serre(t, 2, Q).holds);
}

TEST_CASE("witness records name the failing clause") {
  SimplicialComplex ball = cx({{"a", "b", "c"}, {"b", "c", "d"}});
  RecognizerVerdict v = is_normal_pseudomanifold(ball);
  REQUIRE(!v.holds);
  bool found = false;
  for (const auto& w : v.witnesses)
    if (w.clause == "ridge-degree") found = true;
  CHECK(found);
}
