from fractions import Fraction

import pytest

import mulab

TRIANGLE = [["a", "b"], ["b", "c"], ["a", "c"]]


def test_f_h_of_a_circle():
    out = mulab.f_h(TRIANGLE)
    assert out["f"] == [1, 3, 3]
    assert out["h"] == [1, 1, 1]
    assert out["d"] == 2
    assert out["g2"] == 0


def test_betti_of_a_circle():
    out = mulab.betti(TRIANGLE)
    assert out["top_dim"] == 1
    assert out["reduced_from_dim_minus1"] == [0, 0, 1]
    assert out["unreduced"] == [1, 1]


def test_relative_pair_kills_gamma():
    out = mulab.betti([["a", "b", "c"]], gamma=[["a", "b"], ["b", "c"], ["a", "c"]])
    # a disk rel its boundary circle behaves like a 2-sphere cell
    assert out["reduced_from_dim_minus1"] == [0, 0, 0, 1]


def test_mu_of_the_projective_plane():
    rp2 = mulab.generate("rp2-6")
    assert rp2["cert"]["m"] == 1
    out = mulab.mu(rp2["facets"], field="p:2")
    assert out["mu"] == [Fraction(1), Fraction(1), Fraction(1)]
    assert all(d >= 0 for d in out["morse_defects"])
    again = mulab.mu(rp2["facets"], method="enumerated", field="p:2")
    assert again["mu"] == out["mu"]


def test_sigma_weights_are_exact():
    assert mulab.sigma([["a"], ["b"]]) == [Fraction(1, 3), Fraction(1, 3)]


def test_graded_betti_of_two_points():
    assert mulab.graded_betti([["a"], ["b"]]) == [(0, 0, 1), (1, 2, 1)]


def test_m_bracket_of_the_torus():
    cz = mulab.generate("csaszar")
    out = mulab.m_bracket(cz["facets"])
    assert (out["lb"], out["ub"], out["exact"]) == (2, 2, True)
    assert out["h1_by_field"]["q"] == 2


def test_generate_stacked_certificate():
    got = mulab.generate("stacked", dim=4, stackings=3, handles=2)
    assert got["cert"]["m"] == 2
    assert got["cert"]["g2"] == 30
    assert mulab.f_h(got["facets"])["g2"] == 30


def test_verify_reports_verified():
    got = mulab.generate("stacked", dim=4, stackings=3, handles=1)
    rep = mulab.verify("g2", got["facets"])
    assert rep["outcome"] == "verified"
    assert rep["theorem"] == "g2"
    rep2 = mulab.verify("morse", mulab.generate("rp2-6")["facets"])
    assert rep2["outcome"] == "verified"


def test_recognizers():
    assert mulab.is_pure(TRIANGLE)
    assert mulab.is_normal_pseudomanifold(TRIANGLE)
    assert not mulab.is_pure([["a", "b", "c"], ["c", "d"]])


def test_errors_surface_as_python_exceptions():
    with pytest.raises(mulab.InputError):
        mulab.mu(TRIANGLE, method="bogus")
    with pytest.raises(mulab.InputError):
        mulab.generate("parallel-edges")
