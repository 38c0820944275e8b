"""Smoke tests for the compiled extension."""

import pytest

try:
    import cobord as m
except ImportError:  # running against the build tree
    import _cobord as m


def test_index_bounds():
    assert m.index_bound(6, 3) == 1
    assert m.index_bound(5, 3) == 5
    assert m.index_bound(12, 4) == 1
    assert m.chi_hypersurface(6, 2) == -9
    assert m.threshold(12) == 4
    assert m.gcd_lemma(6, 3)["holds"] is True


def test_fermat_certificate():
    cert = m.fermat_certificate(2, 1, 1)
    assert cert["trace"] == [[0, 0], [1, 0], [1, 1]]
    assert cert["final_m"] == 2
    with pytest.raises(ValueError):
        m.fermat_certificate(6, 3, 2)


def test_fundamental_polynomial():
    fp = m.fundamental_polynomial("P2")
    assert fp["degree"] == 2
    assert fp["coords"] == {"1+1": 6, "2": -3}


def test_lattices():
    lat = m.lattice(2)
    assert lat["rank"] == 2
    assert lat["basis"] == [[3, 2], [0, 4]]
    dual = m.dual_lattice(2)
    assert dual["denominator"] == 12


def test_hattori_stong():
    report = m.hattori_stong(3)
    assert report["conclusive"] is True
    assert report["holds"] is True


def test_characteristic_classes():
    verdict = m.check_class("half_euler", ["3"])
    assert verdict["integral"] is True
    value = m.pair("half_euler", ["3"], "P3")
    assert value["value"] == {"num": -10, "den": 1}


def test_hrr():
    assert m.chi_bundle("P1", "O(2)@0") == 3
    assert m.signature("P2xP2") == 1
    he = m.half_euler("P3")
    assert he == {"e": 4, "half": 2, "rho_value": 2, "equal": True}
