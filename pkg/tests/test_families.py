from __future__ import annotations

from math import comb

import pytest

from togliatti.apolarity import is_minimal, is_togliatti, togliatti_report
from togliatti.families import family, family_names
from togliatti.monomials import is_trivial, is_trivial_type_b
from togliatti.polytopes import is_smooth


def _verify_claims(fam):
    ideal = fam.ideal
    if "mu" in fam.claims:
        assert ideal.r == fam.claims["mu"], fam
    if fam.claims.get("togliatti"):
        assert is_togliatti(ideal), fam
    if fam.claims.get("minimal"):
        assert is_minimal(ideal).is_minimal, fam
    if "smooth" in fam.claims:
        assert is_smooth(ideal).is_smooth == fam.claims["smooth"], fam
    if fam.claims.get("trivial"):
        assert is_trivial(ideal) is not None, fam
    if fam.claims.get("trivial_type_b"):
        assert is_trivial_type_b(ideal) is not None, fam


def test_family_names():
    assert set(family_names()) == {
        "interval", "rho-max", "d4-r10", "trivial", "type-b", "mixed-block",
    }
    with pytest.raises(ValueError):
        family("nonsense")


def test_interval_family_d6():
    fam = family("interval", d=6, r=5)
    assert str(fam.ideal) == "x0^6,x0^5*x1,x0^5*x2,x1^6,x2^6"
    for r in range(5, 8):
        _verify_claims(family("interval", d=6, r=r))
    with pytest.raises(ValueError):
        family("interval", d=6, r=8)


def test_rho_max_family():
    fam = family("rho-max", n=3, d=4)
    assert fam.claims["mu"] == comb(6, 2) == 15
    _verify_claims(fam)


def test_d4_r10_family():
    fam = family("d4-r10")
    assert fam.ideal.r == 10
    _verify_claims(fam)


def test_trivial_family_claims():
    fam = family("trivial", n=2, d=6, m=(5, 0, 0))
    assert fam.claims["smooth"] and fam.claims.get("minimal")
    _verify_claims(fam)
    fam = family("trivial", n=2, d=6, m=(4, 1, 0))
    assert not fam.claims["smooth"]
    assert "minimal" not in fam.claims
    _verify_claims(fam)
    fam = family("trivial", n=3, d=4, m=(1, 1, 1, 0))
    assert fam.claims["smooth"]
    _verify_claims(fam)


def test_type_b_family():
    fam = family("type-b", n=3, d=4)
    assert fam.ideal.r == 4 + comb(5, 2) == 14
    _verify_claims(fam)
    rep = togliatti_report(fam.ideal)
    assert rep.kernel_dimension == 1
    with pytest.raises(ValueError):
        family("type-b", n=2, d=4)


def test_mixed_block_family():
    fam = family("mixed-block", n=3, d=4, h=2, m_prime=(2, 0))
    assert fam.ideal.r == comb(5, 1) + 5 == 10
    _verify_claims(fam)
    # the construction is Togliatti but not minimal for every parameter
    # choice; minimality is deliberately not claimed
    assert "minimal" not in fam.claims
    assert not is_minimal(fam.ideal).is_minimal
    fam = family("mixed-block", n=3, d=5, h=3, m_prime=(2, 1))
    _verify_claims(fam)
    with pytest.raises(ValueError):
        family("mixed-block", n=3, d=4, h=4, m_prime=(4, 0))
