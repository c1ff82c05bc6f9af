from __future__ import annotations

from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from togliatti.errors import GuardExceeded
from togliatti.monomials import make_ideal, parse_inline_ideal, pure_powers, simplex_points
from togliatti.stability import (
    PROPERLY_SEMISTABLE,
    STABLE,
    UNSTABLE,
    gcd_degree,
    slope,
    slope_value,
    stability_class,
    stability_coincidence,
    stability_oracle,
    subset_value,
    subsheaf_slope,
)
from tests.conftest import trivial_system


def test_gcd_degree_examples():
    assert gcd_degree([(5, 0, 0), (4, 1, 0)]) == 4
    assert gcd_degree([(3, 1, 1), (1, 2, 2)]) == 3
    assert gcd_degree([(5, 0, 0), (0, 5, 0)]) == 0


def test_subset_value_examples():
    ideal = parse_inline_ideal("x0^5,x1^5,x2^5,x0^4*x1")
    assert subset_value(ideal, [(5, 0, 0), (4, 1, 0)]) == -2
    i6 = parse_inline_ideal("x0^5,x1^5,x2^5,x0^3*x1*x2,x0^2*x1^2*x2,x0*x1^3*x2")
    assert subset_value(i6, [(3, 1, 1), (2, 2, 1)]) == 0
    # trivial system, J = m*(x0,x1,x2): value r - 2d - 1
    ideal = trivial_system(2, 6, (5, 0, 0))
    j = [g for g in ideal.generators if g not in set(pure_powers(2, 6))]
    j.append((6, 0, 0))  # x0*m is the pure power x0^6 here
    assert subset_value(ideal, j) == ideal.r - 2 * ideal.d - 1


def test_subset_value_rejects_small_or_foreign_subsets():
    ideal = parse_inline_ideal("x0^5,x1^5,x2^5,x0^4*x1")
    with pytest.raises(ValueError):
        subset_value(ideal, [(5, 0, 0)])
    with pytest.raises(ValueError):
        subset_value(ideal, [(5, 0, 0), (3, 1, 1)])


def test_slopes():
    assert slope(parse_inline_ideal("x0^5,x1^5,x2^5,x0^4*x1")) == Fraction(-20, 3)
    assert subsheaf_slope([(5, 0, 0), (4, 1, 0)], 5) == Fraction(-6)
    assert slope_value(2, 1) == Fraction(-2)


def test_stability_worked_examples():
    stable = parse_inline_ideal("x0^5,x1^5,x2^5,x0^2*x1^2*x2")
    assert stability_class(stable).verdict == STABLE
    unstable = parse_inline_ideal("x0^5,x1^5,x2^5,x0^4*x1")
    rep = stability_class(unstable)
    assert rep.verdict == UNSTABLE
    assert rep.witness is not None and rep.witness.value < 0
    assert set(rep.witness.subset) == {(5, 0, 0), (4, 1, 0)}


def test_stability_trichotomy_of_the_classified_systems():
    stable_ideals = [
        "x0^5,x1^5,x2^5,x0^3*x1*x2,x0*x1^2*x2^2",
        "x0^7,x1^7,x2^7,x0^3*x1^3*x2,x0^3*x1*x2^3,x0*x1^3*x2^3",
        "x0^7,x1^7,x2^7,x0^5*x1*x2,x0*x1^5*x2,x0*x1*x2^5",
        "x0^7,x1^7,x2^7,x0*x1*x2^5,x0^3*x1^3*x2,x0^2*x1^2*x2^3",
    ]
    semistable_ideals = [
        "x0^5,x1^5,x2^5,x0^3*x1*x2,x0*x1^3*x2,x0*x1*x2^3",
        "x0^5,x1^5,x2^5,x0^3*x1*x2,x0^2*x1^2*x2,x0*x1^3*x2",
        "x0^5,x1^5,x2^5,x0^2*x1^2*x2,x0^2*x1*x2^2,x0*x1^2*x2^2",
    ]
    for text in stable_ideals:
        assert stability_class(parse_inline_ideal(text)).verdict == STABLE, text
    for text in semistable_ideals:
        rep = stability_class(parse_inline_ideal(text))
        assert rep.verdict == PROPERLY_SEMISTABLE, text
        assert rep.equality_witness is not None and rep.equality_witness.value == 0


def test_trivial_smooth_systems_unstable():
    for d in (4, 5, 6, 7):
        ideal = trivial_system(2, d, (d - 1, 0, 0))
        assert stability_class(ideal).verdict == UNSTABLE
    assert stability_class(trivial_system(2, 5, (2, 1, 1))).verdict == UNSTABLE


def test_stability_requires_rank_two():
    pair = make_ideal(1, 4, [(4, 0), (0, 4)])
    with pytest.raises(ValueError):
        stability_class(pair)
    with pytest.raises(ValueError):
        stability_oracle(pair)


def test_oracle_guard():
    from togliatti.families import family

    big = family("type-b", n=3, d=5).ideal  # r = 19
    with pytest.raises(GuardExceeded):
        stability_oracle(big)


@st.composite
def stability_ideals(draw):
    n = draw(st.integers(min_value=1, max_value=3))
    d = draw(st.integers(min_value=2, max_value=5))
    pool = [m for m in simplex_points(n, d).points if max(m) < d]
    k = min(len(pool), 6)
    extras = draw(st.lists(st.sampled_from(pool), max_size=k, unique=True)) if pool else []
    return make_ideal(n, d, list(pure_powers(n, d)) + extras)


@given(stability_ideals())
@settings(max_examples=80, deadline=None)
def test_pruned_classifier_matches_oracle(ideal):
    if ideal.r < 3:
        return
    a = stability_class(ideal)
    b = stability_oracle(ideal)
    assert a.verdict == b.verdict
    if a.verdict != STABLE:
        assert a.witness.value == b.witness.value


@given(stability_ideals())
@settings(max_examples=60, deadline=None)
def test_general_inequality_matches_equal_degree_form(ideal):
    """Prop-style slope comparison and the specialized integer value agree
    on every subset."""
    if ideal.r < 3:
        return
    mu = slope(ideal)
    for s in (2, 3):
        for sub in combinations(ideal.generators, min(s, ideal.r - 1)):
            if len(sub) < 2:
                continue
            value = subset_value(ideal, sub)
            assert (subsheaf_slope(sub, ideal.d) <= mu) == (value >= 0)
            assert (subsheaf_slope(sub, ideal.d) < mu) == (value > 0)


@given(stability_ideals())
@settings(max_examples=60, deadline=None)
def test_coprime_slope_excludes_properly_semistable(ideal):
    if ideal.r < 3:
        return
    if stability_coincidence(ideal):
        assert stability_class(ideal).verdict != PROPERLY_SEMISTABLE


def test_verdict_invariant_under_permutation():
    from togliatti.monomials import permute_ideal

    ideal = parse_inline_ideal("x0^5,x1^5,x2^5,x0^3*x1*x2,x0^2*x1^2*x2,x0*x1^3*x2")
    base = stability_class(ideal).verdict
    for perm in ((1, 2, 0), (2, 1, 0), (0, 2, 1)):
        assert stability_class(permute_ideal(ideal, perm)).verdict == base
