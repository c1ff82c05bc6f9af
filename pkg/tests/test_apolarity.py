from __future__ import annotations

import pytest

from togliatti.apolarity import (
    EXCEEDS_BOUND,
    NO_LAPLACE,
    TOGLIATTI,
    certificate_polynomial,
    certificate_text,
    compare_certificates,
    is_minimal,
    is_togliatti,
    minimality_oracle,
    togliatti_kernel,
    togliatti_report,
    togliatti_status,
)
from togliatti.errors import GuardExceeded
from togliatti.monomials import (
    make_ideal,
    parse_inline_ideal,
    pure_power_ideal,
    pure_powers,
)


def test_kernel_togliatti_cubic(togliatti_cubic):
    space = togliatti_kernel(togliatti_cubic)
    assert space.dimension == 1
    # 2(x0^2+x1^2+x2^2) - 5(x0x1+x0x2+x1x2)
    assert space.basis[0] == (2, -5, -5, 2, -5, 2)


def test_kernel_ex35(ex35_ideal):
    space = togliatti_kernel(ex35_ideal)
    assert space.dimension == 1
    assert space.basis[0] == (2, 4, -5, -5, 2, -5, -5, 2, 4, 2)


def test_kernel_pure_powers_vanishes():
    for n, d in ((2, 3), (2, 5), (3, 4)):
        assert togliatti_kernel(pure_power_ideal(n, d)).dimension == 0


def test_is_togliatti_examples(exception_d4, exception_d5):
    assert is_togliatti(exception_d5)
    assert is_togliatti(exception_d4)
    assert not is_togliatti(pure_power_ideal(2, 5))


def test_low_generator_count_never_togliatti():
    # with r <= 2n every degree-(d-1) osculating space is fine
    from togliatti.monomials import simplex_points

    n, d = 2, 5
    pool = [m for m in simplex_points(n, d).points if max(m) < d]
    for extra in pool:
        ideal = make_ideal(n, d, list(pure_powers(n, d)) + [extra])
        assert togliatti_status(ideal) == NO_LAPLACE


def test_status_exceeds_bound():
    # r = 7 > d+1 = 5 for (n, d) = (2, 4); reported distinctly, not as False
    gens = list(pure_powers(2, 4)) + [(3, 1, 0), (3, 0, 1), (2, 2, 0), (2, 1, 1)]
    ideal = make_ideal(2, 4, gens)
    assert togliatti_status(ideal) == EXCEEDS_BOUND
    assert not is_togliatti(ideal)
    rep = togliatti_report(ideal)
    assert not rep.satisfies_generator_bound
    assert rep.kernel_dimension >= 2  # at least r - bound


def test_is_minimal_examples(ex35_ideal, exception_d5):
    assert is_minimal(ex35_ideal).is_minimal
    assert is_minimal(exception_d5).is_minimal


def test_is_minimal_blocking_point():
    # pure cubes + x0^2*(x1,x2,x3) + x1^2*x2: the added generator is removable
    gens = list(pure_powers(3, 3)) + [
        (2, 1, 0, 0), (2, 0, 1, 0), (2, 0, 0, 1), (0, 2, 1, 0),
    ]
    ideal = make_ideal(3, 3, gens)
    rep = is_minimal(ideal)
    assert not rep.is_minimal
    assert (0, 2, 1, 0) in rep.blocking_points


def test_is_minimal_requires_togliatti():
    with pytest.raises(ValueError):
        is_minimal(pure_power_ideal(2, 4))


def test_minimality_oracle_agrees(ex35_ideal, exception_d5, togliatti_cubic):
    for ideal in (ex35_ideal, exception_d5, togliatti_cubic):
        assert minimality_oracle(ideal) == is_minimal(ideal).is_minimal


def test_minimality_oracle_detects_non_minimal():
    gens = list(pure_powers(3, 3)) + [
        (2, 1, 0, 0), (2, 0, 1, 0), (2, 0, 0, 1), (0, 2, 1, 0),
    ]
    ideal = make_ideal(3, 3, gens)
    assert not minimality_oracle(ideal)


def test_minimality_oracle_guard():
    from togliatti.families import family

    big = family("rho-max", n=3, d=4).ideal  # r = 15... still within 16
    assert big.r == 15
    huge = family("type-b", n=3, d=5).ideal  # r = 4 + C(6,2) = 19
    assert huge.r > 16
    with pytest.raises(GuardExceeded):
        minimality_oracle(huge)


def test_certificate_polynomial_requires_dimension_one():
    with pytest.raises(ValueError):
        certificate_polynomial(pure_power_ideal(2, 4))


def test_certificate_f3(exception_d4):
    cert = certificate_polynomial(exception_d4)
    assert cert == (3, -7, -13, -7, 22, 13, 3, -13, 13, -3)


def test_certificate_f4_and_comparison(exception_d5):
    cert = certificate_polynomial(exception_d5)
    assert cert == (24, -154, -154, 269, -337, 269, -154, 288, 288, -154,
                    24, -154, 269, -154, 24)
    printed = (24, -154, 154, 269, 288, 269, -154, -337, 288, -154,
               24, -154, 269, -154, 24)
    diffs = compare_certificates(cert, printed, 2, 4)
    assert sorted(m for m, _, _ in diffs) == [(1, 2, 1), (2, 1, 1), (3, 0, 1)]


def test_compare_certificates_sign_alignment():
    a = (2, -5, 1)
    assert compare_certificates(a, (-2, 5, -1), 1, 2) == []
    assert compare_certificates(a, (2, -5, 1), 1, 2) == []


def test_certificate_text(togliatti_cubic):
    text = certificate_text(certificate_polynomial(togliatti_cubic), 2, 2)
    assert text == "2*x0^2 - 5*x0*x1 - 5*x0*x2 + 2*x1^2 - 5*x1*x2 + 2*x2^2"


def test_togliatti_report_fields(exception_d5):
    rep = togliatti_report(exception_d5)
    assert rep.status == TOGLIATTI
    assert rep.satisfies_generator_bound
    assert rep.kernel_dimension == 1
    assert rep.is_minimal and not rep.blocking_points
    assert rep.certificate is not None
    data = rep.to_json_dict()
    assert data["is_togliatti"] and data["certificate"]


def test_minimal_implies_kernel_dimension_one():
    # scan all (2,4) ideals with two extra generators
    from togliatti.survey import enumerate_ideals

    for ideal in enumerate_ideals(2, 4, 2, filters=("minimal",)):
        assert togliatti_kernel(ideal).dimension == 1


def test_certificate_vanishes_on_points_only(exception_d5):
    """A minimal certificate is zero on A_I and nonzero at every non-vertex
    complement point."""
    from togliatti.monomials import inverse_system, monomials_of_degree

    cert = certificate_polynomial(exception_d5)
    monos = monomials_of_degree(2, 4)

    def value(point):
        total = 0
        for c, m in zip(cert, monos):
            term = c
            for b, e in zip(point, m):
                if e:
                    term *= b**e
            total += term
        return total

    for p in inverse_system(exception_d5).points:
        assert value(p) == 0
    verts = set(pure_powers(2, 5))
    for g in exception_d5.generators:
        if g not in verts:
            assert value(g) != 0
