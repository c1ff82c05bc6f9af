from __future__ import annotations

import pytest

from togliatti.monomials import make_ideal, parse_inline_ideal


@pytest.fixture
def togliatti_cubic():
    return parse_inline_ideal("x0^3,x1^3,x2^3,x0*x1*x2")


@pytest.fixture
def ex35_ideal():
    # (x0,x1)^3 + (x2,x3)^3
    return parse_inline_ideal(
        "x0^3,x0^2*x1,x0*x1^2,x1^3,x2^3,x2^2*x3,x2*x3^2,x3^3"
    )


@pytest.fixture
def exception_d5():
    return parse_inline_ideal("x0^5,x1^5,x2^5,x0^3*x1*x2,x0*x1^2*x2^2")


@pytest.fixture
def exception_d4():
    return parse_inline_ideal("x0^4,x1^4,x2^4,x0*x1*x2^2,x0^2*x1^2")


def trivial_system(n: int, d: int, m):
    """Pure powers + m*(x0..xn) for a degree-(d-1) exponent vector m."""
    gens = set()
    for i in range(n + 1):
        v = [0] * (n + 1)
        v[i] = d
        gens.add(tuple(v))
    for i in range(n + 1):
        v = list(m)
        v[i] += 1
        gens.add(tuple(v))
    return make_ideal(n, d, sorted(gens))
