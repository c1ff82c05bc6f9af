"""Named ideal families with the properties asserted for them, for the
reproduction harness to verify.

Claims record only what is asserted in print for the construction; where a
claim failed exact verification it is omitted here (see the repository
notes), and the harness checks exactly what is claimed.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .monomials import Monomial, MonomialIdeal, make_ideal, monomials_of_degree
from .polytopes import trivial_smoothness_classifier


@dataclass(frozen=True)
class FamilyIdeal:
    name: str
    params: dict
    ideal: MonomialIdeal
    claims: dict


def _pure(n: int, d: int) -> list[Monomial]:
    out = []
    for i in range(n + 1):
        v = [0] * (n + 1)
        v[i] = d
        out.append(tuple(v))
    return out


def _interval(d: int, r: int) -> FamilyIdeal:
    """Smooth minimal systems with n = 2 realizing every mu in [5, d+1].

    r = 5 is the pure-power + x0^(d-1)*(x1, x2) system; for r > 5 the extra
    generators are x0^(d-r+3)*x1*x2 times the degree-(r-5) monomials in
    x0, x1 together with x2^(r-5).
    """
    if d < 4 or not 5 <= r <= d + 1:
        raise ValueError(f"interval family needs d >= 4 and 5 <= r <= d+1, got ({d}, {r})")
    gens = set(_pure(2, d))
    if r == 5:
        gens.add((d - 1, 1, 0))
        gens.add((d - 1, 0, 1))
    else:
        k = r - 5
        base = (d - r + 3, 1, 1)
        for a in range(k, -1, -1):
            gens.add((base[0] + a, base[1] + (k - a), base[2]))
        gens.add((base[0], base[1], base[2] + k))
    ideal = make_ideal(2, d, sorted(gens))
    return FamilyIdeal(
        "interval",
        {"d": d, "r": r},
        ideal,
        {"mu": r, "togliatti": True, "minimal": True, "smooth": True},
    )


def _rho_max(n: int, d: int) -> FamilyIdeal:
    """A minimal system attaining the maximal generator count C(n+d-1, n-1):
    pure powers + x_i*(x_i,...,x_n)^(d-1) for i = 1..n-2 + x0^3*(x_{n-1}, x_n)^(d-3)."""
    if n < 3 or d < 4:
        raise ValueError(f"rho-max family needs n >= 3 and d >= 4, got ({n}, {d})")
    gens = set(_pure(n, d))
    for i in range(1, n - 1):
        for m in monomials_of_degree(n - i, d - 1):
            vec = [0] * (n + 1)
            vec[i] += 1
            for j, e in enumerate(m):
                vec[i + j] += e
            gens.add(tuple(vec))
    for m in monomials_of_degree(1, d - 3):
        vec = [0] * (n + 1)
        vec[0] = 3
        vec[n - 1] += m[0]
        vec[n] += m[1]
        gens.add(tuple(vec))
    ideal = make_ideal(n, d, sorted(gens))
    return FamilyIdeal(
        "rho-max",
        {"n": n, "d": d},
        ideal,
        {"mu": comb(n + d - 1, n - 1), "togliatti": True, "minimal": True},
    )


def _d4_r10() -> FamilyIdeal:
    """(x0, x1)^4 + (x2, x3)^4: smooth minimal with 10 generators."""
    gens = []
    for m in monomials_of_degree(1, 4):
        gens.append((m[0], m[1], 0, 0))
        gens.append((0, 0, m[0], m[1]))
    ideal = make_ideal(3, 4, gens)
    return FamilyIdeal(
        "d4-r10", {},
        ideal,
        {"mu": 10, "togliatti": True, "minimal": True, "smooth": True},
    )


def _trivial(n: int, d: int, m: Monomial) -> FamilyIdeal:
    """Pure powers + m*(x0,...,xn) for a degree-(d-1) monomial m.

    Always a Togliatti system; smoothness follows the closed-form
    classifier.  Minimality is claimed only for the normal form
    m = x_i^(d-1) (the mu = 2n+1 case).
    """
    m = tuple(m)
    if len(m) != n + 1 or sum(m) != d - 1 or any(x < 0 for x in m):
        raise ValueError(f"{m!r} is not a degree-{d - 1} monomial in {n + 1} variables")
    gens = set(_pure(n, d))
    for i in range(n + 1):
        vec = list(m)
        vec[i] += 1
        gens.add(tuple(vec))
    ideal = make_ideal(n, d, sorted(gens))
    claims = {
        "mu": len(gens),
        "togliatti": True,
        "trivial": True,
        "smooth": trivial_smoothness_classifier(n, d, m),
    }
    if sorted(m)[-1] == d - 1:
        claims["minimal"] = True
    return FamilyIdeal("trivial", {"n": n, "d": d, "m": m}, ideal, claims)


def _type_b(n: int, d: int) -> FamilyIdeal:
    """Pure powers + x0*(every degree-(d-1) monomial in x1..xn): a minimal
    system whose non-pure generators all share the variable x0."""
    if n < 3:
        raise ValueError("type-b family stays within the generator bound only for n >= 3")
    gens = set(_pure(n, d))
    for m in monomials_of_degree(n - 1, d - 1):
        gens.add((1,) + m)
    ideal = make_ideal(n, d, sorted(gens))
    return FamilyIdeal(
        "type-b",
        {"n": n, "d": d},
        ideal,
        {
            "mu": n + 1 + comb(n + d - 2, n - 1),
            "togliatti": True,
            "minimal": True,
            "trivial_type_b": True,
        },
    )


def _mixed_block(n: int, d: int, h: int, m_prime: Monomial) -> FamilyIdeal:
    """(x0..x_{n-2})^d + (x_{n-1}^d, x_n^d) + (x_{n-1}, x_n)^(d-h) * m'.

    m' is a degree-h monomial in x0..x_{n-2}.  Only the Togliatti property
    and the generator count are claimed: exact minimality checks refute
    minimality for several parameter choices.
    """
    if not (d > n >= 3) or not 2 <= h <= d - n + 1:
        raise ValueError(f"mixed-block family needs d > n >= 3 and 2 <= h <= d-n+1")
    m_prime = tuple(m_prime)
    if len(m_prime) != n - 1 or sum(m_prime) != h:
        raise ValueError(f"m' must be a degree-{h} monomial in x0..x{n - 2}")
    gens = set()
    for m in monomials_of_degree(n - 2, d):
        gens.add(m + (0, 0))
    v = [0] * (n + 1)
    v[n - 1] = d
    gens.add(tuple(v))
    v = [0] * (n + 1)
    v[n] = d
    gens.add(tuple(v))
    for b in range(d - h + 1):
        vec = list(m_prime) + [d - h - b, b]
        gens.add(tuple(vec))
    ideal = make_ideal(n, d, sorted(gens))
    return FamilyIdeal(
        "mixed-block",
        {"n": n, "d": d, "h": h, "m_prime": m_prime},
        ideal,
        {"mu": comb(d + n - 2, n - 2) + d - h + 3, "togliatti": True},
    )


_BUILDERS = {
    "interval": _interval,
    "rho-max": _rho_max,
    "d4-r10": _d4_r10,
    "trivial": _trivial,
    "type-b": _type_b,
    "mixed-block": _mixed_block,
}


def family_names() -> list[str]:
    return sorted(_BUILDERS)


def family(name: str, **params) -> FamilyIdeal:
    """Build a named family ideal together with its asserted properties."""
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise ValueError(f"unknown family {name!r}; known: {', '.join(family_names())}")
    return builder(**params)
