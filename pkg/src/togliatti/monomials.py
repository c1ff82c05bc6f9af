"""Exponent-vector monomials, single-degree artinian monomial ideals, and
their inverse systems as lattice-point sets.

A monomial in n+1 variables is a tuple of n+1 nonnegative integers.  All
monomial lists are kept in graded-lex order with x0 > x1 > ... > xn, i.e.
descending lexicographic order of exponent tuples within one degree, so
(d,0,...,0) comes first and (0,...,0,d) last.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from math import comb

from .errors import InvalidIdeal

Monomial = tuple[int, ...]


def degree(m: Monomial) -> int:
    return sum(m)


@lru_cache(maxsize=None)
def monomials_of_degree(n: int, d: int) -> tuple[Monomial, ...]:
    """All exponent vectors of degree d in n+1 variables, graded-lex order."""
    if n < 0 or d < 0:
        raise ValueError(f"invalid (n, d) = ({n}, {d})")
    if n == 0:
        return ((d,),)
    out: list[Monomial] = []
    for a in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - a):
            out.append((a,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_index(n: int, d: int) -> dict[Monomial, int]:
    return {m: i for i, m in enumerate(monomials_of_degree(n, d))}


def pure_powers(n: int, d: int) -> tuple[Monomial, ...]:
    """The monomials x_i^d, i = 0..n."""
    out = []
    for i in range(n + 1):
        v = [0] * (n + 1)
        v[i] = d
        out.append(tuple(v))
    return tuple(out)


def divides(g: Monomial, m: Monomial) -> bool:
    return all(a <= b for a, b in zip(g, m))


def permute(m: Monomial, perm: tuple[int, ...]) -> Monomial:
    """Apply a coordinate permutation: entry i of the result is m[perm[i]]."""
    return tuple(m[perm[i]] for i in range(len(m)))


def monomial_text(m: Monomial) -> str:
    """Render (3,1,0) as "x0^3*x1"; the constant monomial renders as "1"."""
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class LatticePointSet:
    """A set of degree-d lattice points of the dilated simplex d*Delta_n.

    ``points`` is ordered (graded-lex) and duplicate-free.
    """

    n: int
    d: int
    points: tuple[Monomial, ...]

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, m: Monomial) -> bool:
        return m in set(self.points)


def simplex_points(n: int, d: int) -> LatticePointSet:
    """All C(n+d, n) lattice points of d*Delta_n, in graded-lex order."""
    if n < 1 or d < 1:
        raise ValueError(f"simplex_points requires n >= 1 and d >= 1, got ({n}, {d})")
    return LatticePointSet(n, d, monomials_of_degree(n, d))


@dataclass(frozen=True)
class MonomialIdeal:
    """An artinian monomial ideal generated in a single degree d.

    Contains every pure power x_i^d; generators are distinct monomials of
    degree d stored as a sorted tuple.  Value object: hashable, immutable.
    """

    n: int
    d: int
    generators: tuple[Monomial, ...]

    @property
    def r(self) -> int:
        """Minimal number of generators (distinct equal-degree monomials)."""
        return len(self.generators)

    @property
    def nonpure_generators(self) -> tuple[Monomial, ...]:
        pp = set(pure_powers(self.n, self.d))
        return tuple(g for g in self.generators if g not in pp)

    def contains_monomial(self, m: Monomial) -> bool:
        """Membership of a monomial of degree >= d in the ideal."""
        if degree(m) < self.d:
            return False
        return any(divides(g, m) for g in self.generators)

    def generator_bound(self) -> int:
        """The standing bound C(n+d-1, n-1) on r for a Togliatti system."""
        return comb(self.n + self.d - 1, self.n - 1)

    def __str__(self) -> str:
        # display in descending graded-lex (x0-dominant first)
        return ",".join(monomial_text(g) for g in reversed(self.generators))


def make_ideal(n: int, d: int, generators) -> MonomialIdeal:
    """Validate and build a MonomialIdeal; rejects rather than silently fixes."""
    if n < 1:
        raise InvalidIdeal("malformed", f"n must be >= 1, got {n}")
    if d < 2:
        raise InvalidIdeal("malformed", f"generation degree must be >= 2, got {d}")
    seen: list[Monomial] = []
    for g in generators:
        g = tuple(g)
        if len(g) != n + 1 or not all(isinstance(a, int) and a >= 0 for a in g):
            raise InvalidIdeal(
                "malformed", f"{g!r} is not a vector of {n + 1} nonnegative integers"
            )
        if degree(g) != d:
            raise InvalidIdeal(
                "inhomogeneous", f"{monomial_text(g)} has degree {degree(g)}, not {d}"
            )
        if g in seen:
            raise InvalidIdeal("duplicate", monomial_text(g))
        seen.append(g)
    gens = set(seen)
    for p in pure_powers(n, d):
        if p not in gens:
            raise InvalidIdeal("not artinian", f"missing pure power {monomial_text(p)}")
    return MonomialIdeal(n, d, tuple(sorted(gens)))


def pure_power_ideal(n: int, d: int) -> MonomialIdeal:
    return make_ideal(n, d, pure_powers(n, d))


def inverse_system(ideal: MonomialIdeal) -> LatticePointSet:
    """The degree-d monomials not in the ideal, as points of d*Delta_n."""
    gens = set(ideal.generators)
    pts = tuple(m for m in monomials_of_degree(ideal.n, ideal.d) if m not in gens)
    return LatticePointSet(ideal.n, ideal.d, pts)


def permute_ideal(ideal: MonomialIdeal, perm: tuple[int, ...]) -> MonomialIdeal:
    gens = tuple(sorted(permute(g, perm) for g in ideal.generators))
    return MonomialIdeal(ideal.n, ideal.d, gens)


def canonical_form(ideal: MonomialIdeal) -> MonomialIdeal:
    """Minimum over all coordinate permutations of the sorted generator list.

    Constant on permutation orbits and idempotent; generator lists are
    compared elementwise as exponent tuples (equal-degree graded-lex).
    """
    best: tuple[Monomial, ...] | None = None
    for perm in permutations(range(ideal.n + 1)):
        key = tuple(sorted(permute(g, perm) for g in ideal.generators))
        if best is None or key < best:
            best = key
    assert best is not None
    return MonomialIdeal(ideal.n, ideal.d, best)


def is_trivial(ideal: MonomialIdeal) -> Monomial | None:
    """A degree-(d-1) monomial F with x_i*F in the ideal for all i, if any.

    Monomial witnesses suffice: for a monomial ideal, x_i*F in I for a form
    F forces x_i*m in I for every monomial m in F's support.
    """
    gens = set(ideal.generators)
    n = ideal.n
    for f in monomials_of_degree(n, ideal.d - 1):
        if all(
            tuple(f[j] + (1 if j == i else 0) for j in range(n + 1)) in gens
            for i in range(n + 1)
        ):
            return f
    return None


def is_trivial_type_b(ideal: MonomialIdeal) -> int | None:
    """Smallest j such that every non-pure-power generator has x_j exponent >= 1."""
    extras = ideal.nonpure_generators
    if not extras:
        return None
    for j in range(ideal.n + 1):
        if all(g[j] >= 1 for g in extras):
            return j
    return None


# ---------------------------------------------------------------------------
# serialization

def ideal_to_json_dict(ideal: MonomialIdeal) -> dict:
    return {
        "n": ideal.n,
        "d": ideal.d,
        "generators": [list(g) for g in ideal.generators],
    }


def ideal_from_json_dict(data: dict) -> MonomialIdeal:
    try:
        n = data["n"]
        d = data["d"]
        gens = data["generators"]
    except (KeyError, TypeError) as exc:
        raise InvalidIdeal("malformed", f"missing field {exc}") from exc
    if not isinstance(n, int) or not isinstance(d, int) or not isinstance(gens, list):
        raise InvalidIdeal("malformed", "n, d must be ints and generators a list")
    return make_ideal(n, d, [tuple(g) for g in gens])


def ideal_from_json(text: str) -> MonomialIdeal:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidIdeal("malformed", f"invalid JSON: {exc}") from exc
    return ideal_from_json_dict(data)


_FACTOR_RE = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_inline_ideal(text: str) -> MonomialIdeal:
    """Parse the command-line syntax "x0^5,x1^5,x2^5,x0^3*x1*x2".

    The number of variables is inferred from the highest index present
    (which is always attained: an artinian ideal contains every x_i^d).
    """
    chunks = [c.strip() for c in text.split(",") if c.strip()]
    if not chunks:
        raise InvalidIdeal("malformed", "empty ideal specification")
    parsed: list[dict[int, int]] = []
    max_var = 0
    for chunk in chunks:
        exps: dict[int, int] = {}
        for factor in chunk.split("*"):
            m = _FACTOR_RE.match(factor.strip())
            if not m:
                raise InvalidIdeal("malformed", f"cannot parse factor {factor!r}")
            i = int(m.group(1))
            e = int(m.group(2)) if m.group(2) else 1
            exps[i] = exps.get(i, 0) + e
            max_var = max(max_var, i)
        parsed.append(exps)
    n = max_var
    vectors = [tuple(e.get(i, 0) for i in range(n + 1)) for e in parsed]
    d = degree(vectors[0])
    return make_ideal(n, d, vectors)
