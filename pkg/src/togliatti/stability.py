"""Mumford-Takemoto slope (semi)stability of the syzygy bundle of a
single-degree monomial artinian ideal, via the subset-gcd criterion.

For r generators of equal degree d the bundle E_I has rank r-1 and slope
-r*d/(r-1); a subset J of size s >= 2 with gcd degree d_J obstructs
semistability when (d - d_J)*r + d_J - s*d < 0 and strict stability when
it is <= 0.

The classifier scans only divisor-induced subsets S_g = {generators
divisible by g} over monomials g of degree 1..d-1.  This is exhaustive:
the subset value is decreasing in both s and d_J, and for any subset J with
gcd g the superset S_g has the same gcd and at least the same size, hence a
value at most that of J.  A literal all-subsets oracle is kept as the
correctness anchor.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd

from .errors import GuardExceeded
from .monomials import Monomial, MonomialIdeal, degree, divides, monomials_of_degree

STABLE = "stable"
PROPERLY_SEMISTABLE = "properly_semistable"
UNSTABLE = "unstable"


def gcd_degree(subset) -> int:
    """Degree of the greatest common monomial factor of a nonempty subset."""
    subset = list(subset)
    if not subset:
        raise ValueError("gcd_degree needs at least one monomial")
    return sum(min(g[i] for g in subset) for i in range(len(subset[0])))


def subset_value(ideal: MonomialIdeal, subset) -> int:
    """(d - d_J)*r + d_J - s*d for J a generator subset of size >= 2.

    Positive for all J iff E_I is stable, nonnegative for all J iff it is
    semistable.
    """
    subset = list(subset)
    if len(subset) < 2:
        raise ValueError("subset must have at least 2 elements")
    gens = set(ideal.generators)
    if any(m not in gens for m in subset):
        raise ValueError("subset is not contained in the generators")
    d_j = gcd_degree(subset)
    return (ideal.d - d_j) * ideal.r + d_j - len(subset) * ideal.d


def slope_value(r: int, d: int) -> Fraction:
    """Slope -r*d/(r-1) of the syzygy bundle of r degree-d generators."""
    if r < 2:
        raise ValueError("slope needs r >= 2")
    return Fraction(-r * d, r - 1)


def slope(ideal: MonomialIdeal) -> Fraction:
    return slope_value(ideal.r, ideal.d)


def subsheaf_slope(subset, d: int) -> Fraction:
    """Slope (d_J - s*d)/(s-1) of the syzygy subsheaf of a subset of
    degree-d monomials."""
    subset = list(subset)
    if len(subset) < 2:
        raise ValueError("subsheaf slope needs at least 2 monomials")
    return Fraction(gcd_degree(subset) - len(subset) * d, len(subset) - 1)


@dataclass(frozen=True)
class Witness:
    subset: tuple[Monomial, ...]
    size: int
    gcd_degree: int
    value: int

    def to_json_dict(self) -> dict:
        return {
            "subset": [list(m) for m in self.subset],
            "size": self.size,
            "gcd_degree": self.gcd_degree,
            "value": self.value,
        }


@dataclass(frozen=True)
class StabilityReport:
    verdict: str
    slope_of_e: Fraction
    witness: Witness | None  # minimizing subset when not stable
    equality_witness: Witness | None  # value-0 subset for properly semistable

    def to_json_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "slope_of_E": {
                "num": self.slope_of_e.numerator,
                "den": self.slope_of_e.denominator,
            },
            "witness": self.witness.to_json_dict() if self.witness else None,
            "equality_witness": (
                self.equality_witness.to_json_dict() if self.equality_witness else None
            ),
        }


def _verdict_from_min(ideal: MonomialIdeal, best: Witness | None) -> StabilityReport:
    mu = slope(ideal)
    if best is None or best.value > 0:
        return StabilityReport(STABLE, mu, None, None)
    if best.value == 0:
        return StabilityReport(PROPERLY_SEMISTABLE, mu, best, best)
    return StabilityReport(UNSTABLE, mu, best, None)


def stability_class(ideal: MonomialIdeal) -> StabilityReport:
    """Verdict by scanning divisor-induced subsets S_g, g of degree 1..d-1.

    Subsets with gcd degree 0 have value d*(r - s) > 0 and never obstruct,
    so the scan over common divisors g covers every extremal subset.
    """
    if ideal.r < 3:
        raise ValueError("stability needs r >= 3 (bundle rank >= 2)")
    best: Witness | None = None
    gens = ideal.generators
    for e in range(1, ideal.d):
        for g in monomials_of_degree(ideal.n, e):
            sub = tuple(m for m in gens if divides(g, m))
            if len(sub) < 2:
                continue
            d_j = gcd_degree(sub)
            if d_j != e:
                continue  # S_{gcd(sub)} sees the same subset with its true gcd
            value = (ideal.d - d_j) * ideal.r + d_j - len(sub) * ideal.d
            wit = Witness(sub, len(sub), d_j, value)
            if best is None or value < best.value:
                best = wit
    return _verdict_from_min(ideal, best)


STABILITY_ORACLE_GUARD = 14


def stability_oracle(ideal: MonomialIdeal) -> StabilityReport:
    """Literal all-subsets scan (sizes 2..r-1); ground truth for
    stability_class.  Guarded at r <= 14."""
    if ideal.r < 3:
        raise ValueError("stability needs r >= 3 (bundle rank >= 2)")
    if ideal.r > STABILITY_ORACLE_GUARD:
        raise GuardExceeded(
            f"stability oracle guard is r <= {STABILITY_ORACLE_GUARD}, got r = {ideal.r}"
        )
    best: Witness | None = None
    for s in range(2, ideal.r):
        for sub in combinations(ideal.generators, s):
            d_j = gcd_degree(sub)
            value = (ideal.d - d_j) * ideal.r + d_j - s * ideal.d
            if best is None or value < best.value:
                best = Witness(sub, s, d_j, value)
    return _verdict_from_min(ideal, best)


def stability_coincidence(ideal: MonomialIdeal) -> bool:
    """True when gcd(c1, rank) = 1, i.e. gcd(r*d, r-1) = 1, in which case
    semistable and stable verdicts coincide and properly_semistable cannot
    occur."""
    return gcd(ideal.r * ideal.d, ideal.r - 1) == 1
