"""Weak Lefschetz property testing for single-degree artinian monomial ideals.

For monomial ideals it suffices to test the single linear form
L = x0 + ... + xn, so every verdict here is exact and deterministic: no
generic-form sampling.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .linalg import RationalMatrix, kernel_basis, rank
from .monomials import Monomial, MonomialIdeal, monomials_of_degree


def quotient_basis(ideal: MonomialIdeal, j: int) -> tuple[Monomial, ...]:
    """Monomial basis of (R/I)_j: degree-j monomials not in the ideal."""
    if j < 0:
        return ()
    if j < ideal.d:
        return monomials_of_degree(ideal.n, j)
    return tuple(
        m for m in monomials_of_degree(ideal.n, j) if not ideal.contains_monomial(m)
    )


def multiplication_matrix(ideal: MonomialIdeal, j: int) -> RationalMatrix:
    """Matrix of multiplication by x0+...+xn from (R/I)_j to (R/I)_{j+1}.

    Rows are indexed by the degree-(j+1) target basis, columns by the
    degree-j source basis; the entry is 1 where target = x_i * source.
    """
    if j < 0:
        raise ValueError("degree must be nonnegative")
    source = quotient_basis(ideal, j)
    target = quotient_basis(ideal, j + 1)
    tindex = {m: i for i, m in enumerate(target)}
    rows = [[0] * len(source) for _ in target]
    n = ideal.n
    for c, s in enumerate(source):
        for i in range(n + 1):
            t = tuple(s[k] + (1 if k == i else 0) for k in range(n + 1))
            ti = tindex.get(t)
            if ti is not None:
                rows[ti][c] = 1
    return RationalMatrix.from_rows(rows)


@dataclass(frozen=True)
class DegreeRecord:
    j: int
    dim_source: int
    dim_target: int
    rank: int

    @property
    def maximal(self) -> bool:
        return self.rank == min(self.dim_source, self.dim_target)


@dataclass(frozen=True)
class WlpReport:
    degrees: tuple[DegreeRecord, ...]
    failing_degrees: tuple[int, ...]

    @property
    def has_wlp(self) -> bool:
        return not self.failing_degrees

    def to_json_dict(self) -> dict:
        return {
            "has_wlp": self.has_wlp,
            "failing_degrees": list(self.failing_degrees),
            "degrees": [
                {
                    "j": rec.j,
                    "rank": rec.rank,
                    "dim_source": rec.dim_source,
                    "dim_target": rec.dim_target,
                    "maximal": rec.maximal,
                }
                for rec in self.degrees
            ],
        }


def wlp_report(ideal: MonomialIdeal) -> WlpReport:
    """Per-degree maximal-rank verdicts for x(L): (R/I)_j -> (R/I)_{j+1}.

    Scans j = 0 up to the last degree where the target is nonzero; with the
    pure powers present this stops by (n+1)(d-1).
    """
    records = []
    failing = []
    j = 0
    top = (ideal.n + 1) * (ideal.d - 1)
    while j <= top:
        source = quotient_basis(ideal, j)
        target = quotient_basis(ideal, j + 1)
        if not target:
            break
        mat = multiplication_matrix(ideal, j)
        rk = rank(mat)
        rec = DegreeRecord(j, len(source), len(target), rk)
        records.append(rec)
        if not rec.maximal:
            failing.append(j)
        j += 1
    return WlpReport(tuple(records), tuple(failing))


def fails_wlp_in_degree(ideal: MonomialIdeal, j: int) -> bool:
    """True iff multiplication by L is neither injective nor surjective at j."""
    if j < 0:
        raise ValueError("degree must be nonnegative")
    source = quotient_basis(ideal, j)
    target = quotient_basis(ideal, j + 1)
    rk = rank(multiplication_matrix(ideal, j))
    return rk < min(len(source), len(target))


def _restriction_row(g: Monomial, cols: dict[Monomial, int], ncols: int) -> list[int]:
    """Coefficient vector of g after substituting x0 := -(x1+...+xn).

    The result is a form of degree d in x1..xn; columns index the degree-d
    monomials in those n variables.
    """
    n = len(g) - 1
    a0 = g[0]
    row = [0] * ncols
    # expand (-(x1+...+xn))^a0 * x1^g1 ... xn^gn
    for kappa in monomials_of_degree(n - 1, a0):
        coeff = factorial(a0)
        for k in kappa:
            coeff //= factorial(k)
        if a0 % 2:
            coeff = -coeff
        mono = tuple(g[i + 1] + kappa[i] for i in range(n))
        row[cols[mono]] += coeff
    return row


def hyperplane_dependence(ideal: MonomialIdeal) -> tuple[int, ...] | None:
    """A nonzero rational dependence among the generators restricted to the
    hyperplane x0 + ... + xn = 0, or None if they stay independent.

    The substitution x0 := -(x1+...+xn) is expanded exactly; for monomial
    ideals this single hyperplane decides the general-hyperplane condition.
    The vector is indexed by ``ideal.generators`` and normalized to coprime
    integers.
    """
    n = ideal.n
    d = ideal.d
    col_monos = monomials_of_degree(n - 1, d)
    cols = {m: i for i, m in enumerate(col_monos)}
    rows = [_restriction_row(g, cols, len(col_monos)) for g in ideal.generators]
    # left kernel: dependence vectors v with v * M = 0
    transposed = [list(col) for col in zip(*rows)]
    basis = kernel_basis(transposed)
    if not basis:
        return None
    return basis[0]
