"""Exact linear algebra over the rationals with arbitrary-precision integers.

Rank and kernel computations run Bareiss fraction-free elimination on
integer matrices (rows are rescaled to clear denominators first, which
changes neither rank nor right kernel).  Smith normal form tracks both
unimodular transforms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .monomials import LatticePointSet, Monomial, monomials_of_degree


@dataclass(frozen=True)
class RationalMatrix:
    """Immutable dense matrix with Fraction entries (canonical reduced form)."""

    entries: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def from_rows(cls, rows) -> "RationalMatrix":
        ent = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if ent and any(len(r) != len(ent[0]) for r in ent):
            raise ValueError("ragged rows")
        return cls(ent)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(tuple(zip(*self.entries))) if self.entries else self

    def is_integer(self) -> bool:
        return all(x.denominator == 1 for row in self.entries for x in row)

    def to_json_dict(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[str(x) for x in row] for row in self.entries],
        }

    def _int_rows(self) -> list[list[int]]:
        """Rows rescaled to integers (per-row lcm of denominators)."""
        out = []
        for row in self.entries:
            den = 1
            for x in row:
                den = den * x.denominator // gcd(den, x.denominator)
            out.append([int(x * den) for x in row])
        return out


def _int_rank(rows: list[list[int]]) -> int:
    """Rank by Bareiss fraction-free elimination; mutates ``rows``."""
    if not rows:
        return 0
    nrows, ncols = len(rows), len(rows[0])
    prev = 1
    pr = 0
    for pc in range(ncols):
        piv = None
        for i in range(pr, nrows):
            if rows[i][pc]:
                piv = i
                break
        if piv is None:
            continue
        if piv != pr:
            rows[pr], rows[piv] = rows[piv], rows[pr]
        p = rows[pr][pc]
        for i in range(pr + 1, nrows):
            ri = rows[i]
            f = ri[pc]
            if f:
                rp = rows[pr]
                for j in range(pc, ncols):
                    ri[j] = (ri[j] * p - f * rp[j]) // prev
            else:
                for j in range(pc, ncols):
                    ri[j] = (ri[j] * p) // prev
        prev = p
        pr += 1
        if pr == nrows:
            break
    return pr


def _int_det(rows: list[list[int]]) -> int:
    """Determinant of a square integer matrix via Bareiss; mutates ``rows``."""
    m = [list(r) for r in rows]
    k = len(m)
    if k == 0:
        return 1
    sign = 1
    prev = 1
    for c in range(k - 1):
        piv = None
        for i in range(c, k):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        p = m[c][c]
        for i in range(c + 1, k):
            f = m[i][c]
            for j in range(c, k):
                m[i][j] = (m[i][j] * p - f * m[c][j]) // prev
        prev = p
    return sign * m[k - 1][k - 1]


def rank(matrix: RationalMatrix | list[list[int]]) -> int:
    """Exact rank via fraction-free elimination."""
    if isinstance(matrix, RationalMatrix):
        return _int_rank(matrix._int_rows())
    return _int_rank([list(r) for r in matrix])


def _normalize_int_vector(vec: list[Fraction]) -> tuple[int, ...]:
    """Clear denominators, divide by the gcd, make first nonzero entry > 0."""
    den = 1
    for x in vec:
        den = den * x.denominator // gcd(den, x.denominator)
    iv = [int(x * den) for x in vec]
    g = 0
    for x in iv:
        g = gcd(g, x)
    if g > 1:
        iv = [x // g for x in iv]
    for x in iv:
        if x:
            if x < 0:
                iv = [-y for y in iv]
            break
    return tuple(iv)


def kernel_basis(matrix: RationalMatrix | list[list[int]]) -> list[tuple[int, ...]]:
    """Basis of the right kernel, one coprime-integer vector per free column.

    Bareiss elimination to echelon form, then exact back-substitution; each
    basis vector is normalized to coprime integers with positive leading
    coefficient.
    """
    if isinstance(matrix, RationalMatrix):
        rows = matrix._int_rows()
        ncols = matrix.cols
    else:
        rows = [list(r) for r in matrix]
        ncols = len(rows[0]) if rows else 0
    nrows = len(rows)
    pivots: list[tuple[int, int]] = []  # (row, col)
    prev = 1
    pr = 0
    for pc in range(ncols):
        piv = None
        for i in range(pr, nrows):
            if rows[i][pc]:
                piv = i
                break
        if piv is None:
            continue
        if piv != pr:
            rows[pr], rows[piv] = rows[piv], rows[pr]
        p = rows[pr][pc]
        for i in range(pr + 1, nrows):
            ri = rows[i]
            f = ri[pc]
            rp = rows[pr]
            for j in range(pc, ncols):
                ri[j] = (ri[j] * p - f * rp[j]) // prev
        prev = p
        pivots.append((pr, pc))
        pr += 1
        if pr == nrows:
            break
    pivot_cols = [pc for _, pc in pivots]
    free_cols = [c for c in range(ncols) if c not in pivot_cols]
    basis = []
    for fc in free_cols:
        sol = [Fraction(0)] * ncols
        sol[fc] = Fraction(1)
        for r_i, pc in reversed(pivots):
            s = Fraction(0)
            for c in range(pc + 1, ncols):
                if sol[c]:
                    s += rows[r_i][c] * sol[c]
            sol[pc] = -s / rows[r_i][pc]
        basis.append(_normalize_int_vector(sol))
    return basis


@dataclass(frozen=True)
class SNFResult:
    """Smith normal form U*M*V = diag(diagonal) with U, V unimodular.

    ``diagonal`` is the full min(rows, cols) diagonal: nonnegative integers
    with d_1 | d_2 | ..., zeros trailing.
    """

    diagonal: tuple[int, ...]
    left: tuple[tuple[int, ...], ...]
    right: tuple[tuple[int, ...], ...]

    def reconstruct(self, original: list[list[int]]) -> list[list[int]]:
        u, v = self.left, self.right
        rows, cols = len(u), len(v)
        um = [
            [sum(u[i][k] * original[k][j] for k in range(len(original))) for j in range(len(original[0]))]
            for i in range(rows)
        ] if original else []
        return [
            [sum(um[i][k] * v[k][j] for k in range(len(v))) for j in range(cols)]
            for i in range(rows)
        ]


def _as_int_rows(matrix) -> list[list[int]]:
    if isinstance(matrix, RationalMatrix):
        if not matrix.is_integer():
            raise ValueError("smith_normal_form requires integer entries")
        return [[int(x) for x in row] for row in matrix.entries]
    return [list(map(int, r)) for r in matrix]


def smith_normal_form(matrix) -> SNFResult:
    """Smith normal form over the integers with unimodular transforms.

    Classic pivot-and-reduce: bring the absolutely smallest nonzero entry to
    the pivot, clear its row and column by division with remainder, repair
    divisibility violations by folding the offending row into the pivot row.
    """
    m = _as_int_rows(matrix)
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    u = [[int(i == j) for j in range(nrows)] for i in range(nrows)]
    v = [[int(i == j) for j in range(ncols)] for i in range(ncols)]

    def swap_rows(i, j):
        m[i], m[j] = m[j], m[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in m:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, f):
        # row dst += f * row src
        m[dst] = [a + f * b for a, b in zip(m[dst], m[src])]
        u[dst] = [a + f * b for a, b in zip(u[dst], u[src])]

    def add_col(dst, src, f):
        for row in m:
            row[dst] += f * row[src]
        for row in v:
            row[dst] += f * row[src]

    def negate_row(i):
        m[i] = [-a for a in m[i]]
        u[i] = [-a for a in u[i]]

    t = 0
    size = min(nrows, ncols)
    while t < size:
        # locate smallest nonzero entry in the trailing block
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                if m[i][j] and (best is None or abs(m[i][j]) < abs(m[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        if m[t][t] < 0:
            negate_row(t)
        dirty = False
        for i in range(t + 1, nrows):
            if m[i][t]:
                q = m[i][t] // m[t][t]
                add_row(i, t, -q)
                if m[i][t]:
                    dirty = True
        for j in range(t + 1, ncols):
            if m[t][j]:
                q = m[t][j] // m[t][t]
                add_col(j, t, -q)
                if m[t][j]:
                    dirty = True
        if dirty:
            continue
        # divisibility: m[t][t] must divide everything below-right
        offender = None
        for i in range(t + 1, nrows):
            for j in range(t + 1, ncols):
                if m[i][j] % m[t][t]:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            add_row(t, offender, 1)
            continue
        t += 1
    diag = tuple(m[i][i] for i in range(size))
    return SNFResult(diag, tuple(map(tuple, u)), tuple(map(tuple, v)))


def evaluation_matrix(points: LatticePointSet | list[Monomial], e: int) -> RationalMatrix:
    """Rows indexed by lattice points, columns by degree-e monomials
    (graded-lex); the entry is the monomial evaluated at the point's integer
    coordinates (0^0 = 1)."""
    if e < 1:
        raise ValueError(f"evaluation degree must be >= 1, got {e}")
    if isinstance(points, LatticePointSet):
        n = points.n
        pts = points.points
    else:
        pts = tuple(points)
        if not pts:
            raise ValueError("empty point list")
        n = len(pts[0]) - 1
    return RationalMatrix.from_rows(_evaluation_rows(pts, e, n))


def _evaluation_rows(pts, e: int, n: int) -> list[list[int]]:
    cols = monomials_of_degree(n, e)
    rows = []
    for p in pts:
        row = []
        for mcol in cols:
            val = 1
            for base, exp in zip(p, mcol):
                if exp:
                    val *= base**exp
            row.append(val)
        rows.append(row)
    return rows
