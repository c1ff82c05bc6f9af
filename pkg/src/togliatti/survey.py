"""Symmetry-pruned exhaustive enumeration of single-degree monomial ideals
and closed-form generator-count bounds.

The enumeration streams one canonical representative per coordinate-
permutation orbit of {pure powers} + {extra degree-d monomials}.  The
Togliatti filter runs on a precomputed basis of the orthogonal complement
of the degree-(d-1) evaluation functionals: the order-d mixed finite
differences based at the origin corner of the simplex grid.  These have
tiny integer entries, so per-candidate kernel dimensions reduce to small
integer rank computations; the evaluation-matrix route stays available as
an independent cross-check.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from math import comb

from .errors import BudgetExceeded
from .monomials import (
    Monomial,
    MonomialIdeal,
    is_trivial,
    is_trivial_type_b,
    monomials_of_degree,
    pure_powers,
)
from .linalg import _int_rank
from .polytopes import is_smooth

FILTERS = ("togliatti", "minimal", "smooth", "trivial", "nontrivial")

DEFAULT_BUDGET = 10_000_000


def _difference_basis(n: int, d: int) -> list[dict[int, int]]:
    """Order-d mixed difference functionals on the simplex grid.

    For each exponent alpha of degree d in the last n variables, the
    functional sends a grid function f to
    sum over gamma <= alpha of (-1)^(d - |gamma|) * prod C(alpha_i, gamma_i)
    * f at the point (d - |gamma|, gamma).  Each kills every polynomial of
    degree <= d-1, and the top supports alpha are distinct, so the
    C(n+d-1, n-1) functionals are a basis of the orthogonal complement of
    the degree-(d-1) evaluation columns.

    Returned as sparse {point index: coefficient} maps over the graded-lex
    point order of the simplex.
    """
    from .monomials import monomial_index

    index = monomial_index(n, d)
    basis = []
    for alpha in monomials_of_degree(n - 1, d):
        coeffs: dict[int, int] = {}
        for gamma in _boxes(alpha):
            point = (d - sum(gamma),) + gamma
            c = 1
            for a, g in zip(alpha, gamma):
                c *= comb(a, g)
            if (d - sum(gamma)) % 2:
                c = -c
            coeffs[index[point]] = c
        basis.append(coeffs)
    return basis


def _boxes(alpha: tuple[int, ...]):
    if not alpha:
        yield ()
        return
    for g in range(alpha[0] + 1):
        for rest in _boxes(alpha[1:]):
            yield (g,) + rest


@dataclass
class SurveyContext:
    """Per-(n, d) tables shared by all enumeration candidates."""

    n: int
    d: int
    candidates: tuple[Monomial, ...]  # non-pure degree-d monomials, ascending
    candidate_index: dict[Monomial, int]
    perm_tables: tuple[tuple[int, ...], ...]  # candidate-index action of S_{n+1}
    y_rows: tuple[tuple[int, ...], ...]  # difference-functional rows per point
    vertex_point_ids: tuple[int, ...]
    candidate_point_ids: tuple[int, ...]
    bound: int

    @property
    def pure(self) -> tuple[Monomial, ...]:
        return pure_powers(self.n, self.d)

    def ideal_of(self, subset: tuple[int, ...]) -> MonomialIdeal:
        gens = sorted(self.pure + tuple(self.candidates[i] for i in subset))
        return MonomialIdeal(self.n, self.d, tuple(gens))

    def is_canonical(self, subset: tuple[int, ...]) -> bool:
        ref = list(subset)
        for table in self.perm_tables:
            if sorted(table[i] for i in subset) < ref:
                return False
        return True

    def kernel_dimension(self, subset: tuple[int, ...], drop: int | None = None) -> int:
        """Certificate-space dimension for pure powers + subset, optionally
        with one subset member re-inserted into A_I (dropped from the
        generators)."""
        ids = list(self.vertex_point_ids)
        ids += [self.candidate_point_ids[i] for i in subset if i != drop]
        rows = [list(self.y_rows[i]) for i in ids]
        return len(rows) - _int_rank(rows)

    def passes(self, subset: tuple[int, ...], filters: frozenset[str]) -> bool:
        need_kernel = "togliatti" in filters or "minimal" in filters
        if need_kernel:
            r = self.n + 1 + len(subset)
            if r > self.bound or self.kernel_dimension(subset) == 0:
                return False
            if "minimal" in filters:
                for i in subset:
                    if self.kernel_dimension(subset, drop=i) > 0:
                        return False
        if "trivial" in filters or "nontrivial" in filters:
            trivial = is_trivial(self.ideal_of(subset)) is not None
            if "trivial" in filters and not trivial:
                return False
            if "nontrivial" in filters and trivial:
                return False
        if "smooth" in filters:
            if not is_smooth(self.ideal_of(subset)).is_smooth:
                return False
        return True


@lru_cache(maxsize=None)
def survey_context(n: int, d: int) -> SurveyContext:
    points = monomials_of_degree(n, d)
    point_index = {m: i for i, m in enumerate(points)}
    pure = set(pure_powers(n, d))
    candidates = tuple(sorted(m for m in points if m not in pure))
    candidate_index = {m: i for i, m in enumerate(candidates)}
    tables = []
    for perm in permutations(range(n + 1)):
        table = tuple(
            candidate_index[tuple(m[perm[k]] for k in range(n + 1))]
            for m in candidates
        )
        tables.append(table)
    diff = _difference_basis(n, d)
    k = len(diff)
    y_rows = []
    for i in range(len(points)):
        y_rows.append(tuple(diff[j].get(i, 0) for j in range(k)))
    return SurveyContext(
        n=n,
        d=d,
        candidates=candidates,
        candidate_index=candidate_index,
        perm_tables=tuple(tables),
        y_rows=tuple(y_rows),
        vertex_point_ids=tuple(point_index[m] for m in sorted(pure)),
        candidate_point_ids=tuple(point_index[m] for m in candidates),
        bound=comb(n + d - 1, n - 1),
    )


def raw_subset_count(n: int, d: int, extra: int) -> int:
    ctx = survey_context(n, d)
    return comb(len(ctx.candidates), extra)


def _scan_chunk(args) -> list[tuple[int, ...]]:
    n, d, extra, filters, up_to_symmetry, first_lo, first_hi = args
    ctx = survey_context(n, d)
    filters = frozenset(filters)
    ncand = len(ctx.candidates)
    out = []
    for first in range(first_lo, first_hi):
        for rest in combinations(range(first + 1, ncand), extra - 1):
            subset = (first,) + rest
            if up_to_symmetry and not ctx.is_canonical(subset):
                continue
            if ctx.passes(subset, filters):
                out.append(subset)
    return out


def enumerate_ideals(
    n: int,
    d: int,
    extra: int,
    filters=(),
    up_to_symmetry: bool = True,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
    progress=None,
):
    """Stream canonical MonomialIdeals with the given number of extra
    (non-pure-power) generators, applying in-stream filters.

    Filters: togliatti, minimal, smooth, trivial, nontrivial.  Raises
    BudgetExceeded (with the count needed) instead of silently truncating.
    Output order is deterministic and independent of the worker count.
    """
    bad = set(filters) - set(FILTERS)
    if bad:
        raise ValueError(f"unknown filters: {sorted(bad)}")
    if extra < 0:
        raise ValueError("extra must be nonnegative")
    ctx = survey_context(n, d)
    needed = comb(len(ctx.candidates), extra)
    if needed > budget:
        raise BudgetExceeded(needed, budget)
    filters = frozenset(filters)
    if extra == 0:
        if ctx.passes((), filters):
            yield ctx.ideal_of(())
        return
    ncand = len(ctx.candidates)
    firsts = range(ncand - extra + 1)
    if workers > 1:
        step = max(1, len(firsts) // (workers * 8))
        tasks = [
            (n, d, extra, tuple(sorted(filters)), up_to_symmetry, lo, min(lo + step, len(firsts)))
            for lo in range(0, len(firsts), step)
        ]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for chunk in pool.map(_scan_chunk, tasks):
                for subset in chunk:
                    yield ctx.ideal_of(subset)
        return
    done = 0
    for first in firsts:
        for rest in combinations(range(first + 1, ncand), extra - 1):
            subset = (first,) + rest
            done += 1
            if progress and done % 100_000 == 0:
                print(f"  scanned {done}/{needed} subsets", file=progress, flush=True)
            if up_to_symmetry and not ctx.is_canonical(subset):
                continue
            if ctx.passes(subset, filters):
                yield ctx.ideal_of(subset)


@dataclass
class SurveyRow:
    """Orbit counts for one (n, d, mu) cell, with canonical representatives
    per class."""

    n: int
    d: int
    mu: int
    total: int = 0
    togliatti: int = 0
    minimal: int = 0
    minimal_smooth: int = 0
    trivial: int = 0
    trivial_type_b: int = 0
    representatives: dict = field(default_factory=dict)

    CSV_HEADER = "n,d,mu,total,togliatti,minimal,minimal_smooth,trivial,trivial_type_b"

    def csv_line(self) -> str:
        return (
            f"{self.n},{self.d},{self.mu},{self.total},{self.togliatti},"
            f"{self.minimal},{self.minimal_smooth},{self.trivial},{self.trivial_type_b}"
        )


def survey_row(
    n: int,
    d: int,
    mu: int,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
    max_representatives: int = 10,
    progress=None,
) -> SurveyRow:
    """Classify every canonical orbit with the given generator count."""
    extra = mu - (n + 1)
    if extra < 0:
        raise ValueError(f"mu must be at least n+1 = {n + 1}, got {mu}")
    ctx = survey_context(n, d)
    row = SurveyRow(n, d, mu)

    def note(kind, ideal):
        reps = row.representatives.setdefault(kind, [])
        if len(reps) < max_representatives:
            reps.append(ideal)

    for ideal in enumerate_ideals(
        n, d, extra, budget=budget, workers=workers, progress=progress
    ):
        row.total += 1
        subset = tuple(ctx.candidate_index[m] for m in ideal.nonpure_generators)
        if is_trivial(ideal) is not None:
            row.trivial += 1
            note("trivial", ideal)
        if is_trivial_type_b(ideal) is not None:
            row.trivial_type_b += 1
        r = n + 1 + extra
        if r > ctx.bound or ctx.kernel_dimension(subset) == 0:
            continue
        row.togliatti += 1
        note("togliatti", ideal)
        if any(ctx.kernel_dimension(subset, drop=i) > 0 for i in subset):
            continue
        row.minimal += 1
        note("minimal", ideal)
        if is_smooth(ideal).is_smooth:
            row.minimal_smooth += 1
            note("minimal_smooth", ideal)
    return row


# ---------------------------------------------------------------------------
# closed-form bounds


@dataclass(frozen=True)
class BoundValue:
    value: int | None
    source: str  # paper | derived | empty | unknown

    def known(self) -> bool:
        return self.value is not None


_UNKNOWN = BoundValue(None, "unknown")
_EMPTY = BoundValue(None, "empty")


@dataclass(frozen=True)
class MuBounds:
    n: int
    d: int
    mu: BoundValue
    mu_s: BoundValue
    rho: BoundValue
    rho_s: BoundValue
    generator_cap: int  # C(n+d-1, n-1)

    def to_json_dict(self) -> dict:
        def enc(b: BoundValue):
            return {"value": b.value, "source": b.source}

        return {
            "n": self.n,
            "d": self.d,
            "mu": enc(self.mu),
            "mu_s": enc(self.mu_s),
            "rho": enc(self.rho),
            "rho_s": enc(self.rho_s),
            "generator_cap": self.generator_cap,
        }


def _partitions(total: int, max_part: int):
    if total == 0:
        yield ()
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in _partitions(total - first, first):
            yield (first,) + rest


def closed_form_mu_s(n: int, d: int) -> int:
    """Minimal generator count of a smooth minimal system for d in {2, 3}.

    d = 2 (n >= 3): lambda^2 + 2*lambda + 1 for n = 2*lambda, else
    lambda^2 + 3*lambda + 2 for n = 2*lambda + 1.

    d = 3 (n >= 4): minimum over partitions n+1 = a_1 + ... + a_s with
    n-1 >= a_1 >= ... >= a_s >= 1 of
    sum C(a_i + 2, 3) + sum over triples i<j<k of a_i*a_j*a_k.
    (The partition minimum is the ground truth; a displayed case split
    disagrees with it at n = 4 and is not used.)
    """
    if d == 2:
        if n < 3:
            raise ValueError("closed form for d=2 requires n >= 3")
        lam = n // 2
        return lam * lam + 2 * lam + 1 if n % 2 == 0 else lam * lam + 3 * lam + 2
    if d == 3:
        if n < 4:
            raise ValueError("closed form for d=3 requires n >= 4")
        best = None
        for parts in _partitions(n + 1, n - 1):
            s = sum(comb(a + 2, 3) for a in parts)
            k = len(parts)
            for i in range(k):
                for j in range(i + 1, k):
                    for l in range(j + 1, k):
                        s += parts[i] * parts[j] * parts[l]
            if best is None or s < best:
                best = s
        assert best is not None
        return best
    raise ValueError(f"closed form only for d in {{2, 3}}, got d = {d}")


def mu_bounds(n: int, d: int) -> MuBounds:
    """Closed-form values of mu, mu^s, rho, rho^s as far as established.

    Values are flagged by source; enumeration-based confirmation lives in
    the reproduction harness, not here.
    """
    if d < 2:
        raise ValueError("bounds require d >= 2")
    cap = comb(n + d - 1, n - 1)
    mu = mu_s = rho = rho_s = _UNKNOWN
    if d >= 4:
        mu = mu_s = BoundValue(2 * n + 1, "paper")
        rho = BoundValue(cap, "paper")
        if n == 2:
            rho_s = BoundValue(d + 1, "paper")
    elif d == 3:
        if n == 2:
            mu = mu_s = rho_s = BoundValue(4, "paper")
            rho = BoundValue(4, "derived")  # cap = 4 and it is attained
        elif n == 3:
            mu = BoundValue(7, "paper")
            mu_s = rho_s = BoundValue(8, "paper")
        else:
            mu = BoundValue(2 * n + 1, "paper")
            mu_s = BoundValue(closed_form_mu_s(n, 3), "paper")
            rho_s = BoundValue(comb(n + 1, 3) + n + 1, "paper")
    else:  # d == 2
        if n == 2:
            mu = mu_s = _EMPTY  # no Togliatti systems of quadrics in 3 variables
            rho = rho_s = _EMPTY
        elif n == 3:
            mu = BoundValue(6, "paper")
            mu_s = BoundValue(closed_form_mu_s(3, 2), "paper")
            rho_s = BoundValue(comb(n, 2) + 3, "paper")
        else:
            mu = BoundValue(2 * n + 1, "paper")
            mu_s = BoundValue(closed_form_mu_s(n, 2), "paper")
            rho_s = BoundValue(comb(n, 2) + 3, "paper")
    return MuBounds(n, d, mu, mu_s, rho, rho_s, cap)
