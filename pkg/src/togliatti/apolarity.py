"""Togliatti detection, minimality, and certificate extraction.

An artinian monomial ideal generated by r monomials of degree d, with
r <= C(n+d-1, n-1), is a Togliatti system exactly when some hypersurface of
degree d-1 passes through every lattice point of its inverse system A_I.
The certificate space is the right kernel of the evaluation matrix of A_I
against the degree-(d-1) monomials.

Minimality is decided by single-point augmentation: the system is minimal
iff no certificate survives the re-insertion of a removed non-vertex point.
Re-adding points only shrinks the kernel, so any Togliatti proper subset
already shows up at co-rank one; the brute-force subset oracle is kept for
validation.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import GuardExceeded
from .linalg import _evaluation_rows, _int_rank, kernel_basis
from .monomials import (
    Monomial,
    MonomialIdeal,
    inverse_system,
    make_ideal,
    monomial_text,
    monomials_of_degree,
    pure_powers,
)

# togliatti_status values
TOGLIATTI = "togliatti"
NO_LAPLACE = "no-laplace-equation"
EXCEEDS_BOUND = "fails-generator-bound"


@dataclass(frozen=True)
class HypersurfaceSpace:
    """Coprime-integer basis of the degree-(d-1) forms vanishing on A_I.

    Coefficient vectors are indexed by the degree-(d-1) monomials in
    graded-lex order.
    """

    n: int
    d: int
    basis: tuple[tuple[int, ...], ...]

    @property
    def degree(self) -> int:
        return self.d - 1

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def monomials(self) -> tuple[Monomial, ...]:
        return monomials_of_degree(self.n, self.d - 1)


@dataclass(frozen=True)
class TogliattiReport:
    status: str
    satisfies_generator_bound: bool
    is_togliatti: bool
    kernel_dimension: int
    is_minimal: bool
    blocking_points: tuple[Monomial, ...]
    certificate: tuple[int, ...] | None

    def to_json_dict(self) -> dict:
        return {
            "status": self.status,
            "satisfies_generator_bound": self.satisfies_generator_bound,
            "is_togliatti": self.is_togliatti,
            "kernel_dimension": self.kernel_dimension,
            "is_minimal": self.is_minimal,
            "blocking_points": [list(p) for p in self.blocking_points],
            "certificate": list(self.certificate) if self.certificate else None,
        }


def togliatti_kernel(ideal: MonomialIdeal) -> HypersurfaceSpace:
    """Kernel of the evaluation matrix of A_I at degree d-1."""
    pts = inverse_system(ideal)
    rows = _evaluation_rows(pts.points, ideal.d - 1, ideal.n)
    return HypersurfaceSpace(ideal.n, ideal.d, tuple(kernel_basis(rows)))


def _kernel_dimension(ideal: MonomialIdeal, extra_point: Monomial | None = None) -> int:
    """dim of the certificate space, optionally with one point re-inserted."""
    pts = list(inverse_system(ideal).points)
    if extra_point is not None:
        pts.append(extra_point)
    ncols = comb(ideal.n + ideal.d - 1, ideal.n)
    rows = _evaluation_rows(pts, ideal.d - 1, ideal.n)
    return ncols - _int_rank(rows)


def togliatti_status(ideal: MonomialIdeal) -> str:
    """Classify: Togliatti / no Laplace equation / exceeds the generator bound.

    A bound violation is reported as its own status rather than silently
    mapping to False.
    """
    if ideal.r > ideal.generator_bound():
        return EXCEEDS_BOUND
    if _kernel_dimension(ideal) == 0:
        return NO_LAPLACE
    return TOGLIATTI


def is_togliatti(ideal: MonomialIdeal) -> bool:
    """True iff r <= C(n+d-1, n-1) and some degree-(d-1) hypersurface
    contains all of A_I."""
    return togliatti_status(ideal) == TOGLIATTI


def _blocking_points(ideal: MonomialIdeal) -> list[Monomial]:
    """Non-vertex complement points through which some certificate passes.

    The complement of A_I in d*Delta_n is the generator set; the vertices
    (pure powers) are exempt since artinianness makes them non-removable.
    """
    verts = set(pure_powers(ideal.n, ideal.d))
    blocking = []
    for g in ideal.generators:
        if g in verts:
            continue
        if _kernel_dimension(ideal, extra_point=g) > 0:
            blocking.append(g)
    return blocking


def togliatti_report(ideal: MonomialIdeal) -> TogliattiReport:
    """Full Togliatti/minimality verdict with certificate when unique."""
    status = togliatti_status(ideal)
    kdim = _kernel_dimension(ideal)
    if status != TOGLIATTI:
        return TogliattiReport(status, status != EXCEEDS_BOUND, False, kdim, False, (), None)
    blocking = _blocking_points(ideal)
    cert = None
    if kdim == 1:
        cert = togliatti_kernel(ideal).basis[0]
    return TogliattiReport(
        status=TOGLIATTI,
        satisfies_generator_bound=True,
        is_togliatti=True,
        kernel_dimension=kdim,
        is_minimal=not blocking,
        blocking_points=tuple(sorted(blocking)),
        certificate=cert,
    )


def is_minimal(ideal: MonomialIdeal) -> TogliattiReport:
    """Minimality report via the point-augmentation test.

    Raises ValueError when called on a non-Togliatti ideal.
    """
    report = togliatti_report(ideal)
    if not report.is_togliatti:
        raise ValueError(f"not a Togliatti system (status: {report.status})")
    return report


MINIMALITY_ORACLE_GUARD = 16


def minimality_oracle(ideal: MonomialIdeal) -> bool:
    """Brute-force minimality: delete one non-pure-power generator at a time
    and test the subset for Togliatti-ness.

    Deleting one generator suffices: re-adding points to A_I only shrinks
    the certificate space, so a Togliatti proper subset yields a Togliatti
    co-rank-one subset.  Guarded at r <= 16.
    """
    if not is_togliatti(ideal):
        raise ValueError("not a Togliatti system")
    if ideal.r > MINIMALITY_ORACLE_GUARD:
        raise GuardExceeded(
            f"minimality oracle guard is r <= {MINIMALITY_ORACLE_GUARD}, got r = {ideal.r}"
        )
    verts = set(pure_powers(ideal.n, ideal.d))
    for g in ideal.generators:
        if g in verts:
            continue
        subset = make_ideal(ideal.n, ideal.d, [h for h in ideal.generators if h != g])
        if is_togliatti(subset):
            return False
    return True


def certificate_polynomial(ideal: MonomialIdeal) -> tuple[int, ...]:
    """The unique-up-to-sign coprime-integer certificate (kernel dim must be 1)."""
    space = togliatti_kernel(ideal)
    if space.dimension != 1:
        raise ValueError(
            f"certificate requires a one-dimensional kernel, got dimension {space.dimension}"
        )
    return space.basis[0]


def certificate_text(coeffs: tuple[int, ...], n: int, e: int) -> str:
    """Human-readable polynomial for a coefficient vector over degree-e monomials."""
    parts = []
    for c, m in zip(coeffs, monomials_of_degree(n, e)):
        if not c:
            continue
        txt = monomial_text(m)
        mag = abs(c)
        body = txt if mag == 1 and txt != "1" else (f"{mag}*{txt}" if txt != "1" else f"{mag}")
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts) if parts else "0"


def compare_certificates(
    computed: tuple[int, ...], reference: tuple[int, ...], n: int, e: int
) -> list[tuple[Monomial, int, int]]:
    """Coefficient-by-coefficient diff after aligning overall sign.

    Sign alignment maximizes agreement, so genuine typos in a reference
    polynomial surface as isolated mismatches.
    """
    monos = monomials_of_degree(n, e)
    agree = sum(1 for a, b in zip(computed, reference) if a == b)
    agree_neg = sum(1 for a, b in zip(computed, reference) if a == -b)
    ref = [-b for b in reference] if agree_neg > agree else list(reference)
    return [(m, a, b) for m, a, b in zip(monos, computed, ref) if a != b]
