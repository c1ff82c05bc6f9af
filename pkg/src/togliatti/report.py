"""Aggregated per-ideal analysis: WLP, Togliatti/minimality, smoothness,
stability, and the derived classification tags."""

from __future__ import annotations

import time
from dataclasses import dataclass

from . import __version__
from .apolarity import TogliattiReport, certificate_text, togliatti_report
from .lefschetz import WlpReport, wlp_report
from .monomials import (
    MonomialIdeal,
    canonical_form,
    ideal_to_json_dict,
    is_trivial,
    is_trivial_type_b,
    monomial_text,
)
from .polytopes import SmoothnessReport, is_smooth
from .stability import StabilityReport, stability_class

ALL_CHECKS = ("wlp", "togliatti", "smoothness", "stability")


@dataclass(frozen=True)
class AnalysisReport:
    ideal: MonomialIdeal
    canonical: MonomialIdeal
    wlp: WlpReport | None
    togliatti: TogliattiReport | None
    smoothness: SmoothnessReport | None
    stability: StabilityReport | None
    stability_note: str | None
    trivial_witness: tuple | None
    trivial_type_b_index: int | None
    version: str
    timing_ms: float

    @property
    def tags(self) -> dict:
        minimal = bool(self.togliatti and self.togliatti.is_minimal)
        smooth = bool(self.smoothness and self.smoothness.is_smooth)
        return {
            "trivial": self.trivial_witness is not None,
            "trivial_type_b": self.trivial_type_b_index is not None,
            "minimal": minimal,
            "smooth_minimal": minimal and smooth,
        }

    def to_json_dict(self, include_timing: bool = False) -> dict:
        out: dict = {
            "input": ideal_to_json_dict(self.ideal),
            "canonical": ideal_to_json_dict(self.canonical),
            "r": self.ideal.r,
            "generator_bound": self.ideal.generator_bound(),
            "tags": self.tags,
            "trivial_witness": (
                list(self.trivial_witness) if self.trivial_witness else None
            ),
            "trivial_type_b_variable": self.trivial_type_b_index,
            "wlp": self.wlp.to_json_dict() if self.wlp else None,
            "togliatti": self.togliatti.to_json_dict() if self.togliatti else None,
            "smoothness": self.smoothness.to_json_dict() if self.smoothness else None,
            "stability": self.stability.to_json_dict() if self.stability else None,
            "stability_note": self.stability_note,
            "version": self.version,
        }
        if self.togliatti and self.togliatti.certificate:
            out["certificate_text"] = certificate_text(
                self.togliatti.certificate, self.ideal.n, self.ideal.d - 1
            )
        if include_timing:
            out["timing_ms"] = round(self.timing_ms, 3)
        return out

    def text_summary(self) -> str:
        lines = [f"ideal: {self.ideal}  (n={self.ideal.n}, d={self.ideal.d}, r={self.ideal.r})"]
        t = self.tags
        if self.wlp:
            fail = ",".join(map(str, self.wlp.failing_degrees)) or "-"
            lines.append(f"wlp: {self.wlp.has_wlp}  failing degrees: {fail}")
        if self.togliatti:
            rep = self.togliatti
            lines.append(
                f"togliatti: {rep.is_togliatti}  status: {rep.status}  "
                f"laplace equations: {rep.kernel_dimension}  minimal: {rep.is_minimal}"
            )
            if rep.certificate:
                lines.append(
                    "certificate: "
                    + certificate_text(rep.certificate, self.ideal.n, self.ideal.d - 1)
                )
        lines.append(
            f"trivial: {t['trivial']}"
            + (f"  (F = {monomial_text(self.trivial_witness)})" if self.trivial_witness else "")
        )
        lines.append(
            f"trivial type B: {t['trivial_type_b']}"
            + (
                f"  (shared variable x{self.trivial_type_b_index})"
                if self.trivial_type_b_index is not None
                else ""
            )
        )
        if self.smoothness:
            lines.append(
                f"smooth: {self.smoothness.is_smooth}"
                + (
                    "  failures: "
                    + "; ".join(f.condition for f in self.smoothness.failures)
                    if self.smoothness.failures
                    else ""
                )
            )
        if self.stability:
            s = self.stability
            lines.append(f"stability: {s.verdict}  slope(E) = {s.slope_of_e}")
        elif self.stability_note:
            lines.append(f"stability: skipped ({self.stability_note})")
        lines.append(f"tags: {t}")
        return "\n".join(lines)


def analyze(ideal: MonomialIdeal, checks=ALL_CHECKS) -> AnalysisReport:
    """Run the selected checks and aggregate a consistent report."""
    t0 = time.perf_counter()
    checks = set(checks)
    bad = checks - set(ALL_CHECKS)
    if bad:
        raise ValueError(f"unknown checks: {sorted(bad)}; valid: {ALL_CHECKS}")
    wlp = wlp_report(ideal) if "wlp" in checks else None
    tog = togliatti_report(ideal) if "togliatti" in checks else None
    smooth = is_smooth(ideal) if "smoothness" in checks else None
    stab = None
    stab_note = None
    if "stability" in checks:
        if ideal.r >= 3:
            stab = stability_class(ideal)
        else:
            stab_note = "bundle rank below 2 (r < 3)"
    return AnalysisReport(
        ideal=ideal,
        canonical=canonical_form(ideal),
        wlp=wlp,
        togliatti=tog,
        smoothness=smooth,
        stability=stab,
        stability_note=stab_note,
        trivial_witness=is_trivial(ideal),
        trivial_type_b_index=is_trivial_type_b(ideal),
        version=__version__,
        timing_ms=(time.perf_counter() - t0) * 1000.0,
    )
