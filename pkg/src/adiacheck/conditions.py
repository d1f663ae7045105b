"""Adiabaticity audits for degenerate schedules.

Implements the gap-weighted necessary condition
hbar ||M^{n0}(t)/Delta_n0(t)||_1 << 1 and the practical first-order
sufficient bounds D^0(t), D^n_{g_n}(t), compared against the smallest
non-null Wilczek-Zee coefficient of the initially populated level. "<<" is
operationalized as a ratio threshold eta (default 0.1); reports always carry
the raw margins so callers can apply their own cutoff.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Mapping, Optional

import numpy as np

from .holonomy import Holonomy, level_holonomy
from .models import GammaParams, HamiltonianModel
from .spectral import (
    OverlapBlock,
    SnapshotSpectrum,
    TimeGrid,
    one_norm,
    overlap_series,
    spectrum_for,
)

DEFAULT_ETA = 0.1
DEFAULT_NULL_CUTOFF = 1e-6
GAP_VARIATION_WARNING = 0.1


class DegenerateGapError(ValueError):
    """A between-level gap vanished; the levels should have been merged."""


def _require_gaps(gaps: np.ndarray) -> None:
    if float(np.min(np.abs(gaps))) <= np.finfo(float).tiny:
        raise DegenerateGapError(
            "zero gap between levels; merge them into one degenerate level"
        )


def _cumtrapz(values: np.ndarray, dt: float) -> np.ndarray:
    out = np.empty_like(values)
    out[0] = 0.0
    np.cumsum(0.5 * dt * (values[1:] + values[:-1]), out=out[1:])
    return out


def necessary_margin(block, gap: float, hbar: float = 1.0) -> float:
    """hbar ||M^{n0}||_1 / |Delta_n0| for one overlap block."""
    entries = block.entries if isinstance(block, OverlapBlock) else np.asarray(block)
    _require_gaps(np.asarray([gap]))
    return hbar * one_norm(entries) / abs(gap)


def necessary_margin_series(spectrum: SnapshotSpectrum, n: int) -> np.ndarray:
    """The necessary-condition margin of level n against the ground level."""
    if n == 0:
        raise ValueError("the necessary condition compares excited levels to level 0")
    m = overlap_series(spectrum, n, 0)
    gaps = spectrum.structure.gap(n, 0)
    _require_gaps(gaps)
    colsums = np.abs(m).sum(axis=1)
    return spectrum.hbar * colsums.max(axis=1) / np.abs(gaps)


def sufficient_d0(
    blocks_by_level: Mapping[int, np.ndarray],
    gaps_by_level: Mapping[int, np.ndarray],
    d0: int,
    hbar: float,
    dt: float,
) -> np.ndarray:
    """D^0(t) on the grid: the integrated first-order bound for the ground level.

    ``blocks_by_level[n]`` holds M^{0n}(t_k) as an array (n_points, d0, d_n)
    for each excited level n; the result is the same for every ground index.
    """
    integrand = None
    for n, m0n in blocks_by_level.items():
        gaps = np.asarray(gaps_by_level[n])
        _require_gaps(gaps)
        prod = np.einsum("kab,kcb->kac", m0n, np.conjugate(m0n))
        term = np.abs(prod).sum(axis=(1, 2)) / np.abs(gaps)
        integrand = term if integrand is None else integrand + term
    if integrand is None:
        raise ValueError("no excited-level blocks given")
    return hbar * d0 * _cumtrapz(integrand, dt)


def sufficient_d0_series(spectrum: SnapshotSpectrum) -> np.ndarray:
    """D^0(t) built from the spectrum's finite-differenced frames."""
    levels = range(1, spectrum.structure.level_count)
    blocks = {n: overlap_series(spectrum, 0, n) for n in levels}
    gaps = {n: spectrum.structure.gap(0, n) for n in levels}
    return sufficient_d0(
        blocks, gaps, spectrum.structure.multiplicities[0],
        spectrum.hbar, spectrum.grid.dt,
    )


def sufficient_dn(
    block_t: np.ndarray,
    block_0: np.ndarray,
    gap0: float,
    dn: int,
    hbar: float,
    g_n: Optional[int] = None,
):
    """D^n_{g_n}(t) from M^{0n} at time t and at t=0, gap taken at t=0.

    Returns the value for one frame index ``g_n`` or the whole vector over
    g_n when it is omitted.
    """
    _require_gaps(np.asarray([gap0]))
    block_t = np.asarray(block_t)
    cols = np.abs(block_t).sum(axis=0)
    total0 = float(np.abs(np.asarray(block_0)).sum())
    vals = hbar * (cols + dn * total0) / abs(gap0)
    if g_n is None:
        return vals
    return float(vals[g_n])


def sufficient_dn_series(spectrum: SnapshotSpectrum, n: int) -> np.ndarray:
    """D^n_{g_n}(t_k) for level n, shape (n_points, d_n)."""
    if n == 0:
        raise ValueError("use sufficient_d0_series for the ground level")
    m0n = overlap_series(spectrum, 0, n)
    gap0 = float(spectrum.structure.gap(n, 0)[0])
    _require_gaps(np.asarray([gap0]))
    dn = spectrum.structure.multiplicities[n]
    cols = np.abs(m0n).sum(axis=1)
    total0 = float(np.abs(m0n[0]).sum())
    return spectrum.hbar * (cols + dn * total0) / abs(gap0)


def u_floor_series(
    hol: Holonomy,
    null_cutoff: float = DEFAULT_NULL_CUTOFF,
    row: int = 0,
) -> np.ndarray:
    """min_g |U_{row,g}(t_k)| over entries above the null cutoff.

    Entries below the cutoff are transient zeros of the Wilczek-Zee
    coefficients and are not meaningful comparison scales.
    """
    mags = np.abs(hol.values[:, row, :])
    masked = np.where(mags >= null_cutoff, mags, np.inf)
    floor = masked.min(axis=1)
    if not np.all(np.isfinite(floor)):
        raise RuntimeError(
            "every Wilczek-Zee row entry fell below the null cutoff; "
            "a unitary row cannot vanish, so the holonomy input is corrupt"
        )
    return floor


def necessary_check(margins_by_level: Mapping[int, np.ndarray], eta: float) -> bool:
    """Pass iff the largest margin over levels and times is at most eta."""
    worst = max(float(np.max(m)) for m in margins_by_level.values())
    return worst <= eta


def practical_sufficient_check(
    d0: np.ndarray,
    dn_by_level: Mapping[int, np.ndarray],
    ground_holonomy: Holonomy,
    eta: float,
    null_cutoff: float = DEFAULT_NULL_CUTOFF,
    row: int = 0,
) -> tuple[bool, np.ndarray]:
    """Pointwise test D <= eta * u_floor(t) for every level and frame index.

    Returns the verdict and the u_floor series used.
    """
    floor = u_floor_series(ground_holonomy, null_cutoff, row)
    ok = bool(np.all(d0 <= eta * floor))
    for dn in dn_by_level.values():
        ok = ok and bool(np.all(dn <= eta * floor[:, None]))
    return ok, floor


@dataclass(frozen=True)
class ConditionReport:
    """Margins, Wilczek-Zee floor and verdicts of one audited schedule."""

    grid: TimeGrid
    eta: float
    null_cutoff: float
    multiplicities: tuple[int, ...]
    necessary: dict[int, np.ndarray]
    d0: np.ndarray
    dn: dict[int, np.ndarray]
    u_row: np.ndarray
    u_floor: np.ndarray
    necessary_pass: bool
    sufficient_pass: bool
    warnings: list[str] = field(default_factory=list)
    config_echo: Optional[dict] = None

    @property
    def times(self) -> np.ndarray:
        return self.grid.times

    def peak_necessary(self) -> float:
        return max(float(np.max(m)) for m in self.necessary.values())

    def peak_d0(self) -> float:
        return float(np.max(self.d0))

    def peak_dn(self) -> float:
        return max(float(np.max(d)) for d in self.dn.values())

    def to_dict(self, timestamp: bool = True) -> dict:
        doc = {
            "grid": {
                "t_start": self.grid.t_start,
                "t_end": self.grid.t_end,
                "steps": self.grid.steps,
            },
            "eta": self.eta,
            "null_cutoff": self.null_cutoff,
            "multiplicities": list(self.multiplicities),
            "times": self.times.tolist(),
            "necessary_margins": {str(n): m.tolist() for n, m in self.necessary.items()},
            "sufficient_d0": self.d0.tolist(),
            "sufficient_dn": {str(n): d.tolist() for n, d in self.dn.items()},
            "u_row": self.u_row.tolist(),
            "u_floor": self.u_floor.tolist(),
            "verdicts": {
                "necessary_pass": self.necessary_pass,
                "sufficient_pass": self.sufficient_pass,
            },
            "warnings": list(self.warnings),
            "config": self.config_echo or {},
        }
        if timestamp:
            doc["generated"] = datetime.now(timezone.utc).isoformat()
        return doc

    def write_json(self, path, timestamp: bool = True) -> None:
        Path(path).write_text(json.dumps(self.to_dict(timestamp=timestamp), indent=1))

    def write_csv(self, path, timestamp: bool = True) -> None:
        levels = sorted(self.necessary)
        header = ["t"]
        header += [f"necessary_margin_level{n}" for n in levels]
        header += ["sufficient_d0"]
        for n in levels:
            header += [f"sufficient_d{n}_g{g}" for g in range(self.dn[n].shape[1])]
        header += ["u_floor"]
        lines = []
        if timestamp:
            lines.append(f"# generated {datetime.now(timezone.utc).isoformat()}")
        lines.append(",".join(header))
        for k, t in enumerate(self.times):
            row = [t]
            row += [self.necessary[n][k] for n in levels]
            row += [self.d0[k]]
            for n in levels:
                row += list(self.dn[n][k])
            row += [self.u_floor[k]]
            lines.append(",".join(f"{x:.17g}" for x in row))
        Path(path).write_text("\n".join(lines) + "\n")


def build_report(
    model: HamiltonianModel,
    grid: TimeGrid,
    eta: float = DEFAULT_ETA,
    null_cutoff: float = DEFAULT_NULL_CUTOFF,
    group_tol: float = 1e-8,
    config_echo: Optional[dict] = None,
    spectrum: Optional[SnapshotSpectrum] = None,
) -> ConditionReport:
    """Run the full audit of a schedule: margins, ground holonomy, verdicts."""
    if not 0.0 < eta < 1.0:
        raise ValueError(f"eta must lie in (0, 1), got {eta}")
    if spectrum is None:
        spectrum = spectrum_for(model, grid, group_tol)
    levels = spectrum.structure.level_count
    if levels < 2:
        raise ValueError("the audit needs at least two separated levels")
    necessary = {n: necessary_margin_series(spectrum, n) for n in range(1, levels)}
    d0 = sufficient_d0_series(spectrum)
    dn = {n: sufficient_dn_series(spectrum, n) for n in range(1, levels)}
    hol = level_holonomy(spectrum, 0)
    suff_ok, floor = practical_sufficient_check(d0, dn, hol, eta, null_cutoff)
    warnings = []
    for n in range(1, levels):
        gaps = np.abs(spectrum.structure.gap(n, 0))
        g0 = float(gaps[0])
        spread = float(gaps.max() - gaps.min())
        if spread > GAP_VARIATION_WARNING * g0:
            warnings.append(
                f"gap to level {n} varies by {spread / g0:.1%} over the grid; "
                f"D^{n} uses the t=0 gap as written and may be optimistic"
            )
    return ConditionReport(
        grid=grid,
        eta=eta,
        null_cutoff=null_cutoff,
        multiplicities=spectrum.structure.multiplicities,
        necessary=necessary,
        d0=d0,
        dn=dn,
        u_row=np.abs(hol.values[:, 0, :]),
        u_floor=floor,
        necessary_pass=necessary_check(necessary, eta),
        sufficient_pass=suff_ok,
        warnings=warnings,
        config_echo=config_echo,
    )


def verdict_exit_code(report: ConditionReport) -> int:
    """0 if both checks pass, 2 if only the necessary one does, 3 otherwise."""
    if not report.necessary_pass:
        return 3
    if not report.sufficient_pass:
        return 2
    return 0


def gamma_necessary_closed_form(params: GammaParams) -> float:
    """w sin(theta) (sin(theta) + |cos(theta)|) / (2b), the model's margin."""
    s, c = np.sin(params.theta), np.cos(params.theta)
    return float(params.w * s * (s + abs(c)) / (2.0 * params.b))


def gamma_sufficient_closed_forms(params: GammaParams, t):
    """Closed-form (D0(t), D1, |U00(t)|, |U01(t)|) for the rotating-field model.

    D1 is independent of t and of the frame index; the magnitudes are those
    of the ground-level Wilczek-Zee matrix in the model's canonical gauge.
    """
    t = np.asarray(t, dtype=float)
    s, c = np.sin(params.theta), np.cos(params.theta)
    b, w = params.b, params.w
    d0 = w * w * t * s * s / b
    d1 = 5.0 * w * s * (abs(c) + s) / (2.0 * b)
    kappa = 0.5 * w * t * c
    u00 = np.sqrt(1.0 - (s * np.sin(kappa)) ** 2)
    u01 = s * np.abs(np.sin(kappa))
    return d0, d1, u00, u01
