"""Dynamical phases, Wilczek-Zee holonomies and the adiabatic trial state.

The holonomy U^n(t) solves dU/dt = U A^{nn}(t) with A^{nn} = (M^{nn})^*,
discretized as an ordered product of single-step exponentials with the
generator averaged between neighbouring grid points (second order). Each step
exponentiates an anti-Hermitian matrix by diagonalizing iA, so every factor
is unitary to machine precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .spectral import OverlapBlock, SnapshotSpectrum, TimeGrid, overlap_series

ANTIHERM_TOL = 1e-8
REUNITARIZE_EVERY = 1000


@dataclass(frozen=True)
class Holonomy:
    """U^n(t_k) on the grid; ``values`` has shape (n_points, d_n, d_n)."""

    level: int
    grid: TimeGrid
    values: np.ndarray

    @property
    def initial(self) -> np.ndarray:
        return self.values[0]

    def unitarity_defect(self) -> float:
        eye = np.eye(self.values.shape[-1])
        gram = np.einsum("kij,kil->kjl", self.values.conj(), self.values)
        return float(np.max(np.abs(gram - eye)))


@dataclass(frozen=True)
class DaaState:
    """The zeroth-order adiabatic state assembled on the grid.

    ``coefficients[n]`` holds the complex coefficient row over the level-n
    frame, shape (n_points, d_n); ``states`` is the assembled N-vector per
    grid point.
    """

    grid: TimeGrid
    amplitudes: np.ndarray
    coefficients: dict[int, np.ndarray]
    states: np.ndarray


def dynamical_phases(spectrum: SnapshotSpectrum, n: int) -> np.ndarray:
    """omega_n(t_k) = int_0^{t_k} E_n dt / hbar by the trapezoid rule."""
    energies = spectrum.structure.energies[n]
    dt = spectrum.grid.dt
    omega = np.empty_like(energies)
    omega[0] = 0.0
    np.cumsum(0.5 * dt * (energies[1:] + energies[:-1]), out=omega[1:])
    return omega / spectrum.hbar


def dynamical_phase(spectrum: SnapshotSpectrum, n: int, k: int) -> float:
    """omega_n at grid point k."""
    return float(dynamical_phases(spectrum, n)[k])


def _ordered_exponentials(
    mid_generators: np.ndarray, dt: float
) -> np.ndarray:
    """exp(A dt) for a stack of anti-Hermitian generators, batched."""
    herm = 1j * mid_generators
    evals, vecs = np.linalg.eigh(herm)
    phases = np.exp(-1j * evals * dt)
    return np.einsum("kij,kj,klj->kil", vecs, phases, vecs.conj())


def _polar_project(u: np.ndarray) -> np.ndarray:
    w, _, vh = np.linalg.svd(u)
    return w @ vh


def _wz_scan(
    m_series: np.ndarray,
    dt: float,
    u0: np.ndarray,
    antiherm_tol: float,
    reunitarize_every: int,
) -> np.ndarray:
    defect = float(np.max(np.abs(m_series + np.conjugate(np.swapaxes(m_series, -1, -2)))))
    scale = float(np.max(np.abs(m_series)))
    # Finite-difference blocks carry an O(dt^2) Hermitian part; the gate is
    # meant to reject grossly non-anti-Hermitian input (e.g. a cross block).
    if defect > antiherm_tol + 0.01 * scale:
        raise ValueError(
            f"overlap blocks are not anti-Hermitian (defect {defect:.3e}, "
            f"scale {scale:.3e}); they do not look like intra-level connections"
        )
    a_mid = np.conjugate(0.5 * (m_series[:-1] + m_series[1:]))
    a_mid = 0.5 * (a_mid - np.conjugate(np.swapaxes(a_mid, -1, -2)))
    steps = _ordered_exponentials(a_mid, dt)
    out = np.empty((m_series.shape[0],) + u0.shape, dtype=complex)
    out[0] = u0
    u = u0
    for k in range(steps.shape[0]):
        u = u @ steps[k]
        if (k + 1) % reunitarize_every == 0:
            u = _polar_project(u)
        out[k + 1] = u
    return out


def wz_holonomy(
    blocks: Sequence[OverlapBlock],
    u0: np.ndarray | None = None,
    grid: TimeGrid | None = None,
    antiherm_tol: float = ANTIHERM_TOL,
    reunitarize_every: int = REUNITARIZE_EVERY,
) -> Holonomy:
    """Time-ordered holonomy from intra-level overlap blocks M^{nn}(t_k).

    ``blocks`` must cover every grid point of one level in order. U(0)
    defaults to the identity (the evolution starts in a single snapshot
    eigenvector).
    """
    if not blocks:
        raise ValueError("no overlap blocks given")
    level = blocks[0].n
    for blk in blocks:
        if blk.n != level or blk.m != level:
            raise ValueError("wz_holonomy needs intra-level blocks of one level")
    if grid is None:
        raise ValueError("a TimeGrid is required to set the step size")
    if len(blocks) != grid.n_points:
        raise ValueError(
            f"expected {grid.n_points} blocks to cover the grid, got {len(blocks)}"
        )
    series = np.stack([np.asarray(b.entries, dtype=complex) for b in blocks])
    dim = series.shape[-1]
    if u0 is None:
        u0 = np.eye(dim, dtype=complex)
    else:
        u0 = np.asarray(u0, dtype=complex)
        if max_unitarity_defect(u0) > 1e-9:
            raise ValueError("U(0) must be unitary")
    values = _wz_scan(series, grid.dt, u0, antiherm_tol, reunitarize_every)
    return Holonomy(level, grid, values)


def level_holonomy(
    spectrum: SnapshotSpectrum,
    n: int,
    u0: np.ndarray | None = None,
    antiherm_tol: float = ANTIHERM_TOL,
    reunitarize_every: int = REUNITARIZE_EVERY,
) -> Holonomy:
    """Holonomy of level n from finite-differenced frames of the spectrum."""
    series = overlap_series(spectrum, n, n)
    dim = series.shape[-1]
    if u0 is None:
        u0 = np.eye(dim, dtype=complex)
    else:
        u0 = np.asarray(u0, dtype=complex)
        if max_unitarity_defect(u0) > 1e-9:
            raise ValueError("U(0) must be unitary")
    values = _wz_scan(series, spectrum.grid.dt, u0, antiherm_tol, reunitarize_every)
    return Holonomy(n, spectrum.grid, values)


def max_unitarity_defect(u: np.ndarray) -> float:
    u = np.asarray(u)
    return float(np.max(np.abs(u.conj().T @ u - np.eye(u.shape[-1]))))


def daa_state(
    spectrum: SnapshotSpectrum,
    holonomies: Mapping[int, Holonomy],
    b0: Sequence[complex],
    row: int = 0,
) -> DaaState:
    """Assemble the zeroth-order adiabatic state on the grid.

    The coefficient row of level n is e^{-i omega_n(t)} b_n(0) times row
    ``row`` of U^n(t); levels with b_n(0) = 0 need no holonomy. The assembled
    vector has unit norm by unitarity of U and orthonormality of the frames.
    """
    b0 = np.asarray(b0, dtype=complex)
    if b0.shape != (spectrum.structure.level_count,):
        raise ValueError(
            f"b0 must have one amplitude per level "
            f"({spectrum.structure.level_count}), got shape {b0.shape}"
        )
    norm = float(np.sum(np.abs(b0) ** 2))
    if abs(norm - 1.0) > 1e-9:
        raise ValueError(f"b0 must be normalized: sum |b_n|^2 = {norm!r}")
    npts = spectrum.grid.n_points
    states = np.zeros((npts, spectrum.dimension), dtype=complex)
    coefficients: dict[int, np.ndarray] = {}
    for n in range(spectrum.structure.level_count):
        if b0[n] == 0:
            continue
        if n not in holonomies:
            raise ValueError(f"level {n} is populated but has no holonomy")
        hol = holonomies[n]
        if row >= hol.values.shape[1]:
            raise ValueError(f"initial-condition row {row} exceeds level dimension")
        omega = dynamical_phases(spectrum, n)
        coeff = b0[n] * np.exp(-1j * omega)[:, None] * hol.values[:, row, :]
        coefficients[n] = coeff
        states += np.einsum("kid,kd->ki", spectrum.frames[n], coeff)
    return DaaState(spectrum.grid, b0, coefficients, states)
