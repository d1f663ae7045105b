"""Snapshot spectra of time-dependent Hamiltonians.

Eigendecomposition on a time grid with degenerate-level grouping, smooth gauge
continuation of the eigenframes, and the overlap matrices
M^{nm}_{hg}(t) = <n^h(t)| d/dt |m^g(t)> between levels.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .models import HamiltonianModel, evaluate_stack, hermiticity_defect

DEFAULT_GROUP_TOL = 1e-8
ORTHONORMALITY_TOL = 1e-10
SMOOTHING_MIN_OVERLAP = 1e-3


class LevelStructureError(ValueError):
    """Degeneracy structure is not constant over the grid."""


@dataclass(frozen=True)
class TimeGrid:
    """A uniform grid of steps+1 points covering [t_start, t_end]."""

    t_start: float
    t_end: float
    steps: int

    def __post_init__(self) -> None:
        if not self.t_end > self.t_start:
            raise ValueError("t_end must exceed t_start")
        if self.steps < 2:
            raise ValueError("a grid needs at least 2 steps")

    @property
    def dt(self) -> float:
        return (self.t_end - self.t_start) / self.steps

    @property
    def n_points(self) -> int:
        return self.steps + 1

    @property
    def times(self) -> np.ndarray:
        return np.linspace(self.t_start, self.t_end, self.steps + 1)


@dataclass(frozen=True)
class LevelStructure:
    """Grouped degenerate eigenlevels, ascending in energy.

    ``energies`` has shape (level_count, n_points); multiplicities are
    constant across the grid by construction.
    """

    level_count: int
    multiplicities: tuple[int, ...]
    energies: np.ndarray

    def gap(self, n: int, m: int) -> np.ndarray:
        """Delta_nm(t) = E_n(t) - E_m(t) on the grid."""
        return self.energies[n] - self.energies[m]


@dataclass(frozen=True)
class SnapshotSpectrum:
    """Eigenframes of a model on a time grid.

    ``frames[n]`` has shape (n_points, N, d_n) with orthonormal columns
    spanning level n at each grid point. ``gauge`` records how the frames
    were fixed: "raw" (eigensolver output), "smoothed" (aligned by parallel
    transport) or "model" (the model's canonical gauge).
    """

    grid: TimeGrid
    structure: LevelStructure
    frames: list[np.ndarray]
    model: Optional[HamiltonianModel] = None
    gauge: str = "raw"

    @property
    def dimension(self) -> int:
        return self.frames[0].shape[1]

    @property
    def hbar(self) -> float:
        return self.model.hbar if self.model is not None else 1.0


@dataclass(frozen=True)
class OverlapBlock:
    """The d_n x d_m matrix M^{nm}_{hg}(t_k) = <n^h|dm^g/dt>, units 1/time."""

    n: int
    m: int
    k: int
    entries: np.ndarray


def max_norm(matrix: np.ndarray) -> float:
    """Largest absolute entry."""
    matrix = np.asarray(matrix)
    if matrix.size == 0:
        raise ValueError("max_norm of an empty matrix is undefined")
    return float(np.max(np.abs(matrix)))


def one_norm(matrix: np.ndarray) -> float:
    """Maximum absolute column sum."""
    matrix = np.atleast_2d(np.asarray(matrix))
    if matrix.size == 0:
        raise ValueError("one_norm of an empty matrix is undefined")
    return float(np.max(np.sum(np.abs(matrix), axis=0)))


def _group_eigenvalues(evals: np.ndarray, tol_abs: float) -> list[np.ndarray]:
    """Cluster sorted eigenvalues into groups separated by gaps > tol_abs."""
    splits = np.where(np.diff(evals) > tol_abs)[0]
    return np.split(np.arange(len(evals)), splits + 1)


def snapshot_decompose(
    model: HamiltonianModel,
    grid: TimeGrid,
    group_tol: float = DEFAULT_GROUP_TOL,
) -> SnapshotSpectrum:
    """Diagonalize the model at every grid point and group degenerate levels.

    ``group_tol`` is relative to the largest Hamiltonian entry over the grid.
    The multiplicity pattern must be identical at every grid point, otherwise
    a LevelStructureError pinpoints the first offending interval. Frames are
    returned in the raw eigensolver gauge; see smooth_frames.
    """
    if model.dimension < 2:
        raise ValueError("model dimension must be at least 2")
    times = grid.times
    h = evaluate_stack(model.evaluate, times, model.dimension)
    defect = hermiticity_defect(h)
    scale = float(np.max(np.abs(h)))
    if defect > 100 * DEFAULT_GROUP_TOL * max(scale, 1.0):
        raise ValueError(f"model is not Hermitian on the grid (defect {defect:.3e})")
    evals, evecs = np.linalg.eigh(h)
    tol_abs = group_tol * max(scale, np.finfo(float).tiny)

    groups0 = _group_eigenvalues(evals[0], tol_abs)
    mults = tuple(len(g) for g in groups0)
    n_levels = len(mults)
    energies = np.empty((n_levels, grid.n_points))
    frames = [np.empty((grid.n_points, model.dimension, d), dtype=complex) for d in mults]
    for k in range(grid.n_points):
        groups = _group_eigenvalues(evals[k], tol_abs)
        if tuple(len(g) for g in groups) != mults:
            t_lo = times[max(k - 1, 0)]
            raise LevelStructureError(
                f"degeneracy structure changes in the grid interval "
                f"[{t_lo:.6g}, {times[k]:.6g}] (point {k}): multiplicities "
                f"{tuple(len(g) for g in groups)} vs {mults} at t = {times[0]:.6g}"
            )
        for n, g in enumerate(groups):
            energies[n, k] = float(np.mean(evals[k][g]))
            frames[n][k] = evecs[k][:, g]
    structure = LevelStructure(n_levels, mults, energies)
    return SnapshotSpectrum(grid, structure, frames, model=model, gauge="raw")


def _polar_unitary(m: np.ndarray, min_singular: float = 0.0) -> np.ndarray:
    u, s, vh = np.linalg.svd(m)
    if min_singular > 0.0 and float(np.min(s)) < min_singular:
        raise ValueError(
            f"frame overlap nearly singular (min singular value {np.min(s):.3e}); "
            "the grid is too coarse to track the eigenframes - refine it"
        )
    return u @ vh


def smooth_frames(
    spectrum: SnapshotSpectrum,
    min_overlap: float = SMOOTHING_MIN_OVERLAP,
) -> SnapshotSpectrum:
    """Align each frame to its predecessor (discrete parallel transport).

    Frame k+1 is right-multiplied by the unitary polar factor of
    F(k+1)^dag F(k), the closest unitary to that overlap; the t=0 frame is
    kept. After smoothing, consecutive frames differ by O(dt).
    """
    smoothed = []
    for f in spectrum.frames:
        g = f.copy()
        for k in range(f.shape[0] - 1):
            w = f[k + 1].conj().T @ g[k]
            g[k + 1] = f[k + 1] @ _polar_unitary(w, min_singular=min_overlap)
        smoothed.append(g)
    return SnapshotSpectrum(
        spectrum.grid, spectrum.structure, smoothed,
        model=spectrum.model, gauge="smoothed",
    )


def model_spectrum(model: HamiltonianModel, grid: TimeGrid) -> SnapshotSpectrum:
    """Build the spectrum from the model's canonical eigenframes.

    Requires ``model.frames``. Energies are recovered from the Rayleigh
    quotients E_n(t) = <n|H|n>, which are exact for exact eigenframes.
    """
    if model.frames is None:
        raise ValueError("model does not provide canonical frames")
    times = grid.times
    frames = [np.asarray(f, dtype=complex) for f in model.frames(times)]
    h = evaluate_stack(model.evaluate, times, model.dimension)
    energies = np.stack(
        [
            np.einsum("kil,kij,kjl->k", f.conj(), h, f).real / f.shape[2]
            for f in frames
        ]
    )
    order = np.argsort(energies[:, 0])
    frames = [frames[i] for i in order]
    energies = energies[order]
    structure = LevelStructure(
        len(frames), tuple(f.shape[2] for f in frames), energies
    )
    return SnapshotSpectrum(grid, structure, frames, model=model, gauge="model")


def spectrum_for(
    model: HamiltonianModel,
    grid: TimeGrid,
    group_tol: float = DEFAULT_GROUP_TOL,
) -> SnapshotSpectrum:
    """Canonical frames when the model has them, else decompose + smooth."""
    if model.frames is not None:
        return model_spectrum(model, grid)
    return smooth_frames(snapshot_decompose(model, grid, group_tol))


def frame_derivatives(frames: np.ndarray, dt: float) -> np.ndarray:
    """Second-order time derivative of a (n_points, N, d) frame stack."""
    df = np.empty_like(frames)
    df[1:-1] = (frames[2:] - frames[:-2]) / (2.0 * dt)
    df[0] = (-3.0 * frames[0] + 4.0 * frames[1] - frames[2]) / (2.0 * dt)
    df[-1] = (3.0 * frames[-1] - 4.0 * frames[-2] + frames[-3]) / (2.0 * dt)
    return df


def overlap_series(spectrum: SnapshotSpectrum, n: int, m: int) -> np.ndarray:
    """M^{nm}(t_k) for all grid points, shape (n_points, d_n, d_m).

    Centered finite differences in the interior, one-sided second order at
    the endpoints.
    """
    dfm = frame_derivatives(spectrum.frames[m], spectrum.grid.dt)
    return np.einsum("kih,kig->khg", spectrum.frames[n].conj(), dfm)


def overlap_block(
    spectrum: SnapshotSpectrum,
    n: int,
    m: int,
    k: int,
    method: str = "finite_difference",
) -> OverlapBlock:
    """One overlap block M^{nm}(t_k).

    ``finite_difference`` differentiates the stored frames. ``hdot`` uses
    <n^h|dH/dt|m^g> / (E_m - E_n), which needs the model derivative and is
    only defined across levels (the intra-level connection is pure gauge and
    carries no dH/dt information).
    """
    if method == "finite_difference":
        frames_m = spectrum.frames[m]
        dt = spectrum.grid.dt
        last = frames_m.shape[0] - 1
        if 0 < k < last:
            dfm = (frames_m[k + 1] - frames_m[k - 1]) / (2.0 * dt)
        elif k == 0:
            dfm = (-3.0 * frames_m[0] + 4.0 * frames_m[1] - frames_m[2]) / (2.0 * dt)
        else:
            dfm = (3.0 * frames_m[last] - 4.0 * frames_m[last - 1] + frames_m[last - 2]) / (2.0 * dt)
        entries = spectrum.frames[n][k].conj().T @ dfm
        return OverlapBlock(n, m, k, entries)
    if method == "hdot":
        if n == m:
            raise ValueError(
                "hdot cannot produce the intra-level block: the diagonal "
                "connection is gauge-dependent and not determined by dH/dt"
            )
        model = spectrum.model
        if model is None or model.derivative is None:
            raise ValueError("hdot requires a model with an analytic derivative")
        t = spectrum.grid.times[k]
        hdot = np.asarray(model.derivative(t), dtype=complex)
        gap = spectrum.structure.energies[m, k] - spectrum.structure.energies[n, k]
        entries = (
            spectrum.frames[n][k].conj().T @ hdot @ spectrum.frames[m][k]
        ) / gap
        return OverlapBlock(n, m, k, entries)
    raise ValueError(f"unknown overlap method {method!r}")


def completeness_defect(spectrum: SnapshotSpectrum) -> float:
    """Max-norm defect of sum_n F_n F_n^dag = identity over the grid."""
    npts = spectrum.grid.n_points
    dim = spectrum.dimension
    acc = np.zeros((npts, dim, dim), dtype=complex)
    for f in spectrum.frames:
        acc += np.einsum("kid,kjd->kij", f, f.conj())
    acc -= np.eye(dim)
    return float(np.max(np.abs(acc)))


def orthonormality_defect(spectrum: SnapshotSpectrum) -> float:
    """Max-norm defect of F_n^dag F_n = identity over levels and grid."""
    worst = 0.0
    for f in spectrum.frames:
        gram = np.einsum("kid,kie->kde", f.conj(), f)
        gram -= np.eye(f.shape[2])
        worst = max(worst, float(np.max(np.abs(gram))))
    return worst


def eigen_residual(spectrum: SnapshotSpectrum) -> float:
    """Max-norm of H F_n - E_n F_n over the grid, relative to max |H|."""
    if spectrum.model is None:
        raise ValueError("spectrum carries no model to evaluate against")
    h = evaluate_stack(spectrum.model.evaluate, spectrum.grid.times, spectrum.dimension)
    scale = float(np.max(np.abs(h)))
    worst = 0.0
    for n, f in enumerate(spectrum.frames):
        res = np.einsum("kij,kjd->kid", h, f) - spectrum.structure.energies[n][:, None, None] * f
        worst = max(worst, float(np.max(np.abs(res))))
    return worst / max(scale, np.finfo(float).tiny)
