"""Hamiltonian sources.

Two kinds of model are provided: the exactly solvable four-level system in a
rotating field of constant magnitude (doubly degenerate spectrum at every
instant), and a generic grid-sampled Hermitian schedule for auditing arbitrary
time-dependent Hamiltonians.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Optional, Sequence

import numpy as np

HERMITICITY_TOL = 1e-10

SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)


class ScheduleError(ValueError):
    """Malformed sampled-schedule input."""


def gamma_matrices() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Return the three 4x4 Dirac-type matrices (Gx, Gy, Gz).

    They are built as sigma_x (x) sigma_j, which gives the Clifford algebra
    {Gi, Gj} = 2 delta_ij I4 and the commutators [Gi, Gj] = 2i eps_ijk Pk
    with Pk = I2 (x) sigma_k.
    """
    return (
        np.kron(SIGMA_X, SIGMA_X),
        np.kron(SIGMA_X, SIGMA_Y),
        np.kron(SIGMA_X, SIGMA_Z),
    )


@dataclass(frozen=True)
class GammaParams:
    """Parameters of the rotating-field four-level model.

    Parameters
    ----------
    b:
        Coupling angular frequency (> 0); the instantaneous gap is hbar*b.
    w:
        Field rotation angular frequency (>= 0; 0 is the static limit).
    theta:
        Polar angle of the rotation cone, in [0, pi].
    hbar:
        Action scale (default 1, natural units).
    total_time:
        Duration of the schedule; defaults to 1/w so that w*t <= 1 over the
        run. Must be given explicitly when w == 0.
    """

    b: float
    w: float
    theta: float
    hbar: float = 1.0
    total_time: Optional[float] = None

    def __post_init__(self) -> None:
        if not self.b > 0:
            raise ValueError(f"b must be positive, got {self.b}")
        if self.w < 0:
            raise ValueError(f"w must be nonnegative, got {self.w}")
        if not 0.0 <= self.theta <= np.pi:
            raise ValueError(f"theta must lie in [0, pi], got {self.theta}")
        if not self.hbar > 0:
            raise ValueError(f"hbar must be positive, got {self.hbar}")
        if self.total_time is None:
            if self.w == 0:
                raise ValueError("total_time is required when w == 0")
            object.__setattr__(self, "total_time", 1.0 / self.w)
        if not self.total_time > 0:
            raise ValueError(f"total_time must be positive, got {self.total_time}")


@dataclass(frozen=True)
class HamiltonianModel:
    """A time-parameterized Hermitian matrix.

    ``evaluate`` (and ``derivative``, when present) map a time, or an array of
    times, to the Hamiltonian (stacked along leading axes for array input).
    ``frames`` optionally supplies canonical instantaneous eigenframes in the
    model's preferred gauge: a callable mapping a time array of shape (k,) to
    a list of (k, N, d_n) arrays, one per degenerate level, ascending in
    energy. Models are immutable and safe to share across workers.
    """

    dimension: int
    evaluate: Callable[[np.ndarray], np.ndarray]
    derivative: Optional[Callable[[np.ndarray], np.ndarray]] = None
    hbar: float = 1.0
    frames: Optional[Callable[[np.ndarray], list[np.ndarray]]] = None


def evaluate_stack(func: Callable, times: np.ndarray, dim: int) -> np.ndarray:
    """Evaluate a matrix-valued callable on an array of times, shape (k, N, N).

    Falls back to a Python loop for callables that only accept scalars.
    """
    times = np.atleast_1d(np.asarray(times, dtype=float))
    try:
        out = np.asarray(func(times), dtype=complex)
        if out.shape == (len(times), dim, dim):
            return out
    except (TypeError, ValueError):
        pass
    return np.stack([np.asarray(func(t), dtype=complex) for t in times])


def hermiticity_defect(h: np.ndarray) -> float:
    """Max-norm distance from Hermiticity, over any stack of matrices."""
    return float(np.max(np.abs(h - np.conjugate(np.swapaxes(h, -1, -2)))))


def gamma_hamiltonian(params: GammaParams) -> HamiltonianModel:
    """Build H(t) = (hbar*b/2) r(t).Gamma with r = (sin th cos wt, sin th sin wt, cos th).

    The eigenvalues are -hbar*b/2 and +hbar*b/2, each doubly degenerate, at
    every t. The model carries the analytic time derivative and the canonical
    eigenframes in the gauge that the closed-form solution and the
    Wilczek-Zee magnitudes of this model are expressed in.
    """
    gx, gy, gz = gamma_matrices()
    b, w, theta, hbar = params.b, params.w, params.theta, params.hbar
    s, c = np.sin(theta), np.cos(theta)
    pref = 0.5 * hbar * b

    def evaluate(t):
        t = np.asarray(t, dtype=float)
        cw = np.cos(w * t)[..., None, None]
        sw = np.sin(w * t)[..., None, None]
        return pref * (s * cw * gx + s * sw * gy + c * gz)

    def derivative(t):
        t = np.asarray(t, dtype=float)
        cw = np.cos(w * t)[..., None, None]
        sw = np.sin(w * t)[..., None, None]
        return pref * s * w * (-sw * gx + cw * gy)

    def frames(times):
        times = np.atleast_1d(np.asarray(times, dtype=float))
        ph = np.exp(1j * w * times)
        zero = np.zeros_like(ph)
        one = np.ones_like(ph)
        # Columns are |n^0(t)>, |n^1(t)>; ground level first.
        lower = np.stack(
            [
                np.stack([s / ph, -c * one, zero, -one], axis=1),
                np.stack([c * one, s * ph, -one, zero], axis=1),
            ],
            axis=2,
        )
        upper = np.stack(
            [
                np.stack([s / ph, -c * one, zero, one], axis=1),
                np.stack([c * one, s * ph, one, zero], axis=1),
            ],
            axis=2,
        )
        norm = 1.0 / np.sqrt(2.0)
        return [norm * lower, norm * upper]

    return HamiltonianModel(
        dimension=4,
        evaluate=evaluate,
        derivative=derivative,
        hbar=hbar,
        frames=frames,
    )


def _nonuniform_derivative(times: np.ndarray, samples: np.ndarray) -> np.ndarray:
    """Second-order finite-difference derivative of samples on a 1D grid."""
    n = len(times)
    out = np.empty_like(samples)
    if n == 2:
        out[0] = out[1] = (samples[1] - samples[0]) / (times[1] - times[0])
        return out
    hl = (times[1:-1] - times[:-2])[:, None, None]
    hr = (times[2:] - times[1:-1])[:, None, None]
    out[1:-1] = (
        samples[2:] * hl / (hr * (hl + hr))
        - samples[:-2] * hr / (hl * (hl + hr))
        + samples[1:-1] * (hr - hl) / (hl * hr)
    )
    h0, h1 = times[1] - times[0], times[2] - times[1]
    out[0] = (
        -samples[0] * (2 * h0 + h1) / (h0 * (h0 + h1))
        + samples[1] * (h0 + h1) / (h0 * h1)
        - samples[2] * h0 / (h1 * (h0 + h1))
    )
    h0, h1 = times[-1] - times[-2], times[-2] - times[-3]
    out[-1] = (
        samples[-1] * (2 * h0 + h1) / (h0 * (h0 + h1))
        - samples[-2] * (h0 + h1) / (h0 * h1)
        + samples[-3] * h0 / (h1 * (h0 + h1))
    )
    return out


def _sampled_from_arrays(
    times: np.ndarray,
    samples: np.ndarray,
    hbar: float,
    hermiticity_tol: float,
) -> HamiltonianModel:
    times = np.asarray(times, dtype=float)
    samples = np.asarray(samples, dtype=complex)
    if times.ndim != 1 or len(times) < 2:
        raise ScheduleError("a schedule needs at least two time samples")
    if np.any(np.diff(times) <= 0):
        raise ScheduleError("schedule times must be strictly increasing")
    if samples.ndim != 3 or samples.shape[1] != samples.shape[2]:
        raise ScheduleError(
            f"samples must be a stack of square matrices, got shape {samples.shape}"
        )
    if samples.shape[0] != len(times):
        raise ScheduleError(
            f"{len(times)} times but {samples.shape[0]} matrix samples"
        )
    defect = hermiticity_defect(samples)
    if defect > hermiticity_tol:
        raise ScheduleError(
            f"non-Hermitian sample: max |H - H^dag| = {defect:.3e} "
            f"exceeds tolerance {hermiticity_tol:.3e}"
        )
    dim = samples.shape[1]
    deriv_samples = _nonuniform_derivative(times, samples)

    def _interp(t, table):
        t = np.asarray(t, dtype=float)
        tc = np.clip(t, times[0], times[-1])
        idx = np.clip(np.searchsorted(times, tc, side="right") - 1, 0, len(times) - 2)
        t0, t1 = times[idx], times[idx + 1]
        lam = ((tc - t0) / (t1 - t0))[..., None, None]
        return (1.0 - lam) * table[idx] + lam * table[idx + 1]

    return HamiltonianModel(
        dimension=dim,
        evaluate=lambda t: _interp(t, samples),
        derivative=lambda t: _interp(t, deriv_samples),
        hbar=hbar,
    )


def sampled_model(
    grid,
    samples: Sequence[np.ndarray],
    hbar: float = 1.0,
    hermiticity_tol: float = HERMITICITY_TOL,
) -> HamiltonianModel:
    """Build a model from Hermitian samples on the points of a uniform grid.

    ``evaluate`` interpolates linearly between the samples; ``derivative``
    uses second-order finite differences at the sample points (one-sided at
    the endpoints), interpolated linearly in between.
    """
    samples = [np.asarray(m, dtype=complex) for m in samples]
    if len(samples) != grid.steps + 1:
        raise ScheduleError(
            f"grid has {grid.steps + 1} points but {len(samples)} samples given"
        )
    dim = samples[0].shape[0]
    for k, m in enumerate(samples):
        if m.shape != (dim, dim):
            raise ScheduleError(
                f"sample {k} has shape {m.shape}, expected {(dim, dim)}"
            )
    return _sampled_from_arrays(grid.times, np.stack(samples), hbar, hermiticity_tol)


def load_schedule(
    path, hermiticity_tol: float = HERMITICITY_TOL
) -> HamiltonianModel:
    """Read a sampled schedule from JSON.

    Expected document::

        {"dimension": N, "hbar": x, "times": [...],
         "matrices": [ [[[re, im], ...], ...], ... ]}

    with each matrix N x N of [re, im] pairs, row-major. Ragged arrays are
    rejected.
    """
    raw = json.loads(Path(path).read_text())
    try:
        dim = int(raw["dimension"])
        hbar = float(raw.get("hbar", 1.0))
        times = np.asarray(raw["times"], dtype=float)
    except (KeyError, TypeError, ValueError) as exc:
        raise ScheduleError(f"bad schedule header: {exc}") from exc
    if dim < 2:
        raise ScheduleError(f"dimension must be >= 2, got {dim}")
    try:
        packed = np.asarray(raw["matrices"], dtype=float)
    except (KeyError, TypeError, ValueError) as exc:
        raise ScheduleError(f"bad or ragged matrices array: {exc}") from exc
    if packed.shape != (len(times), dim, dim, 2):
        raise ScheduleError(
            f"matrices must have shape {(len(times), dim, dim, 2)}, got {packed.shape}"
        )
    samples = packed[..., 0] + 1j * packed[..., 1]
    return _sampled_from_arrays(times, samples, hbar, hermiticity_tol)


def save_schedule(path, model: HamiltonianModel, times: np.ndarray) -> None:
    """Write a model sampled on the given times in the JSON schedule format."""
    times = np.asarray(times, dtype=float)
    stack = evaluate_stack(model.evaluate, times, model.dimension)
    doc = {
        "dimension": model.dimension,
        "hbar": model.hbar,
        "times": times.tolist(),
        "matrices": np.stack([stack.real, stack.imag], axis=-1).tolist(),
    }
    Path(path).write_text(json.dumps(doc))
