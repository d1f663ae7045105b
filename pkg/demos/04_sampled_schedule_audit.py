"""Auditing a schedule given only as Hermitian matrix samples.

Generic schedules arrive as JSON ({dimension, hbar, times, matrices} with
[re, im] entry pairs). The auditor then has no canonical eigenframe gauge:
it diagonalizes at every grid point, groups degenerate levels, aligns the
frames by parallel transport and runs the same condition pipeline.
"""

import tempfile
from pathlib import Path

import numpy as np

from adiacheck import (
    GammaParams,
    TimeGrid,
    build_report,
    gamma_hamiltonian,
    load_schedule,
    save_schedule,
    smooth_frames,
    snapshot_decompose,
)
from adiacheck.spectral import completeness_defect, orthonormality_defect

workdir = Path(tempfile.mkdtemp(prefix="adiacheck_demo_"))
path = workdir / "schedule.json"

# Sample the rotating-field model densely and pretend we only have the file.
params = GammaParams(b=1.0, w=0.05, theta=1.0)
save_schedule(path, gamma_hamiltonian(params),
              np.linspace(0.0, params.total_time, 2001))
print("wrote", path)

model = load_schedule(path)
grid = TimeGrid(0.0, params.total_time, 1000)
spectrum = smooth_frames(snapshot_decompose(model, grid))
print("levels found:", spectrum.structure.multiplicities)
print("frame orthonormality defect:", orthonormality_defect(spectrum))
print("frame completeness defect:  ", completeness_defect(spectrum))
print("largest frame step after smoothing:",
      max(float(np.abs(f[1:] - f[:-1]).max()) for f in spectrum.frames))

report = build_report(model, grid)
print("\naudit of the sampled schedule:")
print("  peak necessary margin:", f"{report.peak_necessary():.4g}")
print("  necessary: ", "pass" if report.necessary_pass else "fail")
print("  sufficient:", "pass" if report.sufficient_pass else "fail")
report.write_csv(workdir / "report.csv", timestamp=False)
report.write_json(workdir / "report.json", timestamp=False)
print("reports under", workdir)
