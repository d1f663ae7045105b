"""Wilczek-Zee holonomy, dynamical phases and the adiabatic trial state.

Within a degenerate eigenspace the adiabatic evolution is not just a phase:
a unitary U^n(t) mixes the frame vectors. For the rotating-field model the
ground-level magnitudes are known in closed form, so the time-ordered
integrator can be checked digit by digit.
"""

import numpy as np

from adiacheck import (
    GammaParams,
    TimeGrid,
    daa_state,
    dynamical_phases,
    fidelity,
    gamma_exact_states,
    gamma_hamiltonian,
    gamma_sufficient_closed_forms,
    level_holonomy,
    model_spectrum,
    propagate,
)

params = GammaParams(b=1.0, w=0.1, theta=np.pi / 3)
grid = TimeGrid(0.0, params.total_time, 50000)
spectrum = model_spectrum(gamma_hamiltonian(params), grid)

omega = dynamical_phases(spectrum, 0)
print("Dynamical phase of the ground level (E_0 = -b/2, so omega_0 = -b t/2):")
print("  omega_0(T) =", omega[-1], " exact:", -0.5 * params.b * grid.t_end)

hol = level_holonomy(spectrum, 0)
_, _, u00, u01 = gamma_sufficient_closed_forms(params, grid.times)
print("\nGround-level Wilczek-Zee magnitudes vs closed form:")
print("  max |U00| error:", np.abs(np.abs(hol.values[:, 0, 0]) - u00).max())
print("  max |U01| error:", np.abs(np.abs(hol.values[:, 0, 1]) - u01).max())
print("  unitarity defect over the grid:", hol.unitarity_defect())

print("\nHow much the degenerate pair mixes along the drive:")
for frac in (0.25, 0.5, 1.0):
    k = int(frac * grid.steps)
    print(f"  w t = {params.w * grid.times[k]:4.2f}: |U00| = "
          f"{abs(hol.values[k, 0, 0]):.6f}, |U01| = {abs(hol.values[k, 0, 1]):.6f}")

# Assemble the adiabatic trial state and compare against the true evolution.
daa = daa_state(spectrum, {0: hol}, [1.0, 0.0])
traj = propagate(gamma_hamiltonian(params), spectrum.frames[0][0][:, 0], grid)
exact = gamma_exact_states(params, np.array([grid.t_end]))[0]
print("\nFidelity at t = T:")
print("  trial state vs propagated :", fidelity(traj.states[-1], daa.states[-1]))
print("  trial state vs closed form:", fidelity(exact, daa.states[-1]))
