import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from adiacheck import (
    GammaParams,
    HamiltonianModel,
    ScheduleError,
    TimeGrid,
    gamma_hamiltonian,
    gamma_matrices,
    load_schedule,
    sampled_model,
    save_schedule,
)
from adiacheck.models import evaluate_stack, hermiticity_defect

I2 = np.eye(2)
I4 = np.eye(4)
PAULIS = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)


def test_gamma_anticommutators():
    gs = gamma_matrices()
    for i in range(3):
        for j in range(3):
            anti = gs[i] @ gs[j] + gs[j] @ gs[i]
            expected = 2.0 * I4 if i == j else np.zeros((4, 4))
            assert np.max(np.abs(anti - expected)) <= 1e-15


def test_gamma_squares_are_identity():
    gx, _, _ = gamma_matrices()
    assert np.array_equal(gx @ gx, I4)


def test_gamma_commutators():
    gs = gamma_matrices()
    eps = np.zeros((3, 3, 3))
    for i, j, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        eps[i, j, k] = 1.0
        eps[j, i, k] = -1.0
    for i in range(3):
        for j in range(3):
            comm = gs[i] @ gs[j] - gs[j] @ gs[i]
            expected = sum(
                2j * eps[i, j, k] * np.kron(I2, PAULIS[k]) for k in range(3)
            )
            assert np.max(np.abs(comm - expected)) <= 1e-15


def test_gamma_xy_commutator_is_pi_z():
    gx, gy, _ = gamma_matrices()
    assert np.max(np.abs(gx @ gy - gy @ gx - 2j * np.kron(I2, PAULIS[2]))) == 0.0


def test_gamma_z_hermitian_traceless():
    _, _, gz = gamma_matrices()
    assert np.array_equal(gz, gz.conj().T)
    assert np.trace(gz) == 0.0


def test_gamma_hamiltonian_theta_zero_is_gz_field():
    params = GammaParams(b=2.0, w=0.3, theta=0.0)
    model = gamma_hamiltonian(params)
    _, _, gz = gamma_matrices()
    for t in (0.0, 0.7, 3.1):
        assert np.allclose(model.evaluate(t), 1.0 * gz, atol=1e-14)
        evals = np.linalg.eigvalsh(model.evaluate(t))
        assert np.allclose(evals, [-1.0, -1.0, 1.0, 1.0], atol=1e-12)


@settings(max_examples=30, deadline=None)
@given(
    b=st.floats(0.1, 10.0),
    w=st.floats(0.0, 5.0),
    theta=st.floats(0.0, np.pi),
    t=st.floats(0.0, 20.0),
)
def test_gamma_eigenvalues_doubly_degenerate(b, w, theta, t):
    params = GammaParams(b=b, w=w, theta=theta, total_time=1.0)
    model = gamma_hamiltonian(params)
    evals = np.linalg.eigvalsh(model.evaluate(t))
    half = 0.5 * b
    assert np.allclose(evals, [-half, -half, half, half], rtol=1e-10, atol=1e-12 * half)


def test_gamma_static_when_w_zero():
    params = GammaParams(b=1.0, w=0.0, theta=0.8, total_time=4.0)
    model = gamma_hamiltonian(params)
    h0 = model.evaluate(0.0)
    for t in (0.5, 2.0, 4.0):
        assert np.array_equal(model.evaluate(t), h0)
        assert np.max(np.abs(model.derivative(t))) == 0.0


def test_gamma_evaluate_hermitian():
    params = GammaParams(b=1.3, w=0.4, theta=1.1)
    model = gamma_hamiltonian(params)
    stack = evaluate_stack(model.evaluate, np.linspace(0.0, 5.0, 41), 4)
    assert hermiticity_defect(stack) <= 1e-12
    dstack = evaluate_stack(model.derivative, np.linspace(0.0, 5.0, 41), 4)
    assert hermiticity_defect(dstack) <= 1e-12


def _finite_difference_order(model, t, dts):
    errs = []
    for dt in dts:
        fd = (model.evaluate(t + dt) - model.evaluate(t - dt)) / (2.0 * dt)
        errs.append(np.max(np.abs(fd - model.derivative(t))))
    return np.log2(errs[0] / errs[1])


def test_gamma_derivative_second_order():
    params = GammaParams(b=1.0, w=0.7, theta=1.0)
    model = gamma_hamiltonian(params)
    order = _finite_difference_order(model, t=0.9, dts=(2e-3, 1e-3))
    assert order >= 1.9


def test_gamma_params_validation():
    with pytest.raises(ValueError):
        GammaParams(b=0.0, w=0.1, theta=1.0)
    with pytest.raises(ValueError):
        GammaParams(b=1.0, w=-0.1, theta=1.0)
    with pytest.raises(ValueError):
        GammaParams(b=1.0, w=0.1, theta=3.5)
    with pytest.raises(ValueError):
        GammaParams(b=1.0, w=0.1, theta=1.0, hbar=0.0)
    with pytest.raises(ValueError):
        GammaParams(b=1.0, w=0.1, theta=1.0, total_time=-1.0)
    with pytest.raises(ValueError):
        GammaParams(b=1.0, w=0.0, theta=1.0)  # static limit needs explicit duration


def test_gamma_default_duration_is_one_over_w():
    params = GammaParams(b=1.0, w=0.25, theta=1.0)
    assert params.total_time == pytest.approx(4.0)


def test_sampled_constant_schedule():
    grid = TimeGrid(0.0, 1.0, 2)
    h = np.diag([0.0, 1.0]).astype(complex)
    model = sampled_model(grid, [h, h, h])
    assert np.allclose(model.evaluate(0.37), h, atol=1e-15)
    assert np.max(np.abs(model.derivative(0.37))) <= 1e-14


def test_sampled_matches_gamma_at_second_order():
    params = GammaParams(b=1.0, w=1.0, theta=1.0, total_time=2.0)
    analytic = gamma_hamiltonian(params)
    probes = np.linspace(0.05, 1.95, 23)  # off-grid points

    def worst_errors(steps):
        grid = TimeGrid(0.0, 2.0, steps)
        samples = evaluate_stack(analytic.evaluate, grid.times, 4)
        model = sampled_model(grid, list(samples))
        e_val = max(
            np.max(np.abs(model.evaluate(t) - analytic.evaluate(t))) for t in probes
        )
        e_der = max(
            np.max(np.abs(model.derivative(t) - analytic.derivative(t)))
            for t in probes
        )
        return e_val, e_der

    ev1, ed1 = worst_errors(100)
    ev2, ed2 = worst_errors(200)
    assert np.log2(ev1 / ev2) >= 1.9
    assert np.log2(ed1 / ed2) >= 1.9


def test_sampled_dimension_mismatch():
    grid = TimeGrid(0.0, 1.0, 2)
    h4 = np.eye(4, dtype=complex)
    h3 = np.eye(3, dtype=complex)
    with pytest.raises(ScheduleError, match="shape"):
        sampled_model(grid, [h4, h3, h4])


def test_sampled_sample_count_mismatch():
    grid = TimeGrid(0.0, 1.0, 3)
    h = np.eye(2, dtype=complex)
    with pytest.raises(ScheduleError, match="samples"):
        sampled_model(grid, [h, h])


def test_sampled_rejects_non_hermitian():
    grid = TimeGrid(0.0, 1.0, 2)
    bad = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)
    with pytest.raises(ScheduleError, match="Hermitian"):
        sampled_model(grid, [bad, bad, bad])


def test_schedule_json_roundtrip(tmp_path):
    params = GammaParams(b=1.0, w=0.5, theta=0.7, total_time=2.0)
    model = gamma_hamiltonian(params)
    path = tmp_path / "schedule.json"
    save_schedule(path, model, np.linspace(0.0, 2.0, 81))
    loaded = load_schedule(path)
    assert loaded.dimension == 4
    assert loaded.hbar == 1.0
    for t in (0.33, 1.27):
        assert np.max(np.abs(loaded.evaluate(t) - model.evaluate(t))) < 2e-4


def test_schedule_json_rejects_ragged(tmp_path):
    doc = {
        "dimension": 2,
        "hbar": 1.0,
        "times": [0.0, 1.0],
        "matrices": [
            [[[1.0, 0.0], [0.0, 0.0]], [[0.0, 0.0]]],  # ragged row
            [[[1.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [1.0, 0.0]]],
        ],
    }
    path = tmp_path / "ragged.json"
    path.write_text(json.dumps(doc))
    with pytest.raises(ScheduleError):
        load_schedule(path)


def test_schedule_json_rejects_missing_keys(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text(json.dumps({"dimension": 2, "times": [0.0, 1.0]}))
    with pytest.raises(ScheduleError):
        load_schedule(path)


def test_schedule_json_rejects_decreasing_times(tmp_path):
    h = np.eye(2)
    doc = {
        "dimension": 2,
        "hbar": 1.0,
        "times": [0.0, 1.0, 0.5],
        "matrices": [np.stack([h, 0 * h], axis=-1).tolist()] * 3,
    }
    path = tmp_path / "times.json"
    path.write_text(json.dumps(doc))
    with pytest.raises(ScheduleError, match="increasing"):
        load_schedule(path)


def test_evaluate_stack_scalar_only_callable():
    model = HamiltonianModel(
        dimension=2,
        evaluate=lambda t: np.array([[float(t), 0.0], [0.0, -float(t)]], dtype=complex),
    )
    stack = evaluate_stack(model.evaluate, np.array([0.0, 1.0, 2.0]), 2)
    assert stack.shape == (3, 2, 2)
    assert stack[2, 0, 0] == 2.0
