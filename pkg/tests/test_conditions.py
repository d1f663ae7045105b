import json

import numpy as np
import pytest

from adiacheck import (
    GammaParams,
    HamiltonianModel,
    TimeGrid,
    build_report,
    gamma_hamiltonian,
    gamma_necessary_closed_form,
    gamma_sufficient_closed_forms,
    level_holonomy,
    model_spectrum,
    necessary_check,
    necessary_margin,
    necessary_margin_series,
    practical_sufficient_check,
    sufficient_d0_series,
    sufficient_dn,
    sufficient_dn_series,
    u_floor_series,
    verdict_exit_code,
)
from adiacheck.conditions import DegenerateGapError
from adiacheck.spectral import SnapshotSpectrum


def gamma_spectrum(params, steps=2000, t_end=None):
    grid = TimeGrid(0.0, t_end if t_end is not None else params.total_time, steps)
    return model_spectrum(gamma_hamiltonian(params), grid)


def test_necessary_margin_closed_form_values():
    # theta = pi/2: the closed form collapses to w/(2b).
    p = GammaParams(b=1.0, w=0.1, theta=np.pi / 2)
    assert gamma_necessary_closed_form(p) == pytest.approx(0.05)
    # theta = 0 kills every entry.
    p0 = GammaParams(b=1.0, w=0.1, theta=0.0)
    assert gamma_necessary_closed_form(p0) == 0.0
    spectrum = gamma_spectrum(p0, steps=500)
    assert np.max(necessary_margin_series(spectrum, 1)) <= 1e-12


@pytest.mark.parametrize("theta", [np.pi / 3, 0.3, 0.8, np.pi / 2])
def test_necessary_margin_matches_closed_form(theta):
    params = GammaParams(b=1.0, w=0.1, theta=theta)
    spectrum = gamma_spectrum(params)
    margins = necessary_margin_series(spectrum, 1)
    ref = gamma_necessary_closed_form(params)
    assert np.max(np.abs(margins - ref)) / ref <= 1e-6


def test_necessary_margin_scalar_api_and_zero_gap():
    block = np.array([[0.1j, 0.0], [0.0, -0.1j]])
    assert necessary_margin(block, gap=2.0, hbar=1.0) == pytest.approx(0.05)
    with pytest.raises(DegenerateGapError):
        necessary_margin(block, gap=0.0)


def test_sufficient_d0_matches_closed_form():
    params = GammaParams(b=1.0, w=0.1, theta=0.8)
    spectrum = gamma_spectrum(params)
    d0 = sufficient_d0_series(spectrum)
    ref, _, _, _ = gamma_sufficient_closed_forms(params, spectrum.grid.times)
    mask = ref > 0
    assert d0[0] == 0.0
    assert np.max(np.abs(d0[mask] - ref[mask]) / ref[mask]) <= 1e-5


def test_sufficient_d0_monotone_nondecreasing():
    params = GammaParams(b=1.0, w=0.3, theta=1.2)
    d0 = sufficient_d0_series(gamma_spectrum(params, steps=800))
    assert np.all(np.diff(d0) >= -1e-15)


def test_sufficient_d0_vanishes_at_theta_zero():
    params = GammaParams(b=1.0, w=0.3, theta=0.0)
    d0 = sufficient_d0_series(gamma_spectrum(params, steps=300))
    assert np.max(d0) <= 1e-12


@pytest.mark.parametrize("theta,expected", [
    (np.pi / 2, 0.25),  # 5w/(2b) at w=0.1
    (0.0, 0.0),
])
def test_sufficient_dn_special_angles(theta, expected):
    params = GammaParams(b=1.0, w=0.1, theta=theta)
    dn = sufficient_dn_series(gamma_spectrum(params, steps=500), 1)
    assert np.max(np.abs(dn - expected)) <= 1e-6


def test_sufficient_dn_matches_closed_form_and_is_flat():
    params = GammaParams(b=1.0, w=0.1, theta=0.8)
    spectrum = gamma_spectrum(params)
    dn = sufficient_dn_series(spectrum, 1)
    _, ref, _, _ = gamma_sufficient_closed_forms(params, 0.0)
    assert np.max(np.abs(dn - ref)) / ref <= 1e-5
    assert np.max(dn) - np.min(dn) <= 1e-6 * ref  # independent of t and g


def test_sufficient_dn_scalar_api():
    block_t = np.array([[0.1j, 0.05], [0.02, -0.1j]])
    block_0 = np.array([[0.1j, 0.0], [0.0, -0.1j]])
    vec = sufficient_dn(block_t, block_0, gap0=1.0, dn=2, hbar=1.0)
    assert vec == pytest.approx([0.12 + 0.4, 0.15 + 0.4])
    assert sufficient_dn(block_t, block_0, 1.0, 2, 1.0, g_n=1) == pytest.approx(0.55)
    with pytest.raises(DegenerateGapError):
        sufficient_dn(block_t, block_0, 0.0, 2, 1.0)


def test_dominance_over_necessary_condition():
    # D^1 = 5 x necessary margin pointwise for theta in [0, pi/2].
    for theta in (0.2, 0.7, 1.2, np.pi / 2):
        params = GammaParams(b=1.0, w=0.1, theta=theta)
        spectrum = gamma_spectrum(params, steps=400)
        margins = necessary_margin_series(spectrum, 1)
        dn = sufficient_dn_series(spectrum, 1)
        assert np.all(dn >= 5.0 * margins[:, None] * (1.0 - 1e-6))


def test_closed_form_dominance_ratio():
    for theta in np.linspace(0.05, np.pi / 2, 12):
        p = GammaParams(b=1.0, w=0.1, theta=float(theta))
        _, d1, _, _ = gamma_sufficient_closed_forms(p, 0.0)
        nec = gamma_necessary_closed_form(p)
        assert d1 >= 5.0 * nec * (1.0 - 1e-12)


def test_closed_form_u_magnitudes():
    p = GammaParams(b=1.0, w=0.1, theta=np.pi / 2)
    _, _, u00, u01 = gamma_sufficient_closed_forms(p, np.linspace(0.0, 10.0, 7))
    assert np.allclose(u00, 1.0)
    assert np.allclose(u01, 0.0)
    p2 = GammaParams(b=1.0, w=0.1, theta=np.pi / 3)
    _, _, _, u01 = gamma_sufficient_closed_forms(p2, np.array([10.0]))  # w t = 1
    assert u01[0] == pytest.approx(np.sin(np.pi / 3) * abs(np.sin(0.25)), rel=1e-12)


def test_u_floor_excludes_identical_zeros():
    params = GammaParams(b=1.0, w=0.02, theta=np.pi / 2)
    spectrum = gamma_spectrum(params, steps=500)
    hol = level_holonomy(spectrum, 0)
    floor = u_floor_series(hol, null_cutoff=1e-6)
    assert np.allclose(floor, 1.0, atol=1e-9)


def test_practical_check_reduction_at_pi_half():
    # At theta = pi/2 the check reduces to 5w/(2b) <= eta.
    for w, expected in ((0.039, True), (0.041, False)):
        params = GammaParams(b=1.0, w=w, theta=np.pi / 2)
        spectrum = gamma_spectrum(params, steps=500)
        d0 = sufficient_d0_series(spectrum)
        dn = {1: sufficient_dn_series(spectrum, 1)}
        hol = level_holonomy(spectrum, 0)
        ok, floor = practical_sufficient_check(d0, dn, hol, eta=0.1)
        assert ok is expected
        assert np.all(floor <= 1.0 + 1e-12)


def test_sufficient_fails_whenever_w_reaches_b():
    for ratio in (1.0, 2.0):
        for theta in np.linspace(0.0, np.pi, 12)[1:-1]:
            params = GammaParams(b=1.0, w=ratio, theta=float(theta))
            report = build_report(
                gamma_hamiltonian(params),
                TimeGrid(0.0, params.total_time, 200),
            )
            assert not report.sufficient_pass


def test_necessary_check_values():
    p_pass = GammaParams(b=1.0, w=0.01, theta=1.0)
    margin = gamma_necessary_closed_form(p_pass)
    assert margin == pytest.approx(0.00580, abs=2e-4)
    assert necessary_check({1: np.array([margin])}, eta=0.1)
    p_fail = GammaParams(b=1.0, w=2.0, theta=np.pi / 2)
    assert gamma_necessary_closed_form(p_fail) == pytest.approx(1.0)
    assert not necessary_check({1: np.array([1.0])}, eta=0.1)


def test_margins_invariant_under_frequency_rescaling():
    # (b, w) -> (c b, c w) with t -> t/c leaves every margin unchanged.
    base = GammaParams(b=1.0, w=0.1, theta=0.9, total_time=10.0)
    scaled = GammaParams(b=4.0, w=0.4, theta=0.9, total_time=2.5)
    s1 = gamma_spectrum(base, steps=800)
    s2 = gamma_spectrum(scaled, steps=800)
    for a, b_ in (
        (necessary_margin_series(s1, 1), necessary_margin_series(s2, 1)),
        (sufficient_d0_series(s1), sufficient_d0_series(s2)),
        (sufficient_dn_series(s1, 1), sufficient_dn_series(s2, 1)),
    ):
        assert np.max(np.abs(a - b_)) <= 1e-12 + 1e-9 * np.max(np.abs(a))


def test_gauge_invariance_of_block_norms_and_verdicts():
    params = GammaParams(b=1.0, w=0.03, theta=np.pi / 2)
    grid = TimeGrid(0.0, params.total_time, 400)
    spectrum = model_spectrum(gamma_hamiltonian(params), grid)
    report = build_report(gamma_hamiltonian(params), grid)

    rng = np.random.default_rng(11)
    frames = []
    vs = []
    for f in spectrum.frames:
        z = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        v, _ = np.linalg.qr(z)
        vs.append(v)
        frames.append(np.einsum("kid,de->kie", f, v))
    regauged = SnapshotSpectrum(grid, spectrum.structure, frames, spectrum.model, "model")

    from adiacheck import overlap_series

    for (n, m) in ((1, 0), (0, 1)):
        a = overlap_series(spectrum, n, m)
        b_ = overlap_series(regauged, n, m)
        frob_a = np.sqrt(np.sum(np.abs(a) ** 2, axis=(1, 2)))
        frob_b = np.sqrt(np.sum(np.abs(b_) ** 2, axis=(1, 2)))
        assert np.max(np.abs(frob_a - frob_b)) <= 1e-12

    report2 = build_report(gamma_hamiltonian(params), grid, spectrum=regauged)
    assert report2.necessary_pass == report.necessary_pass
    # Verdict stability asserted on a clear-pass point and a clear-fail one.
    params_bad = GammaParams(b=1.0, w=2.0, theta=1.0)
    grid_bad = TimeGrid(0.0, params_bad.total_time, 400)
    bad = model_spectrum(gamma_hamiltonian(params_bad), grid_bad)
    frames_bad = [
        np.einsum("kid,de->kie", f, v) for f, v in zip(bad.frames, vs)
    ]
    regauged_bad = SnapshotSpectrum(grid_bad, bad.structure, frames_bad, bad.model, "model")
    r1 = build_report(gamma_hamiltonian(params_bad), grid_bad)
    r2 = build_report(gamma_hamiltonian(params_bad), grid_bad, spectrum=regauged_bad)
    assert r1.necessary_pass == r2.necessary_pass is False
    assert r1.sufficient_pass == r2.sufficient_pass is False


def test_gap_variation_warning():
    def evaluate(t):
        t = np.asarray(t, dtype=float)
        gap = 1.0 + 0.3 * t  # 30% growth over [0, 1]
        out = np.zeros(t.shape + (2, 2), dtype=complex)
        out[..., 0, 0] = -0.5 * gap
        out[..., 1, 1] = 0.5 * gap
        return out

    model = HamiltonianModel(dimension=2, evaluate=evaluate)
    report = build_report(model, TimeGrid(0.0, 1.0, 100))
    assert any("varies" in w for w in report.warnings)
    constant = build_report(
        gamma_hamiltonian(GammaParams(b=1.0, w=0.1, theta=1.0)),
        TimeGrid(0.0, 10.0, 100),
    )
    assert constant.warnings == []


def test_report_exit_codes():
    p_ok = GammaParams(b=1.0, w=0.03, theta=np.pi / 2)
    r_ok = build_report(gamma_hamiltonian(p_ok), TimeGrid(0.0, p_ok.total_time, 300))
    assert (r_ok.necessary_pass, r_ok.sufficient_pass) == (True, True)
    assert verdict_exit_code(r_ok) == 0

    p_path = GammaParams(b=1.0, w=2.0, theta=0.01)
    r_path = build_report(gamma_hamiltonian(p_path), TimeGrid(0.0, p_path.total_time, 300))
    assert (r_path.necessary_pass, r_path.sufficient_pass) == (True, False)
    assert verdict_exit_code(r_path) == 2

    p_bad = GammaParams(b=1.0, w=2.0, theta=1.0)
    r_bad = build_report(gamma_hamiltonian(p_bad), TimeGrid(0.0, p_bad.total_time, 300))
    assert r_bad.necessary_pass is False
    assert verdict_exit_code(r_bad) == 3


def test_report_round_trips_to_json_and_csv(tmp_path):
    params = GammaParams(b=1.0, w=0.05, theta=1.0)
    report = build_report(
        gamma_hamiltonian(params),
        TimeGrid(0.0, params.total_time, 100),
        config_echo={"b": 1.0, "w": 0.05},
    )
    jpath = tmp_path / "report.json"
    report.write_json(jpath, timestamp=False)
    doc = json.loads(jpath.read_text())
    assert doc["config"] == {"b": 1.0, "w": 0.05}
    assert doc["verdicts"] == {"necessary_pass": True, "sufficient_pass": False}
    assert "generated" not in doc
    assert len(doc["times"]) == 101
    assert doc["multiplicities"] == [2, 2]

    cpath = tmp_path / "report.csv"
    report.write_csv(cpath, timestamp=False)
    lines = cpath.read_text().splitlines()
    header = lines[0].split(",")
    assert header[0] == "t"
    assert "necessary_margin_level1" in header
    assert "sufficient_d1_g0" in header
    assert "u_floor" in header
    assert len(lines) == 1 + 101
    # 17 significant digits survive the round trip
    first = dict(zip(header, lines[1].split(",")))
    assert float(first["sufficient_d0"]) == report.d0[0]


def test_build_report_rejects_single_level():
    def evaluate(t):
        t = np.asarray(t, dtype=float)
        return np.zeros(t.shape + (2, 2), dtype=complex) + np.eye(2)

    model = HamiltonianModel(dimension=2, evaluate=evaluate)
    with pytest.raises(ValueError, match="two separated levels"):
        build_report(model, TimeGrid(0.0, 1.0, 10))


def test_build_report_rejects_silly_eta():
    params = GammaParams(b=1.0, w=0.1, theta=1.0)
    with pytest.raises(ValueError, match="eta"):
        build_report(gamma_hamiltonian(params), TimeGrid(0.0, 10.0, 10), eta=1.5)
