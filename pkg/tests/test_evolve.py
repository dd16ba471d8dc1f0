import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qwstat import (
    Cycle,
    NonUnimodularLambda,
    WaveState,
    Window,
    WindowTooSmall,
    eigen_residual,
    fourier,
    grover,
    make_coin,
    minors,
    random_coin,
    step,
    stefanak_eta,
    stefanak_rho,
    type1_params,
    type1_state,
    type2_params,
    verify_stationary,
)


def random_state(topology, rng):
    amps = rng.normal(size=(topology.n_sites, 3)) + 1j * rng.normal(
        size=(topology.n_sites, 3)
    )
    return WaveState(topology, amps)


class TestStep:
    def test_single_site_grover_cycle(self):
        # an impulse (1, 0, 0) at site 0 spreads to exactly three entries:
        # the first column of the coin, distributed left/stay/right
        topo = Cycle(5)
        amps = np.zeros((5, 3), dtype=complex)
        amps[0, 0] = 1.0
        out = step(grover(), WaveState(topo, amps)).amplitudes
        assert out[4, 0] == pytest.approx(-1 / 3, abs=1e-15)
        assert out[0, 1] == pytest.approx(2 / 3, abs=1e-15)
        assert out[1, 2] == pytest.approx(2 / 3, abs=1e-15)
        mask = np.ones_like(out, dtype=bool)
        mask[4, 0] = mask[0, 1] = mask[1, 2] = False
        assert np.abs(out[mask]).max() == 0.0

    def test_identity_coin_shifts_channels(self):
        topo = Cycle(6)
        rng = np.random.default_rng(2)
        state = random_state(topo, rng)
        out = step(make_coin(np.eye(3)), state).amplitudes
        assert np.allclose(out[:, 0], np.roll(state.amplitudes[:, 0], -1), atol=1e-15)
        assert np.allclose(out[:, 1], state.amplitudes[:, 1], atol=1e-15)
        assert np.allclose(out[:, 2], np.roll(state.amplitudes[:, 2], 1), atol=1e-15)

    def test_cycle_step_preserves_norm(self):
        rng = np.random.default_rng(5)
        state = random_state(Cycle(11), rng)
        out = step(fourier(), state)
        assert out.norm_squared() == pytest.approx(state.norm_squared(), abs=1e-12)

    def test_window_absorbs_at_edges(self):
        # a left-mover at the left edge exits entirely in one identity step
        topo = Window(2)
        amps = np.zeros((5, 3), dtype=complex)
        amps[topo.index_of(-2), 0] = 1.0
        out = step(make_coin(np.eye(3)), WaveState(topo, amps))
        assert out.norm_squared() == 0.0

    def test_linearity(self):
        rng = np.random.default_rng(13)
        topo = Cycle(9)
        a, b = 0.3 - 1.2j, 0.8 + 0.4j
        s1, s2 = random_state(topo, rng), random_state(topo, rng)
        combined = WaveState(topo, a * s1.amplitudes + b * s2.amplitudes)
        lhs = step(grover(), combined).amplitudes
        rhs = a * step(grover(), s1).amplitudes + b * step(grover(), s2).amplitudes
        assert np.abs(lhs - rhs).max() < 1e-12

    @given(seed=st.integers(0, 10**6))
    @settings(max_examples=25, deadline=None)
    def test_norm_conservation_property(self, seed):
        rng = np.random.default_rng(seed)
        coin = random_coin(rng)
        state = random_state(Cycle(8), rng)
        before = state.norm_squared()
        for _ in range(5):
            state = step(coin, state)
        assert state.norm_squared() == pytest.approx(before, rel=1e-12)

    def test_window_matches_cycle_away_from_edges(self):
        # same support, same coin: interior sites see identical dynamics
        rng = np.random.default_rng(21)
        w = Window(6)
        c = Cycle(13)
        amps = np.zeros((13, 3), dtype=complex)
        amps[4:9] = rng.normal(size=(5, 3)) + 1j * rng.normal(size=(5, 3))
        out_w = step(grover(), WaveState(w, amps)).amplitudes
        out_c = step(grover(), WaveState(c, amps)).amplitudes
        assert np.abs(out_w - out_c).max() < 1e-14


class TestEigenResidual:
    def test_grover_type1_state(self):
        coin = grover()
        state = type1_state(coin, type1_params(coin), 0.5, -0.2j, Cycle(9))
        assert eigen_residual(coin, state, -1) < 1e-12

    def test_fourier_type1_on_cycle12(self):
        coin = fourier()
        state = type1_state(coin, type1_params(coin), 1.0, 1.0, Cycle(12))
        assert eigen_residual(coin, state, 1j) < 1e-12

    def test_random_state_far_from_eigen(self):
        rng = np.random.default_rng(123)
        state = random_state(Cycle(30), rng)
        assert eigen_residual(grover(), state, -1) > 0.1

    def test_window_checks_interior_only(self):
        # boundary rows see truncation and would report O(1) residuals;
        # only the interior is compared against the full-line relation
        coin = grover()
        state = type1_state(coin, type1_params(coin), 1.0, 0.5, Window(10))
        stepped = step(coin, state).amplitudes
        boundary_residual = np.abs(stepped[[0, -1]] + state.amplitudes[[0, -1]]).max()
        assert boundary_residual > 0.1
        assert eigen_residual(coin, state, -1) < 1e-12

    def test_rejects_non_unimodular(self):
        coin = grover()
        state = type1_state(coin, type1_params(coin), 1, 0, Cycle(5))
        with pytest.raises(NonUnimodularLambda):
            eigen_residual(coin, state, 0.9)


class TestVerifyStationary:
    def test_grover_cycle_long_run(self):
        coin = grover()
        state = type1_state(coin, type1_params(coin), 0.7, 0.2 + 0.1j, Cycle(30))
        report = verify_stationary(coin, state, 100, tol=1e-9)
        assert report.passed and report.max_measure_drift <= 1e-9
        assert report.interior == (0, 29)
        assert report.leaked_norm < 1e-12

    def test_forced_type2_fourier_state_drifts(self):
        # build the Type 2 profile even though the square condition fails:
        # the result is not an eigenstate and its measure moves a lot
        coin = fourier()
        a = coin.matrix
        m = minors(coin)
        lam = m.B / a[0, 0]
        a1 = a[0, 2] - a[0, 0] * a[1, 2] / a[1, 0]
        rng = np.random.default_rng(6)
        n = 18
        phi = rng.normal(size=n) + 1j * rng.normal(size=n)
        shift = lam / a1
        amps = np.empty((n, 3), dtype=complex)
        for x in range(n):
            prev = phi[(x - 1) % n]
            amps[x, 0] = phi[x]
            amps[x, 2] = shift * prev
            amps[x, 1] = (a[1, 0] * phi[x] + a[1, 2] * shift * prev) / (lam - a[1, 1])
        report = verify_stationary(coin, WaveState(Cycle(n), amps), 30, tol=1e-9)
        assert not report.passed
        assert report.max_measure_drift > 0.01

    def test_window_interior_shrinks(self):
        coin = stefanak_eta(0.7)
        p = type1_params(coin)
        state = type1_state(coin, p, 0.8 - 0.3j, 0.8 - 0.3j, Window(40))
        report = verify_stationary(coin, state, 20, tol=1e-9)
        assert report.passed
        assert report.interior == (-20, 20)

    def test_window_too_small(self):
        coin = grover()
        state = type1_state(coin, type1_params(coin), 1, 0, Window(5))
        with pytest.raises(WindowTooSmall):
            verify_stationary(coin, state, 5)

    def test_leaked_norm_recorded(self):
        topo = Window(4)
        amps = np.zeros((topo.n_sites, 3), dtype=complex)
        amps[topo.index_of(-3), 0] = 1.0  # exits after two identity steps
        report = verify_stationary(make_coin(np.eye(3)), WaveState(topo, amps), 3, tol=10.0)
        assert report.leaked_norm == pytest.approx(1.0, abs=1e-12)

    def test_bad_steps(self):
        coin = grover()
        state = type1_state(coin, type1_params(coin), 1, 0, Cycle(5))
        with pytest.raises(ValueError):
            verify_stationary(coin, state, 0)

    def test_type2_stationary_on_cycle(self):
        from qwstat import type2_state

        coin = stefanak_rho(0.7)
        rng = np.random.default_rng(15)
        seeds = {x: complex(*rng.normal(size=2)) for x in range(20)}
        state = type2_state(coin, type2_params(coin), seeds, Cycle(20))
        report = verify_stationary(coin, state, 100, tol=1e-9)
        assert report.passed
