import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_params, random_state
from diamond_cluster import closed_form, linalg, model
from diamond_cluster.linalg import (
    DimensionMismatchError,
    NegativeSpectrumError,
    NonHermitianError,
    clamp_psd_spectrum,
    herm_eig,
    herm_expm_apply,
    kron,
    partial_trace,
    poly_residual,
)


class TestHermEig:
    def test_identity(self):
        res = herm_eig(np.eye(2))
        assert np.allclose(res.eigenvalues, [1.0, 1.0])

    def test_pauli_z_ascending(self):
        res = herm_eig(np.diag([1.0, -1.0]))
        assert np.allclose(res.eigenvalues, [-1.0, 1.0])

    def test_hamiltonian_eigenvalues_match_closed_formulas(self):
        # independently evaluate the sixteen closed-form energies
        p = model.ClusterParams(j=1.0, jz=2.0, j0=0.5, h=0.3, hp=0.2)
        expected = np.sort(model.analytic_eigensystem(p).energies)
        got = herm_eig(model.build_hamiltonian(p)).eigenvalues
        assert np.max(np.abs(got - expected)) <= 1e-12

    def test_reconstruction_and_orthonormality(self, rng):
        for dim in (2, 4, 8, 16):
            a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
            m = a + a.conj().T
            res = herm_eig(m)
            recon = (res.eigenvectors * res.eigenvalues) @ res.eigenvectors.conj().T
            assert np.max(np.abs(m - recon)) <= 1e-10
            gram = res.eigenvectors.conj().T @ res.eigenvectors
            assert np.max(np.abs(gram - np.eye(dim))) <= 1e-10
            assert np.all(np.diff(res.eigenvalues) >= 0)

    def test_rejects_non_hermitian(self):
        m = np.array([[0.0, 1.0], [0.0, 0.0]])
        with pytest.raises(NonHermitianError):
            herm_eig(m)

    def test_rejects_oversized(self):
        with pytest.raises(DimensionMismatchError):
            herm_eig(np.eye(17))

    def test_stacked_input(self, rng):
        stack = np.stack([np.diag([1.0, -1.0]), np.eye(2)]).astype(complex)
        res = herm_eig(stack)
        assert res.eigenvalues.shape == (2, 2)
        assert np.allclose(res.eigenvalues[0], [-1.0, 1.0])


class TestKron:
    def test_identity(self):
        assert np.array_equal(kron(np.eye(2), np.eye(2)), np.eye(4))

    def test_sz_half_entry(self):
        assert kron(model.SZ / 2, np.eye(2))[0, 0] == 0.5

    def test_two_site_xx_matrix_element(self):
        # <ud| Sx Sx |du> on a two-spin space, expanded by hand: 1/4
        sxsx = kron(model.SX / 2, model.SX / 2)
        assert sxsx[1, 2] == 0.25

    @given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
    def test_associative_for_paulis(self, i, j, k):
        paulis = [np.eye(2, dtype=complex), model.SX, model.SY, model.SZ]
        a, b, c = paulis[i], paulis[j], paulis[k]
        left = kron(kron(a, b), c)
        right = kron(a, kron(b, c))
        assert np.array_equal(left, right)


class TestPartialTrace:
    def test_product_state(self):
        up = np.array([1.0, 0.0], dtype=complex)
        uu = np.kron(up, up)
        rho = np.outer(uu, uu.conj())
        reduced = partial_trace(rho, [2, 2], [1])
        assert np.allclose(reduced, np.outer(up, up.conj()), atol=1e-15)

    def test_initial_state_reduces_to_plus_plus(self):
        psi = model.initial_plus_x()
        rho = np.outer(psi, psi.conj())
        reduced = partial_trace(rho, [2, 2, 2, 2], [0, 1])
        assert np.max(np.abs(reduced - 0.25)) <= 1e-15

    def test_evolved_state_matches_closed_matrix(self):
        # exchange phase pi, no side coupling: A = exp(-i pi / 2), B = 1
        p = model.ClusterParams(j=0.0, jz=1.0, j0=0.0, h=0.4, hp=0.7)
        t = np.pi
        psi = model.evolve_analytic(model.initial_plus_x(), p, t)
        rho = np.outer(psi, psi.conj())
        reduced = partial_trace(rho, [2, 2, 2, 2], [0, 1])
        terms = closed_form.ClosedFormTerms(
            a_phase=np.exp(-0.5j * np.pi), b_cos=1.0, t=t, params=p
        )
        assert np.max(np.abs(reduced - closed_form.rho_ab_closed(terms))) <= 1e-12

    def test_trace_and_hermiticity_preserved(self, rng):
        for _ in range(20):
            v = random_state(rng)
            rho = np.outer(v, v.conj())
            reduced = partial_trace(rho, [2, 2, 2, 2], [1, 3])
            assert abs(np.trace(reduced) - np.trace(rho)) <= 1e-12
            assert np.max(np.abs(reduced - reduced.conj().T)) <= 1e-12
            evals = np.linalg.eigvalsh(reduced)
            assert evals.min() >= -1e-10

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            partial_trace(np.eye(8), [2, 2], [0])
        with pytest.raises(DimensionMismatchError):
            partial_trace(np.eye(4), [2, 2], [2])

    def test_batched_matches_loop(self, rng):
        states = np.stack([random_state(rng) for _ in range(5)])
        rhos = states[:, :, None] * states.conj()[:, None, :]
        batched = partial_trace(rhos, [2, 2, 2, 2], [0, 1])
        for i in range(5):
            single = partial_trace(rhos[i], [2, 2, 2, 2], [0, 1])
            assert np.array_equal(batched[i], single)


class TestHermExpmApply:
    def test_zero_time(self, rng):
        p = random_params(rng)
        v = random_state(rng)
        out = herm_expm_apply(model.build_hamiltonian(p), 0.0, v)
        assert np.max(np.abs(out - v)) <= 1e-12

    def test_stationary_state_acquires_phase(self):
        p = model.ClusterParams(j=0.7, jz=-1.1, j0=2.0, h=0.5, hp=-0.3)
        table = model.analytic_eigensystem(p)
        psi1, e1 = table.states[:, 0], table.energies[0]
        out = herm_expm_apply(model.build_hamiltonian(p), 1.7, psi1)
        assert np.max(np.abs(out - np.exp(-1j * e1 * 1.7) * psi1)) <= 1e-12

    def test_matches_analytic_propagator(self, rng):
        p = random_params(rng)
        v = model.initial_plus_x()
        out = herm_expm_apply(model.build_hamiltonian(p), 1.0, v)
        assert np.max(np.abs(out - model.evolve_analytic(v, p, 1.0))) <= 1e-10

    def test_norm_preserved_long_times(self, rng):
        p = random_params(rng)
        h = model.build_hamiltonian(p)
        v = random_state(rng)
        for t in (1.0, 10.0, 100.0, 1000.0):
            assert abs(np.linalg.norm(herm_expm_apply(h, t, v)) - 1.0) <= 1e-12

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            herm_expm_apply(np.eye(4), 1.0, np.ones(3))


class TestPolyResidual:
    def test_linear_at_root(self):
        assert poly_residual([1.0, 0.0], 0.0) == 0.0

    def test_cubic_at_rho_ab_eigenvalues(self):
        # t = 0: B = 1, rho_ab is the pure projector
        p = model.ClusterParams(j=0.0, jz=1.0, j0=0.3)
        terms = closed_form.ClosedFormTerms.from_params(p, 0.0)
        rho = closed_form.rho_ab_closed(terms)
        coeffs = closed_form.ab_cubic_coeffs(1.0)
        for lam in herm_eig(rho).eigenvalues:
            if abs(lam) > 1e-9:
                assert poly_residual(coeffs, 0.25 - lam) <= 1e-10

    def test_quadratic_at_closed_roots(self, rng):
        for _ in range(50):
            p = random_params(rng)
            t = rng.uniform(0.0, 50.0)
            terms = closed_form.ClosedFormTerms.from_params(p, t)
            pc, qc, w_plus, w_minus = closed_form.omega2_quadratic(terms)
            assert poly_residual([1.0, pc, qc], w_plus) <= 1e-12
            assert poly_residual([1.0, pc, qc], w_minus) <= 1e-12

    @given(st.lists(st.floats(-5, 5), min_size=1, max_size=6), st.floats(-3, 3))
    @settings(max_examples=60)
    def test_matches_polyval(self, coeffs, x):
        assert poly_residual(coeffs, x) == pytest.approx(abs(np.polyval(coeffs, x)), abs=1e-9)


class TestClampPsdSpectrum:
    def test_clamps_roundoff(self):
        out = clamp_psd_spectrum(np.array([-5e-11, 0.2, 0.8]))
        assert np.array_equal(out, [0.0, 0.2, 0.8])

    def test_raises_beyond_floor(self):
        with pytest.raises(NegativeSpectrumError):
            clamp_psd_spectrum(np.array([-1e-9, 1.0]))

    def test_kron_all_builds_site_operators(self):
        sz1 = model.site_op(model.SZ / 2, "1")
        assert sz1.shape == (16, 16)
        assert sz1[0, 0] == 0.5
        assert linalg.kron_all(np.eye(2), np.eye(2), np.eye(2), np.eye(2)).shape == (16, 16)
