"""Cross-check battery: every analytic result against an independent numeric route.

Each check reports its maximum residual against a fixed tolerance; the run
is deterministic for a given seed and sample count.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import closed_form, measures, model
from .linalg import poly_residual

COUPLING_RANGE = 10.0
TIME_RANGE = 50.0


@dataclass(frozen=True)
class CheckResult:
    name: str
    residual: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.residual <= self.tolerance


@dataclass(frozen=True)
class VerificationReport:
    seed: int
    samples: int
    checks: tuple

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def text(self) -> str:
        lines = [f"verification battery: seed={self.seed} samples={self.samples}"]
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            lines.append(f"[{status}] {c.name}: max residual {c.residual:.3e} (tol {c.tolerance:.1e})")
        lines.append("result: " + ("all checks passed" if self.passed else "FAILURES PRESENT"))
        return "\n".join(lines) + "\n"


def _draw_params(rng) -> model.ClusterParams:
    return model.ClusterParams(*rng.uniform(-COUPLING_RANGE, COUPLING_RANGE, size=5))


def run_battery(seed: int, samples: int, eigensystem_fn=None) -> VerificationReport:
    """Run every cross-check; ``eigensystem_fn`` overrides the analytic table."""
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    table_fn = eigensystem_fn or model.analytic_eigensystem
    rng = np.random.default_rng(seed)
    psi0 = model.initial_plus_x()
    bp = {k: measures.Bipartition.keep(k) for k in ("ab", "12", "a", "1")}
    checks = []

    # analytic eigensystem against the Hamiltonian builder
    res_eig = res_orth = res_comm = 0.0
    for _ in range(min(samples, 25)):
        p = _draw_params(rng)
        h = model.build_hamiltonian(p)
        tab = table_fn(p)
        res_eig = max(res_eig, float(np.max(np.abs(h @ tab.states - tab.states * tab.energies))))
        gram = tab.states.conj().T @ tab.states
        res_orth = max(res_orth, float(np.max(np.abs(gram - np.eye(16)))))
        terms = model.hamiltonian_terms(p)
        for i in range(3):
            for k in range(i + 1, 3):
                comm = terms[i] @ terms[k] - terms[k] @ terms[i]
                res_comm = max(res_comm, float(np.max(np.abs(comm))))
    checks.append(CheckResult("eigensystem_residual", res_eig, 1e-10))
    checks.append(CheckResult("eigensystem_orthonormality", res_orth, 1e-12))
    checks.append(CheckResult("hamiltonian_term_commutators", res_comm, 1e-12))

    # analytic propagator vs dense-exponential oracle
    res = 0.0
    for _ in range(samples):
        p = _draw_params(rng)
        t = rng.uniform(0.0, TIME_RANGE)
        a = model.evolve_analytic(psi0, p, t, table_fn(p))
        b = model.evolve_oracle(psi0, p, t)
        res = max(res, float(np.max(np.abs(a - b))))
    checks.append(CheckResult("propagator_analytic_vs_oracle", res, 1e-10))

    # closed-form central-pair matrix and concurrence vs the full pipeline
    res_rho = res_conc = 0.0
    for _ in range(samples):
        p = _draw_params(rng)
        t = rng.uniform(0.0, TIME_RANGE)
        psi = model.evolve_analytic(psi0, p, t, table_fn(p))
        rho = measures.reduce_state(psi, bp["ab"])
        terms = closed_form.ClosedFormTerms.from_params(p, t)
        res_rho = max(res_rho, float(np.max(np.abs(rho - closed_form.rho_ab_closed(terms)))))
        c_pipe = measures.concurrence_mixed(rho).value
        res_conc = max(res_conc, abs(c_pipe - closed_form.concurrence_ab_closed(terms)))
    checks.append(CheckResult("rho_ab_closed_vs_reduced", res_rho, 1e-12))
    checks.append(CheckResult("concurrence_closed_vs_wootters", res_conc, 1e-9))

    # single-spin spectra vs closed-form eigenvalue pairs
    res = 0.0
    for _ in range(samples):
        p = _draw_params(rng)
        t = rng.uniform(0.0, TIME_RANGE)
        psi = model.evolve_analytic(psi0, p, t, table_fn(p))
        for kept, lam_fn in (("a", closed_form.lambda_pm_spin_a), ("1", closed_form.lambda_pm_spin_1)):
            spec = np.sort(np.linalg.eigvalsh(measures.reduce_state(psi, bp[kept])))[::-1]
            lam = sorted(lam_fn(p, t), reverse=True)
            res = max(res, float(np.max(np.abs(spec - np.array(lam)))))
    checks.append(CheckResult("single_spin_spectra", res, 1e-10))

    # eigenvalue cubic over one modulation period
    res = 0.0
    p = model.ClusterParams(j=0.0, jz=1.0, j0=1.0)
    for t in np.linspace(0.0, 2.0 * math.pi, 257):
        terms = closed_form.ClosedFormTerms.from_params(p, float(t))
        rho = closed_form.rho_ab_closed(terms)
        coeffs = closed_form.ab_cubic_coeffs(terms.b_cos)
        for lam in np.linalg.eigvalsh(rho):
            if abs(lam) > 1e-9:
                res = max(res, poly_residual(coeffs, 0.25 - lam))
    checks.append(CheckResult("cubic_residuals", res, 1e-9))

    # spin-flip quadratic at its own closed-form roots
    res = 0.0
    for _ in range(samples):
        p = _draw_params(rng)
        t = rng.uniform(0.0, TIME_RANGE)
        terms = closed_form.ClosedFormTerms.from_params(p, t)
        pc, qc, w_plus, w_minus = closed_form.omega2_quadratic(terms)
        res = max(res, poly_residual([1.0, pc, qc], w_plus))
        res = max(res, poly_residual([1.0, pc, qc], w_minus))
    checks.append(CheckResult("quadratic_root_residuals", res, 1e-12))

    # fields must not move any measure on the +x trajectory
    res = 0.0
    for _ in range(max(1, samples // 20)):
        j, jz, j0 = rng.uniform(-COUPLING_RANGE, COUPLING_RANGE, size=3)
        t = rng.uniform(0.0, TIME_RANGE)
        base = None
        for h in (-2.0, 0.0, 2.0):
            for hp in (-2.0, 0.0, 2.0):
                p = model.ClusterParams(j=j, jz=jz, j0=j0, h=h, hp=hp)
                psi = model.evolve_analytic(psi0, p, t, table_fn(p))
                vals = np.array(
                    [
                        measures.concurrence_mixed(measures.reduce_state(psi, bp["ab"])).value,
                        measures.vn_entropy(measures.reduce_state(psi, bp["ab"]), 3.0),
                        measures.vn_entropy(measures.reduce_state(psi, bp["a"]), 2.0),
                        measures.vn_entropy(measures.reduce_state(psi, bp["1"]), 2.0),
                        measures.eof_two_qubit(measures.reduce_state(psi, bp["12"])),
                    ]
                )
                if base is None:
                    base = vals
                else:
                    res = max(res, float(np.max(np.abs(vals - base))))
    checks.append(CheckResult("field_invariance", res, 1e-10))

    # side pair stays separable
    res = 0.0
    for _ in range(samples):
        p = _draw_params(rng)
        t = rng.uniform(0.0, TIME_RANGE)
        psi = model.evolve_analytic(psi0, p, t, table_fn(p))
        res = max(res, measures.eof_two_qubit(measures.reduce_state(psi, bp["12"])))
    checks.append(CheckResult("eof_side_pair_zero", res, 1e-10))

    return VerificationReport(seed=seed, samples=samples, checks=tuple(checks))
