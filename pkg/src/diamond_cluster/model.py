"""Four-spin diamond cluster: parameters, Hamiltonian, eigensystem, evolution.

Two central spins (a, b) carry an XXZ exchange (xy strength ``j``, z strength
``jz``) in a field ``hp``; two side spins (1, 2) sit in a field ``h`` and
couple to the central pair through an Ising term of strength ``j0``.

Basis convention: sites ordered (1, 2, a, b), spin-up mapped to 0, so the
basis index of |s1 s2 sa sb> is 8*s1 + 4*s2 + 2*sa + sb.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import herm_expm_apply, kron_all

SITES = ("1", "2", "a", "b")
SITE_INDEX = {name: i for i, name in enumerate(SITES)}
DIM = 16

I2 = np.eye(2, dtype=complex)
SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)

UP = np.array([1, 0], dtype=complex)
DOWN = np.array([0, 1], dtype=complex)


@dataclass(frozen=True)
class ClusterParams:
    """Coupling and field constants, in frequency units (hbar = 1)."""

    j: float = 0.0
    jz: float = 0.0
    j0: float = 0.0
    h: float = 0.0
    hp: float = 0.0

    def __post_init__(self):
        for name in ("j", "jz", "j0", "h", "hp"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"parameter {name} must be finite")


def site_op(op: np.ndarray, site: str) -> np.ndarray:
    """Embed a single-spin operator at the named site of the 16-dim space."""
    ops = [I2, I2, I2, I2]
    ops[SITE_INDEX[site]] = op
    return kron_all(*ops)


def hamiltonian_terms(p: ClusterParams) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """The three mutually commuting pieces: central pair, side pair, coupling."""
    # spin operators are S^i = sigma^i / 2
    sax, sbx = site_op(SX / 2, "a"), site_op(SX / 2, "b")
    say, sby = site_op(SY / 2, "a"), site_op(SY / 2, "b")
    saz, sbz = site_op(SZ / 2, "a"), site_op(SZ / 2, "b")
    s1z, s2z = site_op(SZ / 2, "1"), site_op(SZ / 2, "2")

    h_ab = p.j * (sax @ sbx + say @ sby) + p.jz * (saz @ sbz) + p.hp * (saz + sbz)
    h_12 = p.h * (s1z + s2z)
    h_int = p.j0 * (saz + sbz) @ (s1z + s2z)
    return h_ab, h_12, h_int


def build_hamiltonian(p: ClusterParams) -> np.ndarray:
    """Full 16x16 Hamiltonian of the cluster."""
    h_ab, h_12, h_int = hamiltonian_terms(p)
    return h_ab + h_12 + h_int


@dataclass(frozen=True)
class EigenTable:
    """Sixteen analytic eigenpairs; ``states[:, n]`` belongs to ``energies[n]``."""

    energies: np.ndarray
    states: np.ndarray


def analytic_eigensystem(p: ClusterParams) -> EigenTable:
    """Closed-form eigensystem of the cluster Hamiltonian.

    The side pair stays in a product state while the central pair occupies
    |uu>, the symmetric/antisymmetric |ud>+-|du> combinations, or |dd>.
    """
    j, jz, j0, h, hp = p.j, p.jz, p.j0, p.h, p.hp
    s2 = 1.0 / math.sqrt(2.0)

    uu_ab = kron_all(UP, UP)
    sym_ab = s2 * (kron_all(UP, DOWN) + kron_all(DOWN, UP))
    asym_ab = s2 * (kron_all(UP, DOWN) - kron_all(DOWN, UP))
    dd_ab = kron_all(DOWN, DOWN)

    uu = kron_all(UP, UP)
    ud = kron_all(UP, DOWN)
    du = kron_all(DOWN, UP)
    dd = kron_all(DOWN, DOWN)

    table = [
        (kron_all(uu, uu_ab), h + jz / 4 + hp + j0),
        (kron_all(uu, sym_ab), h + j / 2 - jz / 4),
        (kron_all(uu, asym_ab), h - j / 2 - jz / 4),
        (kron_all(uu, dd_ab), h + jz / 4 - hp - j0),
        (kron_all(ud, uu_ab), jz / 4 + hp),
        (kron_all(ud, sym_ab), j / 2 - jz / 4),
        (kron_all(ud, asym_ab), -j / 2 - jz / 4),
        (kron_all(ud, dd_ab), jz / 4 - hp),
        (kron_all(du, uu_ab), jz / 4 + hp),
        (kron_all(du, sym_ab), j / 2 - jz / 4),
        (kron_all(du, asym_ab), -j / 2 - jz / 4),
        (kron_all(du, dd_ab), jz / 4 - hp),
        (kron_all(dd, uu_ab), -h + jz / 4 + hp - j0),
        (kron_all(dd, sym_ab), -h + j / 2 - jz / 4),
        (kron_all(dd, asym_ab), -h - j / 2 - jz / 4),
        (kron_all(dd, dd_ab), -h + jz / 4 - hp + j0),
    ]
    states = np.column_stack([state for state, _ in table])
    energies = np.array([energy for _, energy in table], dtype=float)
    return EigenTable(energies=energies, states=states)


def initial_plus_x() -> np.ndarray:
    """All four spins polarized along +x: every amplitude equals 1/4."""
    return np.full(DIM, 0.25, dtype=complex)


def decompose(v: np.ndarray, table: EigenTable) -> np.ndarray:
    """Coefficients <psi_n|v> of ``v`` over the analytic eigenbasis."""
    return table.states.conj().T @ np.asarray(v, dtype=complex)


def evolve_analytic(
    v: np.ndarray, p: ClusterParams, t, table: EigenTable | None = None
) -> np.ndarray:
    """Evolve ``v`` for time ``t`` by phasing its eigenbasis coefficients.

    ``t`` may be a scalar or an array; an array of times yields a stack of
    states with time along the leading axes.
    """
    if table is None:
        table = analytic_eigensystem(p)
    coeffs = decompose(v, table)
    phases = np.exp(-1j * np.multiply.outer(np.asarray(t, dtype=float), table.energies))
    return (phases * coeffs) @ table.states.T


def evolve_oracle(v: np.ndarray, p: ClusterParams, t: float) -> np.ndarray:
    """Evolve ``v`` through the dense matrix exponential (numeric cross-check)."""
    return herm_expm_apply(build_hamiltonian(p), t, v)
