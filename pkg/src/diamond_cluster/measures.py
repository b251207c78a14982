"""Entanglement measures: concurrence, entropy, entanglement of formation.

Density matrices are plain complex arrays of dimension 2 or 4. All measures
validate their input (Hermiticity, unit trace, positivity) before computing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import model
from .linalg import (
    NegativeSpectrumError,
    clamp_psd_spectrum,
    herm_eig,
    kron,
    partial_trace,
)

DENSITY_TOL = 1e-8
NORM_TOL = 1e-10

SPIN_FLIP = kron(model.SY, model.SY)  # real symmetric, squares to identity

# Relative cutoff below which an eigenvalue of a density matrix is numerical
# rank deficiency, not signal; used when taking matrix square roots.
RANK_RTOL = 64 * np.finfo(float).eps


class NotTwoQubitError(ValueError):
    """Operation requires a 4x4 two-qubit density matrix."""


class NotNormalizedError(ValueError):
    """State vector norm deviates from 1 beyond tolerance."""


class InvalidBaseError(ValueError):
    """Entropy logarithm base must exceed 1."""


class OutOfRangeError(ValueError):
    """Concurrence argument outside [0, 1]."""


@dataclass(frozen=True)
class Bipartition:
    """Split of the four sites {1, 2, a, b} into kept and traced sets."""

    kept: frozenset
    traced: frozenset

    def __post_init__(self):
        all_sites = set(model.SITES)
        kept, traced = set(self.kept), set(self.traced)
        if not kept or not traced:
            raise ValueError("kept and traced sets must both be non-empty")
        if kept & traced or kept | traced != all_sites:
            raise ValueError(
                f"kept {sorted(kept)} and traced {sorted(traced)} must partition {sorted(all_sites)}"
            )

    @classmethod
    def keep(cls, sites) -> "Bipartition":
        """Bipartition keeping the given sites, e.g. ``keep("ab")`` or ``keep(["1"])``."""
        kept = frozenset(str(s) for s in sites)
        unknown = kept - set(model.SITES)
        if unknown:
            raise ValueError(f"unknown sites {sorted(unknown)}")
        return cls(kept=kept, traced=frozenset(model.SITES) - kept)

    @property
    def traced_indices(self) -> list[int]:
        return sorted(model.SITE_INDEX[s] for s in self.traced)


def reduce_state(state: np.ndarray, bp: Bipartition) -> np.ndarray:
    """Reduced density matrix of the kept sites of a pure 16-dim state.

    Accepts a stack of states (leading axes).
    """
    state = np.asarray(state, dtype=complex)
    rho = state[..., :, None] * state.conj()[..., None, :]
    return partial_trace(rho, [2, 2, 2, 2], bp.traced_indices)


def _check_density(rho: np.ndarray, tol: float = DENSITY_TOL) -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim < 2 or rho.shape[-1] != rho.shape[-2]:
        raise ValueError(f"density matrix must be square, got shape {rho.shape}")
    dag = rho.conj().swapaxes(-1, -2)
    asym = np.max(np.abs(rho - dag))
    if asym > tol:
        raise ValueError(f"density matrix not Hermitian: asymmetry {asym:.3e}")
    tr_err = np.max(np.abs(np.trace(rho, axis1=-2, axis2=-1) - 1.0))
    if tr_err > tol:
        raise ValueError(f"density matrix trace deviates from 1 by {tr_err:.3e}")
    return (rho + dag) / 2


class ConcurrenceResult(NamedTuple):
    value: float
    omegas: tuple


def _sqrt_psd(rho: np.ndarray) -> np.ndarray:
    """Matrix square root of a PSD matrix, zeroing rank-deficient directions."""
    eig = herm_eig(rho)
    try:
        evals = clamp_psd_spectrum(eig.eigenvalues, floor=DENSITY_TOL)
    except NegativeSpectrumError as exc:
        raise NegativeSpectrumError(f"density matrix not PSD: {exc}") from exc
    floor = RANK_RTOL * evals.max(axis=-1, keepdims=True)
    evals = np.where(evals < floor, 0.0, evals)
    v = eig.eigenvectors
    return (v * np.sqrt(evals)[..., None, :]) @ v.conj().swapaxes(-1, -2)


def spin_flip_spectrum(rho: np.ndarray) -> np.ndarray:
    """Descending spin-flip values omega_i of a two-qubit density matrix.

    These are the square roots of the eigenvalues of rho * rho~ with
    rho~ = (sy x sy) rho* (sy x sy), computed as the singular values of
    sqrt(rho) (sy x sy) sqrt(rho)* -- same spectrum, but accurate for the
    near-zero and near-degenerate omegas that squaring would smear.
    Accepts a stack of matrices; omegas fill the last axis.
    """
    rho = _check_density(rho)
    if rho.shape[-1] != 4:
        raise NotTwoQubitError(f"expected dim 4, got {rho.shape[-1]}")
    root = _sqrt_psd(rho)
    omegas = np.linalg.svd(root @ SPIN_FLIP @ root.conj(), compute_uv=False)
    return np.sort(omegas, axis=-1)[..., ::-1]


def concurrence_mixed(rho: np.ndarray) -> ConcurrenceResult:
    """Wootters concurrence max(0, w1 - w2 - w3 - w4) of a two-qubit state."""
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2:
        raise NotTwoQubitError("expected a single 4x4 matrix; stack support lives in spin_flip_spectrum")
    omegas = spin_flip_spectrum(rho)
    value = max(0.0, float(omegas[0] - omegas[1] - omegas[2] - omegas[3]))
    return ConcurrenceResult(value=value, omegas=tuple(float(w) for w in omegas))


def concurrence_pure(amps: np.ndarray) -> float:
    """Concurrence 2|ad - bc| of a normalized pure two-qubit state (a,b,c,d)."""
    amps = np.asarray(amps, dtype=complex)
    if amps.shape != (4,):
        raise NotTwoQubitError(f"expected 4 amplitudes, got shape {amps.shape}")
    norm = np.linalg.norm(amps)
    if abs(norm - 1.0) > NORM_TOL:
        raise NotNormalizedError(f"norm {norm!r} deviates from 1")
    a, b, c, d = amps
    return float(2.0 * abs(a * d - b * c))


def vn_entropy(rho: np.ndarray, log_base: float):
    """Von Neumann entropy -sum(lam * log_base(lam)) with 0 log 0 = 0.

    Returns a float for a single matrix, an array for a stack.
    """
    if not log_base > 1.0:
        raise InvalidBaseError(f"log base must exceed 1, got {log_base}")
    rho = _check_density(rho)
    evals = clamp_psd_spectrum(herm_eig(rho).eigenvalues)
    plogp = np.where(evals > 0.0, evals * np.log(np.where(evals > 0.0, evals, 1.0)), 0.0)
    out = -np.sum(plogp, axis=-1) / math.log(log_base)
    return float(out) if np.ndim(out) == 0 else out


def eof_from_concurrence(c):
    """Entanglement of formation of a two-qubit state with concurrence ``c``.

    Accepts a scalar or an array of concurrences.
    """
    c = np.asarray(c, dtype=float)
    if c.size and (c.min() < -NORM_TOL or c.max() > 1.0 + NORM_TOL):
        raise OutOfRangeError(f"concurrence outside [0, 1]: range [{c.min()}, {c.max()}]")
    c = np.clip(c, 0.0, 1.0)
    x = (1.0 + np.sqrt(1.0 - c * c)) / 2.0
    out = _binary_entropy(x)
    return float(out) if np.ndim(out) == 0 else out


def _binary_entropy(x):
    x = np.clip(x, 0.0, 1.0)
    def plog2p(v):
        return np.where((v > 0.0) & (v < 1.0), v * np.log2(np.where(v > 0.0, v, 1.0)), 0.0)
    return -(plog2p(x) + plog2p(1.0 - x))


def eof_two_qubit(rho: np.ndarray) -> float:
    """Entanglement of formation of a two-qubit density matrix (exact)."""
    return eof_from_concurrence(concurrence_mixed(rho).value)
