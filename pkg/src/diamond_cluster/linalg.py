"""Dense complex linear algebra for small (dim <= 16) Hermitian problems.

Everything here operates on plain ``numpy`` arrays; matrices are complex128
and states are 1-d complex128 vectors. Functions are pure and never mutate
their inputs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

MAX_DIM = 16

# Eigenvalues of a nominally PSD matrix in [-PSD_FLOOR, 0) are round-off and
# get clamped to 0; anything more negative is treated as a bug upstream.
PSD_FLOOR = 1e-10


class NonHermitianError(ValueError):
    """Matrix fails the Hermitian symmetry check."""


class NoConvergenceError(RuntimeError):
    """Eigensolver did not converge."""


class DimensionMismatchError(ValueError):
    """Operand shapes are inconsistent."""


class NegativeSpectrumError(ValueError):
    """A spectrum that should be PSD has an eigenvalue below the floor."""


@dataclass(frozen=True)
class HermitianEigenResult:
    """Eigenvalues (ascending) and orthonormal eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def _as_square(m: np.ndarray) -> np.ndarray:
    """Validate a (stack of) square matrices; extra leading axes are allowed."""
    m = np.asarray(m, dtype=complex)
    if m.ndim < 2 or m.shape[-1] != m.shape[-2]:
        raise DimensionMismatchError(f"expected a square matrix, got shape {m.shape}")
    return m


def _dagger(m: np.ndarray) -> np.ndarray:
    return m.conj().swapaxes(-1, -2)


def herm_eig(m: np.ndarray, tol: float = 1e-12) -> HermitianEigenResult:
    """Eigendecomposition of a Hermitian matrix of dimension <= 16.

    Accepts a stack of matrices (leading axes). Raises NonHermitianError if
    max |m - m^dag| exceeds ``tol`` and NoConvergenceError if the underlying
    solver fails.
    """
    m = _as_square(m)
    if m.shape[-1] > MAX_DIM:
        raise DimensionMismatchError(f"dimension {m.shape[-1]} exceeds {MAX_DIM}")
    asym = np.max(np.abs(m - _dagger(m)))
    if asym > tol:
        raise NonHermitianError(f"asymmetry {asym:.3e} exceeds tolerance {tol:.3e}")
    try:
        evals, evecs = np.linalg.eigh((m + _dagger(m)) / 2)
    except np.linalg.LinAlgError as exc:
        raise NoConvergenceError(str(exc)) from exc
    return HermitianEigenResult(eigenvalues=evals, eigenvectors=evecs)


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product with complex128 output."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def kron_all(*ops: np.ndarray) -> np.ndarray:
    """Kronecker product of several operators, left to right."""
    out = np.asarray(ops[0], dtype=complex)
    for op in ops[1:]:
        out = np.kron(out, op)
    return out


def partial_trace(rho: np.ndarray, site_dims: list[int], traced_sites) -> np.ndarray:
    """Trace ``rho`` over the sites listed in ``traced_sites``.

    ``site_dims`` gives the local dimension of each site in tensor order;
    the result lives on the remaining sites, in their original order.
    Accepts a stack of matrices (leading axes).
    """
    rho = _as_square(rho)
    dims = [int(d) for d in site_dims]
    n = len(dims)
    full = int(np.prod(dims))
    if rho.shape[-1] != full:
        raise DimensionMismatchError(
            f"matrix dim {rho.shape[-1]} != product of site dims {full}"
        )
    traced = sorted(set(int(s) for s in traced_sites))
    if traced and (traced[0] < 0 or traced[-1] >= n):
        raise DimensionMismatchError(f"traced sites {traced} out of range for {n} sites")
    keep = [i for i in range(n) if i not in traced]

    batch = rho.shape[:-2]
    nb = len(batch)
    t = rho.reshape(*batch, *dims, *dims)
    perm = (
        list(range(nb))
        + [nb + i for i in keep]
        + [nb + i for i in traced]
        + [nb + n + i for i in keep]
        + [nb + n + i for i in traced]
    )
    t = np.transpose(t, perm)
    d_keep = int(np.prod([dims[i] for i in keep])) if keep else 1
    d_tr = int(np.prod([dims[i] for i in traced])) if traced else 1
    t = t.reshape(*batch, d_keep, d_tr, d_keep, d_tr)
    return np.einsum("...abcb->...ac", t)


def herm_expm_apply(m: np.ndarray, t: float, v: np.ndarray) -> np.ndarray:
    """Apply exp(-i*m*t) to ``v`` via the eigendecomposition of Hermitian ``m``."""
    v = np.asarray(v, dtype=complex)
    m = _as_square(m)
    if m.shape[0] != v.shape[0]:
        raise DimensionMismatchError(f"matrix dim {m.shape[0]} != vector dim {v.shape[0]}")
    eig = herm_eig(m)
    phases = np.exp(-1j * eig.eigenvalues * t)
    return eig.eigenvectors @ (phases * (eig.eigenvectors.conj().T @ v))


def poly_residual(coeffs, x: float) -> float:
    """|p(x)| for real coefficients ordered highest degree first (Horner)."""
    acc = 0.0
    for c in coeffs:
        acc = acc * x + c
    return abs(acc)


def clamp_psd_spectrum(evals: np.ndarray, floor: float = PSD_FLOOR) -> np.ndarray:
    """Zero out eigenvalues in [-floor, 0); raise if any is more negative."""
    evals = np.asarray(evals, dtype=float)
    worst = float(evals.min()) if evals.size else 0.0
    if worst < -floor:
        raise NegativeSpectrumError(f"eigenvalue {worst:.3e} below -{floor:.1e}")
    return np.where(evals < 0.0, 0.0, evals)
