"""Closed-form results for the +x product initial state.

All formulas are driven by two scalars: the exchange phase
A = exp(-i (jz - j) t / 2) of the central pair and the side-coupling
modulation B = cos(j0 t). Fields only contribute local phases, so no
measure below depends on h or hp.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import herm_eig, poly_residual
from .measures import vn_entropy
from .model import ClusterParams

CONGRUENCE_TOL = 1e-9


class NegativeDiscriminantError(ValueError):
    """Spin-flip quadratic has a materially negative discriminant."""


class ResidualTooLargeError(ValueError):
    """A numeric eigenvalue fits neither the cubic nor the zero branch."""


class DegenerateCouplingError(ValueError):
    """Extremum times are undefined when the required coupling vanishes."""


@dataclass(frozen=True)
class ClosedFormTerms:
    """The two scalars A (phase) and B (modulation) at time ``t``."""

    a_phase: complex
    b_cos: float
    t: float
    params: ClusterParams

    def __post_init__(self):
        if abs(abs(self.a_phase) - 1.0) > 1e-12:
            raise ValueError(f"|A| = {abs(self.a_phase)!r} must be 1")
        if abs(self.b_cos) > 1.0 + 1e-12:
            raise ValueError(f"|B| = {abs(self.b_cos)!r} must be <= 1")

    @classmethod
    def from_params(cls, p: ClusterParams, t: float) -> "ClosedFormTerms":
        return cls(
            a_phase=np.exp(-0.5j * (p.jz - p.j) * t),
            b_cos=math.cos(p.j0 * t),
            t=t,
            params=p,
        )


def rho_ab_closed(terms: ClosedFormTerms) -> np.ndarray:
    """Reduced density matrix of the central pair in the basis uu, ud, du, dd."""
    a, b, t = terms.a_phase, terms.b_cos, terms.t
    hp = terms.params.hp
    ph = np.exp(-1j * hp * t)
    edge = 0.125 * ph * a * (1.0 + b)  # <uu|rho|ud> and <uu|rho|du>
    edge_c = 0.125 * ph * a.conjugate() * (1.0 + b)  # <ud|rho|dd> and <du|rho|dd>
    corner = 0.25 * ph * ph * b * b
    rho = np.array(
        [
            [0.25, edge, edge, corner],
            [edge.conjugate(), 0.25, 0.25, edge_c],
            [edge.conjugate(), 0.25, 0.25, edge_c],
            [corner.conjugate(), edge_c.conjugate(), edge_c.conjugate(), 0.25],
        ],
        dtype=complex,
    )
    return rho


def omega2_quadratic(terms: ClosedFormTerms) -> tuple[float, float, float, float]:
    """Coefficients and roots (p, q, w_plus, w_minus) of w^2 + p*w + q = 0.

    The quadratic in w = omega^2 has real coefficients
    p = ((A^2 + A*^2)(1+B)^2 - (1+B^2)^2 - 4)/16 and q = (1-B)^4/256.
    """
    b = terms.b_cos
    cos_exchange = math.cos((terms.params.jz - terms.params.j) * terms.t)  # A^2 + A*^2 = 2 cos
    p = (2.0 * cos_exchange * (1.0 + b) ** 2 - (1.0 + b * b) ** 2 - 4.0) / 16.0
    q = (1.0 - b) ** 4 / 256.0
    # p <= 0 and p^2 - 4q = (|p| + 2 sqrt(q)) (1+B)^2 (B^2 - 2B + 3 - 2cos)/16,
    # an exact factorization that avoids cancellation near double roots.
    disc = (-p + 2.0 * math.sqrt(q)) * (1.0 + b) ** 2 * (b * b - 2.0 * b + 3.0 - 2.0 * cos_exchange) / 16.0
    if disc < -1e-10:
        raise NegativeDiscriminantError(f"discriminant {disc:.3e}")
    disc = max(disc, 0.0)
    # the + root is cancellation-free; recover the small root from the
    # product q = w_plus * w_minus.
    w_plus = (-p + math.sqrt(disc)) / 2.0
    w_minus = q / w_plus if w_plus > 0.0 else 0.0
    return p, q, max(w_plus, 0.0), max(w_minus, 0.0)


def spin_flip_omegas_closed(terms: ClosedFormTerms) -> np.ndarray:
    """Descending spin-flip values of rho_ab from the closed-form quartic.

    The omega^2 spectrum is {0, (1-B^2)^2/16} plus the two quadratic roots.
    """
    b = terms.b_cos
    _, _, w_plus, w_minus = omega2_quadratic(terms)
    omegas = np.array(
        [0.0, abs(1.0 - b * b) / 4.0, math.sqrt(w_plus), math.sqrt(w_minus)]
    )
    return np.sort(omegas)[::-1]


def concurrence_ab_closed(terms: ClosedFormTerms) -> float:
    """Concurrence of the central pair, directly from the closed-form spectrum."""
    w = spin_flip_omegas_closed(terms)
    return max(0.0, float(w[0] - w[1] - w[2] - w[3]))


def ab_cubic_coeffs(b: float) -> list[float]:
    """Coefficients (highest first) of the eigenvalue cubic in u = 1/4 - lambda."""
    return [
        1.0,
        0.25,
        -(b**4 + (1.0 + b) ** 2) / 16.0,
        b * b * (1.0 + 2.0 * b) / 64.0,
    ]


def entropy_ab12_closed(terms: ClosedFormTerms, log_base: float) -> float:
    """Entanglement entropy between the central and side pairs.

    Eigenvalues of rho_ab are computed numerically; each must either satisfy
    the closed-form cubic (in u = 1/4 - lambda) or be zero, the root split
    off the rank-deficient direction.
    """
    rho = rho_ab_closed(terms)
    evals = herm_eig(rho).eigenvalues
    coeffs = ab_cubic_coeffs(terms.b_cos)
    for lam in evals:
        if abs(lam) <= 1e-9:
            continue
        if poly_residual(coeffs, 0.25 - lam) > 1e-9:
            raise ResidualTooLargeError(
                f"eigenvalue {lam!r} fits neither the cubic nor the zero branch"
            )
    return vn_entropy(rho, log_base)


def lambda_pm_spin_a(p: ClusterParams, t: float) -> tuple[float, float]:
    """Eigenvalue pair of the one-spin reduced state of a central spin."""
    factor = math.cos((p.jz - p.j) * t / 2.0) * math.cos(p.j0 * t / 2.0) ** 2
    return (1.0 + factor) / 2.0, (1.0 - factor) / 2.0


def lambda_pm_spin_1(p: ClusterParams, t: float) -> tuple[float, float]:
    """Eigenvalue pair of the one-spin reduced state of a side spin."""
    factor = math.cos(p.j0 * t / 2.0) ** 2
    return (1.0 + factor) / 2.0, (1.0 - factor) / 2.0


@dataclass(frozen=True)
class ExtremumPrediction:
    kind: str
    times: tuple
    n_range: tuple


def _angle_is_multiple(angle: float, parity: int, tol: float) -> bool:
    """True if angle = k*pi with k even (parity 0) or odd (parity 1)."""
    k = round(angle / math.pi)
    return abs(angle - k * math.pi) <= tol and k % 2 == parity


def predict_extrema(p: ClusterParams, kind: str, n_max: int) -> ExtremumPrediction:
    """Times where the central-pair concurrence vanishes (min) or peaks at 1 (max).

    Zeros occur when either the exchange factor |sin((jz-j)t/2)| or the
    modulation cos^2(j0 t / 2) vanishes. The concurrence reaches 1 only
    where both factors equal unity simultaneously; a candidate that also
    satisfies a zero condition is dropped (the concurrence vanishes there).
    """
    if kind not in ("min", "max"):
        raise ValueError(f"kind must be 'min' or 'max', got {kind!r}")
    d = p.jz - p.j
    tol = CONGRUENCE_TOL

    if kind == "min":
        times = []
        if d == 0.0 and p.j0 == 0.0:
            raise DegenerateCouplingError("concurrence is identically zero: no discrete minima")
        if d != 0.0:
            times.extend(2.0 * n * math.pi / abs(d) for n in range(n_max + 1))
        if p.j0 != 0.0:
            times.extend((2.0 * n + 1.0) * math.pi / abs(p.j0) for n in range(n_max + 1))
        times = _dedupe(sorted(times), tol)
        return ExtremumPrediction(kind=kind, times=tuple(times), n_range=(0, n_max))

    if d == 0.0:
        raise DegenerateCouplingError("jz == j: concurrence is identically zero")
    candidates = [(2.0 * n + 1.0) * math.pi / abs(d) for n in range(n_max + 1)]
    times = []
    for t in candidates:
        # tolerances scale with the coupling so coincidence matching is 1e-9 on t
        if p.j0 != 0.0 and not _angle_is_multiple(p.j0 * t, 0, tol * abs(p.j0)):
            # modulation not at its own maximum (cos(j0 t) != 1)
            continue
        # drop candidates that coincide with a zero time
        if _angle_is_multiple(d * t, 0, tol * abs(d)):
            continue
        if p.j0 != 0.0 and _angle_is_multiple(p.j0 * t, 1, tol * abs(p.j0)):
            continue
        times.append(t)
    return ExtremumPrediction(kind=kind, times=tuple(times), n_range=(0, n_max))


def _dedupe(sorted_values, tol: float) -> list:
    out = []
    for v in sorted_values:
        if not out or v - out[-1] > tol:
            out.append(v)
    return out
