"""Certainty functionals of real symmetric density matrices.

A density matrix rho (symmetric, positive semidefinite, trace 1) carries
its randomness in its spectrum {eta_j}.  The Von Neumann entropy
H(rho) = -sum_j eta_j ln(eta_j) measures its uncertainty; the dual
certainty functional implemented here is

    T(rho) = -sum_j eta_j ln(1 - eta_j),

the troenpy of the spectrum.  Both are basis invariant and reduce to their
classical counterparts on diagonal matrices.  A pure state (rank-1
projector) has zero entropy and clamp-capped maximal troenpy; the
maximally mixed state I/d attains the troenpy minimum ln(d/(d - 1)).

The spectrum is computed by an internal cyclic Jacobi eigensolver, chosen
for determinism and simplicity at the small dimensions (d <= 64) this
toolkit targets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import DEFAULT_LOG, Distribution, LogConfig, entropy, troenpy
from .errors import PSDViolationError, ValidationError

#: Elementwise tolerance for the symmetry check.
SYMMETRY_TOLERANCE = 1e-12
#: Absolute tolerance for the trace-one check.
TRACE_TOLERANCE = 1e-9
#: Eigenvalues below -PSD_TOLERANCE are a hard error; above it they are
#: treated as numerical noise, clamped to zero, and the spectrum is
#: renormalized.
PSD_TOLERANCE = 1e-9

#: Jacobi stops when the off-diagonal Frobenius norm falls to this level.
JACOBI_TOLERANCE = 1e-12
JACOBI_MAX_SWEEPS = 100


@dataclass(frozen=True)
class DensityMatrix:
    """A validated d x d real symmetric trace-1 matrix.

    Symmetry (within 1e-12 per entry) and unit trace (within 1e-9) are
    checked at construction; positive semidefiniteness is checked when the
    spectrum is first computed.
    """

    entries: np.ndarray

    def __post_init__(self) -> None:
        m = np.asarray(self.entries, dtype=np.float64)
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
            raise ValidationError("density matrix must be a non-empty square matrix")
        if not np.all(np.isfinite(m)):
            raise ValidationError("density matrix entries must be finite")
        asym = float(np.max(np.abs(m - m.T)))
        if asym > SYMMETRY_TOLERANCE:
            raise ValidationError(
                f"density matrix must be symmetric within {SYMMETRY_TOLERANCE}; "
                f"max |a_ij - a_ji| = {asym:.3e}"
            )
        tr = float(np.trace(m))
        if abs(tr - 1.0) > TRACE_TOLERANCE:
            raise ValidationError(
                f"density matrix trace must be 1 within {TRACE_TOLERANCE}, got {tr!r}"
            )
        m = m.copy()
        m.flags.writeable = False
        object.__setattr__(self, "entries", m)

    @property
    def dim(self) -> int:
        return int(self.entries.shape[0])


def _offdiag_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.sqrt((off * off).sum()))


def _rotate(a: np.ndarray, v: np.ndarray, k: int, l: int) -> None:
    """One Jacobi rotation zeroing a[k, l], accumulated into v."""
    akl = a[k, l]
    diff = a[l, l] - a[k, k]
    if abs(akl) < 1e-36 * abs(diff):
        t = akl / diff
    else:
        phi = diff / (2.0 * akl)
        t = 1.0 / (abs(phi) + math.sqrt(phi * phi + 1.0))
        if phi < 0.0:
            t = -t
    c = 1.0 / math.sqrt(t * t + 1.0)
    s = t * c
    tau = s / (1.0 + c)

    a[k, k] -= t * akl
    a[l, l] += t * akl
    a[k, l] = 0.0
    a[l, k] = 0.0

    mask = np.ones(a.shape[0], dtype=bool)
    mask[k] = mask[l] = False
    col_k = a[mask, k]
    col_l = a[mask, l]
    new_k = col_k - s * (col_l + tau * col_k)
    new_l = col_l + s * (col_k - tau * col_l)
    a[mask, k] = new_k
    a[k, mask] = new_k
    a[mask, l] = new_l
    a[l, mask] = new_l

    v_k = v[:, k].copy()
    v_l = v[:, l]
    v[:, k] = v_k - s * (v_l + tau * v_k)
    v[:, l] = v_l + s * (v_k - tau * v_l)


def jacobi_eigh(matrix) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a real symmetric matrix by cyclic Jacobi.

    Sweeps the upper triangle row by row, rotating away each off-diagonal
    element, until the off-diagonal Frobenius norm is <= 1e-12 or 100
    sweeps have run.  Returns (values, vectors) with values sorted
    descending and vectors[:, i] the unit eigenvector of values[i], so
    that matrix == vectors @ diag(values) @ vectors.T up to the tolerance.
    """
    a = np.array(matrix, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise ValidationError("need a non-empty square matrix")
    asym = float(np.max(np.abs(a - a.T)))
    if asym > SYMMETRY_TOLERANCE:
        raise ValidationError(
            f"matrix must be symmetric within {SYMMETRY_TOLERANCE}; "
            f"max |a_ij - a_ji| = {asym:.3e}"
        )
    d = a.shape[0]
    v = np.eye(d)
    if d == 1:
        return np.array([a[0, 0]]), v
    # Rotations on entries already far below the target cannot push the
    # off-diagonal norm above it: sqrt(2 * d^2) * tol/(2d) < tol.
    skip = JACOBI_TOLERANCE / (2.0 * d)
    for _ in range(JACOBI_MAX_SWEEPS):
        if _offdiag_norm(a) <= JACOBI_TOLERANCE:
            break
        for k in range(d - 1):
            for l in range(k + 1, d):
                if abs(a[k, l]) > skip:
                    _rotate(a, v, k, l)
    values = np.diag(a).copy()
    order = np.argsort(-values, kind="stable")
    return values[order], v[:, order]


def eigenvalues(m: DensityMatrix) -> Distribution:
    """Spectrum of a density matrix as a descending-sorted distribution.

    Eigenvalues in [-1e-9, 0) are clamped to 0 and the spectrum is
    renormalized to sum 1; anything below -1e-9 raises PSDViolationError.
    """
    values, _ = jacobi_eigh(m.entries)
    low = float(values.min())
    if low < -PSD_TOLERANCE:
        raise PSDViolationError(
            f"density matrix is not positive semidefinite: eigenvalue {low:.3e}"
        )
    clamped = np.clip(values, 0.0, 1.0)
    total = math.fsum(clamped)
    if total <= 0.0:
        raise PSDViolationError("density matrix spectrum sums to zero")
    return Distribution(clamped / total)


def von_neumann_entropy(m: DensityMatrix, cfg: LogConfig = DEFAULT_LOG) -> float:
    """Entropy of the spectrum, -sum_j eta_j log(eta_j); nats by default."""
    return entropy(eigenvalues(m), cfg)


def quantum_troenpy(m: DensityMatrix, cfg: LogConfig = DEFAULT_LOG) -> float:
    """Certainty of the spectrum, -sum_j eta_j log(max(1 - eta_j, clamp))."""
    return troenpy(eigenvalues(m), cfg)
