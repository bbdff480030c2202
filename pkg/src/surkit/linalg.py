"""Dense complex operator and state primitives shared by every other module.

Operators are plain square ``numpy.ndarray`` matrices (complex128), states are
unit-norm 1-D complex vectors. All functions are pure; nothing here mutates
its inputs, so values can be shared freely across threads.
"""

from __future__ import annotations

import numpy as np

# Structural identities are trusted to 1e-10, inequality margins to 1e-9,
# round-off clipping to 1e-12 (double precision at <= ~1e3 dimensions).
HERMITIAN_TOL = 1e-10
NORM_TOL = 1e-12
VARIANCE_CLIP = 1e-12


def as_operator(m) -> np.ndarray:
    """Validate and return ``m`` as a square complex matrix."""
    arr = np.asarray(m, dtype=complex)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"operator must be a square matrix, got shape {arr.shape}")
    return arr


def as_state(v) -> np.ndarray:
    """Validate and return ``v`` as a unit-norm complex vector."""
    arr = np.asarray(v, dtype=complex).reshape(-1)
    norm_sq = float(np.sum(np.abs(arr) ** 2))
    if abs(norm_sq - 1.0) > 1e2 * NORM_TOL:
        raise ValueError(f"state is not normalized: sum |psi_m|^2 = {norm_sq!r}")
    return arr


def normalized(v) -> np.ndarray:
    """Return ``v / ||v||`` as a complex vector."""
    arr = np.asarray(v, dtype=complex).reshape(-1)
    norm = float(np.linalg.norm(arr))
    if norm == 0.0:
        raise ValueError("cannot normalize the zero vector")
    return arr / norm


def hermiticity_defect(m) -> float:
    """Entrywise max |M - M^dagger|."""
    arr = as_operator(m)
    return float(np.max(np.abs(arr - arr.conj().T))) if arr.size else 0.0


def require_hermitian(m, tol: float = HERMITIAN_TOL) -> np.ndarray:
    arr = as_operator(m)
    defect = hermiticity_defect(arr)
    if defect > tol:
        raise ValueError(f"operator is not Hermitian: max |M - M^dagger| = {defect:.3e}")
    return arr


def commutator(a, b) -> np.ndarray:
    """Return ``ab - ba``."""
    a = as_operator(a)
    b = as_operator(b)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return a @ b - b @ a


def expectation(state, m) -> float:
    """Return ``<state| m |state>`` for Hermitian ``m``, as a real number."""
    psi = as_state(state)
    op = require_hermitian(m)
    if op.shape[0] != psi.shape[0]:
        raise ValueError(f"dimension mismatch: operator {op.shape[0]} vs state {psi.shape[0]}")
    value = complex(np.vdot(psi, op @ psi))
    if abs(value.imag) > HERMITIAN_TOL:
        raise ValueError(f"expectation has imaginary part {value.imag:.3e}")
    return value.real


def variance(state, m) -> float:
    """Return ``<m^2> - <m>^2``; tiny negative round-off is clipped to zero."""
    psi = as_state(state)
    op = require_hermitian(m)
    if op.shape[0] != psi.shape[0]:
        raise ValueError(f"dimension mismatch: operator {op.shape[0]} vs state {psi.shape[0]}")
    mpsi = op @ psi
    mean = complex(np.vdot(psi, mpsi))
    if abs(mean.imag) > HERMITIAN_TOL:
        raise ValueError(f"expectation has imaginary part {mean.imag:.3e}")
    # <m^2> = ||m psi||^2 for Hermitian m.
    second = float(np.vdot(mpsi, mpsi).real)
    var = second - mean.real**2
    if var < 0.0:
        if var < -VARIANCE_CLIP:
            raise ValueError(f"variance {var!r} is negative beyond round-off")
        var = 0.0
    return var


def kron(a, b) -> np.ndarray:
    """Kronecker product of two operators."""
    return np.kron(as_operator(a), as_operator(b))
