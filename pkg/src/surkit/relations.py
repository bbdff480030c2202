"""Uncertainty-relation checks: signature-weighted variance sums, the
state-independent bounds per algebra, the stronger su(1,1) inequality,
Robertson's state-dependent product for contrast, and Born-rule sampling.

Truncated algebras (wh, su(1,1)) carry a tail-mass guard: states putting more
than TAIL_MASS_LIMIT probability in the top decile of levels are rejected,
because ladder commutators are wrong at the truncation boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import algebras, linalg, weights

MARGIN_TOL = 1e-9
TAIL_MASS_LIMIT = 1e-8
EIGH_RESIDUAL_TOL = 1e-8


class TruncationError(ValueError):
    """State has non-negligible weight where the truncated ladder is unfaithful."""


@dataclass(frozen=True)
class SurReport:
    """Outcome of one bound check: lhs vs bound with provenance."""

    algebra: str
    rep_dim: int
    lhs: float
    bound: float
    bound_exact: str
    margin: float
    satisfied: bool
    tail_mass: float | None = None
    seed: int | None = None


@dataclass(frozen=True)
class SampleResult:
    """Monte Carlo variance estimate from Born-rule sampling."""

    samples: np.ndarray
    estimate: float
    stderr: float
    exact: float


def _is_truncated(gs: algebras.GeneratorSet) -> bool:
    return gs.spec.kind in (algebras.KIND_WH, algebras.KIND_SU11)


def tail_mass(state, dim: int | None = None) -> float:
    """Probability mass in the top decile of levels (at least one level)."""
    psi = np.asarray(state).reshape(-1)
    dim = psi.shape[0] if dim is None else dim
    tail = max(1, dim // 10)
    return float(np.sum(np.abs(psi[dim - tail:]) ** 2))


def check_tail(state, gs: algebras.GeneratorSet) -> float:
    mass = tail_mass(state, gs.rep_dim)
    if mass >= TAIL_MASS_LIMIT:
        raise TruncationError(
            f"tail mass {mass:.3e} >= {TAIL_MASS_LIMIT:.0e} in the top decile of "
            f"{gs.spec.label}; the truncated ladder is unfaithful there"
        )
    return mass


def convention_weights(gs: algebras.GeneratorSet) -> tuple[float, ...]:
    """Per-generator coefficients of the reported variance sum.

    wh: Dx^2 + Dp^2; su(2): sum DJ^2 (halving the stored doubled generators);
    su(1,1): DKx^2 + DKy^2 - DKz^2; su(n): (1/2) sum De^2.
    """
    kind = gs.spec.kind
    if kind == algebras.KIND_SU2:
        scale = 0.25
    elif kind == algebras.KIND_SUN:
        scale = 0.5
    else:
        scale = 1.0
    return tuple(scale * s for s in gs.signature)


def sur_bound_exact(gs: algebras.GeneratorSet) -> Fraction:
    """The algebra's state-independent lower bound, as an exact rational."""
    kind = gs.spec.kind
    if kind == algebras.KIND_WH:
        return Fraction(1)
    if kind == algebras.KIND_SU2:
        return Fraction(gs.spec.two_j, 2)
    if kind == algebras.KIND_SU11:
        return gs.spec.kappa
    return weights.sur_bound(gs.spec.n, weights.fundamental(gs.spec.n))


def variance_sum(state, gs: algebras.GeneratorSet) -> float:
    """Signature-weighted variance sum in the algebra's reporting convention."""
    psi = linalg.as_state(state)
    if psi.shape[0] != gs.rep_dim:
        raise ValueError(f"dimension mismatch: state {psi.shape[0]} vs rep {gs.rep_dim}")
    if _is_truncated(gs):
        check_tail(psi, gs)
    total = 0.0
    for w, g in zip(convention_weights(gs), gs.generators):
        total += w * linalg.variance(psi, g)
    return total


def variance_sum_batch(states: np.ndarray, gs: algebras.GeneratorSet) -> np.ndarray:
    """Variance sums for many states at once (rows of ``states``).

    Same quantity as variance_sum; used by sweeps, where per-state calls would
    dominate the runtime. Tail-guard enforcement is the caller's business.
    """
    psi = np.asarray(states, dtype=complex)
    cols = psi.T  # dim x count
    total = np.zeros(psi.shape[0])
    for w, g in zip(convention_weights(gs), gs.generators):
        gcols = g @ cols
        means = np.einsum("ij,ij->j", cols.conj(), gcols).real
        seconds = np.einsum("ij,ij->j", gcols.conj(), gcols).real
        total += w * (seconds - means**2)
    return total


def check_sur(state, gs: algebras.GeneratorSet, seed: int | None = None) -> SurReport:
    """Compare the variance sum against the algebra's bound."""
    psi = linalg.as_state(state)
    mass = tail_mass(psi, gs.rep_dim) if _is_truncated(gs) else None
    lhs = variance_sum(psi, gs)
    bound = sur_bound_exact(gs)
    margin = lhs - float(bound)
    return SurReport(
        algebra=gs.spec.label,
        rep_dim=gs.rep_dim,
        lhs=lhs,
        bound=float(bound),
        bound_exact=str(bound),
        margin=margin,
        satisfied=margin >= -MARGIN_TOL,
        tail_mass=mass,
        seed=seed,
    )


def check_su11_strong(state, gs: algebras.GeneratorSet, seed: int | None = None) -> SurReport:
    """The stronger su(1,1) inequality <Kz>^2 - <Kx>^2 - <Ky>^2 >= kappa^2."""
    if gs.spec.kind != algebras.KIND_SU11:
        raise ValueError(f"strong check applies to su(1,1) only, got {gs.spec.label}")
    psi = linalg.as_state(state)
    mass = check_tail(psi, gs)
    kx, ky = gs.offdiag
    kz = gs.cartan[0]
    lhs = (
        linalg.expectation(psi, kz) ** 2
        - linalg.expectation(psi, kx) ** 2
        - linalg.expectation(psi, ky) ** 2
    )
    bound = gs.spec.kappa**2
    margin = lhs - float(bound)
    return SurReport(
        algebra=gs.spec.label,
        rep_dim=gs.rep_dim,
        lhs=lhs,
        bound=float(bound),
        bound_exact=str(bound),
        margin=margin,
        satisfied=margin >= -MARGIN_TOL,
        tail_mass=mass,
        seed=seed,
    )


def robertson_product(state, a, b) -> tuple[float, float]:
    """(DA^2 * DB^2, |<[A,B]>|^2 / 4) -- the state-dependent product bound."""
    psi = linalg.as_state(state)
    a = linalg.require_hermitian(a)
    b = linalg.require_hermitian(b)
    product = linalg.variance(psi, a) * linalg.variance(psi, b)
    comm_mean = complex(np.vdot(psi, linalg.commutator(a, b) @ psi))
    return product, abs(comm_mean) ** 2 / 4


def saturating_state(gs: algebras.GeneratorSet) -> np.ndarray:
    """The weight-basis state that attains the bound (margin 0)."""
    return algebras.weight_basis_state(gs, algebras.saturating_index(gs))


def haar_random_state(dim: int, seed) -> np.ndarray:
    """Normalized vector of i.i.d. standard complex Gaussians; deterministic per seed."""
    return haar_random_states(dim, 1, seed)[0]


def haar_random_states(dim: int, count: int, seed, active: int | None = None) -> np.ndarray:
    """``count`` Haar-random states as rows; amplitudes beyond ``active`` are zero."""
    if dim < 1:
        raise ValueError(f"dim must be >= 1, got {dim}")
    active = dim if active is None else active
    if not 1 <= active <= dim:
        raise ValueError(f"active levels must be in 1..{dim}, got {active}")
    rng = np.random.default_rng(seed)
    z = rng.standard_normal((count, active)) + 1j * rng.standard_normal((count, active))
    z /= np.linalg.norm(z, axis=1, keepdims=True)
    if active == dim:
        return z
    out = np.zeros((count, dim), dtype=complex)
    out[:, :active] = z
    return out


def random_states_for(gs: algebras.GeneratorSet, count: int, seed) -> np.ndarray:
    """Random states appropriate for the algebra: full-space Haar for compact
    kinds, bottom-half Haar (tail-safe by construction) for truncated ones."""
    active = gs.rep_dim // 2 if _is_truncated(gs) else gs.rep_dim
    return haar_random_states(gs.rep_dim, count, seed, active=active)


def sample_observable(state, m, shots: int, seed: int) -> SampleResult:
    """Sample eigenvalues of ``m`` with Born probabilities and estimate the variance.

    The standard error uses the finite-sample variance of the sample variance,
    Var(s^2) = (m4 - s^4 (shots-3)/(shots-1)) / shots.
    """
    psi = linalg.as_state(state)
    op = linalg.require_hermitian(m)
    if op.shape[0] != psi.shape[0]:
        raise ValueError(f"dimension mismatch: operator {op.shape[0]} vs state {psi.shape[0]}")
    if shots < 2:
        raise ValueError(f"need at least 2 shots, got {shots}")
    evals, evecs = np.linalg.eigh(op)
    residual = float(np.max(np.abs(op @ evecs - evecs * evals)))
    if residual > EIGH_RESIDUAL_TOL:
        raise ValueError(f"eigendecomposition residual {residual:.3e} too large")
    probs = np.abs(evecs.conj().T @ psi) ** 2
    probs = np.clip(probs, 0.0, None)
    probs /= probs.sum()
    rng = np.random.default_rng(seed)
    samples = evals[rng.choice(evals.shape[0], size=shots, p=probs)]
    estimate = float(np.var(samples, ddof=1))
    centered = samples - samples.mean()
    m4 = float(np.mean(centered**4))
    var_of_var = (m4 - estimate**2 * (shots - 3) / (shots - 1)) / shots
    stderr = float(np.sqrt(max(var_of_var, 0.0)))
    return SampleResult(
        samples=samples,
        estimate=estimate,
        stderr=stderr,
        exact=linalg.variance(psi, op),
    )
