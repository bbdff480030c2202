"""Collective-operator entanglement detection for N particles, each carrying
the su(n) fundamental representation.

Two independent criteria are evaluated:

* the Cartan-vs-rest inequality
  (N-1) sum_k (Delta e_k)^2 >= sum_m <e_m^2> - 2(n-1)N,
  whose violation by a state certifies entanglement, and
* the total-variance criterion (1/2) sum_a (Delta e_a)^2 >= N * b_fund,
  with b_fund the single-particle variance-sum bound, which separable states
  satisfy by additivity of variance over product states.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations

import numpy as np

from . import algebras, linalg, relations, weights

SIZE_CAP = 4096
MARGIN_TOL = 1e-9


@dataclass(frozen=True)
class CollectiveSet:
    """Kronecker-lifted sums e_a = sum_i 1 x ... x e_a x ... x 1."""

    n: int
    particles: int
    cartan: tuple[np.ndarray, ...]
    offdiag: tuple[np.ndarray, ...]

    @property
    def dim(self) -> int:
        return self.n**self.particles


@dataclass(frozen=True)
class WitnessReport:
    lhs: float
    rhs: float
    violated: bool
    total_variance: float
    total_variance_bound: float
    total_violated: bool


@dataclass(frozen=True)
class IdentityReport:
    """The three operator identities behind the witness derivation."""

    cartan_square: float      # sum over Cartan of e_k^2 = cartan_square * I
    offdiag_square: float     # sum over the rest of e_m^2 = offdiag_square * I
    bloch_norm: float         # sum_a <e_a>^2 on pure states
    cartan_square_dev: float
    offdiag_square_dev: float
    bloch_norm_dev: float


def _lift(op: np.ndarray, site: int, particles: int, n: int) -> np.ndarray:
    left = np.eye(n**site, dtype=complex)
    right = np.eye(n ** (particles - site - 1), dtype=complex)
    return np.kron(np.kron(left, op), right)


def collective_operators(
    n: int, particles: int, single: algebras.GeneratorSet | None = None
) -> CollectiveSet:
    """Collective generators for ``particles`` copies of the su(n) fundamental.

    ``single`` overrides the single-particle basis (e.g. a unitarily
    conjugated one); it must act on n dimensions.
    """
    if particles < 2:
        raise ValueError(f"need at least 2 particles, got {particles}")
    if n**particles > SIZE_CAP:
        raise ValueError(f"n^N = {n**particles} exceeds the size cap {SIZE_CAP}")
    if single is None:
        single = algebras.build_gellmann(n)
    if single.rep_dim != n:
        raise ValueError(f"single-particle basis acts on {single.rep_dim}, expected {n}")

    def lift_sum(op: np.ndarray) -> np.ndarray:
        return sum(_lift(op, i, particles, n) for i in range(particles))

    return CollectiveSet(
        n=n,
        particles=particles,
        cartan=tuple(lift_sum(op) for op in single.cartan),
        offdiag=tuple(lift_sum(op) for op in single.offdiag),
    )


def _moments(op: np.ndarray, state: np.ndarray | None, rho: np.ndarray | None):
    """(<op>, <op^2>) for a pure state or a density matrix."""
    if state is not None:
        opsi = op @ state
        return float(np.vdot(state, opsi).real), float(np.vdot(opsi, opsi).real)
    mean = float(np.trace(rho @ op).real)
    second = float(np.trace(rho @ op @ op).real)
    return mean, second


def _evaluate(ops: CollectiveSet, state=None, rho=None) -> WitnessReport:
    n, particles = ops.n, ops.particles
    cartan_variance = 0.0
    total_variance = 0.0
    offdiag_second = 0.0
    for op in ops.cartan:
        mean, second = _moments(op, state, rho)
        var = second - mean**2
        cartan_variance += var
        total_variance += var
    for op in ops.offdiag:
        mean, second = _moments(op, state, rho)
        offdiag_second += second
        total_variance += second - mean**2

    lhs = (particles - 1) * cartan_variance
    rhs = offdiag_second - 2 * (n - 1) * particles
    total = total_variance / 2
    total_bound = particles * float(weights.sur_bound(n, weights.fundamental(n)))
    return WitnessReport(
        lhs=lhs,
        rhs=rhs,
        violated=lhs < rhs - MARGIN_TOL,
        total_variance=total,
        total_variance_bound=total_bound,
        total_violated=total < total_bound - MARGIN_TOL,
    )


def witness(state, n: int, particles: int, ops: CollectiveSet | None = None) -> WitnessReport:
    """Evaluate both separability criteria on a pure N-particle state."""
    if ops is None:
        ops = collective_operators(n, particles)
    psi = linalg.as_state(state)
    if psi.shape[0] != ops.dim:
        raise ValueError(f"state dimension {psi.shape[0]} != n^N = {ops.dim}")
    return _evaluate(ops, state=psi)


def witness_density(rho, n: int, particles: int, ops: CollectiveSet | None = None) -> WitnessReport:
    """Evaluate both criteria on a density matrix (used for mixture checks)."""
    if ops is None:
        ops = collective_operators(n, particles)
    rho = linalg.require_hermitian(rho)
    if rho.shape[0] != ops.dim:
        raise ValueError(f"density dimension {rho.shape[0]} != n^N = {ops.dim}")
    return _evaluate(ops, rho=rho)


def slater_state(n: int) -> np.ndarray:
    """Normalized antisymmetrization of |e_1> x ... x |e_n> (the scalar irrep
    of the n-fold coupling; every collective generator annihilates it)."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if n**n > SIZE_CAP:
        raise ValueError(f"n^n = {n**n} exceeds the size cap {SIZE_CAP}")
    dim = n**n
    state = np.zeros(dim, dtype=complex)
    for perm in permutations(range(n)):
        index = 0
        for site in range(n):
            index = index * n + perm[site]
        state[index] = _parity(perm)
    return state / math.sqrt(math.factorial(n))


def _parity(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def random_product_state(n: int, particles: int, seed) -> np.ndarray:
    """Kronecker product of independent single-particle Haar states."""
    children = np.random.SeedSequence(seed).spawn(particles)
    state = np.ones(1, dtype=complex)
    for site in range(particles):
        state = np.kron(state, relations.haar_random_state(n, children[site]))
    return state


def identity_checks(n: int, trials: int = 200, seed: int = 0) -> IdentityReport:
    """Verify the three single-particle identities the witness derivation uses."""
    gs = algebras.build_gellmann(n)
    eye = np.eye(n)

    cartan_sq = sum(op @ op for op in gs.cartan)
    cartan_value = 2 * (n - 1) / n
    cartan_dev = float(np.max(np.abs(cartan_sq - cartan_value * eye)))

    offdiag_sq = sum(op @ op for op in gs.offdiag)
    offdiag_value = 2 * (n * n - 1) / n - 2 * (n - 1) / n
    offdiag_dev = float(np.max(np.abs(offdiag_sq - offdiag_value * eye)))

    bloch_value = 2 * (n - 1) / n
    bloch_dev = 0.0
    states = relations.haar_random_states(n, trials, seed)
    for psi in states:
        total = sum(linalg.expectation(psi, op) ** 2 for op in gs.generators)
        bloch_dev = max(bloch_dev, abs(total - bloch_value))

    return IdentityReport(
        cartan_square=cartan_value,
        offdiag_square=offdiag_value,
        bloch_norm=bloch_value,
        cartan_square_dev=cartan_dev,
        offdiag_square_dev=offdiag_dev,
        bloch_norm_dev=bloch_dev,
    )


def mixed_state_convexity_check(n: int, particles: int, trials: int, seed: int) -> bool:
    """Random separable mixtures: variance convexity holds for the first
    collective Cartan element and neither criterion flags the mixture."""
    ops = collective_operators(n, particles)
    probe = ops.cartan[0]
    for trial in range(trials):
        rng = np.random.default_rng([seed, trial])
        components = int(rng.integers(1, 5))
        probs = rng.dirichlet(np.ones(components))
        rho = np.zeros((ops.dim, ops.dim), dtype=complex)
        pure_variances = []
        for c in range(components):
            psi = random_product_state(n, particles, [seed, trial, c])
            rho += probs[c] * np.outer(psi, psi.conj())
            pure_variances.append(linalg.variance(psi, probe))
        mean, second = _moments(probe, None, rho)
        mixture_variance = second - mean**2
        if mixture_variance < float(np.dot(probs, pure_variances)) - MARGIN_TOL:
            return False
        report = witness_density(rho, n, particles, ops=ops)
        if report.violated or report.total_violated:
            return False
    return True
