"""Tightness certification: projected gradient descent of the variance sum
over the unit sphere of the representation space.

The objective f(psi) = sum_k w_k (<G_k^2> - <G_k>^2) is smooth (quartic over
the sphere); its Euclidean gradient is 2*A*psi - 4*sum_k w_k <G_k> G_k psi
with A = sum_k w_k G_k^2, projected to the sphere tangent space each step.

For truncated algebras the search is confined to the zero-top-decile
subspace (states and gradients alike): inside it the truncated objective
coincides exactly with the untruncated one, whereas iterates merely kept
below the tail-mass threshold can harvest O(cutoff^2 * mass) of spurious
descent from the boundary defect, more than the certification tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import algebras, linalg, relations

INITIAL_STEP = 0.1
BACKTRACK = 0.5
MIN_STEP = 1e-12
WEIGHT_PERTURBATION = 0.01


@dataclass(frozen=True)
class MinimizeResult:
    best_value: float
    best_state: np.ndarray
    bound: float
    gap: float
    restarts_used: int
    iterations: int
    converged: bool
    objective_trace: tuple[float, ...]


class _Objective:
    """Variance sum and its gradient, with matrices prepared once."""

    def __init__(self, gs: algebras.GeneratorSet):
        self.gs = gs
        self.weighted = tuple(zip(relations.convention_weights(gs), gs.generators))
        self.quad = sum(w * (g @ g) for w, g in self.weighted)
        self.truncated = gs.spec.kind in (algebras.KIND_WH, algebras.KIND_SU11)
        dim = gs.rep_dim
        self.tail_start = dim - max(1, dim // 10)

    def value(self, psi: np.ndarray) -> float:
        psi = psi / np.linalg.norm(psi)
        total = float(np.vdot(psi, self.quad @ psi).real)
        for w, g in self.weighted:
            total -= w * float(np.vdot(psi, g @ psi).real) ** 2
        return total

    def value_and_tangent_grad(self, psi: np.ndarray) -> tuple[float, np.ndarray]:
        value = float(np.vdot(psi, self.quad @ psi).real)
        grad = 2.0 * (self.quad @ psi)
        for w, g in self.weighted:
            gpsi = g @ psi
            mean = float(np.vdot(psi, gpsi).real)
            value -= w * mean**2
            grad -= (4.0 * w * mean) * gpsi
        if self.truncated:
            grad[self.tail_start:] = 0.0
        grad -= float(np.vdot(psi, grad).real) * psi
        return value, grad

    def enforce_guard(self, psi: np.ndarray) -> np.ndarray:
        if not self.truncated:
            return psi
        if not np.any(psi[self.tail_start:]):
            return psi
        projected = psi.copy()
        projected[self.tail_start:] = 0.0
        return projected / np.linalg.norm(projected)


def _initial_state(gs: algebras.GeneratorSet, restart: int, seed: int) -> np.ndarray:
    """Alternate Haar-random starts with perturbed weight-basis starts."""
    rng = np.random.default_rng([seed, restart])
    dim = gs.rep_dim
    truncated = gs.spec.kind in (algebras.KIND_WH, algebras.KIND_SU11)
    active = dim // 2 if truncated else dim
    noise = rng.standard_normal(active) + 1j * rng.standard_normal(active)
    psi = np.zeros(dim, dtype=complex)
    if restart % 2 == 0:
        psi[:active] = noise
    else:
        basis = (restart // 2) % active
        psi[basis] = 1.0
        psi[:active] += WEIGHT_PERTURBATION * noise
    return psi / np.linalg.norm(psi)


def minimize_variance_sum(
    gs: algebras.GeneratorSet,
    restarts: int = 16,
    max_iters: int = 1000,
    tol: float = 1e-6,
    seed: int = 0,
) -> MinimizeResult:
    """Minimize the variance sum over pure states; report the gap to the bound.

    Deterministic for fixed (seed, restarts): restart r uses the derived rng
    stream (seed, r), ties break toward the lowest restart index.
    """
    if restarts < 1:
        raise ValueError(f"restarts must be >= 1, got {restarts}")
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol}")
    objective = _Objective(gs)
    bound = float(relations.sur_bound_exact(gs))

    best_value = np.inf
    best_state = None
    best_trace: tuple[float, ...] = ()
    best_converged = False
    total_iterations = 0

    for restart in range(restarts):
        psi = objective.enforce_guard(_initial_state(gs, restart, seed))
        value, grad = objective.value_and_tangent_grad(psi)
        trace = [value]
        converged = False
        for _ in range(max_iters):
            grad_norm = float(np.linalg.norm(grad))
            if grad_norm < tol:
                converged = True
                break
            step = INITIAL_STEP
            moved = False
            while step >= MIN_STEP:
                candidate = psi - step * grad
                candidate /= np.linalg.norm(candidate)
                candidate = objective.enforce_guard(candidate)
                cand_value, cand_grad = objective.value_and_tangent_grad(candidate)
                if cand_value < value:
                    psi, value, grad = candidate, cand_value, cand_grad
                    trace.append(value)
                    total_iterations += 1
                    moved = True
                    break
                step *= BACKTRACK
            if not moved:
                # flat to line-search resolution; give up on this restart
                break
        if value < best_value:
            best_value = value
            best_state = psi
            best_trace = tuple(trace)
            best_converged = converged

    return MinimizeResult(
        best_value=float(best_value),
        best_state=best_state,
        bound=bound,
        gap=float(best_value) - bound,
        restarts_used=restarts,
        iterations=total_iterations,
        converged=best_converged,
        objective_trace=best_trace,
    )


def gradient_check(gs: algebras.GeneratorSet, state, h: float = 1e-5) -> float:
    """Max scaled deviation between central finite differences of the
    normalized objective and the analytic tangent gradient, over the 2*dim
    real coordinate directions (real and imaginary part of each amplitude).

    For truncated algebras the directions span the feasible (zero-top-decile)
    subspace the optimizer works in, and the state must be tail-safe.
    """
    if not 1e-7 <= h <= 1e-3:
        raise ValueError(f"step h must lie in [1e-7, 1e-3], got {h}")
    psi = linalg.as_state(state)
    objective = _Objective(gs)
    if objective.truncated:
        relations.check_tail(psi, gs)
    _, grad = objective.value_and_tangent_grad(psi)
    scale = max(1.0, float(np.max(np.abs(grad))))
    dim = psi.shape[0]
    active = objective.tail_start if objective.truncated else dim
    worst = 0.0
    for i in range(active):
        for direction in (1.0, 1.0j):
            delta = np.zeros(dim, dtype=complex)
            delta[i] = direction
            fd = (objective.value(psi + h * delta) - objective.value(psi - h * delta)) / (2 * h)
            analytic = float(np.real(np.vdot(delta, grad)))
            worst = max(worst, abs(fd - analytic) / scale)
    return worst
