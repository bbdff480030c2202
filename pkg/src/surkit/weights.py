"""Weight-space bound engine for su(n): metric matrices, Weyl root, the
variance-sum lower bound 2<Lambda|delta>, and quadratic Casimir eigenvalues.

Everything here is exact rational arithmetic (fractions.Fraction); floats only
appear in casimir_matrix, which crosses over to the matrix representations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import algebras

DynkinLabel = tuple[int, ...]

RationalLike = int | Fraction


@dataclass(frozen=True)
class MetricMatrix:
    """Gram matrix of the su(n) fundamental weights, exact rationals."""

    n: int
    entries: tuple[tuple[Fraction, ...], ...]

    @property
    def rank(self) -> int:
        return self.n - 1


def metric(n: int) -> MetricMatrix:
    """G_ij = min(i,j) * (n - max(i,j)) / n for 1-based i, j."""
    if n < 2:
        raise ValueError(f"su(n) metric requires n >= 2, got {n}")
    rows = tuple(
        tuple(Fraction(min(i, j) * (n - max(i, j)), n) for j in range(1, n))
        for i in range(1, n)
    )
    return MetricMatrix(n=n, entries=rows)


def inner(mu: Sequence[RationalLike], tau: Sequence[RationalLike], g: MetricMatrix) -> Fraction:
    """Bilinear form <mu|tau> = mu . G . tau in the fundamental-weight basis."""
    if len(mu) != g.rank or len(tau) != g.rank:
        raise ValueError(
            f"label length mismatch: got {len(mu)} and {len(tau)}, metric rank {g.rank}"
        )
    total = Fraction(0)
    for i, mi in enumerate(mu):
        for j, tj in enumerate(tau):
            total += Fraction(mi) * g.entries[i][j] * Fraction(tj)
    return total


def weyl_root(n: int) -> DynkinLabel:
    """Half the sum of positive roots; all fundamental-weight coordinates are 1."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    return (1,) * (n - 1)


def _check_label(n: int, lam: Sequence[int]) -> tuple[int, ...]:
    lam = tuple(int(x) for x in lam)
    if len(lam) != n - 1:
        raise ValueError(f"su({n}) needs {n - 1} Dynkin labels, got {len(lam)}")
    if any(x < 0 for x in lam):
        raise ValueError(f"Dynkin labels must be non-negative, got {lam}")
    return lam


def fundamental(n: int) -> DynkinLabel:
    return (1,) + (0,) * (n - 2)


def sur_bound(n: int, lam: Sequence[int]) -> Fraction:
    """State-independent lower bound 2<Lambda|delta> on (1/2) sum of variances."""
    lam = _check_label(n, lam)
    return 2 * inner(lam, weyl_root(n), metric(n))


def casimir_eigenvalue(n: int, lam: Sequence[int]) -> Fraction:
    """Quadratic Casimir eigenvalue c2 = 2<Lambda|delta> + <Lambda|Lambda>."""
    lam = _check_label(n, lam)
    g = metric(n)
    return 2 * inner(lam, weyl_root(n), g) + inner(lam, lam, g)


def casimir_matrix(gs: algebras.GeneratorSet) -> np.ndarray:
    """Quadratic Casimir in the given representation.

    Compact kinds: (1/2) sum e_a^2, except su(2) which reports the halved
    convention J_x^2 + J_y^2 + J_z^2 (eigenvalue j(j+1)). su(1,1):
    K_z^2 - K_x^2 - K_y^2 (eigenvalue kappa(kappa-1), exact away from the
    cutoff level). wh: the Casimir is trivial, the identity.
    """
    kind = gs.spec.kind
    if kind == algebras.KIND_WH:
        return np.eye(gs.rep_dim, dtype=complex)
    if kind == algebras.KIND_SU11:
        kx, ky = gs.offdiag
        kz = gs.cartan[0]
        return kz @ kz - kx @ kx - ky @ ky
    if kind == algebras.KIND_SU2:
        return sum((g / 2) @ (g / 2) for g in gs.generators)
    return sum(g @ g for g in gs.generators) / 2
