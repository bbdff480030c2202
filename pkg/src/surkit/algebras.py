"""Matrix representations: truncated Weyl-Heisenberg ladder, su(2) spin-j,
su(1,1) positive discrete series (truncated), and generalized Gell-Mann bases
for su(n).

Generator ordering contract for su(n): symmetric off-diagonal pairs, then
antisymmetric off-diagonal pairs, then the n-1 diagonal Cartan matrices;
within each block lexicographic by the (row, column) of the upper-triangular
position. su(2) stores the doubled generators 2*J_a so the defining irrep
carries the same trace normalization Tr(e_a e_b) = 2 delta_ab as su(n).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

MIN_CUTOFF = 8

KIND_WH = "wh"
KIND_SU2 = "su2"
KIND_SU11 = "su11"
KIND_SUN = "sun"


def _valid_kappa(kappa: Fraction) -> bool:
    # positive discrete series labels 1/2, 1, 3/2, ... plus the limit labels 1/4, 3/4
    if kappa <= 0:
        return False
    if kappa.denominator in (1, 2):
        return True
    return kappa in (Fraction(1, 4), Fraction(3, 4))


@dataclass(frozen=True)
class AlgebraSpec:
    """Which algebra and which irrep / truncation to build.

    ``irrep`` is an optional Dynkin label for su(n); it only parametrizes
    bound/table queries (matrices are built for the fundamental only).
    """

    kind: str
    cutoff: int | None = None      # wh, su11
    two_j: int | None = None       # su2
    kappa: Fraction | None = None  # su11
    n: int | None = None           # sun
    irrep: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind == KIND_WH:
            if self.cutoff is None or self.cutoff < MIN_CUTOFF:
                raise ValueError(f"wh cutoff must be >= {MIN_CUTOFF}, got {self.cutoff}")
        elif self.kind == KIND_SU2:
            if self.two_j is None or self.two_j < 0:
                raise ValueError(f"su2 requires two_j >= 0, got {self.two_j}")
        elif self.kind == KIND_SU11:
            if self.kappa is None or not _valid_kappa(Fraction(self.kappa)):
                raise ValueError(
                    f"su11 label must be in {{1/4, 3/4}} or {{1/2, 1, 3/2, ...}}, got {self.kappa}"
                )
            if self.cutoff is None or self.cutoff < MIN_CUTOFF:
                raise ValueError(f"su11 cutoff must be >= {MIN_CUTOFF}, got {self.cutoff}")
            object.__setattr__(self, "kappa", Fraction(self.kappa))
        elif self.kind == KIND_SUN:
            if self.n is None or self.n < 2:
                raise ValueError(f"su(n) requires n >= 2, got {self.n}")
            if self.irrep is not None:
                if len(self.irrep) != self.n - 1 or any(x < 0 for x in self.irrep):
                    raise ValueError(
                        f"su({self.n}) irrep needs {self.n - 1} non-negative labels, got {self.irrep}"
                    )
                object.__setattr__(self, "irrep", tuple(int(x) for x in self.irrep))
        else:
            raise ValueError(f"unknown algebra kind {self.kind!r}")

    @property
    def rep_dim(self) -> int:
        if self.kind == KIND_WH or self.kind == KIND_SU11:
            return self.cutoff
        if self.kind == KIND_SU2:
            return self.two_j + 1
        return self.n

    @property
    def label(self) -> str:
        """Canonical grammar string; round-trips through parse_algebra."""
        if self.kind == KIND_WH:
            return f"wh:cutoff={self.cutoff}"
        if self.kind == KIND_SU2:
            j = Fraction(self.two_j, 2)
            return f"su2:j={j}"
        if self.kind == KIND_SU11:
            return f"su11:kappa={self.kappa},cutoff={self.cutoff}"
        if self.irrep is not None:
            return f"su:{self.n}:irrep=" + ",".join(str(x) for x in self.irrep)
        return f"su:{self.n}"


def parse_algebra(text: str) -> AlgebraSpec:
    """Parse ``wh[:cutoff=K]``, ``su2:j=<half-integer>``,
    ``su11:kappa=<p/q>,cutoff=K`` or ``su:<n>[:irrep=a,b,...]``."""
    head, _, rest = text.strip().partition(":")
    head = head.lower()

    if head == "su":
        sub, _, more = rest.partition(":")
        if not sub:
            raise ValueError("su:<n> requires n")
        irrep = None
        if more:
            key, eq, value = more.partition("=")
            if key.strip() != "irrep" or not eq:
                raise ValueError(f"malformed su(n) parameter {more!r} in {text!r}")
            irrep = tuple(int(x) for x in value.split(","))
        return AlgebraSpec(kind=KIND_SUN, n=int(sub), irrep=irrep)

    params: dict[str, str] = {}
    for item in rest.split(","):
        if not item:
            continue
        key, eq, value = item.partition("=")
        if not eq:
            raise ValueError(f"malformed algebra parameter {item!r} in {text!r}")
        params[key.strip()] = value.strip()

    if head == "wh":
        return AlgebraSpec(kind=KIND_WH, cutoff=int(params.get("cutoff", 64)))
    if head == "su2":
        j = Fraction(params.get("j", "1/2"))
        two_j = 2 * j
        if two_j.denominator != 1:
            raise ValueError(f"su2 j must be a half-integer, got {j}")
        return AlgebraSpec(kind=KIND_SU2, two_j=int(two_j))
    if head == "su11":
        return AlgebraSpec(
            kind=KIND_SU11,
            kappa=Fraction(params.get("kappa", "1/2")),
            cutoff=int(params.get("cutoff", 64)),
        )
    raise ValueError(f"unknown algebra {text!r}")


@dataclass(frozen=True)
class GeneratorSet:
    """Ordered algebra basis split into Cartan (diagonal) and off-diagonal parts.

    ``signature`` is aligned with ``generators`` = offdiag + cartan; it is all
    +1 except su(1,1), whose K_z enters the variance sum with weight -1.
    """

    spec: AlgebraSpec
    cartan: tuple[np.ndarray, ...]
    offdiag: tuple[np.ndarray, ...]
    signature: tuple[int, ...]
    rep_dim: int

    @property
    def generators(self) -> tuple[np.ndarray, ...]:
        return self.offdiag + self.cartan

    def __post_init__(self):
        if len(self.signature) != len(self.generators):
            raise ValueError("signature length must match the generator count")


def fock_ladder(cutoff: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Truncated (a, a_dagger, number) matrices with a_dagger|m> = sqrt(m+1)|m+1>."""
    if cutoff < MIN_CUTOFF:
        raise ValueError(f"cutoff must be >= {MIN_CUTOFF}, got {cutoff}")
    a = np.zeros((cutoff, cutoff), dtype=complex)
    for m in range(cutoff - 1):
        a[m, m + 1] = math.sqrt(m + 1)
    adag = a.conj().T
    return a, adag, adag @ a


def build_wh(cutoff: int) -> GeneratorSet:
    """Quadratures x = (a + a^dag)/sqrt(2), p = (a - a^dag)/(i sqrt(2))."""
    a, adag, _ = fock_ladder(cutoff)
    x = (a + adag) / math.sqrt(2)
    p = (a - adag) / (1j * math.sqrt(2))
    spec = AlgebraSpec(kind=KIND_WH, cutoff=cutoff)
    return GeneratorSet(spec=spec, cartan=(), offdiag=(x, p), signature=(1, 1), rep_dim=cutoff)


def su2_ladder(two_j: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(J_plus, J_minus, J_z) on the (2j+1)-dimensional irrep,
    J_plus|m> = sqrt((m+1)(2j-m))|m+1>, J_z|m> = (m-j)|m>."""
    if two_j < 0:
        raise ValueError(f"two_j must be >= 0, got {two_j}")
    dim = two_j + 1
    jp = np.zeros((dim, dim), dtype=complex)
    for m in range(two_j):
        jp[m + 1, m] = math.sqrt((m + 1) * (two_j - m))
    jz = np.diag([m - two_j / 2 for m in range(dim)]).astype(complex)
    return jp, jp.conj().T, jz


def build_su2(two_j: int) -> GeneratorSet:
    """Spin-j generators, stored doubled (2J_x, 2J_y, 2J_z) for trace-2 normalization."""
    jp, jm, jz = su2_ladder(two_j)
    jx = (jp + jm) / 2
    jy = (jp - jm) / 2j
    spec = AlgebraSpec(kind=KIND_SU2, two_j=two_j)
    return GeneratorSet(
        spec=spec,
        cartan=(2 * jz,),
        offdiag=(2 * jx, 2 * jy),
        signature=(1, 1, 1),
        rep_dim=two_j + 1,
    )


def su11_ladder(kappa, cutoff: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(K_plus, K_minus, K_z) truncated, K_plus|m> = sqrt((m+1)(2 kappa + m))|m+1>,
    K_z|m> = (m + kappa)|m>."""
    kappa = Fraction(kappa)
    if not _valid_kappa(kappa):
        raise ValueError(f"invalid discrete-series label {kappa}")
    if cutoff < MIN_CUTOFF:
        raise ValueError(f"cutoff must be >= {MIN_CUTOFF}, got {cutoff}")
    kf = float(kappa)
    kp = np.zeros((cutoff, cutoff), dtype=complex)
    for m in range(cutoff - 1):
        kp[m + 1, m] = math.sqrt((m + 1) * (2 * kf + m))
    kz = np.diag([m + kf for m in range(cutoff)]).astype(complex)
    return kp, kp.conj().T, kz


def build_su11(kappa, cutoff: int) -> GeneratorSet:
    """Positive-discrete-series (K_x, K_y, K_z) with signature (+1, +1, -1)."""
    kp, km, kz = su11_ladder(kappa, cutoff)
    kx = (kp + km) / 2
    ky = (kp - km) / 2j
    spec = AlgebraSpec(kind=KIND_SU11, kappa=Fraction(kappa), cutoff=cutoff)
    return GeneratorSet(
        spec=spec,
        cartan=(kz,),
        offdiag=(kx, ky),
        signature=(1, 1, -1),
        rep_dim=cutoff,
    )


def offdiag_pairs(n: int) -> list[tuple[int, int]]:
    """Upper-triangle positions in lexicographic (row, column) order."""
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def cartan_diag_exact(n: int, k: int) -> list[tuple[int, Fraction]]:
    """Exact diagonal of the k-th Cartan generator (1 <= k <= n-1).

    Each entry is (sign, q) meaning sign * sqrt(q): the first k entries are
    sqrt(2/(k(k+1))), entry k is -sqrt(2k/(k+1)), the rest vanish.
    """
    if not 1 <= k <= n - 1:
        raise ValueError(f"Cartan index k must be in 1..{n - 1}, got {k}")
    head = Fraction(2, k * (k + 1))
    entries: list[tuple[int, Fraction]] = [(1, head)] * k
    entries.append((-1, Fraction(2 * k, k + 1)))
    entries.extend([(0, Fraction(0))] * (n - k - 1))
    return entries


def radical_value(entry: tuple[int, Fraction]) -> float:
    sign, q = entry
    return sign * math.sqrt(float(q))


def build_gellmann(n: int) -> GeneratorSet:
    """Generalized Gell-Mann basis of su(n), normalized to Tr(e_a e_b) = 2 delta_ab."""
    if n < 2:
        raise ValueError(f"su(n) requires n >= 2, got {n}")
    pairs = offdiag_pairs(n)
    sym = []
    for i, j in pairs:
        m = np.zeros((n, n), dtype=complex)
        m[i, j] = 1
        m[j, i] = 1
        sym.append(m)
    antisym = []
    for i, j in pairs:
        m = np.zeros((n, n), dtype=complex)
        m[i, j] = -1j
        m[j, i] = 1j
        antisym.append(m)
    cartan = []
    for k in range(1, n):
        diag = [radical_value(e) for e in cartan_diag_exact(n, k)]
        cartan.append(np.diag(diag).astype(complex))
    spec = AlgebraSpec(kind=KIND_SUN, n=n)
    count = n * n - 1
    return GeneratorSet(
        spec=spec,
        cartan=tuple(cartan),
        offdiag=tuple(sym + antisym),
        signature=(1,) * count,
        rep_dim=n,
    )


def build(spec: AlgebraSpec) -> GeneratorSet:
    """Construct the GeneratorSet described by an AlgebraSpec."""
    if spec.kind == KIND_WH:
        return build_wh(spec.cutoff)
    if spec.kind == KIND_SU2:
        return build_su2(spec.two_j)
    if spec.kind == KIND_SU11:
        return build_su11(spec.kappa, spec.cutoff)
    return build_gellmann(spec.n)


def weight_basis_state(gs: GeneratorSet, m: int) -> np.ndarray:
    """The m-th weight (computational) basis vector.

    Index 0 is the lowest-weight state for wh/su(1,1) and the highest-weight
    state for the su(n) fundamental (the diagonal conventions
    put the largest Cartan eigenvalues, (1, 1/sqrt(3), ...), on coordinate 0).
    For su(2) the J_z eigenvalue of index m is m - j.
    """
    if not 0 <= m < gs.rep_dim:
        raise ValueError(f"weight index {m} out of range for rep_dim {gs.rep_dim}")
    state = np.zeros(gs.rep_dim, dtype=complex)
    state[m] = 1.0
    return state


def saturating_index(gs: GeneratorSet) -> int:
    """Basis index of the state that saturates the algebra's variance-sum bound."""
    if gs.spec.kind == KIND_SU2:
        return gs.spec.two_j
    return 0
