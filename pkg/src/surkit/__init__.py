"""surkit: sum-uncertainty relations from Lie algebra structure.

Builds matrix representations (truncated Weyl-Heisenberg, su(2) spin-j,
truncated su(1,1) discrete series, generalized Gell-Mann su(n)), computes
state-independent variance-sum lower bounds from weight theory, certifies
their tightness numerically, and applies the collective-operator
entanglement witness. Ships as a library, a FastAPI service, and a CLI.
"""

from .algebras import (
    AlgebraSpec,
    GeneratorSet,
    build,
    build_gellmann,
    build_su2,
    build_su11,
    build_wh,
    parse_algebra,
    weight_basis_state,
)
from .linalg import commutator, expectation, kron, variance
from .minimize import MinimizeResult, gradient_check, minimize_variance_sum
from .relations import (
    SampleResult,
    SurReport,
    TruncationError,
    check_su11_strong,
    check_sur,
    haar_random_state,
    robertson_product,
    sample_observable,
    saturating_state,
    variance_sum,
)
from .entanglement import (
    CollectiveSet,
    WitnessReport,
    collective_operators,
    identity_checks,
    mixed_state_convexity_check,
    slater_state,
    witness,
)
from .weights import casimir_eigenvalue, casimir_matrix, metric, sur_bound, weyl_root

__version__ = "0.1.0"

__all__ = [
    "AlgebraSpec",
    "CollectiveSet",
    "GeneratorSet",
    "MinimizeResult",
    "SampleResult",
    "SurReport",
    "TruncationError",
    "WitnessReport",
    "build",
    "build_gellmann",
    "build_su2",
    "build_su11",
    "build_wh",
    "casimir_eigenvalue",
    "casimir_matrix",
    "check_su11_strong",
    "check_sur",
    "collective_operators",
    "commutator",
    "expectation",
    "gradient_check",
    "haar_random_state",
    "identity_checks",
    "kron",
    "metric",
    "minimize_variance_sum",
    "mixed_state_convexity_check",
    "parse_algebra",
    "robertson_product",
    "sample_observable",
    "saturating_state",
    "slater_state",
    "sur_bound",
    "variance",
    "variance_sum",
    "weight_basis_state",
    "weyl_root",
    "witness",
    "__version__",
]
