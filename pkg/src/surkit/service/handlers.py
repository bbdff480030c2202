"""Command implementations shared by the HTTP endpoints and the CLI client."""

from __future__ import annotations

from itertools import product

import numpy as np

from .. import __version__, algebras, entanglement, minimize, relations, weights
from . import schemas

# structural-identity tolerance; witness bloch identity is sampled, hence looser
IDENTITY_TOL = 1e-10
BLOCH_TOL = 1e-9


def _build(algebra: str) -> algebras.GeneratorSet:
    spec = algebras.parse_algebra(algebra)
    if spec.kind == algebras.KIND_SUN and spec.irrep is not None:
        if spec.irrep != weights.fundamental(spec.n):
            raise ValueError(
                f"matrix verification covers the fundamental su(n) irrep only; "
                f"{spec.label} is bound/table material (see the table command)"
            )
    return algebras.build(spec)


def run_verify(req: schemas.VerifyRequest) -> schemas.VerifyResponse:
    gs = _build(req.algebra)
    bound = relations.sur_bound_exact(gs)
    truncated = gs.spec.kind in (algebras.KIND_WH, algebras.KIND_SU11)

    states = [relations.saturating_state(gs)]
    names = ["saturating"]
    if req.trials:
        randoms = relations.random_states_for(gs, req.trials, req.seed)
        states.extend(randoms)
        names.extend(f"random:{i}" for i in range(req.trials))

    stacked = np.vstack(states)
    sums = relations.variance_sum_batch(stacked, gs)
    tail = max(1, gs.rep_dim // 10)
    masses = np.sum(np.abs(stacked[:, gs.rep_dim - tail:]) ** 2, axis=1)

    reports = []
    for i, (name, lhs) in enumerate(zip(names, sums)):
        margin = float(lhs) - float(bound)
        reports.append(
            schemas.SurReportModel(
                index=i,
                state=name,
                algebra=gs.spec.label,
                rep_dim=gs.rep_dim,
                lhs=float(lhs),
                bound=float(bound),
                bound_exact=str(bound),
                margin=margin,
                satisfied=margin >= -relations.MARGIN_TOL,
                tail_mass=float(masses[i]) if truncated else None,
            )
        )
    min_margin = min(r.margin for r in reports)
    return schemas.VerifyResponse(
        config=req,
        results=reports,
        summary=schemas.VerifySummary(
            trials=req.trials,
            bound=float(bound),
            bound_exact=str(bound),
            min_margin=min_margin,
            all_satisfied=all(r.satisfied for r in reports),
        ),
        version=__version__,
        seed=req.seed,
    )


def run_minimize(req: schemas.MinimizeRequest) -> schemas.MinimizeResponse:
    gs = _build(req.algebra)
    result = minimize.minimize_variance_sum(
        gs, restarts=req.restarts, max_iters=req.max_iters, tol=req.tol, seed=req.seed
    )
    model = schemas.MinimizeResultModel(
        algebra=gs.spec.label,
        best_value=result.best_value,
        bound=result.bound,
        bound_exact=str(relations.sur_bound_exact(gs)),
        gap=result.gap,
        restarts_used=result.restarts_used,
        iterations=result.iterations,
        converged=result.converged,
        best_state=[[float(a.real), float(a.imag)] for a in result.best_state],
    )
    return schemas.MinimizeResponse(
        config=req,
        results=model,
        summary=schemas.MinimizeSummary(
            gap=result.gap,
            converged=result.converged,
            tight=abs(result.gap) <= 1e-6,
        ),
        version=__version__,
        seed=req.seed,
    )


def _witness_state(req: schemas.WitnessRequest) -> tuple[np.ndarray, str]:
    if req.state == "slater":
        if req.particles != req.n:
            raise ValueError(
                f"the determinant state needs N = n (scalar irrep of the n-fold "
                f"coupling); got n={req.n}, N={req.particles}"
            )
        return entanglement.slater_state(req.n), "slater"
    if req.state == "product":
        return entanglement.random_product_state(req.n, req.particles, req.seed), "product"
    return relations.haar_random_state(req.n**req.particles, req.seed), "haar"


def run_witness(req: schemas.WitnessRequest) -> schemas.WitnessResponse:
    state, name = _witness_state(req)
    report = entanglement.witness(state, req.n, req.particles)
    model = schemas.WitnessReportModel(
        n=req.n,
        particles=req.particles,
        state=name,
        lhs=report.lhs,
        rhs=report.rhs,
        violated=report.violated,
        total_variance=report.total_variance,
        total_variance_bound=report.total_variance_bound,
        total_violated=report.total_violated,
    )
    return schemas.WitnessResponse(
        config=req,
        results=model,
        summary=schemas.WitnessSummary(
            entangled_by_cartan_criterion=report.violated,
            entangled_by_total_variance=report.total_violated,
        ),
        version=__version__,
        seed=req.seed,
    )


def run_identities(req: schemas.IdentitiesRequest) -> schemas.IdentitiesResponse:
    report = entanglement.identity_checks(req.n, trials=req.trials, seed=req.seed)
    model = schemas.IdentityReportModel(
        n=req.n,
        cartan_square=report.cartan_square,
        offdiag_square=report.offdiag_square,
        bloch_norm=report.bloch_norm,
        cartan_square_dev=report.cartan_square_dev,
        offdiag_square_dev=report.offdiag_square_dev,
        bloch_norm_dev=report.bloch_norm_dev,
    )
    holds = (
        report.cartan_square_dev < IDENTITY_TOL
        and report.offdiag_square_dev < IDENTITY_TOL
        and report.bloch_norm_dev < BLOCH_TOL
    )
    return schemas.IdentitiesResponse(
        config=req,
        results=model,
        summary=schemas.IdentitiesSummary(all_identities_hold=holds),
        version=__version__,
        seed=req.seed,
    )


def _resolve_observable(gs: algebras.GeneratorSet, name: str) -> np.ndarray:
    kind = gs.spec.kind
    key = name.strip().lower()
    if kind == algebras.KIND_WH:
        x, p = gs.offdiag
        table = {"x": x, "p": p, "n": algebras.fock_ladder(gs.rep_dim)[2]}
        if key in table:
            return table[key]
        raise ValueError(f"wh observables are x, p, n; got {name!r}")
    if kind == algebras.KIND_SU2:
        table = dict(zip(("jx", "jy", "jz"), (g / 2 for g in gs.generators)))
        if key in table:
            return table[key]
        raise ValueError(f"su2 observables are jx, jy, jz; got {name!r}")
    if kind == algebras.KIND_SU11:
        table = dict(zip(("kx", "ky", "kz"), gs.generators))
        if key in table:
            return table[key]
        raise ValueError(f"su11 observables are kx, ky, kz; got {name!r}")
    gens = gs.generators
    if key.startswith("g") and key[1:].isdigit():
        idx = int(key[1:])
        if 0 <= idx < len(gens):
            return gens[idx]
    if key.startswith("h") and key[1:].isdigit():
        idx = int(key[1:])
        if 1 <= idx <= len(gs.cartan):
            return gs.cartan[idx - 1]
    raise ValueError(
        f"su(n) observables are g0..g{len(gens) - 1} or h1..h{len(gs.cartan)}; got {name!r}"
    )


def _resolve_state(gs: algebras.GeneratorSet, name: str, seed: int) -> np.ndarray:
    key = name.strip().lower()
    if key == "saturating":
        return relations.saturating_state(gs)
    if key == "haar":
        return relations.random_states_for(gs, 1, seed)[0]
    if key.startswith("basis:"):
        return algebras.weight_basis_state(gs, int(key.split(":", 1)[1]))
    raise ValueError(f"state must be saturating, haar, or basis:<m>; got {name!r}")


def run_sample(req: schemas.SampleRequest) -> schemas.SampleResponse:
    gs = _build(req.algebra)
    observable = _resolve_observable(gs, req.observable)
    state = _resolve_state(gs, req.state, req.seed)
    result = relations.sample_observable(state, observable, req.shots, req.seed)
    deviation = abs(result.estimate - result.exact)
    model = schemas.SampleResultModel(
        algebra=gs.spec.label,
        observable=req.observable,
        state=req.state,
        shots=req.shots,
        estimate=result.estimate,
        stderr=result.stderr,
        exact=result.exact,
        samples=[float(s) for s in result.samples] if req.include_samples else None,
    )
    return schemas.SampleResponse(
        config=req,
        results=model,
        summary=schemas.SampleSummary(
            deviation=deviation,
            within_five_stderr=deviation <= 5 * result.stderr,
        ),
        version=__version__,
        seed=req.seed,
    )


def run_table(req: schemas.TableRequest) -> schemas.TableResponse:
    rows = []
    for n in range(2, 6):
        for label in product(range(req.max_label + 1), repeat=n - 1):
            rows.append(
                schemas.TableRow(
                    n=n,
                    label=list(label),
                    bound=str(weights.sur_bound(n, label)),
                    casimir=str(weights.casimir_eigenvalue(n, label)),
                )
            )
    return schemas.TableResponse(
        config=req,
        results=rows,
        summary=schemas.TableSummary(rows=len(rows), max_label=req.max_label),
        version=__version__,
        seed=req.seed,
    )
