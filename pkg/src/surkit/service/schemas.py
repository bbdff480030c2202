"""Request and response models for the verification service.

Every response uses the same envelope: {command, config, results, summary,
version, seed}. Exact rationals travel as strings ("8/3") so no precision is
lost in transit; floats are emitted by the JSON encoder at full precision.
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field


class VerifyRequest(BaseModel):
    algebra: str
    trials: int = Field(default=1000, ge=0)
    seed: int = 0


class MinimizeRequest(BaseModel):
    algebra: str
    restarts: int = Field(default=16, ge=1)
    max_iters: int = Field(default=1000, ge=1)
    tol: float = Field(default=1e-6, gt=0)
    seed: int = 0


class WitnessRequest(BaseModel):
    n: int = Field(ge=2)
    particles: int = Field(ge=2)
    state: Literal["slater", "product", "haar"] = "slater"
    seed: int = 0


class IdentitiesRequest(BaseModel):
    n: int = Field(ge=2)
    trials: int = Field(default=200, ge=1)
    seed: int = 0


class SampleRequest(BaseModel):
    algebra: str
    observable: str
    state: str = "saturating"
    shots: int = Field(default=4096, ge=2)
    seed: int = 0
    include_samples: bool = True


class TableRequest(BaseModel):
    max_label: int = Field(default=3, ge=0)
    seed: int = 0


class SurReportModel(BaseModel):
    index: int
    state: str
    algebra: str
    rep_dim: int
    lhs: float
    bound: float
    bound_exact: str
    margin: float
    satisfied: bool
    tail_mass: Optional[float] = None


class VerifySummary(BaseModel):
    trials: int
    bound: float
    bound_exact: str
    min_margin: float
    all_satisfied: bool


class VerifyResponse(BaseModel):
    command: Literal["verify"] = "verify"
    config: VerifyRequest
    results: list[SurReportModel]
    summary: VerifySummary
    version: str
    seed: int


class MinimizeResultModel(BaseModel):
    algebra: str
    best_value: float
    bound: float
    bound_exact: str
    gap: float
    restarts_used: int
    iterations: int
    converged: bool
    best_state: list[list[float]]  # [re, im] per amplitude


class MinimizeSummary(BaseModel):
    gap: float
    converged: bool
    tight: bool  # |gap| within the certification tolerance 1e-6


class MinimizeResponse(BaseModel):
    command: Literal["minimize"] = "minimize"
    config: MinimizeRequest
    results: MinimizeResultModel
    summary: MinimizeSummary
    version: str
    seed: int


class WitnessReportModel(BaseModel):
    n: int
    particles: int
    state: str
    lhs: float
    rhs: float
    violated: bool
    total_variance: float
    total_variance_bound: float
    total_violated: bool


class WitnessSummary(BaseModel):
    entangled_by_cartan_criterion: bool
    entangled_by_total_variance: bool


class WitnessResponse(BaseModel):
    command: Literal["witness"] = "witness"
    config: WitnessRequest
    results: WitnessReportModel
    summary: WitnessSummary
    version: str
    seed: int


class IdentityReportModel(BaseModel):
    n: int
    cartan_square: float
    offdiag_square: float
    bloch_norm: float
    cartan_square_dev: float
    offdiag_square_dev: float
    bloch_norm_dev: float


class IdentitiesSummary(BaseModel):
    all_identities_hold: bool


class IdentitiesResponse(BaseModel):
    command: Literal["identities"] = "identities"
    config: IdentitiesRequest
    results: IdentityReportModel
    summary: IdentitiesSummary
    version: str
    seed: int


class SampleResultModel(BaseModel):
    algebra: str
    observable: str
    state: str
    shots: int
    estimate: float
    stderr: float
    exact: float
    samples: Optional[list[float]] = None


class SampleSummary(BaseModel):
    deviation: float
    within_five_stderr: bool


class SampleResponse(BaseModel):
    command: Literal["sample"] = "sample"
    config: SampleRequest
    results: SampleResultModel
    summary: SampleSummary
    version: str
    seed: int


class TableRow(BaseModel):
    n: int
    label: list[int]
    bound: str
    casimir: str


class TableSummary(BaseModel):
    rows: int
    max_label: int


class TableResponse(BaseModel):
    command: Literal["table"] = "table"
    config: TableRequest
    results: list[TableRow]
    summary: TableSummary
    version: str
    seed: int


class HealthResponse(BaseModel):
    status: str
    version: str
