"""FastAPI application exposing the verification commands as endpoints."""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import __version__
from . import handlers, schemas

app = FastAPI(
    title="surkit",
    description=(
        "Variance-sum uncertainty bounds from Lie algebra structure: "
        "verification sweeps, tightness certification, entanglement witnessing, "
        "measurement sampling, and exact bound tables."
    ),
    version=__version__,
)


def _run(handler, request):
    try:
        return handler(request)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc


@app.get("/health", response_model=schemas.HealthResponse)
def health() -> schemas.HealthResponse:
    return schemas.HealthResponse(status="ok", version=__version__)


@app.post("/verify", response_model=schemas.VerifyResponse)
def verify(request: schemas.VerifyRequest) -> schemas.VerifyResponse:
    return _run(handlers.run_verify, request)


@app.post("/minimize", response_model=schemas.MinimizeResponse)
def minimize(request: schemas.MinimizeRequest) -> schemas.MinimizeResponse:
    return _run(handlers.run_minimize, request)


@app.post("/witness", response_model=schemas.WitnessResponse)
def witness(request: schemas.WitnessRequest) -> schemas.WitnessResponse:
    return _run(handlers.run_witness, request)


@app.post("/identities", response_model=schemas.IdentitiesResponse)
def identities(request: schemas.IdentitiesRequest) -> schemas.IdentitiesResponse:
    return _run(handlers.run_identities, request)


@app.post("/sample", response_model=schemas.SampleResponse)
def sample(request: schemas.SampleRequest) -> schemas.SampleResponse:
    return _run(handlers.run_sample, request)


@app.post("/table", response_model=schemas.TableResponse)
def table(request: schemas.TableRequest) -> schemas.TableResponse:
    return _run(handlers.run_table, request)
