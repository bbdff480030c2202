"""Command-line client for the verification service.

The CLI only builds request models, hands them to the service (in-process by
default, over HTTP with --server), and serializes the response; no domain
logic lives here. Output is canonical JSON (sorted keys) or CSV, so identical
command lines with identical seeds produce byte-identical output regardless
of transport.

Exit codes: 0 success, 1 a verified invariant is violated, 2 bad input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import replace
from fractions import Fraction

from . import __version__, algebras
from .service import handlers, schemas

OUTPUT_DIR_ENV = "SURKIT_OUTPUT_DIR"

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_BAD_INPUT = 2


def _add_output_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("json", "csv"), default="json")
    parser.add_argument("--output", default=None, help="output file (default stdout)")
    parser.add_argument("--server", default=None, help="base URL of a running service")


def _add_algebra_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--algebra", required=True, help="wh[:cutoff=K] | su2:j=J | su11:kappa=P/Q,cutoff=K | su:N")
    parser.add_argument("--cutoff", type=int, default=None, help="override truncation cutoff")
    parser.add_argument("--j", default=None, help="override su2 spin (half-integer)")
    parser.add_argument("--kappa", default=None, help="override su11 Bargmann index (p/q)")
    parser.add_argument("--irrep", default=None, help="override su(n) Dynkin label a,b,...")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="surkit",
        description="Verify, certify, and exploit variance-sum uncertainty bounds.",
    )
    parser.add_argument("--version", action="version", version=f"surkit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check the bound on random states plus the saturating state")
    _add_algebra_flags(p)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    _add_output_flags(p)

    p = sub.add_parser("minimize", help="certify tightness by minimizing the variance sum")
    _add_algebra_flags(p)
    p.add_argument("--restarts", type=int, default=16)
    p.add_argument("--max-iters", type=int, default=1000)
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--seed", type=int, default=0)
    _add_output_flags(p)

    p = sub.add_parser("witness", help="evaluate the collective-operator separability criteria")
    p.add_argument("--n", type=int, required=True, help="single-particle dimension (su(n))")
    p.add_argument("--N", "--particles", dest="particles", type=int, required=True)
    p.add_argument("--state", choices=("slater", "product", "haar"), default="slater")
    p.add_argument("--seed", type=int, default=0)
    _add_output_flags(p)

    p = sub.add_parser("identities", help="verify the operator identities behind the witness")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    _add_output_flags(p)

    p = sub.add_parser("sample", help="Born-rule sampling of an observable's variance")
    _add_algebra_flags(p)
    p.add_argument("--observable", required=True)
    p.add_argument("--state", default="saturating", help="saturating | haar | basis:<m>")
    p.add_argument("--shots", type=int, default=4096)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--no-samples", action="store_true", help="omit the raw sample list")
    _add_output_flags(p)

    p = sub.add_parser("table", help="exact bound and Casimir table for su(2..5)")
    p.add_argument("--max-label", type=int, default=3)
    _add_output_flags(p)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def resolve_algebra(args: argparse.Namespace) -> str:
    """Canonical algebra label from --algebra plus any override flags."""
    spec = algebras.parse_algebra(args.algebra)
    updates = {}
    if args.cutoff is not None:
        if spec.kind not in (algebras.KIND_WH, algebras.KIND_SU11):
            raise ValueError(f"--cutoff does not apply to {spec.kind}")
        updates["cutoff"] = args.cutoff
    if args.j is not None:
        if spec.kind != algebras.KIND_SU2:
            raise ValueError(f"--j does not apply to {spec.kind}")
        two_j = 2 * Fraction(args.j)
        if two_j.denominator != 1:
            raise ValueError(f"--j must be a half-integer, got {args.j}")
        updates["two_j"] = int(two_j)
    if args.kappa is not None:
        if spec.kind != algebras.KIND_SU11:
            raise ValueError(f"--kappa does not apply to {spec.kind}")
        updates["kappa"] = Fraction(args.kappa)
    if args.irrep is not None:
        if spec.kind != algebras.KIND_SUN:
            raise ValueError(f"--irrep does not apply to {spec.kind}")
        updates["irrep"] = tuple(int(x) for x in args.irrep.split(","))
    if updates:
        spec = replace(spec, **updates)
    return spec.label


def build_request(args: argparse.Namespace):
    command = args.command
    if command == "verify":
        return schemas.VerifyRequest(
            algebra=resolve_algebra(args), trials=args.trials, seed=args.seed
        )
    if command == "minimize":
        return schemas.MinimizeRequest(
            algebra=resolve_algebra(args),
            restarts=args.restarts,
            max_iters=args.max_iters,
            tol=args.tol,
            seed=args.seed,
        )
    if command == "witness":
        return schemas.WitnessRequest(
            n=args.n, particles=args.particles, state=args.state, seed=args.seed
        )
    if command == "identities":
        return schemas.IdentitiesRequest(n=args.n, trials=args.trials, seed=args.seed)
    if command == "sample":
        return schemas.SampleRequest(
            algebra=resolve_algebra(args),
            observable=args.observable,
            state=args.state,
            shots=args.shots,
            seed=args.seed,
            include_samples=not args.no_samples,
        )
    if command == "table":
        return schemas.TableRequest(max_label=args.max_label)
    raise ValueError(f"unknown command {command!r}")


_LOCAL = {
    "verify": (handlers.run_verify, schemas.VerifyResponse),
    "minimize": (handlers.run_minimize, schemas.MinimizeResponse),
    "witness": (handlers.run_witness, schemas.WitnessResponse),
    "identities": (handlers.run_identities, schemas.IdentitiesResponse),
    "sample": (handlers.run_sample, schemas.SampleResponse),
    "table": (handlers.run_table, schemas.TableResponse),
}


def dispatch(command: str, request, server: str | None):
    handler, response_model = _LOCAL[command]
    if server is None:
        return handler(request)
    import httpx

    reply = httpx.post(
        f"{server.rstrip('/')}/{command}", json=request.model_dump(), timeout=600.0
    )
    if reply.status_code == 422:
        detail = reply.json().get("detail", reply.text)
        raise ValueError(f"service rejected the request: {detail}")
    reply.raise_for_status()
    return response_model.model_validate(reply.json())


def render_json(response) -> str:
    return json.dumps(response.model_dump(), indent=2, sort_keys=True) + "\n"


def _csv_text(fieldnames, rows) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=fieldnames, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: _csv_cell(row.get(k)) for k in fieldnames})
    return buffer.getvalue()


def _csv_cell(value):
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, list):
        return " ".join(str(v) for v in value)
    if value is None:
        return ""
    return value


def render_csv(response) -> str:
    command = response.command
    if command == "verify":
        fields = [
            "index", "state", "algebra", "rep_dim", "lhs", "bound", "bound_exact",
            "margin", "satisfied", "tail_mass",
        ]
        return _csv_text(fields, [r.model_dump() for r in response.results])
    if command == "table":
        return _csv_text(["n", "label", "bound", "casimir"], [r.model_dump() for r in response.results])
    if command == "minimize":
        fields = [
            "algebra", "best_value", "bound", "bound_exact", "gap",
            "restarts_used", "iterations", "converged",
        ]
        row = response.results.model_dump()
        return _csv_text(fields, [row])
    if command == "witness":
        fields = [
            "n", "particles", "state", "lhs", "rhs", "violated",
            "total_variance", "total_variance_bound", "total_violated",
        ]
        return _csv_text(fields, [response.results.model_dump()])
    if command == "identities":
        fields = [
            "n", "cartan_square", "offdiag_square", "bloch_norm",
            "cartan_square_dev", "offdiag_square_dev", "bloch_norm_dev",
        ]
        return _csv_text(fields, [response.results.model_dump()])
    if command == "sample":
        fields = ["algebra", "observable", "state", "shots", "estimate", "stderr", "exact"]
        return _csv_text(fields, [response.results.model_dump()])
    raise ValueError(f"no CSV rendering for {command!r}")


def exit_status(response) -> int:
    command = response.command
    if command == "verify" and not response.summary.all_satisfied:
        return EXIT_VIOLATION
    if command == "minimize" and response.results.gap < -1e-9:
        return EXIT_VIOLATION
    if command == "identities" and not response.summary.all_identities_hold:
        return EXIT_VIOLATION
    return EXIT_OK


def _write_output(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    out_dir = os.environ.get(OUTPUT_DIR_ENV)
    if out_dir and not os.path.isabs(path):
        path = os.path.join(out_dir, path)
    with open(path, "w", newline="") as fh:
        fh.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "serve":
        import uvicorn

        uvicorn.run("surkit.service.main:app", host=args.host, port=args.port)
        return EXIT_OK

    try:
        request = build_request(args)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT

    try:
        response = dispatch(args.command, request, args.server)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT

    text = render_json(response) if args.format == "json" else render_csv(response)
    _write_output(text, args.output)
    return exit_status(response)


if __name__ == "__main__":
    sys.exit(main())
