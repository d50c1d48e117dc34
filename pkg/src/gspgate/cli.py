"""Command line client.

Every subcommand builds the same request model the HTTP service accepts,
runs it in process by default, or ships it to a running service when
``--server`` is given.  Exit codes: 0 for success (or an accepted
verdict), 3 for a rejected verdict, 1 for input errors, 2 for internal
numeric failures.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

import httpx
import pydantic

from .errors import ConvergenceError, GspGateError
from .scenario import REPORT_COLUMNS, format_number
from .service import ops, schemas

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INTERNAL = 2
EXIT_REJECTED = 3

FORMATS = ("table", "csv", "json")


class _CliInputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse that raises instead of exiting with its own status code."""

    def error(self, message: str):  # noqa: D102 - argparse override
        raise _CliInputError(f"{self.prog}: {message}")


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format_number(value)
    if isinstance(value, list):
        return "; ".join(str(v) for v in value)
    return str(value)


def _print_csv(columns: Sequence[str], rows: list[dict], stream) -> None:
    import csv

    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_fmt(row.get(column)) for column in columns])


def _print_table(pairs: list[tuple[str, object]], stream) -> None:
    width = max(len(key) for key, _ in pairs)
    for key, value in pairs:
        stream.write(f"{key.ljust(width)}  {_fmt(value)}\n")


def _print_json(payload: dict, stream) -> None:
    stream.write(json.dumps(payload, indent=2, sort_keys=False) + "\n")


def _emit_record(record: dict, fmt: str, stream) -> None:
    """One flat record in any of the three formats."""
    if fmt == "json":
        _print_json(record, stream)
    elif fmt == "csv":
        _print_csv(list(record.keys()), [record], stream)
    else:
        _print_table(list(record.items()), stream)


def _emit_rows(columns: Sequence[str], rows: list[dict], fmt: str, stream) -> None:
    if fmt == "json":
        _print_json({"rows": rows}, stream)
    elif fmt == "csv":
        _print_csv(columns, rows, stream)
    else:
        if not rows:
            stream.write("(no rows)\n")
            return
        cells = [[_fmt(row.get(c)) for c in columns] for row in rows]
        widths = [
            max(len(str(column)), *(len(row[i]) for row in cells))
            for i, column in enumerate(columns)
        ]
        stream.write("  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip() + "\n")
        for row in cells:
            stream.write("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() + "\n")


class _Client:
    """Runs requests locally, or against a remote service when given a URL."""

    def __init__(self, server: str | None):
        self.server = server.rstrip("/") if server else None

    def call(self, path: str, request: pydantic.BaseModel | None, response_type):
        if self.server is None:
            return _LOCAL_HANDLERS[path](request)
        if request is None:
            reply = httpx.get(f"{self.server}{path}", timeout=120.0)
        else:
            reply = httpx.post(
                f"{self.server}{path}",
                json=request.model_dump(mode="json"),
                timeout=120.0,
            )
        if reply.status_code >= 400:
            detail = reply.text
            try:
                detail = reply.json().get("detail", detail)
            except ValueError:
                pass
            raise GspGateError(f"server returned {reply.status_code}: {detail}")
        return response_type.model_validate(reply.json())


_LOCAL_HANDLERS = {
    "/verdict": ops.evaluate_verdict,
    "/max-depth": ops.evaluate_max_depth,
    "/runtime": ops.evaluate_runtime,
    "/scenarios": ops.evaluate_scenarios,
    "/sweep": ops.evaluate_sweep,
    "/curve": ops.evaluate_curve,
    "/spectral": ops.evaluate_spectral,
    "/boost": ops.evaluate_boost,
    "/catalog": lambda _request: ops.get_catalog(),
}


def _read_text(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise _CliInputError(f"cannot read {path}: {exc}") from exc


def _out_stream(args):
    if getattr(args, "output", None):
        return open(args.output, "w", encoding="utf-8")
    return None


# ---------------------------------------------------------------------------
# subcommands


def _add_model_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--gsee", help="catalog model name (see the catalog subcommand)")
    parser.add_argument("--alpha", type=float, help="repetition exponent of a custom model")
    parser.add_argument("--beta", type=float, help="depth exponent of a custom model")


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=FORMATS, default="table")
    parser.add_argument("--server", help="base URL of a running gspgate service")


def cmd_verdict(args, client: _Client) -> int:
    request = schemas.VerdictRequest(
        gsee=args.gsee,
        alpha=args.alpha,
        beta=args.beta,
        epsilon=args.epsilon,
        gamma=args.gamma,
        gamma0=args.gamma0,
        depth=args.depth,
        p_succ=args.p_succ,
        unit=args.unit,
        regime=args.regime,
        negligibility=args.negligibility,
    )
    response = client.call("/verdict", request, schemas.VerdictResponse)
    record = {
        "gsee": args.gsee,
        "alpha": args.alpha,
        "beta": args.beta,
        "epsilon": args.epsilon,
        "gamma": args.gamma,
        "gamma0": args.gamma0,
        "depth": args.depth,
        "p_succ": args.p_succ,
        "unit": args.unit,
        "accepted": response.accepted,
        "lhs": response.lhs,
        "rhs": response.rhs,
        "margin": response.margin,
        "regime": response.regime,
        "runtime": response.runtime,
        "runtime_reference": response.runtime_reference,
        "gsee_depth": response.gsee_depth,
        "warnings": response.warnings,
    }
    _emit_record(record, args.format, sys.stdout)
    return EXIT_OK if response.accepted else EXIT_REJECTED


def cmd_max_depth(args, client: _Client) -> int:
    request = schemas.MaxDepthRequest(
        gamma=args.gamma,
        gamma0=args.gamma0,
        gsee=args.gsee,
        alpha=args.alpha,
        beta=args.beta,
        epsilon=args.epsilon,
        d_gsee=args.d_gsee,
        p_succ=args.p_succ,
        unit=args.unit,
    )
    response = client.call("/max-depth", request, schemas.MaxDepthResponse)
    record = {
        "gamma": args.gamma,
        "gamma0": args.gamma0,
        "gsee": args.gsee,
        "alpha": args.alpha,
        "beta": args.beta,
        "epsilon": args.epsilon,
        "d_gsee": args.d_gsee,
        "p_succ": response.p_succ,
        "form": response.form,
        "max_depth": response.max_depth,
        "gsee_depth": response.gsee_depth,
        "multiplier": response.multiplier,
        "overlap_gain": response.overlap_gain,
        "reference_overlap": response.reference_overlap,
        "warnings": response.warnings,
    }
    if args.format == "table":
        _emit_record(record, args.format, sys.stdout)
        # The bound factors as overlap gain over reference overlap times
        # estimation depth; spell that out for the linear form.
        if response.form == "overlap-gain":
            sys.stdout.write(
                "decomposition: max depth < (overlap gain / reference overlap)"
                " x estimation depth = "
                f"({_fmt(response.overlap_gain)} / {_fmt(response.reference_overlap)})"
                f" x {_fmt(response.gsee_depth)} = {_fmt(response.max_depth)}\n"
            )
        else:
            sys.stdout.write(
                "decomposition: max depth < p_succ x threshold multiplier"
                " x estimation depth = "
                f"{_fmt(response.p_succ)} x {_fmt(response.multiplier)}"
                f" x {_fmt(response.gsee_depth)} = {_fmt(response.max_depth)}\n"
            )
    else:
        _emit_record(record, args.format, sys.stdout)
    return EXIT_OK


def cmd_runtime(args, client: _Client) -> int:
    request = schemas.RuntimeRequest(
        gsee=args.gsee,
        alpha=args.alpha,
        beta=args.beta,
        epsilon=args.epsilon,
        gamma=args.gamma,
        gamma0=args.gamma0,
        depth=args.depth,
        p_succ=args.p_succ,
        unit=args.unit,
    )
    response = client.call("/runtime", request, schemas.RuntimeResponse)
    record = {
        "gsee": args.gsee,
        "alpha": args.alpha,
        "beta": args.beta,
        "epsilon": args.epsilon,
        "gamma": args.gamma,
        "gamma0": args.gamma0,
        "depth": args.depth,
        "p_succ": args.p_succ,
        "unit": response.unit,
        "runtime": response.runtime,
        "runtime_reference": response.runtime_reference,
        "gsee_depth": response.gsee_depth,
        "repetitions": response.repetitions,
    }
    _emit_record(record, args.format, sys.stdout)
    return EXIT_OK


def cmd_sweep(args, client: _Client) -> int:
    sources = [args.fixture, args.scenarios, args.table, args.var]
    if sum(s is not None for s in sources) != 1:
        raise _CliInputError(
            "give exactly one of --fixture, --scenarios, --table, or --var"
        )

    if args.scenarios is not None:
        request = schemas.ScenariosRequest(table=_read_text(args.scenarios))
        response = client.call("/scenarios", request, schemas.SweepResponse)
    elif args.var is not None:
        if args.values is None:
            raise _CliInputError("--var needs --values v1,v2,...")
        try:
            values = [float(v) for v in args.values.split(",") if v.strip()]
        except ValueError as exc:
            raise _CliInputError(f"bad --values: {exc}") from exc
        scenario_spec = schemas.ScenarioSpec(
            name=args.name,
            gsee=args.gsee,
            alpha=args.alpha,
            beta=args.beta,
            epsilon=args.epsilon,
            gamma=args.gamma,
            gamma0=args.gamma0,
            depth=args.depth,
            p_succ=args.p_succ,
            unit=args.unit,
            d_gsee=args.d_gsee,
        )
        request = schemas.SweepRequest(
            variable=args.var, values=values, scenario=scenario_spec
        )
        response = client.call("/sweep", request, schemas.SweepResponse)
    else:
        request = schemas.SweepRequest(
            fixture=args.fixture,
            table=_read_text(args.table) if args.table is not None else None,
        )
        response = client.call("/sweep", request, schemas.SweepResponse)

    out = _out_stream(args)
    stream = out or sys.stdout
    try:
        if response.kind == "curve":
            columns = ["gamma0", "max_depth"]
            rows = [p.model_dump() for p in response.points]
        else:
            columns = list(REPORT_COLUMNS)
            rows = [r.model_dump() for r in response.rows]
        _emit_rows(columns, rows, args.format, stream)
    finally:
        if out is not None:
            out.close()
    for error in response.errors:
        sys.stderr.write(f"row {error.row}: {error.message}\n")
    return EXIT_OK


def cmd_spectral(args, client: _Client) -> int:
    request = schemas.SpectralRequest(
        hamiltonian=_read_text(args.hamiltonian),
        state=_read_text(args.state) if args.state is not None else None,
        basis_index=args.basis_index,
        degeneracy_tol=args.degeneracy_tol,
        method=args.method,
    )
    response = client.call("/spectral", request, schemas.SpectralResponse)
    _emit_record(response.model_dump(), args.format, sys.stdout)
    return EXIT_OK


def cmd_boost(args, client: _Client) -> int:
    request = schemas.BoostRequest(
        hamiltonian=_read_text(args.hamiltonian),
        state=_read_text(args.state),
        kind=args.filter,
        center=args.center,
        width=args.width,
        pivot=args.pivot,
        rate=args.rate,
        cutoff=args.cutoff,
        degeneracy_tol=args.degeneracy_tol,
        include_state=args.save_state is not None,
    )
    response = client.call("/boost", request, schemas.BoostResponse)
    record = response.model_dump()
    boosted = record.pop("state", None)
    if args.save_state is not None and boosted is not None:
        with open(args.save_state, "w", encoding="utf-8") as handle:
            handle.write(boosted)
    _emit_record(record, args.format, sys.stdout)
    return EXIT_OK


def cmd_catalog(args, client: _Client) -> int:
    response = client.call("/catalog", None, schemas.CatalogResponse)
    rows = [
        {
            "entry": "model",
            "name": m.name,
            "alpha": m.alpha,
            "beta": m.beta,
            "depth_unit": m.depth_unit,
            "prefactor": m.prefactor,
            "kind": "",
        }
        for m in response.models
    ] + [
        {
            "entry": "fixture",
            "name": f.name,
            "alpha": None,
            "beta": None,
            "depth_unit": "",
            "prefactor": None,
            "kind": f.kind,
        }
        for f in response.fixtures
    ]
    columns = ["entry", "name", "alpha", "beta", "depth_unit", "prefactor", "kind"]
    _emit_rows(columns, rows, args.format, sys.stdout)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser assembly


def build_parser() -> _Parser:
    parser = _Parser(prog="gspgate", description=__doc__)
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("verdict", help="accept or reject one preparation candidate")
    _add_model_flags(p)
    p.add_argument("--epsilon", type=float, required=True, help="target estimation accuracy")
    p.add_argument("--gamma", type=float, required=True, help="candidate ground-space overlap")
    p.add_argument("--gamma0", type=float, required=True, help="reference overlap")
    p.add_argument("--depth", type=float, default=0.0, help="preparation circuit depth")
    p.add_argument("--p-succ", dest="p_succ", type=float, default=1.0)
    p.add_argument("--unit", default="circuit-layers")
    p.add_argument("--regime", choices=("auto", "general", "with-repetitions", "simplified"), default="auto")
    p.add_argument("--negligibility", type=float, default=None,
                   help="depth-ratio bound for the simplified regime")
    _add_common_flags(p)
    p.set_defaults(handler=cmd_verdict)

    p = commands.add_parser("max-depth", help="largest acceptable preparation depth")
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("--gamma0", type=float, required=True)
    _add_model_flags(p)
    p.add_argument("--epsilon", type=float)
    p.add_argument("--d-gsee", dest="d_gsee", type=float,
                   help="estimation depth given directly (overlap-gain form)")
    p.add_argument("--p-succ", dest="p_succ", type=float, default=1.0)
    p.add_argument("--unit", default="circuit-layers")
    _add_common_flags(p)
    p.set_defaults(handler=cmd_max_depth)

    p = commands.add_parser("runtime", help="runtime of estimation seeded by a candidate")
    _add_model_flags(p)
    p.add_argument("--epsilon", type=float, required=True)
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("--gamma0", type=float, help="also report the reference runtime")
    p.add_argument("--depth", type=float, default=0.0)
    p.add_argument("--p-succ", dest="p_succ", type=float, default=1.0)
    p.add_argument("--unit", default="circuit-layers")
    _add_common_flags(p)
    p.set_defaults(handler=cmd_runtime)

    p = commands.add_parser("sweep", help="batch reports: tables, fixtures, grids")
    p.add_argument("--fixture", help="bundled fixture name (see catalog)")
    p.add_argument("--scenarios", help="path to a scenario table CSV")
    p.add_argument("--table", help="path to a labeled sweep table CSV")
    p.add_argument("--var", help="variable for a parametric sweep")
    p.add_argument("--values", help="comma-separated grid for --var")
    p.add_argument("--name", default="sweep")
    _add_model_flags(p)
    p.add_argument("--epsilon", type=float)
    p.add_argument("--gamma", type=float)
    p.add_argument("--gamma0", type=float)
    p.add_argument("--depth", type=float, default=0.0)
    p.add_argument("--p-succ", dest="p_succ", type=float, default=1.0)
    p.add_argument("--unit", default="circuit-layers")
    p.add_argument("--d-gsee", dest="d_gsee", type=float)
    p.add_argument("--output", help="write the report here instead of stdout")
    _add_common_flags(p)
    p.set_defaults(handler=cmd_sweep)

    p = commands.add_parser("spectral", help="ground energy, gap, and overlap of a Hamiltonian")
    p.add_argument("--hamiltonian", required=True, help="path to a hamx or pauli file")
    p.add_argument("--state", help="path to a state file to measure overlap for")
    p.add_argument("--basis-index", dest="basis_index", type=int,
                   help="basis state to measure overlap for instead of a file")
    p.add_argument("--degeneracy-tol", dest="degeneracy_tol", type=float, default=1e-8)
    p.add_argument("--method", choices=("auto", "dense", "iterative"), default="auto")
    _add_common_flags(p)
    p.set_defaults(handler=cmd_spectral)

    p = commands.add_parser("boost", help="apply an energy filter to raise overlap")
    p.add_argument("--hamiltonian", required=True)
    p.add_argument("--state", required=True)
    p.add_argument("--filter", choices=("gaussian", "exponential", "step"), required=True)
    p.add_argument("--center", type=float)
    p.add_argument("--width", type=float)
    p.add_argument("--pivot", type=float)
    p.add_argument("--rate", type=float)
    p.add_argument("--cutoff", type=float)
    p.add_argument("--degeneracy-tol", dest="degeneracy_tol", type=float, default=1e-8)
    p.add_argument("--save-state", dest="save_state", help="write the boosted state here")
    _add_common_flags(p)
    p.set_defaults(handler=cmd_boost)

    p = commands.add_parser("catalog", help="list built-in models and fixtures")
    _add_common_flags(p)
    p.set_defaults(handler=cmd_catalog)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _CliInputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except SystemExit as exc:  # --help
        return int(exc.code or 0)

    client = _Client(getattr(args, "server", None))
    try:
        return args.handler(args, client)
    except _CliInputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except ConvergenceError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INTERNAL
    except (GspGateError, pydantic.ValidationError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except httpx.HTTPError as exc:
        sys.stderr.write(f"error: cannot reach the server: {exc}\n")
        return EXIT_INPUT
    except ArithmeticError as exc:
        sys.stderr.write(f"error: numeric failure: {exc}\n")
        return EXIT_INTERNAL


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
