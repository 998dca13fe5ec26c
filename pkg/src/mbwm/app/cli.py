"""Command line interface: solve, check, oracle, hierarchy, serve.

Validation failures exit with code 2 and print the structured error name;
set MBWM_LOG to control log verbosity.
"""

from __future__ import annotations

import json
import logging
import os
import random
import socket
import sys
from pathlib import Path

import click

from .. import core, oracle
from ..errors import IO_ERROR, PARSE_ERROR, PORT_IN_USE, MbwmError, ValidationError
from ..pcs import PairwiseComparisonSystem
from ..sampling import random_pcs
from . import evaluation, reports, schemas

log = logging.getLogger("mbwm")


def _setup_logging() -> None:
    level = os.environ.get("MBWM_LOG", "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING))


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as err:
        raise MbwmError(f"cannot read {path}: {err}", IO_ERROR) from err


def _load_json(path: str):
    text = _read_text(path)
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        raise ValidationError(f"{path} is not valid JSON: {err}", PARSE_ERROR) from err


def _load_pcs(path: str) -> tuple[PairwiseComparisonSystem, dict]:
    if path.lower().endswith(".csv"):
        return schemas.parse_pcs_csv(_read_text(path)), {"normalize_cr": False}
    return schemas.parse_request(_load_json(path))


def _emit_json(obj) -> None:
    click.echo(json.dumps(obj, indent=2))


def _fail(err: MbwmError) -> None:
    click.echo(str(err), err=True)
    sys.exit(2)


@click.group()
def main() -> None:
    """Weight elicitation for the multiplicative best-worst method."""
    _setup_logging()


@main.command()
@click.argument("input_path", type=click.Path())
@click.option("--json", "as_json", is_flag=True, help="Emit full-precision JSON.")
@click.option(
    "--normalize-cr",
    is_flag=True,
    help="Report (eps*-1)/(CI-1) instead of eps*/CI.",
)
def solve(input_path: str, as_json: bool, normalize_cr: bool) -> None:
    """Full evaluation: consistency, intervals, best system, weights."""
    try:
        pcs, options = _load_pcs(input_path)
        if normalize_cr:
            options["normalize_cr"] = True
        response = evaluation.evaluate_response(pcs, options)
    except MbwmError as err:
        _fail(err)
        return
    if as_json:
        _emit_json(response)
    else:
        click.echo(reports.render_evaluation(response), nl=False)


@main.command()
@click.argument("input_path", type=click.Path())
@click.option("--json", "as_json", is_flag=True, help="Emit full-precision JSON.")
@click.option(
    "--normalize-cr",
    is_flag=True,
    help="Report (eps*-1)/(CI-1) instead of eps*/CI.",
)
def check(input_path: str, as_json: bool, normalize_cr: bool) -> None:
    """Consistency feedback only; computes no weights."""
    try:
        pcs, options = _load_pcs(input_path)
        if normalize_cr:
            options["normalize_cr"] = True
        response = evaluation.check_response(pcs, options)
    except MbwmError as err:
        _fail(err)
        return
    if as_json:
        _emit_json(response)
    else:
        click.echo(reports.render_check(response), nl=False)


@main.command(name="oracle")
@click.argument("input_path", type=click.Path(), required=False)
@click.option("--tolerance", type=float, default=1e-10, show_default=True)
@click.option("--json", "as_json", is_flag=True, help="Emit full-precision JSON.")
@click.option(
    "--fuzz",
    type=int,
    default=0,
    help="Also cross-check N random systems and print a summary.",
)
@click.option("--seed", type=int, default=0, show_default=True)
def oracle_cmd(
    input_path: str | None, tolerance: float, as_json: bool, fuzz: int, seed: int
) -> None:
    """Cross-check the closed forms against the bisection solver."""
    try:
        out: dict = {}
        text_parts: list[str] = []
        if input_path is not None:
            pcs, _ = _load_pcs(input_path)
            diag = core.diagnostics(pcs)
            result = oracle.solve(pcs, tolerance=tolerance)
            delta = abs(diag.eps_star - result.eta_star)
            out["analytic_eps_star"] = diag.eps_star
            out["oracle_eta_star"] = result.eta_star
            out["delta"] = delta
            out["iterations"] = result.iterations
            text_parts.append(reports.render_oracle(diag.eps_star, result, delta))
        if fuzz > 0:
            rng = random.Random(seed)
            worst = 0.0
            for k in range(fuzz):
                pcs = random_pcs(rng, grid=bool(k % 2))
                delta = abs(
                    core.diagnostics(pcs).eps_star
                    - oracle.solve(pcs, tolerance=tolerance).eta_star
                )
                worst = max(worst, delta)
            out["fuzz"] = {"systems": fuzz, "seed": seed, "max_delta": worst}
            text_parts.append(
                f"fuzz: {fuzz} random systems (seed {seed}), "
                f"max |analytic - oracle| = {worst:.3e}\n"
            )
        if input_path is None and fuzz <= 0:
            raise ValidationError(
                "give an input file, --fuzz N, or both", PARSE_ERROR
            )
    except MbwmError as err:
        _fail(err)
        return
    if as_json:
        _emit_json(out)
    else:
        click.echo("".join(text_parts), nl=False)


@main.command()
@click.argument("input_path", type=click.Path())
@click.option("--json", "as_json", is_flag=True, help="Emit full-precision JSON.")
def hierarchy(input_path: str, as_json: bool) -> None:
    """Rank leaf criteria of a two-level hierarchy file."""
    try:
        spec = schemas.parse_hierarchy(_load_json(input_path))
        response = evaluation.hierarchy_response(spec)
    except MbwmError as err:
        _fail(err)
        return
    if as_json:
        _emit_json(response)
    else:
        click.echo(reports.render_hierarchy(response), nl=False)


@main.command()
@click.option("--port", type=int, default=8375, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option(
    "--static-dir",
    type=click.Path(exists=True, file_okay=False),
    default=None,
    help="Directory with the UI bundle to serve at /.",
)
def serve(port: int, host: str, static_dir: str | None) -> None:
    """Run the JSON-over-HTTP service (and optionally the UI bundle)."""
    import uvicorn

    from .server import create_app

    probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    try:
        probe.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
        probe.bind((host, port))
    except OSError as err:
        _fail(MbwmError(f"cannot bind {host}:{port}: {err}", PORT_IN_USE))
        return
    finally:
        probe.close()

    log.info("serving on %s:%s", host, port)
    uvicorn.run(
        create_app(static_dir=static_dir),
        host=host,
        port=port,
        log_level=os.environ.get("MBWM_LOG", "warning").lower(),
    )


if __name__ == "__main__":
    main()
