"""Thin command line client.

Each subcommand builds the same request body the HTTP service accepts and
either calls the in-process handler (default) or POSTs it to a running
server via ``--server URL``.  Output is byte-identical either way: JSON
documents with exact fraction strings, except DOT export which emits the
graph text directly.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click
import httpx
from pydantic import BaseModel, ValidationError

from .errors import ExclusionLabError
from .service.app import (
    handle_analyze,
    handle_beta,
    handle_certify,
    handle_components,
    handle_export_dot,
    handle_filtration,
    handle_sample,
    handle_witness,
)
from .service.models import (
    AnalyzeRequest,
    BetaRequest,
    CertifyRequest,
    ComponentsRequest,
    ExportDotRequest,
    FiltrationRequest,
    SampleRequest,
    WitnessRequest,
)

SERVER_TIMEOUT = 600.0


def _load_config(path: str) -> dict:
    try:
        doc = json.loads(Path(path).read_text())
    except OSError as e:
        raise click.ClickException(f"cannot read {path}: {e}") from None
    except json.JSONDecodeError as e:
        raise click.ClickException(f"{path} is not valid JSON: {e}") from None
    if not isinstance(doc, dict):
        raise click.ClickException(f"{path} must contain a JSON object")
    return doc


def _system_hole(doc: dict) -> tuple[dict, dict]:
    if "system" not in doc:
        raise click.ClickException("config needs a 'system' entry")
    return doc["system"], doc.get("hole", {})


def _build(model: type[BaseModel], **fields) -> BaseModel:
    try:
        return model(**fields)
    except ValidationError as e:
        lines = [
            "/" + "/".join(str(p) for p in err["loc"]) + ": " + err["msg"]
            for err in e.errors()
        ]
        raise click.ClickException("; ".join(lines)) from None


def _dispatch(endpoint: str, request: BaseModel, handler, server: str | None) -> dict:
    if server is None:
        try:
            return handler(request).model_dump()
        except ExclusionLabError as e:
            raise click.ClickException(str(e)) from None
    url = server.rstrip("/") + endpoint
    try:
        resp = httpx.post(url, json=request.model_dump(), timeout=SERVER_TIMEOUT)
    except httpx.HTTPError as e:
        raise click.ClickException(f"request to {url} failed: {e}") from None
    if resp.status_code != 200:
        raise click.ClickException(f"{url} returned {resp.status_code}: {resp.text}")
    return resp.json()


def _emit(payload: dict | str, out: str | None) -> None:
    text = payload if isinstance(payload, str) else json.dumps(payload, indent=2)
    if not text.endswith("\n"):
        text += "\n"
    if out is None:
        click.echo(text, nl=False)
    else:
        Path(out).write_text(text)


config_opt = click.option(
    "--config",
    "config_path",
    required=True,
    type=click.Path(exists=True, dir_okay=False),
    help="JSON file naming the system and the hole.",
)
out_opt = click.option(
    "--out",
    "out_path",
    type=click.Path(dir_okay=False, writable=True),
    default=None,
    help="Write output to this file instead of stdout.",
)
server_opt = click.option(
    "--server",
    default=None,
    metavar="URL",
    help="POST to a running service instead of computing in process.",
)


@click.group()
def main() -> None:
    """Exact-arithmetic toolkit for expanding maps with a hole."""


@main.command()
@config_opt
@click.option("--seed", type=int, default=None, help="Override the config's seed echo.")
@click.option(
    "--require-certificate",
    is_flag=True,
    help="Exit 2 when the certify stage ends in unknown.",
)
@out_opt
@server_opt
def analyze(config_path, seed, require_certificate, out_path, server) -> None:
    """Run the staged pipeline described by a config file."""
    doc = _load_config(config_path)
    if seed is not None:
        doc["seed"] = seed
    req = _build(AnalyzeRequest, config=doc)
    report = _dispatch("/analyze", req, handle_analyze, server)["report"]
    _emit(report, out_path)
    if require_certificate:
        stage = report.get("stages", {}).get("certify")
        if stage is None or stage["stabilization"].get("method") == "unknown":
            sys.exit(2)


@main.command()
@config_opt
@click.option(
    "--n-max",
    type=int,
    default=12,
    show_default=True,
    help="Deepest refinement level to try.",
)
@click.option(
    "--require-certificate",
    is_flag=True,
    help="Exit 2 when stabilization stays unknown.",
)
@out_opt
@server_opt
def certify(config_path, n_max, require_certificate, out_path, server) -> None:
    """Certify the hole's subshift by stabilization and escape."""
    system, hole = _system_hole(_load_config(config_path))
    req = _build(CertifyRequest, system=system, hole=hole, n_max=n_max)
    resp = _dispatch("/certify", req, handle_certify, server)
    _emit(resp, out_path)
    if require_certificate and resp["stabilization"].get("method") == "unknown":
        sys.exit(2)


@main.command()
@config_opt
@click.option("--depth", type=int, default=6, show_default=True)
@out_opt
@server_opt
def components(config_path, depth, out_path, server) -> None:
    """List transitive components of the depth-d inner approximation."""
    system, hole = _system_hole(_load_config(config_path))
    req = _build(ComponentsRequest, system=system, hole=hole, depth=depth)
    _emit(_dispatch("/components", req, handle_components, server), out_path)


@main.command()
@config_opt
@click.option("--depth", type=int, default=6, show_default=True)
@click.option(
    "--n-max",
    type=int,
    default=12,
    show_default=True,
    help="Refinement budget for the count bound (circle only).",
)
@out_opt
@server_opt
def filtration(config_path, depth, n_max, out_path, server) -> None:
    """Build the component forest across depths 1..d."""
    system, hole = _system_hole(_load_config(config_path))
    req = _build(
        FiltrationRequest, system=system, hole=hole, depth=depth, n_max=n_max
    )
    _emit(_dispatch("/filtration", req, handle_filtration, server), out_path)


@main.command()
@click.option("--t", "t", required=True, help="Threshold as a fraction, e.g. 5/6.")
@click.option("--branches", type=int, default=2, show_default=True)
@click.option(
    "--language-len",
    type=int,
    default=8,
    show_default=True,
    help="Word length for language counts and verification.",
)
@click.option(
    "--verify-res",
    is_flag=True,
    help="Cross-check the exclusion hole against the threshold's language.",
)
@out_opt
@server_opt
def beta(t, branches, language_len, verify_res, out_path, server) -> None:
    """Classify a threshold's digit stream and subshift."""
    req = _build(
        BetaRequest,
        t=t,
        branches=branches,
        language_len=language_len,
        verify_res=verify_res,
    )
    _emit(_dispatch("/beta", req, handle_beta, server)["result"], out_path)


@main.command("witness-even")
@config_opt
@click.option("--closed", is_flag=True, help="Treat the hole as closed.")
@out_opt
@server_opt
def witness_even(config_path, closed, out_path, server) -> None:
    """Show why the even shift is not this hole's subshift."""
    system, hole = _system_hole(_load_config(config_path))
    req = _build(WitnessRequest, system=system, hole=hole, closed=closed)
    _emit(_dispatch("/witness-even", req, handle_witness, server), out_path)


@main.command()
@click.option("--seed", type=int, required=True)
@click.option("--count", type=int, required=True)
@click.option("--corner-depth", type=int, default=8, show_default=True)
@click.option(
    "--n-max",
    "n_max_list",
    type=int,
    multiple=True,
    help="Certification depth to report a fraction for (repeatable).",
)
@out_opt
@server_opt
def sample(seed, count, corner_depth, n_max_list, out_path, server) -> None:
    """Sample dyadic-corner rectangles and certify each one."""
    req = _build(
        SampleRequest,
        seed=seed,
        count=count,
        corner_depth=corner_depth,
        n_max_list=list(n_max_list) or [4, 8, 12],
    )
    _emit(_dispatch("/sample", req, handle_sample, server)["report"], out_path)


@main.command("export-dot")
@config_opt
@click.option("--depth", type=int, default=6, show_default=True)
@click.option(
    "--target",
    type=click.Choice(["sft", "forest"]),
    default="sft",
    show_default=True,
    help="Graph to emit: the inner shift or the component forest.",
)
@out_opt
@server_opt
def export_dot_cmd(config_path, depth, target, out_path, server) -> None:
    """Emit Graphviz DOT text for the depth-d approximation."""
    system, hole = _system_hole(_load_config(config_path))
    req = _build(
        ExportDotRequest, system=system, hole=hole, depth=depth, target=target
    )
    _emit(_dispatch("/export-dot", req, handle_export_dot, server)["dot"], out_path)


if __name__ == "__main__":
    main()
