"""Thin command-line client for the HTTP service.

Every command builds a request, sends it to the service (an in-process app
by default, or a remote instance via ``--server``), and renders the JSON
response as a deterministic CSV or JSON file.  Energies are in units of
hbar*c/R with ball radius R = 1.

Exit codes: 0 success, 1 failed ``--assert`` check, 2 usage or solver error.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass

import click
import httpx

from .serialize import csv_document, json_document

__all__ = ["main", "RunConfig"]

FORMATS = ("csv", "json")


@dataclass(frozen=True)
class RunConfig:
    """Validated per-invocation configuration shared by all commands."""

    command: str
    fmt: str
    out: str | None
    assert_mode: bool
    tolerance: float | None
    server: str | None

    def __post_init__(self) -> None:
        if self.fmt not in FORMATS:
            raise click.UsageError(f"format must be one of {FORMATS}")

    def output_path(self, default_stem: str) -> str:
        return self.out if self.out else f"{default_stem}.{self.fmt}"


def _open_client(server: str | None):
    if server:
        return httpx.Client(base_url=server, timeout=600.0)
    # in-process transport: same request/response path without a network
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient

    from .service import create_app

    return TestClient(create_app())


def _post(config: RunConfig, path: str, payload: dict) -> dict:
    try:
        with _open_client(config.server) as client:
            response = client.post(path, json=payload)
    except httpx.HTTPError as exc:
        click.echo(f"error: cannot reach service: {exc}", err=True)
        sys.exit(2)
    if response.status_code != 200:
        try:
            detail = response.json().get("detail")
        except ValueError:
            detail = response.text
        click.echo(f"error: {detail}", err=True)
        sys.exit(2)
    return response.json()


def _write(config: RunConfig, default_stem: str, document: str) -> str:
    path = config.output_path(default_stem)
    with open(path, "w", encoding="utf-8", newline="") as handle:
        handle.write(document)
    return path


def _finish_assert(config: RunConfig, ok: bool, message: str) -> None:
    if not config.assert_mode:
        return
    if ok:
        click.echo(f"assert ok: {message}")
    else:
        click.echo(f"assert failed: {message}", err=True)
        sys.exit(1)


def _common_options(command):
    for option in (
        click.option("--format", "fmt", type=click.Choice(FORMATS), default="csv", show_default=True, help="Output file format."),
        click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None, help="Output path (defaults to a name derived from the command)."),
        click.option("--assert", "assert_mode", is_flag=True, help="Exit 1 unless the command's acceptance check passes."),
        click.option("--server", default=None, metavar="URL", help="Base URL of a running service (default: run the service in-process)."),
    ):
        command = option(command)
    return command


@click.group()
@click.version_option(package_name="cauchywell")
def main() -> None:
    """Spectral data for the square-root Laplacian in the unit ball."""


@main.command()
@click.option("--l", "l", type=int, default=0, show_default=True, help="Orbital number of the series.")
@click.option("--degree", type=int, default=500, show_default=True, help="Polynomial truncation degree 2n (even).")
@click.option("--count", type=int, default=1, show_default=True, help="Number of lowest eigenvalues.")
@click.option("--tol", type=float, default=1e-8, show_default=True, help="Assertion bound on boundary residuals.")
@_common_options
def solve(l, degree, count, tol, fmt, out, assert_mode, server) -> None:
    """Solve one orbital series: eigenvalues, coefficients, residuals."""
    config = RunConfig("solve", fmt, out, assert_mode, tol, server)
    data = _post(config, "/api/solve", {"l": l, "degree": degree, "count": count})
    if fmt == "json":
        document = json_document(data)
    else:
        rows = [
            (entry["k"], entry["energy"], entry["boundary_residual"], j, delta)
            for entry in data["entries"]
            for j, delta in enumerate(entry["coefficients"])
        ]
        document = csv_document(("k", "energy", "boundary_residual", "j", "delta"), rows)
    path = _write(config, f"solve-l{l}-deg{degree}", document)
    energies = [entry["energy"] for entry in data["entries"]]
    click.echo(f"wrote {path}; energies: " + ", ".join(f"{e:.6f}" for e in energies))
    increasing = all(a < b for a, b in zip(energies, energies[1:]))
    residual_ok = all(entry["boundary_residual"] <= tol for entry in data["entries"])
    _finish_assert(
        config,
        increasing and all(e > 0 for e in energies) and residual_ok,
        "spectrum positive, strictly increasing, boundary residuals within tolerance",
    )


@main.command()
@click.option("--degree", type=int, default=500, show_default=True)
@click.option("--max-l", type=int, default=3, show_default=True, help="Largest orbital number.")
@click.option("--count", type=int, default=6, show_default=True, help="Eigenvalues per orbital series.")
@_common_options
def table(degree, max_l, count, fmt, out, assert_mode, server) -> None:
    """All orbital series side by side (l = 0..max-l, k = 1..count)."""
    config = RunConfig("table", fmt, out, assert_mode, None, server)
    data = _post(config, "/api/table", {"degree": degree, "max_l": max_l, "count": count})
    if fmt == "json":
        document = json_document(data)
    else:
        rows = [(e["l"], e["k"], e["energy"]) for e in data["entries"]]
        document = csv_document(("l", "k", "energy"), rows)
    path = _write(config, f"table-deg{degree}", document)
    click.echo(f"wrote {path}; {len(data['entries'])} entries")
    by_l: dict[int, list[float]] = {}
    for entry in data["entries"]:
        by_l.setdefault(entry["l"], []).append(entry["energy"])
    rows_increasing = all(
        all(a < b for a, b in zip(series, series[1:])) for series in by_l.values()
    )
    ground = [series[0] for _, series in sorted(by_l.items())]
    orbital_ordered = all(a < b for a, b in zip(ground, ground[1:]))
    _finish_assert(
        config,
        rows_increasing and orbital_ordered and all(min(s) > 0 for s in by_l.values()),
        "series increasing in k, ground energies increasing in l, all positive",
    )


@main.command()
@click.option("--l", "l", type=int, default=0, show_default=True)
@click.option("--k", "k", type=int, default=1, show_default=True, help="Rank inside the series.")
@click.option("--degree", type=int, default=500, show_default=True)
@click.option("--samples", type=int, default=10000, show_default=True)
@click.option("--tol", type=float, default=0.017, show_default=True, help="Assertion bound on the maximum detuning.")
@_common_options
def detune(l, k, degree, samples, tol, fmt, out, assert_mode, server) -> None:
    """Pointwise residual of a truncated eigenstate along the radius."""
    config = RunConfig("detune", fmt, out, assert_mode, tol, server)
    data = _post(
        config,
        "/api/detune",
        {"l": l, "k": k, "degree": degree, "samples": samples},
    )
    if fmt == "json":
        document = json_document(data)
    else:
        rows = [(s["r"], s["detuning"]) for s in data["samples"]]
        document = csv_document(("r", "detuning"), rows)
    path = _write(config, f"detune-l{l}-k{k}-deg{degree}", document)
    click.echo(
        f"wrote {path}; max detuning {data['max_detuning']:.6g} at r = {data['argmax_r']:.6f}"
    )
    _finish_assert(config, data["max_detuning"] < tol, f"max detuning < {tol}")


@main.command()
@click.option("--k", "k", type=int, default=1, show_default=True)
@click.option("--l", "l", type=int, default=0, show_default=True)
@click.option("--m", "m", type=int, default=0, show_default=True)
@click.option("--degree", type=int, default=500, show_default=True)
@click.option("--grid-r", type=int, default=101, show_default=True)
@click.option("--grid-theta", type=int, default=101, show_default=True)
@_common_options
def density(k, l, m, degree, grid_r, grid_theta, fmt, out, assert_mode, server) -> None:
    """Probability density of one state on a uniform polar grid."""
    config = RunConfig("density", fmt, out, assert_mode, None, server)
    data = _post(
        config,
        "/api/density",
        {"k": k, "l": l, "m": m, "degree": degree, "grid_r": grid_r, "grid_theta": grid_theta},
    )
    if fmt == "json":
        document = json_document(data)
    else:
        rows = [(v["r"], v["theta"], v["density"]) for v in data["values"]]
        document = csv_document(("r", "theta", "density"), rows)
    path = _write(config, f"density-k{k}-l{l}-m{m}-deg{degree}", document)
    click.echo(f"wrote {path}; {len(data['values'])} grid values")
    boundary_zero = all(v["density"] == 0.0 for v in data["values"] if v["r"] == 1.0)
    non_negative = all(v["density"] >= 0.0 for v in data["values"])
    _finish_assert(config, boundary_zero and non_negative, "density non-negative and zero at r = 1")


@main.command("compare-d1")
@click.option("--degree", type=int, default=500, show_default=True)
@click.option("--count", type=int, default=6, show_default=True)
@click.option("--tol", type=float, default=2e-3, show_default=True, help="Assertion bound against the variational reference row.")
@_common_options
def compare_d1(degree, count, tol, fmt, out, assert_mode, server) -> None:
    """Purely radial series against stored one-dimensional references."""
    config = RunConfig("compare-d1", fmt, out, assert_mode, tol, server)
    data = _post(config, "/api/compare-d1", {"degree": degree, "count": count})
    if config.fmt == "json":
        document = json_document(data)
    else:
        rows = [
            (
                row["k"],
                row["computed"],
                row["reference_variational"],
                row["reference_asymptotic"],
                row["diff_variational"],
                row["diff_asymptotic"],
            )
            for row in data["rows"]
        ]
        document = csv_document(
            (
                "k",
                "computed",
                "reference_variational",
                "reference_asymptotic",
                "diff_variational",
                "diff_asymptotic",
            ),
            rows,
        )
    path = _write(config, f"compare-d1-deg{degree}", document)
    worst = max(row["diff_variational"] for row in data["rows"])
    click.echo(f"wrote {path}; worst |difference| vs variational reference: {worst:.3e}")
    _finish_assert(config, worst < tol, f"worst difference < {tol}")


@main.command("oracle-check")
@click.option("--l", "l", type=int, default=0, show_default=True)
@click.option("--jmax", type=int, default=2, show_default=True, help="Largest radial power index to probe.")
@click.option("--points", default="0.2,0.5,0.8", show_default=True, help="Comma-separated axis evaluation points in (0, 0.9].")
@click.option("--tol", type=float, default=1e-3, show_default=True, help="Assertion bound on the worst absolute error.")
@_common_options
def oracle_check(l, jmax, points, tol, fmt, out, assert_mode, server) -> None:
    """Principal-value quadrature against the closed-form operator action."""
    config = RunConfig("oracle-check", fmt, out, assert_mode, tol, server)
    try:
        point_list = [float(token) for token in points.split(",") if token.strip()]
    except ValueError as exc:
        raise click.UsageError(f"bad --points value: {exc}") from exc
    data = _post(
        config,
        "/api/oracle-check",
        {"l": l, "j_max": jmax, "points": point_list},
    )
    if fmt == "json":
        document = json_document(data)
    else:
        rows = [
            (r["l"], r["j"], r["p"], r["quadrature"], r["closed_form"], r["abs_error"])
            for r in data["records"]
        ]
        document = csv_document(("l", "j", "p", "quadrature", "closed_form", "abs_error"), rows)
    path = _write(config, f"oracle-check-l{l}-j{jmax}", document)
    click.echo(f"wrote {path}; max |error| = {data['max_abs_error']:.3e}")
    _finish_assert(config, data["max_abs_error"] < tol, f"max error < {tol}")


@main.command("dump-matrix")
@click.option("--l", "l", type=int, default=0, show_default=True)
@click.option("--degree", type=int, default=20, show_default=True, help="Truncation degree 2n; entries go up to power index n.")
@_common_options
def dump_matrix(l, degree, fmt, out, assert_mode, server) -> None:
    """Operator-action array entries (row index i, column index k, value)."""
    config = RunConfig("dump-matrix", fmt, out, assert_mode, None, server)
    data = _post(config, "/api/dump-matrix", {"l": l, "degree": degree})
    if fmt == "json":
        document = json_document(data)
    else:
        rows = [(e["i"], e["k"], e["value"]) for e in data["entries"]]
        document = csv_document(("i", "k", "value"), rows)
    path = _write(config, f"matrix-l{l}-deg{degree}", document)
    click.echo(f"wrote {path}; {len(data['entries'])} entries")
    signs_ok = all((e["value"] > 0) == (e["i"] == 0) for e in data["entries"])
    _finish_assert(config, signs_ok, "entries positive exactly in the first row")


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host, port) -> None:
    """Run the HTTP service."""
    import uvicorn

    from .service import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
