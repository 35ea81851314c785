"""FastAPI application exposing the solver, eigenfunction, diagnostic and
oracle operations as JSON endpoints."""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..diagnostics import d1_comparison, detuning
from ..eigenfunctions import (
    WaveFunctionLabel,
    density_grid,
    profile_from_series,
)
from ..errors import CauchyWellError
from ..basis import generating_matrix
from ..oracle import QuadratureSpec, action_check_records
from ..solver import solve_series
from . import models

__all__ = ["create_app", "app"]


def create_app() -> FastAPI:
    app = FastAPI(
        title="cauchywell",
        version=__version__,
        description=(
            "Spectral data for the square-root Laplacian restricted to the "
            "unit ball with exterior Dirichlet data. Energies are reported "
            "in units of hbar*c/R with ball radius R = 1."
        ),
    )

    @app.exception_handler(CauchyWellError)
    async def _domain_error(request: Request, exc: CauchyWellError) -> JSONResponse:
        return JSONResponse(
            status_code=422,
            content={"detail": f"{type(exc).__name__}: {exc}"},
        )

    @app.get("/health", response_model=models.HealthResponse)
    def health() -> models.HealthResponse:
        return models.HealthResponse(status="ok", version=__version__)

    @app.post("/api/solve", response_model=models.SolveResponse)
    def solve(request: models.SolveRequest) -> models.SolveResponse:
        series = solve_series(request.l, request.degree // 2, request.count)
        return models.SolveResponse(
            l=series.orbital,
            degree=series.degree,
            entries=[
                models.SeriesEntryModel(
                    k=entry.k,
                    energy=entry.energy,
                    boundary_residual=entry.boundary_residual,
                    coefficients=entry.coefficients.tolist(),
                )
                for entry in series.entries
            ],
        )

    @app.post("/api/table", response_model=models.TableResponse)
    def table(request: models.TableRequest) -> models.TableResponse:
        entries = []
        for l in range(request.max_l + 1):
            series = solve_series(l, request.degree // 2, request.count)
            entries.extend(
                models.TableEntryModel(l=l, k=entry.k, energy=entry.energy)
                for entry in series.entries
            )
        return models.TableResponse(degree=request.degree, entries=entries)

    @app.post("/api/detune", response_model=models.DetuneResponse)
    def detune(request: models.DetuneRequest) -> models.DetuneResponse:
        series = solve_series(request.l, request.degree // 2, request.k)
        entry = series.entries[request.k - 1]
        profile = profile_from_series(series, request.k)
        curve = detuning(profile, entry.energy, request.samples)
        return models.DetuneResponse(
            l=request.l,
            k=request.k,
            degree=curve.degree,
            energy=curve.energy,
            max_detuning=curve.max_detuning,
            argmax_r=curve.argmax_radius,
            samples=[
                models.DetuneSample(r=float(r), detuning=float(v))
                for r, v in zip(curve.radii, curve.values)
            ],
        )

    @app.post("/api/density", response_model=models.DensityResponse)
    def density(request: models.DensityRequest) -> models.DensityResponse:
        series = solve_series(request.l, request.degree // 2, request.k)
        entry = series.entries[request.k - 1]
        profile = profile_from_series(series, request.k)
        label = WaveFunctionLabel(k=request.k, l=request.l, m=request.m)
        grid = density_grid(label, profile, request.grid_r, request.grid_theta)
        values = [
            models.DensityPoint(
                r=float(grid.radii[i]),
                theta=float(grid.angles[j]),
                density=float(grid.values[i, j]),
            )
            for i in range(request.grid_r)
            for j in range(request.grid_theta)
        ]
        return models.DensityResponse(
            k=request.k,
            l=request.l,
            m=request.m,
            degree=request.degree,
            energy=entry.energy,
            normalization=float(profile.normalization),
            grid_r=request.grid_r,
            grid_theta=request.grid_theta,
            values=values,
        )

    @app.post("/api/compare-d1", response_model=models.CompareD1Response)
    def compare_d1(request: models.CompareD1Request) -> models.CompareD1Response:
        series = solve_series(0, request.degree // 2, request.count)
        rows = d1_comparison(series)
        return models.CompareD1Response(
            degree=request.degree,
            rows=[
                models.CompareD1Row(
                    k=row.k,
                    computed=row.computed,
                    reference_variational=row.reference_variational,
                    reference_asymptotic=row.reference_asymptotic,
                    diff_variational=row.diff_variational,
                    diff_asymptotic=row.diff_asymptotic,
                )
                for row in rows
            ],
        )

    @app.post("/api/oracle-check", response_model=models.OracleCheckResponse)
    def oracle_check(request: models.OracleCheckRequest) -> models.OracleCheckResponse:
        spec = QuadratureSpec(
            angular_order=request.angular_order, radial_nodes=request.radial_nodes
        )
        records = action_check_records(request.l, request.j_max, request.points, spec)
        return models.OracleCheckResponse(
            l=request.l,
            j_max=request.j_max,
            max_abs_error=max(record["abs_error"] for record in records),
            records=[models.OracleCheckRecord(**record) for record in records],
        )

    @app.post("/api/dump-matrix", response_model=models.MatrixResponse)
    def dump_matrix(request: models.MatrixRequest) -> models.MatrixResponse:
        order = request.degree // 2
        matrix = generating_matrix(request.l, order)
        entries = [
            models.MatrixEntryModel(i=i, k=k, value=matrix.entry(i, k))
            for i in range(order + 1)
            for k in range(i, order + 1)
        ]
        return models.MatrixResponse(l=request.l, order=order, entries=entries)

    return app


app = create_app()
