"""Pydantic request/response schemas for the HTTP service.

Request models own the run-configuration invariants (even degree >= 2,
count >= 1, |m| <= l, ...), so every client, including the bundled CLI,
gets the same validation.
"""

from __future__ import annotations

from pydantic import BaseModel, Field, field_validator, model_validator

from ..serialize import SCHEMA_VERSION


class SolveRequest(BaseModel):
    l: int = Field(0, ge=0, description="orbital number of the series")
    degree: int = Field(500, le=500, description="polynomial truncation degree 2n (even, 2..500)")
    count: int = Field(1, ge=1, description="how many of the lowest eigenvalues to return")

    @field_validator("degree")
    @classmethod
    def _even_degree(cls, value: int) -> int:
        if value < 2 or value % 2:
            raise ValueError("degree must be an even integer >= 2")
        return value


class SeriesEntryModel(BaseModel):
    k: int
    energy: float
    boundary_residual: float
    coefficients: list[float]


class SolveResponse(BaseModel):
    schema_version: str = SCHEMA_VERSION
    l: int
    degree: int
    entries: list[SeriesEntryModel]


class TableRequest(BaseModel):
    degree: int = Field(500, le=500)
    max_l: int = Field(3, ge=0)
    count: int = Field(6, ge=1)

    @field_validator("degree")
    @classmethod
    def _even_degree(cls, value: int) -> int:
        if value < 2 or value % 2:
            raise ValueError("degree must be an even integer >= 2")
        return value


class TableEntryModel(BaseModel):
    l: int
    k: int
    energy: float


class TableResponse(BaseModel):
    schema_version: str = SCHEMA_VERSION
    degree: int
    entries: list[TableEntryModel]


class DetuneRequest(BaseModel):
    l: int = Field(0, ge=0)
    k: int = Field(1, ge=1)
    degree: int = Field(500, le=500)
    samples: int = Field(10_000, ge=100)

    @field_validator("degree")
    @classmethod
    def _even_degree(cls, value: int) -> int:
        if value < 2 or value % 2:
            raise ValueError("degree must be an even integer >= 2")
        return value


class DetuneSample(BaseModel):
    r: float
    detuning: float


class DetuneResponse(BaseModel):
    schema_version: str = SCHEMA_VERSION
    l: int
    k: int
    degree: int
    energy: float
    max_detuning: float
    argmax_r: float
    samples: list[DetuneSample]


class DensityRequest(BaseModel):
    k: int = Field(1, ge=1)
    l: int = Field(0, ge=0)
    m: int = 0
    degree: int = Field(500, le=500)
    grid_r: int = Field(101, ge=2)
    grid_theta: int = Field(101, ge=2)

    @field_validator("degree")
    @classmethod
    def _even_degree(cls, value: int) -> int:
        if value < 2 or value % 2:
            raise ValueError("degree must be an even integer >= 2")
        return value

    @model_validator(mode="after")
    def _label_in_range(self) -> "DensityRequest":
        if abs(self.m) > self.l:
            raise ValueError(f"|m| = {abs(self.m)} exceeds l = {self.l}")
        return self


class DensityPoint(BaseModel):
    r: float
    theta: float
    density: float


class DensityResponse(BaseModel):
    schema_version: str = SCHEMA_VERSION
    k: int
    l: int
    m: int
    degree: int
    energy: float
    normalization: float
    grid_r: int
    grid_theta: int
    values: list[DensityPoint]


class CompareD1Request(BaseModel):
    degree: int = Field(500, le=500)
    count: int = Field(6, ge=1, le=6)

    @field_validator("degree")
    @classmethod
    def _even_degree(cls, value: int) -> int:
        if value < 2 or value % 2:
            raise ValueError("degree must be an even integer >= 2")
        return value


class CompareD1Row(BaseModel):
    k: int
    computed: float
    reference_variational: float | None
    reference_asymptotic: float | None
    diff_variational: float | None
    diff_asymptotic: float | None


class CompareD1Response(BaseModel):
    schema_version: str = SCHEMA_VERSION
    degree: int
    rows: list[CompareD1Row]


class OracleCheckRequest(BaseModel):
    l: int = Field(0, ge=0, le=4)
    j_max: int = Field(2, ge=0, le=4)
    points: list[float] = Field(default=[0.2, 0.5, 0.8], min_length=1)
    angular_order: int = Field(24, ge=4)
    radial_nodes: int = Field(48, ge=8)

    @field_validator("points")
    @classmethod
    def _points_in_domain(cls, values: list[float]) -> list[float]:
        if any(not 0.0 < p <= 0.9 for p in values):
            raise ValueError("evaluation points must lie in (0, 0.9]")
        return values


class OracleCheckRecord(BaseModel):
    l: int
    j: int
    p: float
    quadrature: float
    closed_form: float
    abs_error: float


class OracleCheckResponse(BaseModel):
    schema_version: str = SCHEMA_VERSION
    l: int
    j_max: int
    max_abs_error: float
    records: list[OracleCheckRecord]


class MatrixRequest(BaseModel):
    l: int = Field(0, ge=0)
    degree: int = Field(20, le=500)

    @field_validator("degree")
    @classmethod
    def _even_degree(cls, value: int) -> int:
        if value < 2 or value % 2:
            raise ValueError("degree must be an even integer >= 2")
        return value


class MatrixEntryModel(BaseModel):
    i: int
    k: int
    value: float


class MatrixResponse(BaseModel):
    schema_version: str = SCHEMA_VERSION
    l: int
    order: int
    entries: list[MatrixEntryModel]


class HealthResponse(BaseModel):
    status: str
    version: str
