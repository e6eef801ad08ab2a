from fractions import Fraction
from typing import Annotated, List, Optional

from pydantic import BaseModel, BeforeValidator, Field


def _rational_text(value) -> str:
    if isinstance(value, (Fraction, int)):
        return str(Fraction(value))
    return str(Fraction(str(value)))


# Exact rationals cross the schema boundary as "p" or "p/q" strings
Rational = Annotated[str, BeforeValidator(_rational_text)]


class TransformReport(BaseModel):
    """Spherical transform of one input function"""
    n: int
    lambda1: Rational = Field(..., description="Average over S_n")
    lambda2: Rational = Field(..., description="Average over S_n tau_{1,n+1} S_n")
    fhat: Rational = Field(..., description="(lambda1 - lambda2) / (n+1)")
    coef_trivial: Rational = Field(..., description="<f, 1>")
    coef_phi: Rational = Field(..., description="<f, phi_n>")
    biinvariant: bool
    round_trip: str = Field(..., description="'exact', 'failed' or 'n/a (projected)'")


class CheckResult(BaseModel):
    name: str
    group: str = Field(..., description="Identity family the check belongs to")
    n: Optional[int] = None
    passed: bool
    detail: str = ""


class ResidualRow(BaseModel):
    n: int
    label: str
    residual: Rational


class VerificationReport(BaseModel):
    n_max: int
    checks: List[CheckResult] = []
    residuals: List[ResidualRow] = Field(default_factory=list, description="Reported, never gating")
    corrupted: Optional[str] = Field(None, description="Name of the deliberately corrupted constant")

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]


class HeatReport(BaseModel):
    n: int
    steps: int
    matches_iteration: bool = Field(..., description="Closed form agrees with explicit iteration")
    total_mass: Rational


class CosetRadonRow(BaseModel):
    label: int
    representative: str
    value: Rational


class CosetRadonReport(BaseModel):
    n: int
    rows: List[CosetRadonRow]


class DivisorRadonRow(BaseModel):
    index: int
    value: float
    reference: Optional[float] = Field(None, description="Input value f(index), invert mode only")


class DivisorRadonReport(BaseModel):
    mode: str
    truncation: int
    rows: List[DivisorRadonRow]
    decay_exponent: Optional[float] = None
    tail_bound: Optional[float] = Field(None, description="c N^(-1-eps) guidance at index 1")
    max_error: Optional[float] = None


class ShapeSummary(BaseModel):
    shape: str
    standard_tableaux: int
    row_stabilizer: int
    column_stabilizer: int
    support: int = Field(..., description="Support size of e_t for the superstandard tableau")
    idempotency: Rational = Field(..., description="lambda_t with e_t * e_t = lambda_t e_t")
    dimension: int = Field(..., description="Dimension of the left ideal generated by e_t")


class TableauxReport(BaseModel):
    n: int
    shapes: List[ShapeSummary]
    sum_of_squares: int
    group_order: int
