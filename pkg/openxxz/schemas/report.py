import math
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field


def complex_pair(value):
    value = complex(value)
    return [value.real, value.imag]


class CheckRecord(BaseModel):
    name: str
    family: str
    value: float
    tolerance: float
    passed: bool
    hard: bool = True
    detail: Dict[str, Any] = {}

    @classmethod
    def below(cls, name, family, value, tolerance, hard=True, **detail):
        """Passes when `value` is finite and <= tolerance."""
        value = float(value)
        passed = math.isfinite(value) and value <= tolerance
        return cls(
            name=name, family=family, value=value, tolerance=tolerance,
            passed=passed, hard=hard, detail=detail,
        )


class VerificationReport(BaseModel):
    name: str
    checks: List[CheckRecord] = Field(default_factory=list)

    @property
    def passed(self):
        return all(c.passed for c in self.checks if c.hard)

    def add(self, check):
        self.checks.append(check)
        return check

    def extend(self, checks):
        self.checks.extend(checks)

    def check(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def max_value(self, family):
        values = [c.value for c in self.checks if c.family == family]
        return max(values) if values else float("nan")

    @staticmethod
    def worst(checks):
        """One record per check name: the failing one if any, else the largest value."""
        out = {}
        for c in checks:
            kept = out.get(c.name)
            if kept is None or (kept.passed and (not c.passed or c.value > kept.value)):
                out[c.name] = c
        return list(out.values())


class ScalarResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    lhs_direct: complex
    rhs_determinant: complex
    eta: complex
    relative_error: float
    branch: int = 1
    bra_overlap: complex = 0j
    det_M: complex = 0j
    condition: float = float("nan")

    @classmethod
    def from_sides(cls, lhs, rhs, eta, **extra):
        scale = max(abs(lhs), abs(rhs))
        error = abs(lhs - rhs) / scale if scale > 0 else 0.0
        return cls(lhs_direct=lhs, rhs_determinant=rhs, eta=eta, relative_error=error, **extra)


class TrialRecord(BaseModel):
    index: int
    seed: int
    N: int
    eigen_index: int
    branch: int
    relative_error: float
    condition: float
    residuals: Dict[str, float] = {}
    passed: bool
    roots_u: List[List[float]] = []
    roots_v: List[List[float]] = []
    note: Optional[str] = None


class RunReport(BaseModel):
    schema_version: int
    command: str
    seed: int
    N: int
    trials: int
    precision: str
    mode: str
    params_text: str
    checks: List[CheckRecord] = Field(default_factory=list)
    trial_records: List[TrialRecord] = Field(default_factory=list)
    root_sets: List[Dict[str, Any]] = Field(default_factory=list)
    warnings: List[str] = Field(default_factory=list)
    passed: bool = False
