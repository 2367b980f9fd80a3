from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field, field_validator

from openxxz.config import MAX_SITES, N_JOBS


COMMANDS = ("verify-axioms", "solve", "scalar-product", "asymptotics", "full-report")


class SuiteBlock(BaseModel):
    id: str
    type: str
    params: Dict[str, Any] = {}
    inputs: List[str] = []


class RunConfig(BaseModel):
    command: Literal["verify-axioms", "solve", "scalar-product", "asymptotics", "full-report"]
    seed: int = 0
    N: int = 2
    trials: int = Field(default=10, ge=1)
    precision: Literal["double", "extended"] = "double"
    mode: Literal["inhomogeneous", "homogeneous"] = "inhomogeneous"
    output_path: Optional[str] = None
    n_jobs: int = Field(default=N_JOBS, ge=1)

    @field_validator("N")
    @classmethod
    def _sites_in_range(cls, N):
        if not 1 <= N <= MAX_SITES:
            raise ValueError(f"N must lie in [1, {MAX_SITES}], got {N}")
        return N
