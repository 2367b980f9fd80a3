from typing import Literal, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from openxxz.config import GENERICITY_TOL, ONSHELL_TOL


def _U(u, q):
    return (q * u ** 2 + 1 / (q * u ** 2)) / (q - 1 / q) ** 2


class BetheRoots(BaseModel):
    """Ordered Bethe parameters. `residuals` are the scaled |Y(u_i|u)| values
    (empty for an off-shell set nobody checked)."""

    model_config = ConfigDict(frozen=True)

    N: int
    q: complex
    roots: Tuple[complex, ...]
    residuals: Tuple[float, ...] = ()
    onshell: bool = False
    eigen_index: Optional[int] = None
    U_values: Tuple[complex, ...] = ()
    lift_rule: str = "largest-modulus"

    @model_validator(mode="after")
    def _check(self):
        U = [_U(u, self.q) for u in self.roots]
        for i in range(len(U)):
            for j in range(i + 1, len(U)):
                if abs(U[i] - U[j]) <= GENERICITY_TOL * (abs(U[i]) + abs(U[j])):
                    raise ValueError(f"Roots u_{i + 1} and u_{j + 1} coincide in U")
        if self.residuals:
            expected = max(self.residuals) <= ONSHELL_TOL
            if self.onshell != expected:
                raise ValueError(
                    f"onshell={self.onshell} contradicts max residual {max(self.residuals):.3e}"
                )
        elif self.onshell:
            raise ValueError("An on-shell root set must carry its residuals")
        return self

    @property
    def M(self):
        return len(self.roots)


class BetheVector(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    components: np.ndarray
    params: BetheRoots
    side: Literal["ket", "bra"]
    m_sequence: Tuple[int, ...]

    @model_validator(mode="after")
    def _check(self):
        N = self.params.N
        if self.side == "ket":
            expected = tuple(2 * (N - i) for i in range(1, N + 1))
        else:
            expected = tuple(2 * i for i in range(1, N + 1))
        if self.m_sequence != expected:
            raise ValueError(f"{self.side} m-sequence must be {expected}, got {self.m_sequence}")
        if self.components.shape != (2 ** N,):
            raise ValueError(f"Expected a vector of length {2 ** N}, got shape {self.components.shape}")
        return self

    def norm(self):
        return float(np.linalg.norm(self.components.astype(complex)))
