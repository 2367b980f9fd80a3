import cmath
from typing import Literal, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from openxxz.config import GENERICITY_TOL


BOUNDARY_FIELDS = (
    "kappa", "kappa_tilde", "tau", "tau_tilde",
    "xi", "xi_tilde", "mu", "mu_tilde",
)


class BoundaryParams(BaseModel):
    """The eight fundamental boundary parameters. kappa, tau and their tilde
    partners are stored unsquared; the K-matrices use their squares."""

    model_config = ConfigDict(frozen=True)

    kappa: complex
    kappa_tilde: complex
    tau: complex
    tau_tilde: complex
    xi: complex
    xi_tilde: complex
    mu: complex
    mu_tilde: complex

    @field_validator(*BOUNDARY_FIELDS)
    @classmethod
    def _finite(cls, value, info):
        if not cmath.isfinite(value):
            raise ValueError(f"Boundary parameter '{info.field_name}' must be finite, got {value}")
        return value

    def zero_fields(self, names=BOUNDARY_FIELDS):
        return [name for name in names if getattr(self, name) == 0]

    def is_generic(self):
        return not self.zero_fields()

    def squares(self):
        """Off-diagonal K-matrix weights: tau^2, tau_tilde^2, kappa^2, kappa_tilde^2."""
        return {
            "tau": self.tau ** 2,
            "tau_tilde": self.tau_tilde ** 2,
            "kappa": self.kappa ** 2,
            "kappa_tilde": self.kappa_tilde ** 2,
        }


class ModelParams(BaseModel):
    model_config = ConfigDict(frozen=True)

    N: int = Field(ge=1)
    q: complex
    x: Tuple[complex, ...]
    boundary: BoundaryParams
    mode: Literal["inhomogeneous", "homogeneous"] = "inhomogeneous"

    @field_validator("q")
    @classmethod
    def _q_valid(cls, q):
        if q == 0 or not cmath.isfinite(q):
            raise ValueError(f"q must be finite and nonzero, got {q}")
        return q

    @model_validator(mode="after")
    def _check_genericity(self):
        if len(self.x) != self.N:
            raise ValueError(f"Expected {self.N} inhomogeneities, got {len(self.x)}")
        for i, xi in enumerate(self.x):
            if xi == 0 or not cmath.isfinite(xi):
                raise ValueError(f"Inhomogeneity x_{i + 1} must be finite and nonzero, got {xi}")

        if self.mode == "homogeneous":
            if any(xi != 1 for xi in self.x):
                raise ValueError("Homogeneous mode requires x_i = 1 for every site")
        else:
            for i in range(self.N):
                for j in range(i + 1, self.N):
                    a, b = self.x[i], self.x[j]
                    if abs(a - b) <= GENERICITY_TOL * max(abs(a), abs(b)):
                        raise ValueError(
                            f"Inhomogeneities x_{i + 1} and x_{j + 1} coincide ({a} vs {b})"
                        )

        # q^k - q^-k appears in denominators up to this order
        for k in range(1, 4 * self.N + 9):
            qk, qmk = self.q ** k, self.q ** (-k)
            if abs(qk - qmk) <= GENERICITY_TOL * (abs(qk) + abs(qmk)):
                raise ValueError(f"q = {self.q} is (close to) a root of unity of order {2 * k}")
        return self

    @property
    def x_array(self):
        return np.array(self.x, dtype=complex)

    def with_boundary(self, **changes):
        boundary = self.boundary.model_copy(update=changes)
        return self.model_copy(update={"boundary": boundary})


class SklyaninEntries(BaseModel):
    model_config = ConfigDict(frozen=True)

    nu_minus: complex
    nu_plus: complex
    eps_minus: complex
    eps_plus: complex


class HamiltonianCouplings(BaseModel):
    model_config = ConfigDict(frozen=True)

    epsilon: complex
    kappa_minus: complex
    kappa_plus: complex
    nu: complex
    tau_minus: complex
    tau_plus: complex


class ModifiedConstants(BaseModel):
    model_config = ConfigDict(frozen=True)

    alpha: complex
    beta: complex
    q: complex

    def gamma(self, m):
        return self.alpha * self.q ** (-m) - self.beta * self.q ** m

    def gamma_scale(self, m):
        return abs(self.alpha * self.q ** (-m)) + abs(self.beta * self.q ** m)
