"""Scalar structure functions of the spectral problem.

Everything is a function of u through U(u) = (q u^2 + q^-1 u^-2)/(q - q^-1)^2,
except F(u) and dU(u).
"""
from typing import Tuple

from pydantic import BaseModel, ConfigDict

from openxxz.operators.monodromy import check_crossing
from openxxz.schemas.params import ModelParams


class SpectralContext(BaseModel):
    model_config = ConfigDict(frozen=True)

    params: ModelParams
    q: complex
    d: complex
    x: Tuple[complex, ...]
    phi_prefactor: complex
    h_coefficient: complex

    @classmethod
    def from_params(cls, m):
        b = m.boundary
        q, N = m.q, m.N
        cross = b.kappa * b.kappa_tilde * b.tau * b.tau_tilde
        h_coefficient = (
            (b.kappa * b.tau) ** 2
            + (b.kappa_tilde * b.tau_tilde) ** 2
            + cross * (
                b.xi * b.mu_tilde / (b.xi_tilde * b.mu) * q ** (N + 1)
                + b.xi_tilde * b.mu / (b.xi * b.mu_tilde) * q ** (-N - 1)
            )
        )
        return cls(
            params=m,
            q=q,
            d=q - 1 / q,
            x=m.x,
            phi_prefactor=-cross,
            h_coefficient=h_coefficient,
        )

    @property
    def N(self):
        return self.params.N

    def F(self, u):
        q = self.q
        return (q ** 2 * u ** 2 - q ** -2 * u ** -2) / (u * self.d)

    def U(self, u):
        q = self.q
        return (q * u ** 2 + 1 / (q * u ** 2)) / self.d ** 2

    def dU(self, u):
        q = self.q
        return 2 * (q * u ** 2 - 1 / (q * u ** 2)) / (self.d ** 2 * u)

    def Q(self, u, v):
        return self.U(u) - self.U(v)

    def Q_set(self, a, roots):
        """Q(a, u-bar) = prod_j Q(a, u_j); 1 for the empty set."""
        Ua = self.U(a)
        out = 1.0 + 0j
        for r in roots:
            out *= Ua - self.U(r)
        return out

    def V(self, u):
        # Q(q^{1/2} u, q^{-1/2} x_i) without square roots of q
        q = self.q
        shifted = (q ** 2 * u ** 2 + q ** -2 * u ** -2) / self.d ** 2
        out = 1.0 + 0j
        for xi in self.x:
            out *= shifted - (xi ** 2 + xi ** -2) / self.d ** 2
        return out

    def phi(self, u):
        check_crossing(u, self.q)
        b = self.params.boundary
        q = self.q
        return (
            self.phi_prefactor
            * (b.xi_tilde * u + 1 / (b.xi_tilde * u))
            * (u / b.xi + b.xi / u)
            * (b.mu * u + 1 / (b.mu * u))
            * (u / b.mu_tilde + b.mu_tilde / u)
            * (q ** 2 * u ** 2 - q ** -2 * u ** -2)
            / (q * u ** 2 - 1 / (q * u ** 2))
            * self.V(u)
        )

    def phi_crossed(self, u):
        """phi(q^-1 u^-1)."""
        return self.phi(1 / (self.q * u))

    def H(self, u):
        q = self.q
        return (
            self.h_coefficient
            * (u ** 2 - u ** -2)
            * (q ** 2 * u ** 2 - q ** -2 * u ** -2)
            * self.V(u)
            * self.V(1 / (q * u))
        )


def eval_structure_functions(u, v, ctx):
    if u == 0:
        raise ValueError("Structure functions need u != 0")
    values = {"F": ctx.F(u), "U": ctx.U(u), "V": ctx.V(u), "Q": None}
    if v is not None:
        values["Q"] = ctx.Q(u, v)
    return values


def eval_phi_H(u, ctx):
    return {"phi": ctx.phi(u), "Hfun": ctx.H(u)}
