import numpy as np

from openxxz.config import GENERICITY_TOL, MAX_RESAMPLE, dtype_for
from openxxz.params.boundary import (
    derive_hamiltonian_couplings,
    modified_constants,
    scalar_pochhammer_arguments,
)
from openxxz.params.qspecial import require_nonvanishing_pochhammer
from openxxz.schemas.params import BOUNDARY_FIELDS, BoundaryParams, ModelParams
from openxxz.spectral.functions import SpectralContext
from openxxz.utils.exceptions import GenericityFailure
from openxxz.utils.logger import logger

# Relative U-separation demanded between sampled spectral parameters
U_SEPARATION = 1e-3

SUITE_STREAMS = {
    "yang_baxter": 0,
    "reflection": 1,
    "transfer_family": 2,
    "solve": 3,
    "offshell": 4,
    "linear_system": 5,
    "determinant_routes": 6,
    "scalar_trials": 7,
}


def trial_rng(seed, index):
    """Independent, reproducible substream for trial `index` of run `seed`."""
    return np.random.default_rng([seed, index])


def suite_rng(seed, suite):
    """Substream for the randomized draws of one verification suite, disjoint
    from the trial substreams."""
    return np.random.default_rng([seed, SUITE_STREAMS[suite], 1])


def _polar(rng, r_min, r_max, phase_min=0.0, phase_max=2 * np.pi):
    r = rng.uniform(r_min, r_max)
    return complex(r * np.exp(1j * rng.uniform(phase_min, phase_max)))


def _draw_params(rng, N, mode):
    q = _polar(rng, 0.5, 2.0, 0.15, np.pi / 2 - 0.15)
    boundary = BoundaryParams(**{name: _polar(rng, 0.5, 2.0) for name in BOUNDARY_FIELDS})
    if mode == "homogeneous":
        x = tuple(1.0 + 0j for _ in range(N))
    else:
        x = tuple(_polar(rng, 0.8, 1.25, -np.pi / 4, np.pi / 4) for _ in range(N))
    return ModelParams(N=N, q=q, x=x, boundary=boundary, mode=mode)


def check_generic(m):
    """Raise ValueError (or a subclass) when m sits on a degenerate point."""
    if not m.boundary.is_generic():
        raise ValueError(f"Zero boundary parameters: {m.boundary.zero_fields()}")
    derive_hamiltonian_couplings(m)
    modified_constants(m)
    for label, (b, base, n) in scalar_pochhammer_arguments(m).items():
        require_nonvanishing_pochhammer(b, base, n, label)
    return m


def sample_generic_params(seed, N, mode="inhomogeneous", max_tries=MAX_RESAMPLE):
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")

    rng = np.random.default_rng(seed)
    last_error = None
    for attempt in range(max_tries):
        try:
            return check_generic(_draw_params(rng, N, mode))
        except ValueError as e:
            last_error = e
            logger.warning(f"Resampling parameters (seed={seed}, attempt {attempt + 1}): {e}")

    raise GenericityFailure(
        f"No generic parameters after {max_tries} draws (seed={seed}, N={N}): {last_error}"
    )


def _separated(ctx, u, others):
    Uu = ctx.U(u)
    for w in others:
        Uw = ctx.U(w)
        if abs(Uu - Uw) <= U_SEPARATION * (abs(Uu) + abs(Uw)):
            return False
    return True


def sample_offshell_roots(rng, count, ctx, avoid=(), radius=(0.7, 1.4), max_tries=MAX_RESAMPLE * 20):
    """Draw `count` generic spectral parameters, pairwise separated in U and
    separated from `avoid`, away from the crossing pole and the zeros of F."""
    q = ctx.q
    roots = []
    for _ in range(max_tries):
        if len(roots) == count:
            break
        u = _polar(rng, *radius)
        pole = q * u ** 2 - 1 / (q * u ** 2)
        if abs(pole) <= U_SEPARATION * (abs(q * u ** 2) + abs(1 / (q * u ** 2))):
            continue
        zero_f = q ** 2 * u ** 2 - 1 / (q ** 2 * u ** 2)
        if abs(zero_f) <= U_SEPARATION * (abs(q * u) ** 2 + abs(q * u) ** -2):
            continue
        if not _separated(ctx, u, list(roots) + list(avoid)):
            continue
        roots.append(u)

    if len(roots) < count:
        raise GenericityFailure(f"Could not sample {count} separated spectral parameters")
    return tuple(roots)


def is_separated(ctx, values, tol=GENERICITY_TOL):
    values = list(values)
    for i, a in enumerate(values):
        for b in values[i + 1:]:
            Ua, Ub = ctx.U(a), ctx.U(b)
            if abs(Ua - Ub) <= tol * (abs(Ua) + abs(Ub)):
                return False
    return True


def execute_params_block(block, context):
    seed = block.params.get("seed", 0)
    N = block.params.get("N", 2)
    mode = block.params.get("mode", "inhomogeneous")
    precision = block.params.get("precision", "double")

    m = sample_generic_params(seed, N, mode)
    logger.info(f"Sampled generic parameters: N={N}, mode={mode}, q={m.q:.6f}")

    context["seed"] = seed
    context["params"] = m
    context["ctx"] = SpectralContext.from_params(m)
    context["dtype"] = dtype_for(precision)
    context.setdefault("checks", [])
    context.setdefault("warnings", [])
    return context
