"""Randomized sweep of the determinant formula over off-shell u and every
solved on-shell v, with the eta branch locked on the first resolved trial."""
import numpy as np
from joblib import Parallel, delayed

from openxxz.config import CONDITION_LIMIT, DET_L_TOL, MAX_RESAMPLE, SCALAR_TOL
from openxxz.evaluation.metrics import column_scaled_det
from openxxz.params.sampling import sample_offshell_roots, suite_rng, trial_rng
from openxxz.scalar.formula import orbit_consistency, permutation_consistency, scalar_product_determinant
from openxxz.scalar.system import build_linear_system
from openxxz.schemas.report import CheckRecord, TrialRecord, complex_pair
from openxxz.spectral.functions import SpectralContext
from openxxz.spectral.solver import solved_roots
from openxxz.utils.exceptions import IllConditioned
from openxxz.utils.logger import logger

BRANCHES = (1, -1)


def _draw_well_conditioned(m, v, rng, ctx, branch, dtype):
    """Off-shell u (plus one extra parameter for the linear system) and the
    scalar result, resampled while cond(M) exceeds CONDITION_LIMIT."""
    for attempt in range(MAX_RESAMPLE):
        u_ext = sample_offshell_roots(rng, m.N + 1, ctx, avoid=v.roots)
        u = u_ext[:-1]
        results = {b: scalar_product_determinant(u, v, m, b, dtype, ctx) for b in branch}
        cond = next(iter(results.values())).condition
        if cond <= CONDITION_LIMIT:
            return u_ext, results
        logger.warning(f"Resampling u (attempt {attempt + 1}): cond(M) = {cond:.2e}")
    raise IllConditioned(f"No well-conditioned draw after {MAX_RESAMPLE} attempts", condition=cond)


def run_trial(index, m, v, seed, branches, dtype=complex):
    """One trial; `branches` holds the eta branches to evaluate. Returns the
    record for the best branch."""
    ctx = SpectralContext.from_params(m)
    rng = trial_rng(seed, index)
    try:
        u_ext, results = _draw_well_conditioned(m, v, rng, ctx, branches, dtype)
    except IllConditioned as e:
        return TrialRecord(
            index=index, seed=seed, N=m.N, eigen_index=v.eigen_index, branch=branches[0],
            relative_error=float("nan"), condition=e.condition or float("nan"), passed=False, note=str(e),
        )

    branch = min(results, key=lambda b: results[b].relative_error)
    result = results[branch]
    system = build_linear_system(u_ext, v.roots, ctx, rng=rng)
    residuals = {
        "det_L": column_scaled_det(system.L),
        "onshell": max(v.residuals) if v.residuals else 0.0,
    }
    return TrialRecord(
        index=index,
        seed=seed,
        N=m.N,
        eigen_index=v.eigen_index,
        branch=branch,
        relative_error=result.relative_error,
        condition=result.condition,
        residuals=residuals,
        passed=result.relative_error <= SCALAR_TOL,
        roots_u=[complex_pair(u) for u in u_ext[:-1]],
        roots_v=[complex_pair(r) for r in v.roots],
    )


def run_scalar_trials(m, roots, seed, trials, n_jobs=1, dtype=complex):
    """Trial t pairs with roots[t mod len(roots)]. Returns (records, branch)."""
    if not roots:
        raise ValueError("Scalar trials need at least one solved on-shell root set")

    # Both branches are tried until a trial resolves; only then is the branch locked
    records, branch, start = [], None, 0
    while branch is None and start < trials:
        record = run_trial(start, m, roots[start % len(roots)], seed, BRANCHES, dtype)
        records.append(record)
        if np.isfinite(record.relative_error):
            branch = record.branch
            logger.info(
                f"eta branch locked to {branch:+d} "
                f"(trial {start} relative error {record.relative_error:.3e})"
            )
        start += 1
    if branch is None:
        branch = BRANCHES[0]
        logger.error(f"No trial resolved; eta branch left at {branch:+d}")

    pending = range(start, trials)
    rest = Parallel(n_jobs=n_jobs, backend="loky", verbose=0)(
        map(
            delayed(run_trial),
            pending,
            [m] * len(pending),
            [roots[t % len(roots)] for t in pending],
            [seed] * len(pending),
            [(branch,)] * len(pending),
            [dtype] * len(pending),
        )
    )
    records.extend(rest)
    failed = [r.index for r in records if not r.passed]
    if failed:
        logger.error(f"Scalar trials failed: {failed}")
    return records, branch


def scalar_trial_checks(records):
    """Unresolved trials (NaN error) count as failures."""
    errors = [r.relative_error if np.isfinite(r.relative_error) else np.inf for r in records]
    det_L = max((r.residuals.get("det_L", 0.0) for r in records), default=0.0)
    branch = next((r.branch for r in records if np.isfinite(r.relative_error)), records[0].branch)
    return [
        CheckRecord.below("scalar_product", "scalar", max(errors), SCALAR_TOL,
                          trials=len(records), branch=branch),
        CheckRecord.below("trial_det_L", "det_L", det_L, DET_L_TOL),
    ]


def execute_scalar_trials_block(block, context):
    m, ctx, dtype = context["params"], context["ctx"], context["dtype"]
    seed = context["seed"]
    roots = solved_roots(context)
    records, branch = run_scalar_trials(
        m, roots, seed,
        block.params.get("trials", 10),
        block.params.get("n_jobs", 1),
        dtype,
    )
    checks = scalar_trial_checks(records)

    # Reordering and crossing the off-shell set must leave the formula intact
    rng = suite_rng(seed, "scalar_trials")
    u = sample_offshell_roots(rng, m.N, ctx, avoid=roots[0].roots)
    checks.extend(orbit_consistency(u, roots[0], m, branch=branch))
    if m.N <= block.params.get("permutation_max_N", 4):
        checks.extend(permutation_consistency(u, roots[0], m, branch=branch))

    context["checks"].extend(checks)
    context["trial_records"] = records
    context["branch"] = branch
    return context
