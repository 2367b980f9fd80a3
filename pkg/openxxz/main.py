"""Command-line harness: `python -m openxxz <command> [options]`."""
import argparse
import sys

from pydantic import ValidationError

from openxxz.config import N_JOBS, REPORT_SCHEMA_VERSION
from openxxz.orchestrator.pipelines import build_pipeline
from openxxz.orchestrator.run_pipeline import run_pipeline
from openxxz.params.serialization import params_to_text
from openxxz.schemas.pipeline import COMMANDS, RunConfig
from openxxz.schemas.report import RunReport, complex_pair
from openxxz.utils.exceptions import ConfigError
from openxxz.utils.file_utils import summarize, write_report
from openxxz.utils.logger import logger

EXIT_OK, EXIT_FAILED, EXIT_CONFIG = 0, 1, 2


def build_arg_parser():
    parser = argparse.ArgumentParser(
        prog="openxxz",
        description="Numerical verification suites for the open XXZ chain with general boundaries.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--N", type=int, default=2, help="number of sites")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--trials", type=int, default=10, help="scalar-product trials")
    parser.add_argument("--precision", choices=("double", "extended"), default="double")
    parser.add_argument("--mode", choices=("inhomogeneous", "homogeneous"), default="inhomogeneous")
    parser.add_argument("--out", default=None, help="report path (default: $OPENXXZ_OUTPUT_DIR)")
    parser.add_argument("--jobs", type=int, default=N_JOBS, help="parallel workers for the trials")
    return parser


def config_from_args(args):
    try:
        return RunConfig(
            command=args.command,
            seed=args.seed,
            N=args.N,
            trials=args.trials,
            precision=args.precision,
            mode=args.mode,
            output_path=args.out,
            n_jobs=args.jobs,
        )
    except ValidationError as e:
        problems = "; ".join(
            f"{'.'.join(str(p) for p in err['loc']) or 'config'}: {err['msg']}" for err in e.errors()
        )
        raise ConfigError(f"Invalid configuration: {problems}")


def _root_set(roots):
    return {
        "eigen_index": roots.eigen_index,
        "roots": [complex_pair(r) for r in roots.roots],
        "U_values": [complex_pair(U) for U in roots.U_values],
        "residuals": list(roots.residuals),
        "onshell": roots.onshell,
    }


def build_report(config, context):
    checks = context.get("checks", [])
    return RunReport(
        schema_version=REPORT_SCHEMA_VERSION,
        command=config.command,
        seed=config.seed,
        N=config.N,
        trials=config.trials,
        precision=config.precision,
        mode=config.mode,
        params_text=params_to_text(context["params"]),
        checks=checks,
        trial_records=context.get("trial_records", []),
        root_sets=[_root_set(r) for r in context.get("roots", [])],
        warnings=context.get("warnings", []),
        passed=bool(checks) and all(c.passed for c in checks if c.hard),
    )


def run(config):
    """Run the suites for config.command. Returns (report, exit code)."""
    blocks = build_pipeline(config)
    logger.info(f"Running '{config.command}' with {len(blocks)} suites (N={config.N}, seed={config.seed})")

    context = run_pipeline(blocks)
    report = build_report(config, context)

    failed = [c.name for c in report.checks if c.hard and not c.passed]
    if failed:
        logger.error(f"Failed checks: {failed}. Reproduce with --seed {config.seed} --N {config.N}")
    return report, EXIT_OK if report.passed else EXIT_FAILED


def main(argv=None):
    args = build_arg_parser().parse_args(argv)

    try:
        config = config_from_args(args)
    except ConfigError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CONFIG

    try:
        report, code = run(config)
    except ValueError as e:
        logger.error(f"Run failed (seed={config.seed}, N={config.N}): {e}")
        print(f"error: {e} (seed {config.seed})", file=sys.stderr)
        return EXIT_FAILED

    write_report(report, config.output_path)
    print(summarize(report))
    if code != EXIT_OK:
        failed = ", ".join(c.name for c in report.checks if c.hard and not c.passed) or "no checks ran"
        print(f"error: failed checks: {failed} (seed {config.seed})", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
