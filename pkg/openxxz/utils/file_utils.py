import json
import os

import pandas as pd

from openxxz.config import OUTPUT_DIR
from openxxz.utils.logger import logger


def default_report_path(report):
    name = f"{report.command}_N{report.N}_seed{report.seed}_{report.precision}.json"
    return os.path.join(OUTPUT_DIR, name)


def write_report(report, path=None):
    """One JSON file per run. No timestamps: identical runs give identical bytes."""
    path = path or default_report_path(report)
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, "w") as f:
        json.dump(report.model_dump(mode="json"), f, indent=2)
        f.write("\n")
    logger.info(f"Report written to {path}")
    return path


def summarize(report):
    """Fixed-width table of the check records."""
    if not report.checks:
        return "(no checks)"
    df = pd.DataFrame([
        {
            "check": c.name,
            "family": c.family,
            "value": f"{c.value:.3e}",
            "tolerance": f"{c.tolerance:.1e}",
            "status": "pass" if c.passed else ("FAIL" if c.hard else "warn"),
        }
        for c in report.checks
    ])
    lines = [df.to_string(index=False)]
    if report.trial_records:
        errors = pd.Series([r.relative_error for r in report.trial_records])
        lines.append(
            f"scalar trials: {len(errors)}, max relative error {errors.max():.3e}, "
            f"failed {sum(not r.passed for r in report.trial_records)}"
        )
    lines.append(f"verdict: {'PASS' if report.passed else 'FAIL'}")
    return "\n".join(lines)
