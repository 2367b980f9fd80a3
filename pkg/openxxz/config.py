import os

import numpy as np

# ===================== Genericity =====================

GENERICITY_TOL = 1e-6
MAX_RESAMPLE = 50

# ===================== Acceptance tolerances =====================

ALGEBRA_TOL = 1e-12
HAMILTONIAN_TOL = 1e-10
ONSHELL_TOL = 1e-8
EIGENVALUE_TOL = 1e-8
OFFSHELL_TOL = 1e-9
DET_L_TOL = 1e-9
IDENTITY_TOL = 1e-11
CROSSCHECK_TOL = 1e-9
DET_B_TOL = 1e-10
ROUTE_TOL = 1e-8
NU_TOL = 1e-10
DOLAN_GRADY_TOL = 1e-10
A_EIGEN_TOL = 1e-12
SCALAR_TOL = 1e-7
COFACTOR_TOL = 1e-7
PERMUTATION_TOL = 1e-9
ASYMPTOTIC_TOL = 1e-3
ASYBB_TOL = 1e-4
CONDITION_LIMIT = 1e10

# Two-magnitude decay fits accept a factor of this much around the predicted ratio.
DECAY_FACTOR = 10.0

# ===================== Run defaults =====================

REPORT_SCHEMA_VERSION = 1
OUTPUT_DIR = os.environ.get(
    "OPENXXZ_OUTPUT_DIR", os.path.join(os.getcwd(), "reports")
)
N_JOBS = int(os.environ.get("OPENXXZ_N_JOBS", "1"))
MAX_SITES = 6

PRECISION_DTYPES = {
    "double": np.complex128,
    "extended": np.clongdouble,
}


def dtype_for(precision):
    if precision not in PRECISION_DTYPES:
        raise ValueError(
            f"Unknown precision '{precision}'. Available: {list(PRECISION_DTYPES)}"
        )
    return PRECISION_DTYPES[precision]
