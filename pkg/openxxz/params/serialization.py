"""Flat key-value text blocks for parameters and root sets.

Floats are written with repr(), which round-trips exactly.
"""
from openxxz.schemas.params import BOUNDARY_FIELDS, BoundaryParams, ModelParams
from openxxz.schemas.roots import BetheRoots


def _put_complex(lines, key, value):
    value = complex(value)
    lines.append(f"{key}_re={value.real!r}")
    lines.append(f"{key}_im={value.imag!r}")


def _get_complex(entries, key):
    return complex(float(entries[f"{key}_re"]), float(entries[f"{key}_im"]))


def parse_key_values(text):
    entries = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"Malformed line (expected key=value): '{line}'")
        key, value = line.split("=", 1)
        entries[key.strip()] = value.strip()
    return entries


def params_to_text(m):
    lines = [f"N={m.N}", f"mode={m.mode}"]
    _put_complex(lines, "q", m.q)
    for i, xi in enumerate(m.x, start=1):
        _put_complex(lines, f"x_{i}", xi)
    for name in BOUNDARY_FIELDS:
        _put_complex(lines, name, getattr(m.boundary, name))
    return "\n".join(lines) + "\n"


def params_from_text(text):
    entries = parse_key_values(text)
    try:
        N = int(entries["N"])
        boundary = BoundaryParams(**{name: _get_complex(entries, name) for name in BOUNDARY_FIELDS})
        return ModelParams(
            N=N,
            q=_get_complex(entries, "q"),
            x=tuple(_get_complex(entries, f"x_{i}") for i in range(1, N + 1)),
            boundary=boundary,
            mode=entries.get("mode", "inhomogeneous"),
        )
    except KeyError as e:
        raise ValueError(f"Parameter block is missing key {e}")


def roots_to_text(roots):
    lines = [f"N={roots.N}", f"onshell={int(roots.onshell)}"]
    _put_complex(lines, "q", roots.q)
    lines.append(f"eigen_index={'' if roots.eigen_index is None else roots.eigen_index}")
    for i, u in enumerate(roots.roots, start=1):
        _put_complex(lines, f"root_{i}", u)
    for i, r in enumerate(roots.residuals, start=1):
        lines.append(f"residual_{i}={float(r)!r}")
    for i, U in enumerate(roots.U_values, start=1):
        _put_complex(lines, f"U_{i}", U)
    lines.append(f"lift_rule={roots.lift_rule}")
    return "\n".join(lines) + "\n"


def roots_from_text(text):
    entries = parse_key_values(text)
    try:
        N = int(entries["N"])
        count = sum(1 for key in entries if key.startswith("root_") and key.endswith("_re"))
        residual_count = sum(1 for key in entries if key.startswith("residual_"))
        U_count = sum(1 for key in entries if key.startswith("U_") and key.endswith("_re"))
        index = entries.get("eigen_index", "")
        return BetheRoots(
            N=N,
            q=_get_complex(entries, "q"),
            roots=tuple(_get_complex(entries, f"root_{i}") for i in range(1, count + 1)),
            residuals=tuple(float(entries[f"residual_{i}"]) for i in range(1, residual_count + 1)),
            onshell=bool(int(entries["onshell"])),
            eigen_index=int(index) if index else None,
            U_values=tuple(_get_complex(entries, f"U_{i}") for i in range(1, U_count + 1)),
            lift_rule=entries.get("lift_rule", "largest-modulus"),
        )
    except KeyError as e:
        raise ValueError(f"Roots block is missing key {e}")


def vector_to_text(vector):
    lines = [f"side={vector.side}", "m_sequence=" + ",".join(str(k) for k in vector.m_sequence)]
    lines.append(f"dim={len(vector.components)}")
    for i, c in enumerate(vector.components):
        _put_complex(lines, f"c_{i}", c)
    return roots_to_text(vector.params) + "\n".join(lines) + "\n"
