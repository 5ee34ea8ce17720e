"""JSON state files.

Schema::

    {"n": int,
     "format": "matrix" | "coefficients",
     "matrix": [[[re, im], ...], ...],      # 2^n rows of 2^n entries
     "coefficients": [x_0..0, ..., x_3..3]}  # 4^n reals, big-endian order

Exactly one of ``matrix`` / ``coefficients`` is present and it must match
``format``.
"""

import json

import numpy as np

from .errors import ValidationError
from .pauli import decompose, reconstruct


class StateFileError(ValidationError):
    pass


def parse_state(payload):
    """Return ``(n, rho, x)`` from a decoded JSON object."""
    if not isinstance(payload, dict):
        raise StateFileError("state file must hold a JSON object")
    n = payload.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise StateFileError("'n' must be a positive integer")
    fmt = payload.get("format")
    present = [k for k in ("matrix", "coefficients") if k in payload]
    if len(present) != 1:
        raise StateFileError("exactly one of 'matrix' / 'coefficients' is required")
    if fmt != present[0]:
        raise StateFileError(f"'format' is {fmt!r} but the file holds {present[0]!r}")
    try:
        if fmt == "matrix":
            arr = np.asarray(payload["matrix"], dtype=float)
            if arr.shape != (2**n, 2**n, 2):
                raise StateFileError(
                    f"matrix must be {2**n}x{2**n} of [re, im] pairs, got {arr.shape}"
                )
            rho = arr[..., 0] + 1j * arr[..., 1]
            x = decompose(rho)
        else:
            x = np.asarray(payload["coefficients"], dtype=float)
            if x.shape != (4**n,):
                raise StateFileError(f"need {4**n} coefficients, got shape {x.shape}")
            rho = reconstruct(x)
    except (TypeError, ValueError) as exc:
        if isinstance(exc, StateFileError):
            raise
        raise StateFileError(str(exc)) from exc
    if not (np.all(np.isfinite(x)) and np.all(np.isfinite(rho))):
        raise StateFileError("state contains non-finite numbers")
    return n, rho, x


def load_state(path):
    with open(path, "rb") as fh:
        raw = fh.read()
    try:
        payload = json.loads(raw.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise StateFileError(f"cannot parse JSON: {exc}") from exc
    return parse_state(payload)


def state_payload(n, rho=None, x=None):
    if (rho is None) == (x is None):
        raise ValueError("pass exactly one of rho, x")
    if rho is not None:
        rho = np.asarray(rho, dtype=complex)
        rows = [[[float(z.real), float(z.imag)] for z in row] for row in rho]
        return {"n": n, "format": "matrix", "matrix": rows}
    return {"n": n, "format": "coefficients", "coefficients": [float(v) for v in x]}


def dump_state(path, n, rho=None, x=None):
    text = json.dumps(state_payload(n, rho=rho, x=x))
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text + "\n")
