"""Command-line front end.

Every command prints one JSON report on stdout.  Exit codes: 0 success
(or "equivalent"), 1 internal error, 2 invalid input, 3 "distinct",
4 "inconclusive".
"""

import argparse
import hashlib
import json
import os
import sys
import time
import warnings

import numpy as np

from .discovery import KERNEL_TOL, SIZE_BUDGET, invariant_kernel
from .errors import EntclassError
from .invariants import invariants, two_qubit_blocks
from .orbit import SearchConfig, locally_equivalent, random_state
from .pauli import index_label, reconstruct
from .statefile import dump_state, load_state
from .tangent import RANK_TOL, orbit_dimension

EXIT_OK, EXIT_INTERNAL, EXIT_INPUT, EXIT_DISTINCT, EXIT_INCONCLUSIVE = 0, 1, 2, 3, 4
PURE_TOL = 1e-9


class InputError(Exception):
    pass


def _digest(paths):
    h = hashlib.sha256()
    for p in paths:
        with open(p, "rb") as fh:
            h.update(fh.read())
    return h.hexdigest()


def _seed(args):
    if args.seed is not None:
        return args.seed
    env = os.environ.get("ENTANGLE_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError as exc:
        raise InputError(f"ENTANGLE_SEED={env!r} is not an integer") from exc


def _load(path):
    try:
        return load_state(path)
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from exc
    except EntclassError as exc:
        raise InputError(f"{path}: {exc}") from exc


def cmd_decompose(args):
    n, _, x = _load(args.state)
    res = {
        "n": n,
        "coefficients": x.tolist(),
        "labels": [index_label(a, n) for a in range(4**n)],
    }
    if n == 2:
        b = two_qubit_blocks(x)
        res["blocks"] = {
            "x00": b.x00,
            "x0*": b.x0s.tolist(),
            "x*0": b.xs0.tolist(),
            "x**": b.xss.tolist(),
        }
    return EXIT_OK, res, {}, None, [args.state]


def cmd_dim(args):
    n, _, x = _load(args.state)
    return (
        EXIT_OK,
        {"n": n, "orbit_dimension": orbit_dimension(x, args.tol)},
        {"rank_tol": args.tol},
        None,
        [args.state],
    )


def cmd_invariants(args):
    n, _, x = _load(args.state)
    rec = invariants(x)
    res = {"n": n, "complete": rec.complete, "invariants": rec.as_dict()}
    return EXIT_OK, res, {}, None, [args.state]


def cmd_equiv(args):
    na, _, xa = _load(args.a)
    nb, _, xb = _load(args.b)
    if na != nb:
        raise InputError(f"qubit counts differ: {na} vs {nb}")
    seed = _seed(args)
    cfg = SearchConfig(restarts=args.restarts, seed=seed, distance_tol=args.tol)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        try:
            v = locally_equivalent(xa, xb, cfg)
        except EntclassError as exc:
            raise InputError(str(exc)) from exc
    code = {"equivalent": EXIT_OK, "distinct": EXIT_DISTINCT}.get(v.status, EXIT_INCONCLUSIVE)
    res = {
        "status": v.status,
        "distance": None if np.isnan(v.distance) else v.distance,
        "witness": None if v.witness is None else v.witness.tolist(),
        "separating_invariant": v.separating_invariant,
    }
    tols = {
        "distance_tol": cfg.distance_tol,
        "invariant_tol": cfg.invariant_tol,
        "restarts": cfg.restarts,
    }
    return code, res, tols, seed, [args.a, args.b]


def cmd_discover(args):
    if args.n < 1 or args.degree < 1:
        raise InputError("--n and --degree must be >= 1")
    try:
        polys = invariant_kernel(args.n, args.degree, tol=args.tol, budget=args.budget)
    except EntclassError as exc:
        raise InputError(str(exc)) from exc
    res = {
        "n": args.n,
        "degree": args.degree,
        "kernel_dimension": len(polys),
        "invariants": [p.to_json() for p in polys],
        "pretty": [p.pretty() for p in polys],
    }
    return EXIT_OK, res, {"kernel_tol": args.tol, "budget": args.budget}, None, []


def cmd_bloch(args):
    n, _, x = _load(args.state)
    if n != 1:
        raise InputError(f"bloch needs a 1-qubit state, got n={n}")
    r = float(np.linalg.norm(x[1:]))
    if r <= PURE_TOL:
        kind = "maximally mixed"
    elif abs(r - 1.0) <= PURE_TOL:
        kind = "pure"
    else:
        kind = "mixed"
    res = {"bloch": x[1:].tolist(), "radius": r, "class": kind}
    return EXIT_OK, res, {"class_tol": PURE_TOL}, None, [args.state]


def cmd_random(args):
    if args.n < 1:
        raise InputError("--n must be >= 1")
    seed = _seed(args)
    x = random_state(args.n, "pure" if args.pure else "mixed", seed=seed)
    dump_state(args.out, args.n, rho=reconstruct(x))
    res = {"n": args.n, "purity": "pure" if args.pure else "mixed", "out": args.out}
    return EXIT_OK, res, {}, seed, [args.out]


def build_parser():
    parser = argparse.ArgumentParser(
        prog="entclass",
        description="Local-unitary classification of n-qubit states.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="coefficients over the Pauli-tensor basis")
    p.add_argument("--state", required=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("dim", help="dimension of the local-unitary orbit")
    p.add_argument("--state", required=True)
    p.add_argument("--tol", type=float, default=RANK_TOL)
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("invariants", help="closed-form invariants (n <= 2)")
    p.add_argument("--state", required=True)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("equiv", help="decide local equivalence of two states")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--restarts", type=int, default=SearchConfig.restarts)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--tol", type=float, default=SearchConfig.distance_tol)
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("discover", help="polynomial invariants of one degree")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--tol", type=float, default=KERNEL_TOL)
    p.add_argument("--budget", type=int, default=SIZE_BUDGET)
    p.set_defaults(func=cmd_discover)

    p = sub.add_parser("bloch", help="Bloch coordinates of a 1-qubit state")
    p.add_argument("--state", required=True)
    p.set_defaults(func=cmd_bloch)

    p = sub.add_parser("random", help="write a random state file")
    p.add_argument("--n", type=int, required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--pure", action="store_true")
    g.add_argument("--mixed", action="store_true")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_random)
    return parser


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    start = time.perf_counter()
    try:
        code, results, tols, seed, inputs = args.func(args)
    except InputError as exc:
        print(f"entclass {args.command}: {exc}", file=stderr)
        return EXIT_INPUT
    except Exception as exc:  # noqa: BLE001
        print(f"entclass {args.command}: internal error: {exc!r}", file=stderr)
        return EXIT_INTERNAL
    report = {
        "command": ["entclass"] + argv,
        "inputs_digest": _digest(inputs) if inputs else None,
        "results": results,
        "tolerances": tols,
        "seed": seed,
        "wall_time": time.perf_counter() - start,
    }
    json.dump(report, stdout, indent=2)
    stdout.write("\n")
    return code


def run():
    sys.exit(main())
