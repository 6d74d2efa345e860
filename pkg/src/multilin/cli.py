"""Command-line entry point.

Exit codes: 0 success, 1 failed self-check, 2 bad input (schema, JSON,
weight cap), 3 dimension mismatch, 4 singular matrix.
"""
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from multilin import serialize as ser
from multilin.antisym import AltMatrix, wedge, wedge_power
from multilin.errors import DimensionError, SchemaError, SingularMatrixError, WeightLimitError
from multilin.exactnum import factorial
from multilin.linalg import det
from multilin.multilinear import product_alt, product_sym
from multilin.norms import NormParams, holder_norm
from multilin.polymap import change_of_variables, compose
from multilin.symalg import SymMatrix, odot, sym_power

DEFAULT_MAX_WEIGHT = 6
EXIT_FAILED, EXIT_SCHEMA, EXIT_DIMENSION, EXIT_SINGULAR = 1, 2, 3, 4


def weight_cap(flag: int | None) -> int:
    if flag is not None:
        return flag
    raw = os.environ.get("MULTILIN_MAX_WEIGHT")
    if raw is None:
        return DEFAULT_MAX_WEIGHT
    try:
        return int(raw)
    except ValueError:
        raise SchemaError(f"MULTILIN_MAX_WEIGHT: not an integer: {raw!r}") from None


def _check_cap(cap: int, what: str, *weights: int):
    w = max(weights, default=0)
    if w > cap:
        raise WeightLimitError(f"{what}: weight {w} exceeds the cap {cap} (raise --max-weight or MULTILIN_MAX_WEIGHT)")


def _read(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise SchemaError(f"{path}: cannot read ({exc.strerror})") from None
    return ser.loads(text, path)


def _with_path(path: str, fn, *args):
    try:
        return fn(*args)
    except SchemaError as exc:
        raise SchemaError(f"{path}: {exc}") from None


def _load_graded(path: str, kind: str, cap: int):
    m = _with_path(path, ser.graded_from_json, _read(path), kind)
    _check_cap(cap, path, m.p, m.p_prime)
    return m


def _load_power_base(path: str, kind: str, cap: int) -> SymMatrix | AltMatrix:
    """A graded payload of the given kind, or a plain dense payload read as ``M(1, 1)``."""
    payload = _read(path)
    if isinstance(payload, dict) and "kind" in payload:
        m = _with_path(path, ser.graded_from_json, payload, kind)
    else:
        dense = _with_path(path, ser.dense_from_json, payload)
        m = (SymMatrix if kind == "sym" else AltMatrix).from_matrix(dense)
    _check_cap(cap, path, m.p, m.p_prime)
    return m


def _load_map(path: str, cap: int):
    phi = _with_path(path, ser.polymap_from_json, _read(path))
    _check_cap(cap, path, phi.degree)
    return phi


def _require_invertible_linear_part(phi, name: str):
    blk = phi.block(1).as_dense()
    if det(blk) == 0:
        raise SingularMatrixError(f"{name}: linear part is singular, so the map is not invertible")


# --- commands -------------------------------------------------------------

def cmd_odot(args, cap):
    a = _load_graded(args.a, "sym", cap)
    b = _load_graded(args.b, "sym", cap)
    _check_cap(cap, "odot", a.p + b.p, a.p_prime + b.p_prime)
    return ser.graded_to_json(odot(a, b))


def cmd_wedge(args, cap):
    a = _load_graded(args.a, "alt", cap)
    b = _load_graded(args.b, "alt", cap)
    _check_cap(cap, "wedge", a.p + b.p, a.p_prime + b.p_prime)
    return ser.graded_to_json(wedge(a, b))


def cmd_sym_power(args, cap):
    a = _load_power_base(args.a, "sym", cap)
    _check_cap(cap, "sym-power", args.k * a.p, args.k * a.p_prime)
    return ser.graded_to_json(sym_power(a, args.k))


def cmd_wedge_power(args, cap):
    a = _load_power_base(args.a, "alt", cap)
    _check_cap(cap, "wedge-power", args.k * a.p, args.k * a.p_prime)
    out = wedge_power(a, args.k)
    if args.compound:
        out = out / factorial(args.k)
    return ser.graded_to_json(out)


def cmd_compose(args, cap):
    phi, psi = _load_map(args.phi, cap), _load_map(args.psi, cap)
    return ser.polymap_to_json(compose(phi, psi, max_weight=cap))


def cmd_change_vars(args, cap):
    phi, s, t_inv = _load_map(args.phi, cap), _load_map(args.s, cap), _load_map(args.t_inv, cap)
    if s.n_in != s.n_out or t_inv.n_in != t_inv.n_out:
        raise DimensionError("S and T_inv must map a space to itself")
    _require_invertible_linear_part(s, args.s)
    _require_invertible_linear_part(t_inv, args.t_inv)
    return ser.polymap_to_json(change_of_variables(phi, s, t_inv, max_weight=cap))


def cmd_mlprod(args, cap):
    a = _with_path(args.a, ser.multimap_from_json, _read(args.a), args.kind)
    b = _with_path(args.b, ser.multimap_from_json, _read(args.b), args.kind)
    _check_cap(cap, "mlprod", a.arity + b.arity)
    c = _with_path(args.c, ser.bilinear_from_json, _read(args.c), a.dim_out)
    prod = product_sym if args.kind == "sym" else product_alt
    return ser.multimap_to_json(prod(a, b, c))


def cmd_norm(args, cap):
    a = _load_graded(args.a, "alt", cap)
    try:
        params = NormParams(args.rho)
    except ValueError as exc:
        raise SchemaError(f"--rho: {exc}") from None
    return repr(holder_norm(a, params)) + "\n"


def cmd_verify(args, cap):
    from multilin.verify import run_suites
    lines, ok = run_suites(args.seed, args.rounds)
    return "\n".join(lines) + "\n", ok


COMMANDS = {
    "odot": cmd_odot,
    "wedge": cmd_wedge,
    "sym-power": cmd_sym_power,
    "wedge-power": cmd_wedge_power,
    "compose": cmd_compose,
    "change-vars": cmd_change_vars,
    "mlprod": cmd_mlprod,
    "norm": cmd_norm,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the result here instead of stdout")
    common.add_argument("--max-weight", type=int, default=None,
                        help=f"stratum-weight cap (default: $MULTILIN_MAX_WEIGHT or {DEFAULT_MAX_WEIGHT})")

    parser = argparse.ArgumentParser(prog="multilin", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("odot", parents=[common], help="symmetric product of two sym matrices")
    p.add_argument("a")
    p.add_argument("b")
    p = sub.add_parser("wedge", parents=[common], help="alternating product of two alt matrices")
    p.add_argument("a")
    p.add_argument("b")
    p = sub.add_parser("sym-power", parents=[common], help="normalised power A^(k)/k!")
    p.add_argument("a")
    p.add_argument("--k", type=int, required=True)
    p = sub.add_parser("wedge-power", parents=[common], help="wedge power A^k (or the compound A^k/k!)")
    p.add_argument("a")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--compound", action="store_true", help="divide by k! (entries become k x k minors)")
    p = sub.add_parser("compose", parents=[common], help="matrix of phi o psi")
    p.add_argument("phi")
    p.add_argument("psi")
    p = sub.add_parser("change-vars", parents=[common], help="matrix of S o phi o T_inv")
    p.add_argument("phi")
    p.add_argument("s")
    p.add_argument("t_inv")
    p = sub.add_parser("mlprod", parents=[common], help="product of two multilinear maps through a pairing C")
    p.add_argument("--kind", choices=("sym", "alt"), required=True)
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("c")
    p = sub.add_parser("norm", parents=[common], help="rho-norm of an alt matrix")
    p.add_argument("a")
    p.add_argument("--rho", type=float, default=2.0)
    p = sub.add_parser("verify", parents=[common], help="run the seeded self-check suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--rounds", type=int, default=25)
    return parser


def _emit(result, out: str | None):
    text = result if isinstance(result, str) else ser.dumps(result)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    for name in ("k", "rounds"):
        if getattr(args, name, 0) is not None and getattr(args, name, 0) < 0:
            print(f"multilin: error: --{name} must be nonnegative", file=sys.stderr)
            return EXIT_SCHEMA
    try:
        cap = weight_cap(args.max_weight)
        result = COMMANDS[args.command](args, cap)
    except (SchemaError, WeightLimitError) as exc:
        print(f"multilin: error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except DimensionError as exc:
        print(f"multilin: dimension mismatch: {exc}", file=sys.stderr)
        return EXIT_DIMENSION
    except SingularMatrixError as exc:
        print(f"multilin: singular matrix: {exc}", file=sys.stderr)
        return EXIT_SINGULAR
    ok = True
    if isinstance(result, tuple):
        result, ok = result
    _emit(result, args.out)
    return 0 if ok else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
