"""JSON interchange for scalars, matrices, polynomial maps and multimaps.

Parsers validate before building anything and raise ``SchemaError`` with the
path of the offending field (``entries[3].row`` and so on).  Emitters produce
canonical payloads: nonzero entries only, in graded-rank order; ``dumps``
sorts keys.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from multilin.antisym import AltMatrix
from multilin.errors import DimensionError, SchemaError
from multilin.exactnum import parse_rational
from multilin.linalg import DenseMatrix
from multilin.multiindex import rank_index, rank_strict
from multilin.multilinear import AltMultiMap, BilinearMap, SymMultiMap
from multilin.polymap import PolyMap
from multilin.symalg import SymMatrix


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def loads(text: str, where: str = "input") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{where}: not valid JSON ({exc.msg} at line {exc.lineno})") from None


# --- scalars -------------------------------------------------------------

def rational_to_json(x: Fraction) -> str:
    return str(x)


def rational_from_json(value, field: str = "value") -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise SchemaError(f"{field}: expected a \"num/den\" string or integer, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str):
        raise SchemaError(f"{field}: expected a \"num/den\" string, got {type(value).__name__}")
    try:
        return parse_rational(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"{field}: {exc}") from None


def _obj(payload, field: str) -> dict:
    if not isinstance(payload, dict):
        raise SchemaError(f"{field}: expected an object")
    return payload


def _nonneg_int(payload: dict, key: str, prefix: str = "") -> int:
    field = prefix + key
    if key not in payload:
        raise SchemaError(f"{field}: missing")
    v = payload[key]
    if isinstance(v, bool) or not isinstance(v, int) or v < 0:
        raise SchemaError(f"{field}: expected a nonnegative integer, got {v!r}")
    return v


def _list(payload: dict, key: str, prefix: str = "") -> list:
    field = prefix + key
    if key not in payload:
        raise SchemaError(f"{field}: missing")
    v = payload[key]
    if not isinstance(v, list):
        raise SchemaError(f"{field}: expected an array")
    return v


def _int_array(v, field: str) -> tuple[int, ...]:
    if not isinstance(v, list) or any(isinstance(x, bool) or not isinstance(x, int) for x in v):
        raise SchemaError(f"{field}: expected an array of integers")
    return tuple(v)


# --- dense matrices ------------------------------------------------------

def dense_to_json(m: DenseMatrix) -> dict:
    return {"rows": m.rows, "cols": m.cols,
            "entries": [[str(x) for x in row] for row in m.tolist()]}


def dense_from_json(payload, prefix: str = "") -> DenseMatrix:
    payload = _obj(payload, prefix.rstrip(".") or "matrix")
    rows = _nonneg_int(payload, "rows", prefix)
    cols = _nonneg_int(payload, "cols", prefix)
    entries = _list(payload, "entries", prefix)
    if len(entries) != rows:
        raise SchemaError(f"{prefix}entries: expected {rows} rows, got {len(entries)}")
    data = []
    for i, row in enumerate(entries):
        if not isinstance(row, list) or len(row) != cols:
            raise SchemaError(f"{prefix}entries[{i}]: expected an array of {cols} values")
        data.extend(rational_from_json(v, f"{prefix}entries[{i}][{j}]") for j, v in enumerate(row))
    return DenseMatrix(rows, cols, data)


# --- graded matrices -----------------------------------------------------

_KINDS = {"sym": SymMatrix, "alt": AltMatrix}


def graded_to_json(m: SymMatrix | AltMatrix) -> dict:
    kind = "sym" if isinstance(m, SymMatrix) else "alt"
    rows, cols = m.row_indices(), m.col_indices()
    entries = []
    c = m.ncols
    for i, r in enumerate(rows):
        for j, col in enumerate(cols):
            v = m.data[i * c + j]
            if v:
                entries.append({"row": list(r), "col": list(col), "value": str(v)})
    return {"kind": kind, "n": m.n, "n_prime": m.n_prime, "p": m.p, "p_prime": m.p_prime,
            "entries": entries}


def _sym_position(idx, n, p, field):
    if len(idx) != n:
        raise SchemaError(f"{field}: expected {n} components, got {len(idx)}")
    if any(x < 0 for x in idx):
        raise SchemaError(f"{field}: components must be nonnegative")
    if sum(idx) != p:
        raise SchemaError(f"{field}: weight {sum(idx)} does not match {p}")
    return rank_index(idx)


def _alt_position(idx, n, p, field):
    if len(idx) != p:
        raise SchemaError(f"{field}: expected {p} indices, got {len(idx)}")
    if any(not 1 <= x <= n for x in idx):
        raise SchemaError(f"{field}: indices must lie in 1..{n}")
    if any(a >= b for a, b in zip(idx, idx[1:])):
        raise SchemaError(f"{field}: indices must be strictly increasing")
    return rank_strict(idx)


def graded_from_json(payload, kind: str | None = None, prefix: str = "") -> SymMatrix | AltMatrix:
    payload = _obj(payload, prefix.rstrip(".") or "matrix")
    got = payload.get("kind")
    if got not in _KINDS:
        raise SchemaError(f"{prefix}kind: expected \"sym\" or \"alt\", got {got!r}")
    if kind is not None and got != kind:
        raise SchemaError(f"{prefix}kind: expected {kind!r}, got {got!r}")
    cls = _KINDS[got]
    position = _sym_position if got == "sym" else _alt_position
    n = _nonneg_int(payload, "n", prefix)
    n_prime = _nonneg_int(payload, "n_prime", prefix)
    p = _nonneg_int(payload, "p", prefix)
    p_prime = _nonneg_int(payload, "p_prime", prefix)
    out = cls(n, n_prime, p, p_prime)
    c = out.ncols
    seen = set()
    for k, e in enumerate(_list(payload, "entries", prefix)):
        field = f"{prefix}entries[{k}]"
        e = _obj(e, field)
        for key in ("row", "col", "value"):
            if key not in e:
                raise SchemaError(f"{field}.{key}: missing")
        row = _int_array(e["row"], f"{field}.row")
        col = _int_array(e["col"], f"{field}.col")
        i = position(row, n, p, f"{field}.row")
        j = position(col, n_prime, p_prime, f"{field}.col")
        if (i, j) in seen:
            raise SchemaError(f"{field}: duplicate entry for row {list(row)}, col {list(col)}")
        seen.add((i, j))
        out.data[i * c + j] = rational_from_json(e["value"], f"{field}.value")
    return out


def sym_from_json(payload, prefix: str = "") -> SymMatrix:
    return graded_from_json(payload, "sym", prefix)


def alt_from_json(payload, prefix: str = "") -> AltMatrix:
    return graded_from_json(payload, "alt", prefix)


# --- polynomial maps -----------------------------------------------------

def polymap_to_json(phi: PolyMap) -> dict:
    blocks = []
    for k in sorted(phi.blocks):
        blocks.append(dict(graded_to_json(phi.blocks[k]), p_prime=k))
    return {"n_in": phi.n_in, "n_out": phi.n_out, "blocks": blocks}


def polymap_from_json(payload) -> PolyMap:
    payload = _obj(payload, "polymap")
    n_in = _nonneg_int(payload, "n_in")
    n_out = _nonneg_int(payload, "n_out")
    blocks = {}
    for k, b in enumerate(_list(payload, "blocks")):
        prefix = f"blocks[{k}]."
        blk = sym_from_json(b, prefix)
        if blk.n != n_out or blk.n_prime != n_in:
            raise SchemaError(f"{prefix}n: block bases ({blk.n}, {blk.n_prime}) "
                              f"differ from (n_out, n_in) = ({n_out}, {n_in})")
        if blk.p != 1:
            raise SchemaError(f"{prefix}p: polynomial-map blocks have row weight 1, got {blk.p}")
        if blk.p_prime in blocks:
            raise SchemaError(f"{prefix}p_prime: duplicate block {blk.p_prime}")
        blocks[blk.p_prime] = blk
    return PolyMap(n_in, n_out, blocks)


# --- multimaps and pairings ----------------------------------------------

def multimap_to_json(m: SymMultiMap | AltMultiMap) -> dict:
    return dict(graded_to_json(m.matrix), arity=m.arity)


def multimap_from_json(payload, kind: str) -> SymMultiMap | AltMultiMap:
    payload = _obj(payload, "multimap")
    arity = _nonneg_int(payload, "arity")
    m = graded_from_json(payload, kind)
    if m.p != 1:
        raise SchemaError(f"p: multimap matrices have row weight 1, got {m.p}")
    if m.p_prime != arity:
        raise SchemaError(f"arity: {arity} does not match p_prime {m.p_prime}")
    cls = SymMultiMap if kind == "sym" else AltMultiMap
    return cls(arity, m)


def bilinear_to_json(c: BilinearMap) -> dict:
    return dict(graded_to_json(c.matrix), split=c.split)


def bilinear_from_json(payload, split: int | None = None) -> BilinearMap:
    """A pairing is a sym ``M(1, 2)`` payload; ``split`` may be stored or supplied."""
    payload = _obj(payload, "pairing")
    if "split" in payload:
        stored = _nonneg_int(payload, "split")
        if split is not None and stored != split:
            raise DimensionError(f"split {stored} stored in the pairing, but the first factor has {split} outputs")
        split = stored
    if split is None:
        raise SchemaError("split: missing and not inferable")
    m = sym_from_json(payload)
    if m.p != 1 or m.p_prime != 2:
        raise SchemaError(f"p_prime: a pairing needs an M(1, 2) matrix, got ({m.p}, {m.p_prime})")
    if split > m.n_prime:
        raise DimensionError(f"split {split} exceeds the pairing's input dimension {m.n_prime}")
    return BilinearMap(m, split)
