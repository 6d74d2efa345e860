"""Polynomial maps as block matrices.

A polynomial map ``phi: R^n' -> R^n`` is stored by its blocks
``M(1, k) in M_{n,n'}(1, k)`` so that ``phi(x) = sum_k M(1, k) x^(k) / k!``.
Composition is a flat block product against ``Exp(M_psi)``, the truncated
``odot``-exponential of the inner map's block matrix.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from multilin.errors import DimensionError, WeightLimitError
from multilin.exactnum import as_rational, factorial
from multilin.linalg import DenseMatrix, inverse, matmul
from multilin.symalg import SymMatrix, flat_product, odot, sym_power


class BlockMatrix:
    """Finitely supported block matrix ``(p, p') -> M_{n,n'}(p, p')``; absent blocks are zero."""

    __slots__ = ("n", "n_prime", "blocks")

    def __init__(self, n: int, n_prime: int, blocks: Mapping[tuple[int, int], SymMatrix] | None = None):
        self.n = n
        self.n_prime = n_prime
        self.blocks: dict[tuple[int, int], SymMatrix] = {}
        for (p, pp), blk in (blocks or {}).items():
            if blk.signature != (n, n_prime, p, pp):
                raise DimensionError(f"block ({p}, {pp}) has signature {blk.signature}")
            if not blk.is_zero():
                self.blocks[(p, pp)] = blk

    def get(self, p: int, p_prime: int) -> SymMatrix:
        blk = self.blocks.get((p, p_prime))
        return blk if blk is not None else SymMatrix.zeros(self.n, self.n_prime, p, p_prime)

    def add_block(self, p: int, p_prime: int, blk: SymMatrix):
        if blk.is_zero():
            return
        key = (p, p_prime)
        cur = self.blocks.get(key)
        new = blk if cur is None else cur + blk
        if new.is_zero():
            self.blocks.pop(key, None)
        else:
            self.blocks[key] = new

    def truncated(self, max_row: int, max_col: int) -> "BlockMatrix":
        return BlockMatrix(self.n, self.n_prime,
                           {k: v for k, v in self.blocks.items() if k[0] <= max_row and k[1] <= max_col})

    def __eq__(self, other):
        if not isinstance(other, BlockMatrix):
            return NotImplemented
        return (self.n, self.n_prime) == (other.n, other.n_prime) and self.blocks == other.blocks

    def __matmul__(self, other: "BlockMatrix") -> "BlockMatrix":
        """Flat block product ``(AB)(p, p'') = sum_p' A(p, p') B(p', p'')``."""
        if self.n_prime != other.n:
            raise DimensionError(f"block product base mismatch: {self.n_prime} vs {other.n}")
        out = BlockMatrix(self.n, other.n_prime)
        by_row: dict[int, list] = {}
        for (p, pp), blk in other.blocks.items():
            by_row.setdefault(p, []).append((pp, blk))
        for (p, mid), left in self.blocks.items():
            for pp, right in by_row.get(mid, ()):
                out.add_block(p, pp, flat_product(left, right))
        return out

    def __repr__(self):
        return f"BlockMatrix(n={self.n}, n_prime={self.n_prime}, blocks={sorted(self.blocks)})"


def block_odot(a: BlockMatrix, b: BlockMatrix, max_row: int, max_col: int) -> BlockMatrix:
    """Blockwise-bilinear ``odot``, keeping blocks within the weight bounds."""
    out = BlockMatrix(a.n, a.n_prime)
    for (p, pp), x in a.blocks.items():
        for (q, qq), y in b.blocks.items():
            if p + q <= max_row and pp + qq <= max_col:
                out.add_block(p + q, pp + qq, odot(x, y))
    return out


def exp_block(m: BlockMatrix, max_row_weight: int, max_col_weight: int) -> BlockMatrix:
    """``Exp(M) = sum_i M^(i) / i!`` truncated to the given row/column weights.

    Exact on the retained blocks: ``odot`` only adds weights, so discarded
    blocks never feed back.  A nonzero ``(0, 0)`` block would make the series
    infinite and is rejected.
    """
    if (0, 0) in m.blocks:
        raise ValueError("Exp of a block matrix with a nonzero (0, 0) block does not terminate")
    unit = SymMatrix.unit(m.n, m.n_prime)
    power = BlockMatrix(m.n, m.n_prime, {(0, 0): unit})
    out = BlockMatrix(m.n, m.n_prime, {(0, 0): unit})
    base = m.truncated(max_row_weight, max_col_weight)
    for i in range(1, max_row_weight + max_col_weight + 1):
        power = block_odot(power, base, max_row_weight, max_col_weight)
        if not power.blocks:
            break
        scale = Fraction(1, factorial(i))
        for (p, pp), blk in power.blocks.items():
            out.add_block(p, pp, blk * scale)
    return out


def exp_vector(x: Sequence, max_weight: int) -> BlockMatrix:
    """``Exp(x)`` for a column vector: blocks ``(k, 0) = x^(k) / k!`` for ``k <= max_weight``."""
    v = SymMatrix.column([as_rational(t) for t in x])
    return exp_block(BlockMatrix(v.n, v.n_prime, {(1, 0): v}), max_weight, 0)


class PolyMap:
    """A polynomial map ``R^n_in -> R^n_out`` stored by its row-weight-1 blocks."""

    __slots__ = ("n_in", "n_out", "blocks")

    def __init__(self, n_in: int, n_out: int, blocks: Mapping[int, SymMatrix] | Iterable[SymMatrix] = ()):
        self.n_in = n_in
        self.n_out = n_out
        if isinstance(blocks, Mapping):
            items = list(blocks.items())
        else:
            items = [(b.p_prime, b) for b in blocks]
        self.blocks: dict[int, SymMatrix] = {}
        for k, blk in items:
            if blk.signature != (n_out, n_in, 1, k):
                raise DimensionError(
                    f"block {k} of a map R^{n_in} -> R^{n_out} must be M_{{{n_out},{n_in}}}(1,{k}), "
                    f"got {blk.signature}")
            if k in self.blocks:
                blk = self.blocks[k] + blk
            if blk.is_zero():
                self.blocks.pop(k, None)
            else:
                self.blocks[k] = blk

    # --- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, n_in: int, n_out: int) -> "PolyMap":
        return cls(n_in, n_out)

    @classmethod
    def identity(cls, n: int) -> "PolyMap":
        return cls.linear(DenseMatrix.identity(n))

    @classmethod
    def linear(cls, m: DenseMatrix | Sequence[Sequence], offset: Sequence | None = None) -> "PolyMap":
        """``x -> m x (+ offset)``."""
        if not isinstance(m, DenseMatrix):
            m = DenseMatrix.from_rows(m)
        blocks = {1: SymMatrix.from_matrix(m)}
        if offset is not None:
            blocks[0] = SymMatrix(m.rows, m.cols, 1, 0, offset)
        return cls(m.cols, m.rows, blocks)

    @classmethod
    def constant(cls, values: Sequence, n_in: int) -> "PolyMap":
        return cls(n_in, len(values), {0: SymMatrix(len(values), n_in, 1, 0, values)})

    @classmethod
    def from_block_matrix(cls, m: BlockMatrix) -> "PolyMap":
        extra = [k for k in m.blocks if k[0] != 1]
        if extra:
            raise DimensionError(f"polynomial-map matrices only have row-weight-1 blocks, found {extra}")
        return cls(m.n_prime, m.n, {pp: blk for (_, pp), blk in m.blocks.items()})

    # --- structure --------------------------------------------------------

    @property
    def degree(self) -> int:
        return max(self.blocks, default=0)

    def block(self, k: int) -> SymMatrix:
        blk = self.blocks.get(k)
        return blk if blk is not None else SymMatrix.zeros(self.n_out, self.n_in, 1, k)

    def matrix(self) -> BlockMatrix:
        return BlockMatrix(self.n_out, self.n_in, {(1, k): b for k, b in self.blocks.items()})

    def __eq__(self, other):
        if not isinstance(other, PolyMap):
            return NotImplemented
        return (self.n_in, self.n_out) == (other.n_in, other.n_out) and self.blocks == other.blocks

    def __repr__(self):
        return f"PolyMap(n_in={self.n_in}, n_out={self.n_out}, degree={self.degree})"

    # --- evaluation -------------------------------------------------------

    def __call__(self, x: Sequence) -> list[Fraction]:
        return eval_map(self, x)


def eval_map(phi: PolyMap, x: Sequence) -> list[Fraction]:
    """``phi(x) = M_phi Exp(x)``."""
    if len(x) != phi.n_in:
        raise DimensionError(f"map expects {phi.n_in} coordinates, got {len(x)}")
    ex = exp_vector(x, phi.degree)
    out = [Fraction(0)] * phi.n_out
    for k, blk in phi.blocks.items():
        col = ex.get(k, 0)
        val = flat_product(blk, col)
        out = [a + b for a, b in zip(out, val.data)]
    return out


def _check_weight(weight: int, max_weight: int | None, what: str):
    if max_weight is not None and weight > max_weight:
        raise WeightLimitError(f"{what} needs weight {weight}, above the cap {max_weight}")


def compose(phi: PolyMap, psi: PolyMap, max_weight: int | None = None) -> PolyMap:
    """Matrix of ``phi o psi`` as ``M_phi Exp(M_psi)``."""
    if phi.n_in != psi.n_out:
        raise DimensionError(f"cannot compose: phi takes {phi.n_in} inputs, psi gives {psi.n_out}")
    rows = phi.degree
    cols = phi.degree * psi.degree
    _check_weight(cols, max_weight, "composition")
    e = exp_block(psi.matrix(), rows, cols)
    return PolyMap.from_block_matrix(phi.matrix() @ e)


def change_of_variables(phi: PolyMap, s: PolyMap, t_inv: PolyMap, max_weight: int | None = None) -> PolyMap:
    """Matrix of ``phi`` in new coordinates: ``S Exp(M_phi) Exp(T_inv)``.

    ``s`` maps old output coordinates to new ones; ``t_inv`` maps new input
    coordinates back to old ones.
    """
    if s.n_in != phi.n_out or s.n_out != phi.n_out:
        raise DimensionError(f"S must map R^{phi.n_out} to itself")
    if t_inv.n_in != phi.n_in or t_inv.n_out != phi.n_in:
        raise DimensionError(f"T_inv must map R^{phi.n_in} to itself")
    mid = s.degree * phi.degree
    top = mid * t_inv.degree
    _check_weight(top, max_weight, "change of variables")
    e_phi = exp_block(phi.matrix(), s.degree, mid)
    e_t = exp_block(t_inv.matrix(), mid, top)
    return PolyMap.from_block_matrix(s.matrix() @ e_phi @ e_t)


def gl_action_homogeneous(a: SymMatrix, s: DenseMatrix, t_inv: DenseMatrix, k: int | None = None) -> SymMatrix:
    """``S A (T^-1)^(k) / k!`` for a homogeneous ``A in M_{n,n'}(1, k)``."""
    k = a.p_prime if k is None else k
    if a.p != 1 or a.p_prime != k:
        raise DimensionError(f"expected a (1, {k}) matrix, got ({a.p}, {a.p_prime})")
    if s.shape != (a.n, a.n):
        raise DimensionError(f"S must be {a.n}x{a.n}, got {s.rows}x{s.cols}")
    if t_inv.shape != (a.n_prime, a.n_prime):
        raise DimensionError(f"T_inv must be {a.n_prime}x{a.n_prime}, got {t_inv.rows}x{t_inv.cols}")
    return SymMatrix.from_matrix(s) @ a @ sym_power(t_inv, k)


def invert_affine(phi: PolyMap) -> PolyMap:
    """Inverse of an invertible affine map ``x -> T x + b``."""
    if phi.degree > 1 or phi.n_in != phi.n_out:
        raise ValueError("only square affine maps can be inverted here")
    t = phi.block(1).as_dense()
    t_inv = inverse(t)
    b = DenseMatrix(phi.n_out, 1, phi.block(0).data)
    shift = -matmul(t_inv, b)
    return PolyMap.linear(t_inv, offset=shift.data)
