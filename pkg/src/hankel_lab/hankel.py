"""Hankel matrices and exact determinants via fraction-free elimination.

One Bareiss routine covers every supported entry type: integers, rationals,
rational functions, and polynomials over rationals or rational functions.
Matrices whose entries carry rational-function denominators are cleared to
a polynomial subring first (uniform scaling changes the determinant by a
known power), which keeps the elimination gcd-free.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .moments import MomentSeq
from .opseq import SymRecurrence, sym_to_general, v_table
from .ring import Poly, RatFunc, exact_div, poly_lcm, scalar_is_zero


class Matrix:
    """Immutable square grid of scalars or polynomials over one domain."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        if not rows or any(len(r) != len(rows) for r in rows):
            raise ValueError("matrix must be square and nonempty")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @property
    def size(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int):
        return self.rows[i][j]

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(e) for e in row) for row in self.rows)
        return f"Matrix[{body}]"


def hankel_matrix(seq: MomentSeq, n: int, offset: int = 0) -> Matrix:
    """(n+1) x (n+1) matrix with entry (i, j) = seq(i + j + offset)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if offset not in (0, 1, 2):
        raise ValueError("offset must be 0, 1 or 2")
    return Matrix([[seq.at(i + j + offset) for j in range(n + 1)]
                   for i in range(n + 1)])


@dataclass(frozen=True)
class RBuilder:
    """Factory for the two r-polynomial shapes built on a moment sequence."""

    kind: str  # "conv" or "lin"
    seq: MomentSeq

    def __post_init__(self):
        if self.kind not in ("conv", "lin"):
            raise ValueError(f"unknown r-polynomial kind {self.kind!r}")

    @classmethod
    def conv(cls, seq: MomentSeq) -> "RBuilder":
        return cls("conv", seq)

    @classmethod
    def lin(cls, seq: MomentSeq) -> "RBuilder":
        return cls("lin", seq)


def r_poly(builder: RBuilder, n: int) -> Poly:
    """conv: sum_k a(n-k) x^k (degree n, monic); lin: a(n) x - a(n+1)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    seq = builder.seq
    if builder.kind == "conv":
        return Poly([seq.at(n - k) for k in range(n + 1)], "x", seq.domain)
    return Poly([-seq.at(n + 1), seq.at(n)], "x", seq.domain)


def r_matrix(builder: RBuilder, n: int, offset: int = 0) -> Matrix:
    if offset not in (0, 1, 2):
        raise ValueError("offset must be 0, 1 or 2")
    return Matrix([[r_poly(builder, i + j + offset) for j in range(n + 1)]
                   for i in range(n + 1)])


# ---------------------------------------------------------------------------
# determinants

def _zero_like(entry):
    if isinstance(entry, Poly):
        return Poly.zero(entry.var, entry.domain)
    if isinstance(entry, RatFunc):
        return RatFunc.const(0, entry.var_name)
    if isinstance(entry, Fraction):
        return Fraction(0)
    return 0


def _entry_dens(entry):
    """Rational-function denominators hiding in an entry (empty if none)."""
    if isinstance(entry, RatFunc):
        return [entry.den] if not entry.den_is_one else []
    if isinstance(entry, Poly):
        out = []
        for c in entry.coeffs:
            if isinstance(c, RatFunc) and not c.den_is_one:
                out.append(c.den)
        return out
    return []


def _scale_entry(entry, factor: RatFunc):
    if isinstance(entry, Poly):
        return entry.map_coeffs(lambda c: c * factor)
    return entry * factor


def det_bareiss(m: Matrix):
    """Exact determinant by fraction-free one-step elimination.

    Zero pivots trigger a row swap with sign tracking; an all-zero pivot
    column short-circuits to 0.  Interior divisions are exact by the Bareiss
    identity; over the integers or a polynomial ring an inexact division
    raises InexactDivisionError (a logic bug, not bad input).
    """
    size = m.size
    sample = m.rows[0][0]

    dens = []
    for row in m.rows:
        for e in row:
            dens.extend(_entry_dens(e))
    if dens:
        clear = dens[0]
        for d in dens[1:]:
            clear = poly_lcm(clear, d)
        factor = RatFunc(clear)
        grid = [[_scale_entry(e, factor) for e in row] for row in m.rows]
        det = _det_bareiss_core(grid, size)
        shrink = factor ** size
        if isinstance(det, Poly):
            result = det.map_coeffs(lambda c: c / shrink)
        else:
            result = det / shrink
    else:
        result = _det_bareiss_core([list(row) for row in m.rows], size)

    if __debug__ and size <= 3:
        assert result == _det_cofactor_rows(m.rows), \
            "Bareiss/cofactor mismatch on small matrix"
    return result


def _is_zero_entry(e) -> bool:
    return e.is_zero if isinstance(e, Poly) else scalar_is_zero(e)


def _det_bareiss_core(a, size: int):
    if size == 1:
        return a[0][0]
    sign = 1
    prev = None
    for k in range(size - 1):
        if _is_zero_entry(a[k][k]):
            for i in range(k + 1, size):
                if not _is_zero_entry(a[i][k]):
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return _zero_like(a[0][0])
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                elt = a[k][k] * a[i][j] - a[i][k] * a[k][j]
                if prev is not None:
                    elt = exact_div(elt, prev)
                a[i][j] = elt
        prev = a[k][k]
    result = a[size - 1][size - 1]
    if sign < 0:
        result = -result
    return result


def det_cofactor(m: Matrix):
    """Laplace expansion; the independent (slow) determinant oracle."""
    return _det_cofactor_rows(m.rows)


def _det_cofactor_rows(rows):
    size = len(rows)
    if size == 1:
        return rows[0][0]
    total = None
    for j in range(size):
        entry = rows[0][j]
        minor = [tuple(row[c] for c in range(size) if c != j) for row in rows[1:]]
        term = entry * _det_cofactor_rows(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total


def hankel_poly_det(builder: RBuilder, n: int, offset: int = 0) -> Poly:
    """d(n, x): exact determinant of the (n+1) x (n+1) r-polynomial matrix."""
    return det_bareiss(r_matrix(builder, n, offset))


def d0_product(rec: SymRecurrence, n: int):
    """d(n, 0) = U_0^n U_1^(n-1) ... U_(n-1) from the collapsed recurrence."""
    if n < 0:
        raise ValueError("n must be >= 0")
    gen = sym_to_general(rec)
    result = rec.domain.one
    for i in range(n):
        result = result * gen.U(i) ** (n - i)
    return result


def inverse_first_column(rec: SymRecurrence, n: int) -> list:
    """First column of A_n^(-1) in closed form from the coefficient table:
    u(j, 0) = (-1)^j v(2n+1, n-j) / (t_1 t_3 ... t_(2n-1))."""
    if n < 0:
        raise ValueError("n must be >= 0")
    tprod = rec.domain.one
    for i in range(n):
        tprod = tprod * rec.t(2 * i + 1)
    vt = v_table(rec, 2 * n + 1)
    column = []
    for j in range(n + 1):
        value = _scalar_field_div(vt.value(2 * n + 1, n - j), tprod)
        if j % 2:
            value = -value
        column.append(value)
    return column


def _scalar_field_div(a, b):
    if isinstance(a, RatFunc) or isinstance(b, RatFunc):
        return a / b
    if b == 0:
        raise ZeroDivisionError("division by zero")
    return Fraction(a) / b


# ---------------------------------------------------------------------------
# small exact linear algebra helpers (used by structural invariant checks)

def matvec(m: Matrix, vec):
    return [sum_products(row, vec) for row in m.rows]


def sum_products(row, vec):
    total = None
    for a, b in zip(row, vec):
        term = a * b
        total = term if total is None else total + term
    return total


def matmul(a: Matrix, b: Matrix) -> Matrix:
    n = a.size
    return Matrix([[sum_products(a.rows[i], [b.rows[k][j] for k in range(n)])
                    for j in range(n)] for i in range(n)])


def matrix_inverse(m: Matrix) -> Matrix:
    """Exact inverse by Gauss-Jordan; entries must be field scalars."""
    n = m.size
    a = [list(row) for row in m.rows]
    one = _one_scalar_like(m.rows[0][0])
    zero = _zero_like(m.rows[0][0])
    inv = [[one if i == j else zero for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot_row = None
        for r in range(col, n):
            if not scalar_is_zero(a[r][col]):
                pivot_row = r
                break
        if pivot_row is None:
            raise ZeroDivisionError("matrix is singular")
        a[col], a[pivot_row] = a[pivot_row], a[col]
        inv[col], inv[pivot_row] = inv[pivot_row], inv[col]
        pivot = a[col][col]
        a[col] = [_scalar_field_div(v, pivot) for v in a[col]]
        inv[col] = [_scalar_field_div(v, pivot) for v in inv[col]]
        for r in range(n):
            if r == col or scalar_is_zero(a[r][col]):
                continue
            factor = a[r][col]
            a[r] = [v - factor * w for v, w in zip(a[r], a[col])]
            inv[r] = [v - factor * w for v, w in zip(inv[r], inv[col])]
    return Matrix(inv)


def _one_scalar_like(entry):
    if isinstance(entry, RatFunc):
        return RatFunc.const(1, entry.var_name)
    if isinstance(entry, Fraction):
        return Fraction(1)
    return 1
