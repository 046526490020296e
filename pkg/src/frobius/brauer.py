"""Exact matrices and the Brauerian representation of 1-cobordisms.

A diagram from n signed points to m signed points becomes a 0-1 matrix
A of shape p^m x p^n: index the columns by length-n words over {0..p-1}
(most significant digit first) and the rows by length-m words, and set the
entry to 1 exactly when every matched pair of endpoints carries equal
digits.  The full representation scales by the free circles,

    B = p^circles * A,

and is a functor: gluing diagrams multiplies matrices, side-by-side
placement is the Kronecker product, and the block swap goes to the
vector-space symmetry.  On the two-point object this yields the p x p
matrix algebra with the trace form as counit.

All arithmetic is exact (Python integers / fractions); a size guard caps
matrix allocation at ``DEFAULT_SIZE_GUARD`` entries by default.

>>> digits(10, 2, 5)
(0, 1, 0, 1, 0)
>>> brauer_b(eps1, 2).to_rows()
[[1, 0, 0, 1]]
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .errors import OutOfRange, ShapeMismatch, SizeGuardExceeded
from .onecob import Endpoint, OneCobDiagram, eps1

__all__ = [
    "ExactMatrix",
    "DEFAULT_SIZE_GUARD",
    "digits",
    "matrix_a",
    "brauer_b",
    "kron",
    "sym_matrix",
    "h_iso",
    "h_iso_inv",
    "h2_iso",
    "h2_iso_inv",
    "mat_mul",
    "mat_eq",
    "scalar_mul",
]

DEFAULT_SIZE_GUARD = 1 << 24


def _guard(rows: int, cols: int, size_guard: int) -> None:
    if rows * cols > size_guard:
        raise SizeGuardExceeded(
            f"{rows} x {cols} = {rows * cols} entries exceeds the guard {size_guard}"
        )


@dataclass(frozen=True)
class ExactMatrix:
    """Dense row-major matrix over exact numbers."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows * self.cols:
            raise ShapeMismatch(
                f"{self.rows} x {self.cols} matrix needs {self.rows * self.cols} "
                f"entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: "list[list]") -> "ExactMatrix":
        r = len(rows)
        c = len(rows[0]) if rows else 0
        if any(len(row) != c for row in rows):
            raise ShapeMismatch("ragged rows")
        return cls(r, c, tuple(x for row in rows for x in row))

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    def entry(self, i: int, j: int):
        return self.entries[i * self.cols + j]

    def to_rows(self) -> "list[list]":
        return [
            list(self.entries[i * self.cols : (i + 1) * self.cols])
            for i in range(self.rows)
        ]


def mat_mul(x: ExactMatrix, y: ExactMatrix) -> ExactMatrix:
    """x . y, skipping zero entries of x (the matrices here are sparse)."""
    if x.cols != y.rows:
        raise ShapeMismatch(f"cannot multiply {x.rows}x{x.cols} by {y.rows}x{y.cols}")
    out = [0] * (x.rows * y.cols)
    for i in range(x.rows):
        xrow = i * x.cols
        orow = i * y.cols
        for k in range(x.cols):
            xe = x.entries[xrow + k]
            if xe == 0:
                continue
            yrow = k * y.cols
            for j in range(y.cols):
                ye = y.entries[yrow + j]
                if ye != 0:
                    out[orow + j] += xe * ye
    return ExactMatrix(x.rows, y.cols, tuple(out))


def mat_eq(x: ExactMatrix, y: ExactMatrix) -> bool:
    return x.rows == y.rows and x.cols == y.cols and all(
        a == b for a, b in zip(x.entries, y.entries)
    )


def scalar_mul(k, x: ExactMatrix) -> ExactMatrix:
    return ExactMatrix(x.rows, x.cols, tuple(k * e for e in x.entries))


def kron(x: ExactMatrix, y: ExactMatrix, size_guard: int = DEFAULT_SIZE_GUARD) -> ExactMatrix:
    """Kronecker product: z[i*k+q, j*l+r] = x[i,j] * y[q,r] for y of shape k x l."""
    rows, cols = x.rows * y.rows, x.cols * y.cols
    _guard(rows, cols, size_guard)
    out = [0] * (rows * cols)
    for i in range(x.rows):
        for j in range(x.cols):
            xe = x.entry(i, j)
            if xe == 0:
                continue
            base = (i * y.rows) * cols + j * y.cols
            for q in range(y.rows):
                off = base + q * cols
                yrow = q * y.cols
                for r in range(y.cols):
                    out[off + r] = xe * y.entries[yrow + r]
    return ExactMatrix(rows, cols, tuple(out))


def digits(a: int, p: int, n: int) -> tuple[int, ...]:
    """Base-p expansion of a with exactly n digits, most significant first."""
    if p < 2:
        raise OutOfRange(f"base must be at least 2, got {p}")
    if not 0 <= a < p**n:
        raise OutOfRange(f"{a} has no {n}-digit base-{p} expansion")
    return tuple((a // p ** (n - 1 - i)) % p for i in range(n))


def matrix_a(
    k: OneCobDiagram, p: int, size_guard: int = DEFAULT_SIZE_GUARD
) -> ExactMatrix:
    """The 0-1 matrix of a diagram: rows are out-words, columns in-words."""
    if p < 2:
        raise OutOfRange(f"base must be at least 2, got {p}")
    n, m = len(k.in_signs), len(k.out_signs)
    rows, cols = p**m, p**n
    _guard(rows, cols, size_guard)
    pairs: list[tuple[Endpoint, Endpoint]] = [tuple(pair) for pair in k.matching]
    out = [0] * (rows * cols)
    for a1 in range(rows):
        d1 = digits(a1, p, m)
        for a0 in range(cols):
            d0 = digits(a0, p, n)

            def at(e: Endpoint) -> int:
                return d0[e[1]] if e[0] == "i" else d1[e[1]]

            if all(at(u) == at(v) for u, v in pairs):
                out[a1 * cols + a0] = 1
    return ExactMatrix(rows, cols, tuple(out))


def brauer_b(
    k: OneCobDiagram, p: int, size_guard: int = DEFAULT_SIZE_GUARD
) -> ExactMatrix:
    """B = p^circles * A, the full Brauerian representation."""
    a = matrix_a(k, p, size_guard)
    return scalar_mul(p**k.circles, a) if k.circles else a


def sym_matrix(n: int, m: int, size_guard: int = DEFAULT_SIZE_GUARD) -> ExactMatrix:
    """Permutation matrix of the swap V_n (x) V_m -> V_m (x) V_n on basis vectors."""
    if n < 1 or m < 1:
        raise ShapeMismatch("dimensions must be at least 1")
    _guard(n * m, n * m, size_guard)
    out = [0] * (n * m * n * m)
    for i in range(n):
        for j in range(m):
            out[(j * n + i) * (n * m) + (i * m + j)] = 1
    return ExactMatrix(n * m, n * m, tuple(out))


def h_iso(v: ExactMatrix) -> ExactMatrix:
    """Reshape a p^2-vector into the p x p matrix with (i,j) entry v[i*p+j]."""
    p = isqrt(v.rows)
    if v.cols != 1 or p * p != v.rows:
        raise ShapeMismatch(f"expected a square-length column, got {v.rows}x{v.cols}")
    return ExactMatrix(p, p, v.entries)


def h_iso_inv(x: ExactMatrix) -> ExactMatrix:
    if x.rows != x.cols:
        raise ShapeMismatch(f"expected a square matrix, got {x.rows}x{x.cols}")
    return ExactMatrix(x.rows * x.cols, 1, x.entries)


def h2_iso(v: ExactMatrix) -> ExactMatrix:
    """Reshape a p^4-vector into the p^2 x p^2 matrix with entry v[i*p^2+j]."""
    s = isqrt(v.rows)
    if v.cols != 1 or s * s != v.rows or isqrt(s) ** 2 != s:
        raise ShapeMismatch(f"expected a fourth-power column, got {v.rows}x{v.cols}")
    return ExactMatrix(s, s, v.entries)


def h2_iso_inv(z: ExactMatrix) -> ExactMatrix:
    if z.rows != z.cols or isqrt(z.rows) ** 2 != z.rows:
        raise ShapeMismatch(f"expected a square-dimension matrix, got {z.rows}x{z.cols}")
    return ExactMatrix(z.rows * z.cols, 1, z.entries)
