"""Two-dimensional TQFT evaluation over exact rationals.

The input datum is a finite-dimensional algebra-and-coalgebra package: a
dimension D and four matrices mul (D x D^2), unit (D x 1), comul (D^2 x D),
counit (1 x D) with Fraction entries.  :func:`check_frobenius` reports
exactly which axioms the data satisfies; nothing is ever assumed.

:func:`eval_term` interprets a term by structural recursion: composition
is matrix product, tensor is Kronecker product, and the block swap goes to
the basis-permutation matrix.  It works for any data (warning when a core
axiom fails), so the matrix algebra - which is symmetric but not
commutative - can be evaluated faithfully.

:func:`eval_normal` instead evaluates a normal form block by block,
multiplying all inputs of a block down to one wire, applying genus many
handle operators mul . comul, and copying back out.  That route forgets
the order of wires inside a block, so it refuses data that is not
commutative and cocommutative; on commutative data it agrees exactly with
:func:`eval_term` of the expanded normal form.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

from .brauer import (
    DEFAULT_SIZE_GUARD,
    ExactMatrix,
    brauer_b,
    kron,
    mat_eq,
    mat_mul,
    sym_matrix,
)
from .errors import (
    NonCommutativeData,
    NonFrobeniusWarning,
    ShapeMismatch,
    SizeGuardExceeded,
)
from .normalize import NormalForm
from .onecob import delta1, eps1, eta1, mu1
from .perms import Perm
from .terms import Comp, Delta, Eps, Eta, Id, Mu, Tau, Tensor, Term, typecheck

__all__ = [
    "AlgebraData",
    "check_frobenius",
    "eval_term",
    "eval_normal",
    "closed_invariant",
    "perm_matrix",
    "diagonal_algebra",
    "matrix_algebra",
    "algebra_to_json_dict",
    "algebra_from_json_dict",
]


@dataclass(frozen=True)
class AlgebraData:
    """Multiplication, unit, comultiplication and counit on a D-space."""

    dim: int
    mul: ExactMatrix
    unit: ExactMatrix
    comul: ExactMatrix
    counit: ExactMatrix

    def __post_init__(self) -> None:
        d = self.dim
        if d < 1:
            raise ShapeMismatch("dimension must be at least 1")
        shapes = {
            "mul": (self.mul, d, d * d),
            "unit": (self.unit, d, 1),
            "comul": (self.comul, d * d, d),
            "counit": (self.counit, 1, d),
        }
        for name, (mat, r, c) in shapes.items():
            if (mat.rows, mat.cols) != (r, c):
                raise ShapeMismatch(
                    f"{name} must be {r}x{c}, got {mat.rows}x{mat.cols}"
                )


def check_frobenius(a: AlgebraData) -> dict[str, bool]:
    """Exact truth value of each axiom for this data."""
    d = a.dim
    i1 = ExactMatrix.identity(d)
    m, u, c, e = a.mul, a.unit, a.comul, a.counit
    s = sym_matrix(d, d)
    dm = mat_mul(c, m)
    em = mat_mul(e, m)
    return {
        "assoc": mat_eq(mat_mul(m, kron(m, i1)), mat_mul(m, kron(i1, m))),
        "unit": mat_eq(mat_mul(m, kron(u, i1)), i1)
        and mat_eq(mat_mul(m, kron(i1, u)), i1),
        "coass": mat_eq(mat_mul(kron(c, i1), c), mat_mul(kron(i1, c), c)),
        "counit": mat_eq(mat_mul(kron(e, i1), c), i1)
        and mat_eq(mat_mul(kron(i1, e), c), i1),
        "frob": mat_eq(mat_mul(kron(i1, m), kron(c, i1)), dm)
        and mat_eq(mat_mul(kron(m, i1), kron(i1, c)), dm),
        "com": mat_eq(mat_mul(m, s), m),
        "cocom": mat_eq(mat_mul(s, c), c),
        "symmetric": mat_eq(mat_mul(em, s), em),
    }


_CORE_AXIOMS = ("assoc", "unit", "coass", "counit", "frob")


def perm_matrix(sigma: Perm, dim: int, size_guard: int = DEFAULT_SIZE_GUARD) -> ExactMatrix:
    """Basis permutation matrix: wire i of the input becomes wire sigma(i)."""
    k = len(sigma)
    size = dim**k
    if size * size > size_guard:
        raise SizeGuardExceeded(
            f"{size} x {size} permutation matrix exceeds the guard {size_guard}"
        )
    weights = [dim ** (k - 1 - j) for j in range(k)]
    out = [0] * (size * size)
    for col in range(size):
        rem = col
        row = 0
        for i in range(k):
            digit = rem // weights[i]
            rem %= weights[i]
            row += digit * weights[sigma[i]]
        out[row * size + col] = 1
    return ExactMatrix(size, size, tuple(out))


def eval_term(
    t: Term, a: AlgebraData, size_guard: int = DEFAULT_SIZE_GUARD
) -> ExactMatrix:
    """Interpret a term as an exact matrix, structurally."""
    typecheck(t)
    flags = check_frobenius(a)
    if not all(flags[name] for name in _CORE_AXIOMS):
        failed = ", ".join(name for name in _CORE_AXIOMS if not flags[name])
        warnings.warn(f"data fails: {failed}", NonFrobeniusWarning, stacklevel=2)

    d = a.dim
    memo: dict[int, ExactMatrix] = {}
    stack: list[tuple[Term, bool]] = [(t, False)]
    while stack:
        node, expanded = stack.pop()
        if id(node) in memo:
            continue
        if isinstance(node, Comp):
            if expanded:
                memo[id(node)] = mat_mul(memo[id(node.g)], memo[id(node.f)])
            else:
                stack.extend([(node, True), (node.g, False), (node.f, False)])
        elif isinstance(node, Tensor):
            if expanded:
                memo[id(node)] = kron(
                    memo[id(node.left)], memo[id(node.right)], size_guard
                )
            else:
                stack.extend([(node, True), (node.left, False), (node.right, False)])
        elif isinstance(node, Id):
            size = d**node.n
            if size * size > size_guard:
                raise SizeGuardExceeded(f"identity of size {size} exceeds the guard")
            memo[id(node)] = ExactMatrix.identity(size)
        elif isinstance(node, Tau):
            memo[id(node)] = sym_matrix(d**node.n, d**node.m, size_guard)
        elif isinstance(node, Mu):
            memo[id(node)] = a.mul
        elif isinstance(node, Eta):
            memo[id(node)] = a.unit
        elif isinstance(node, Delta):
            memo[id(node)] = a.comul
        else:
            memo[id(node)] = a.counit
    return memo[id(t)]


def _w_chain(c: int, a: AlgebraData) -> ExactMatrix:
    """Multiply c wires down to one: unit for 0, identity for 1, mul towers."""
    if c == 0:
        return a.unit
    out = ExactMatrix.identity(a.dim)
    for k in range(2, c + 1):
        out = mat_mul(a.mul, kron(out, ExactMatrix.identity(a.dim)))
    return out


def _l_chain(c: int, a: AlgebraData) -> ExactMatrix:
    if c == 0:
        return a.counit
    out = ExactMatrix.identity(a.dim)
    for k in range(2, c + 1):
        out = mat_mul(kron(out, ExactMatrix.identity(a.dim)), a.comul)
    return out


def eval_normal(
    nf: NormalForm, a: AlgebraData, size_guard: int = DEFAULT_SIZE_GUARD
) -> ExactMatrix:
    """Evaluate a normal form block by block; commutative data only."""
    flags = check_frobenius(a)
    if not (flags["com"] and flags["cocom"]):
        raise NonCommutativeData(
            "blockwise evaluation needs commutative and cocommutative data"
        )
    handle = mat_mul(a.mul, a.comul)
    center: ExactMatrix | None = None
    for b in nf.center_blocks():
        mat = _w_chain(b.ins, a)
        for _ in range(b.genus):
            mat = mat_mul(handle, mat)
        mat = mat_mul(_l_chain(b.outs, a), mat)
        center = mat if center is None else kron(center, mat, size_guard)
    if center is None:
        center = ExactMatrix.identity(1)
    out = mat_mul(center, perm_matrix(nf.head, a.dim, size_guard))
    return mat_mul(perm_matrix(nf.tail, a.dim, size_guard), out)


def closed_invariant(g: int, a: AlgebraData) -> Fraction:
    """The scalar of the closed genus-g piece: counit . (mul.comul)^g . unit."""
    handle = mat_mul(a.mul, a.comul)
    vec = a.unit
    for _ in range(g):
        vec = mat_mul(handle, vec)
    return Fraction(mat_mul(a.counit, vec).entry(0, 0))


# --- fixtures -----------------------------------------------------------------


def diagonal_algebra(dim: int = 2) -> AlgebraData:
    """Coordinatewise product with all-ones unit and counit; commutative."""
    one = Fraction(1)
    zero = Fraction(0)
    mul = [[zero] * (dim * dim) for _ in range(dim)]
    comul = [[zero] * dim for _ in range(dim * dim)]
    for i in range(dim):
        mul[i][i * dim + i] = one
        comul[i * dim + i][i] = one
    return AlgebraData(
        dim=dim,
        mul=ExactMatrix.from_rows(mul),
        unit=ExactMatrix.from_rows([[one]] * dim),
        comul=ExactMatrix.from_rows(comul),
        counit=ExactMatrix.from_rows([[one] * dim]),
    )


def matrix_algebra(p: int = 2) -> AlgebraData:
    """The p x p matrix algebra with trace form, via the diagram generators."""

    def frac(m: ExactMatrix) -> ExactMatrix:
        return ExactMatrix(m.rows, m.cols, tuple(Fraction(x) for x in m.entries))

    return AlgebraData(
        dim=p * p,
        mul=frac(brauer_b(mu1, p)),
        unit=frac(brauer_b(eta1, p)),
        comul=frac(brauer_b(delta1, p)),
        counit=frac(brauer_b(eps1, p)),
    )


# --- JSON ---------------------------------------------------------------------


def _fmt(x) -> str:
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"


def algebra_to_json_dict(a: AlgebraData) -> dict:
    return {
        "dim": a.dim,
        "mul": [_fmt(x) for x in a.mul.entries],
        "unit": [_fmt(x) for x in a.unit.entries],
        "comul": [_fmt(x) for x in a.comul.entries],
        "counit": [_fmt(x) for x in a.counit.entries],
    }


def algebra_from_json_dict(d: dict) -> AlgebraData:
    dim = int(d["dim"])

    def mat(key: str, rows: int, cols: int) -> ExactMatrix:
        entries = tuple(Fraction(s) for s in d[key])
        return ExactMatrix(rows, cols, entries)

    return AlgebraData(
        dim=dim,
        mul=mat("mul", dim, dim * dim),
        unit=mat("unit", dim, 1),
        comul=mat("comul", dim * dim, dim),
        counit=mat("counit", 1, dim),
    )
