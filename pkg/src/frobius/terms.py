"""The term language of the free commutative Frobenius PROP.

Objects are natural numbers (wire counts).  Terms are built from the
identities ``id n``, the block symmetries ``tau(n,m)``, the four Frobenius
generators ``mu: 2 -> 1``, ``eta: 0 -> 1``, ``delta: 1 -> 2``,
``eps: 1 -> 0``, sequential composition ``g . f`` (apply ``f`` first) and
parallel composition ``f x g``.

The concrete syntax is ASCII only.  ``x`` binds tighter than ``.``, both are
left-associative, whitespace is ignored between tokens:

>>> parse_term("mu . tau(1,1)")
Comp(g=Mu(), f=Tau(n=1, m=1))
>>> parse_term("(mu x id1) . (id1 x delta)")
Comp(g=Tensor(left=Mu(), right=Id(n=1)), f=Tensor(left=Id(n=1), right=Delta()))
>>> print_term(parse_term("((mu . delta)) x id2"))
'(mu . delta) x id2'
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TypeAlias, Union

from .errors import FrobiusError, TermSyntaxError, TypeMismatch

__all__ = [
    "Term",
    "TermType",
    "Id",
    "Tau",
    "Mu",
    "Eta",
    "Delta",
    "Eps",
    "Comp",
    "Tensor",
    "MAX_ARITY",
    "parse_term",
    "print_term",
    "typecheck",
    "count_nodes",
]

# Guard against pathological arities; 2**16 wires is far beyond desk scale.
MAX_ARITY = 1 << 16


def _check_arity(n: int) -> None:
    if not 0 <= n <= MAX_ARITY:
        raise FrobiusError(f"arity {n} outside [0, {MAX_ARITY}]")


@dataclass(frozen=True)
class Id:
    n: int

    def __post_init__(self) -> None:
        _check_arity(self.n)


@dataclass(frozen=True)
class Tau:
    n: int
    m: int

    def __post_init__(self) -> None:
        _check_arity(self.n)
        _check_arity(self.m)


@dataclass(frozen=True)
class Mu:
    pass


@dataclass(frozen=True)
class Eta:
    pass


@dataclass(frozen=True)
class Delta:
    pass


@dataclass(frozen=True)
class Eps:
    pass


@dataclass(frozen=True)
class Comp:
    """``g`` after ``f``: the wiring of ``f`` feeds into ``g``."""

    g: "Term"
    f: "Term"


@dataclass(frozen=True)
class Tensor:
    left: "Term"
    right: "Term"


Term: TypeAlias = Union[Id, Tau, Mu, Eta, Delta, Eps, Comp, Tensor]


@dataclass(frozen=True)
class TermType:
    """The type ``source -> target`` of a term."""

    source: int
    target: int

    def __str__(self) -> str:
        return f"{self.source} -> {self.target}"


_GENERATOR_TYPES = {
    Mu: TermType(2, 1),
    Eta: TermType(0, 1),
    Delta: TermType(1, 2),
    Eps: TermType(1, 0),
}


def typecheck(t: Term) -> TermType:
    """Return the unique type of ``t``, or raise :class:`TypeMismatch`.

    >>> typecheck(Comp(Mu(), Tensor(Eta(), Id(1))))
    TermType(source=1, target=1)
    >>> typecheck(Tau(2, 1))
    TermType(source=3, target=3)
    """
    # Explicit post-order walk: composition chains can be deep, and the
    # public contract allows terms up to 1e5 nodes.
    result: dict[int, TermType] = {}
    stack: list[tuple[Term, str, bool]] = [(t, "", False)]
    while stack:
        node, path, expanded = stack.pop()
        if id(node) in result:
            continue
        cls = type(node)
        if cls is Id:
            result[id(node)] = TermType(node.n, node.n)
        elif cls is Tau:
            result[id(node)] = TermType(node.n + node.m, node.m + node.n)
        elif cls in _GENERATOR_TYPES:
            result[id(node)] = _GENERATOR_TYPES[cls]
        elif cls is Comp:
            if not expanded:
                stack.append((node, path, True))
                stack.append((node.g, path + ".g", False))
                stack.append((node.f, path + ".f", False))
            else:
                ft = result[id(node.f)]
                gt = result[id(node.g)]
                if ft.target != gt.source:
                    raise TypeMismatch(gt.source, ft.target, path.lstrip("."))
                result[id(node)] = TermType(ft.source, gt.target)
        elif cls is Tensor:
            if not expanded:
                stack.append((node, path, True))
                stack.append((node.left, path + ".left", False))
                stack.append((node.right, path + ".right", False))
            else:
                lt = result[id(node.left)]
                rt = result[id(node.right)]
                result[id(node)] = TermType(lt.source + rt.source, lt.target + rt.target)
        else:
            raise FrobiusError(f"not a term: {node!r}")
    return result[id(t)]


def count_nodes(t: Term) -> int:
    """Number of AST nodes (every constructor counts as one)."""
    total = 0
    stack = [t]
    while stack:
        node = stack.pop()
        total += 1
        if isinstance(node, Comp):
            stack.append(node.g)
            stack.append(node.f)
        elif isinstance(node, Tensor):
            stack.append(node.left)
            stack.append(node.right)
    return total


# --- parsing ---------------------------------------------------------------

_ATOM_WORDS = ("mu", "eta", "delta", "eps")


class _Tokens:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        if self.pos >= len(self.text):
            return ""
        c = self.text[self.pos]
        if c.isalpha():
            end = self.pos
            while end < len(self.text) and self.text[end].isalpha():
                end += 1
            return self.text[self.pos : end]
        if c.isdigit():
            end = self.pos
            while end < len(self.text) and self.text[end].isdigit():
                end += 1
            return self.text[self.pos : end]
        return c

    def take(self) -> str:
        tok = self.peek()
        self.pos += len(tok)
        return tok

    def expect(self, tok: str) -> None:
        found = self.take()
        if found != tok:
            raise TermSyntaxError(f"expected {tok!r}, found {found!r}", self.pos)

    def number(self) -> int:
        tok = self.take()
        if not tok.isdigit():
            raise TermSyntaxError(f"expected a natural number, found {tok!r}", self.pos)
        return int(tok)


def parse_term(text: str) -> Term:
    """Parse the concrete syntax into an AST.

    >>> parse_term("id0")
    Id(n=0)
    >>> parse_term("tau( 2 , 1 )")
    Tau(n=2, m=1)
    """
    toks = _Tokens(text)
    term = _parse_comp(toks)
    if toks.peek():
        raise TermSyntaxError(f"trailing input {toks.peek()!r}", toks.pos)
    return term


def _parse_comp(toks: _Tokens) -> Term:
    term = _parse_tensor(toks)
    while toks.peek() == ".":
        toks.take()
        term = Comp(term, _parse_tensor(toks))
    return term


def _parse_tensor(toks: _Tokens) -> Term:
    term = _parse_atom(toks)
    while toks.peek() == "x":
        toks.take()
        term = Tensor(term, _parse_atom(toks))
    return term


def _parse_atom(toks: _Tokens) -> Term:
    tok = toks.peek()
    if tok == "(":
        toks.take()
        inner = _parse_comp(toks)
        toks.expect(")")
        return inner
    if tok == "id":
        toks.take()
        return Id(toks.number())
    if tok == "tau":
        toks.take()
        toks.expect("(")
        n = toks.number()
        toks.expect(",")
        m = toks.number()
        toks.expect(")")
        return Tau(n, m)
    if tok in _ATOM_WORDS:
        toks.take()
        return {"mu": Mu, "eta": Eta, "delta": Delta, "eps": Eps}[tok]()
    raise TermSyntaxError(f"expected a term, found {tok!r}" if tok else "unexpected end of input", toks.pos)


# --- printing --------------------------------------------------------------

# precedence: composition 1 < tensor 2 < atoms 3
def _prec(t: Term) -> int:
    if isinstance(t, Comp):
        return 1
    if isinstance(t, Tensor):
        return 2
    return 3


def _atom_text(t: Term) -> str:
    if isinstance(t, Id):
        return f"id{t.n}"
    if isinstance(t, Tau):
        return f"tau({t.n},{t.m})"
    return {Mu: "mu", Eta: "eta", Delta: "delta", Eps: "eps"}[type(t)]


def print_term(t: Term, full: bool = False) -> str:
    """Render ``t``; minimal parentheses by default, every binary node
    parenthesized when ``full`` is set.  Round-trips through :func:`parse_term`.

    >>> print_term(Comp(Mu(), Tau(1, 1)))
    'mu . tau(1,1)'
    >>> print_term(Tensor(Id(2), Eps()))
    'id2 x eps'
    >>> print_term(Comp(Id(1), Comp(Eps(), Eta())))
    'id1 . (eps . eta)'
    """
    out: list[str] = []
    stack: list[object] = [(t, 1)]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            out.append(item)
            continue
        node, ctx = item  # type: ignore[misc]
        prec = _prec(node)
        if prec == 3:
            out.append(_atom_text(node))
            continue
        wrap = prec < ctx or full
        if wrap:
            stack.append(")")
        if isinstance(node, Comp):
            stack.append((node.f, 2))
            stack.append(" . ")
            stack.append((node.g, 1))
        else:
            stack.append((node.right, 3))
            stack.append(" x ")
            stack.append((node.left, 2))
        if wrap:
            out.append("(")
    return "".join(out)
