"""Permutations of finite ordinals, the semantics of wiring-only terms.

A permutation is stored in one-line notation as a tuple ``image`` with
``image[i]`` the wire that input ``i`` connects to.  Composition follows
function application: ``compose(g, f)`` applies ``f`` first, matching
``Comp(g, f)`` on terms.

A term built from ``id``/``tau`` alone (a tau-term) denotes a permutation,
and two tau-terms are equal in the PROP exactly when their permutations
agree; :func:`perm_of_tau_term` and :func:`tau_term_of_perm` convert in both
directions.  :func:`factor_out` and :func:`factor_out_pair` peel one or two
chosen wires off a permutation, the factorization step the normalizer uses
to slide a generator past the tail wiring.
"""

from __future__ import annotations

from .errors import ArityMismatch, FrobiusError, NotParallel, NotTauTerm
from .terms import Comp, Id, Tau, Tensor, Term

__all__ = [
    "Perm",
    "identity",
    "compose",
    "invert",
    "tensor",
    "block_tau",
    "pad",
    "is_parallel",
    "perm_of_tau_term",
    "tau_term_of_perm",
    "factor_out",
    "factor_out_pair",
]

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(n))


def compose(g: Perm, f: Perm) -> Perm:
    """g after f: ``compose(g, f)[i] == g[f[i]]``."""
    if len(g) != len(f):
        raise ArityMismatch(f"cannot compose permutations of sizes {len(g)} and {len(f)}")
    return tuple(g[x] for x in f)


def invert(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def tensor(p: Perm, q: Perm) -> Perm:
    """Block sum: ``p`` on the first wires, ``q`` shifted after them."""
    n = len(p)
    return p + tuple(x + n for x in q)


def block_tau(n: int, m: int) -> Perm:
    """The permutation of ``tau(n,m)``: input i < n goes to i+m, input n+j to j.

    >>> block_tau(2, 1)
    (1, 2, 0)
    >>> block_tau(0, 3)
    (0, 1, 2)
    """
    return tuple(i + m for i in range(n)) + tuple(range(m))


def pad(inner: Perm, offset: int, total: int) -> Perm:
    """``inner`` acting on wires [offset, offset+len), identity elsewhere."""
    out = list(range(total))
    for i, x in enumerate(inner):
        out[offset + i] = offset + x
    return tuple(out)


def is_parallel(p: Perm, l: int) -> bool:
    """Wires l, l+1 are parallel when their preimages are adjacent in order."""
    return p.index(l + 1) == p.index(l) + 1


def perm_of_tau_term(t: Term) -> Perm:
    """The unique permutation of a wiring-only term.

    >>> perm_of_tau_term(Comp(Tensor(Tau(1, 1), Id(1)), Tensor(Id(1), Tau(1, 1))))
    (1, 2, 0)
    """
    done: dict[int, Perm] = {}
    stack: list[tuple[Term, bool]] = [(t, False)]
    while stack:
        node, expanded = stack.pop()
        if id(node) in done:
            continue
        if isinstance(node, Id):
            done[id(node)] = identity(node.n)
        elif isinstance(node, Tau):
            done[id(node)] = block_tau(node.n, node.m)
        elif isinstance(node, Comp):
            if expanded:
                done[id(node)] = compose(done[id(node.g)], done[id(node.f)])
            else:
                stack.extend([(node, True), (node.g, False), (node.f, False)])
        elif isinstance(node, Tensor):
            if expanded:
                done[id(node)] = tensor(done[id(node.left)], done[id(node.right)])
            else:
                stack.extend([(node, True), (node.left, False), (node.right, False)])
        else:
            raise NotTauTerm(f"generator {node!r} is not a wiring")
    return done[id(t)]


def _transposition_term(i: int, n: int) -> Term:
    """id_i x tau(1,1) x id_(n-i-2), with zero-width identities dropped."""
    t: Term = Tau(1, 1)
    if i > 0:
        t = Tensor(Id(i), t)
    if n - i - 2 > 0:
        t = Tensor(t, Id(n - i - 2))
    return t


def tau_term_of_perm(p: Perm) -> Term:
    """A canonical wiring term for ``p`` via adjacent-transposition sorting.

    Bubble sort of the image records the swaps; the resulting term applies
    the first recorded swap first.  ``perm_of_tau_term`` is a left inverse.

    >>> tau_term_of_perm((0, 1, 2))
    Id(n=3)
    >>> tau_term_of_perm((1, 0))
    Tau(n=1, m=1)
    """
    n = len(p)
    img = list(p)
    swaps: list[int] = []
    changed = True
    while changed:
        changed = False
        for i in range(n - 1):
            if img[i] > img[i + 1]:
                img[i], img[i + 1] = img[i + 1], img[i]
                swaps.append(i)
                changed = True
    if not swaps:
        return Id(n)
    # img was sorted by p . t_{s1} . ... . t_{sk} = id, so p = t_{sk} . ... . t_{s1}
    term = _transposition_term(swaps[0], n)
    for i in swaps[1:]:
        term = Comp(_transposition_term(i, n), term)
    return term


def factor_out(p: Perm, l: int) -> tuple[int, Perm]:
    """Split wire ``l`` off the target side of ``p``.

    Returns ``(j, rest)`` with ``j = p^-1(l)`` and ``rest`` on size-1 wires
    such that ``p = (tau(1,l) x id) . (id1 x rest) . (tau(j,1) x id)``.

    >>> factor_out((2, 0, 1), 2)
    (0, (0, 1))
    """
    size = len(p)
    if not 0 <= l < size:
        raise FrobiusError(f"wire {l} out of range for size {size}")
    j = p.index(l)
    rest = tuple(
        (p[w] if p[w] < l else p[w] - 1) for w in range(size) if w != j
    )
    return j, rest


def factor_out_pair(p: Perm, l: int) -> tuple[int, Perm]:
    """Split the parallel wires ``l, l+1`` off the target side of ``p``.

    Requires ``p^-1(l+1) == p^-1(l) + 1``; returns ``(j, rest)`` with
    ``p = (tau(2,l) x id) . (id2 x rest) . (tau(j,2) x id)``.
    """
    size = len(p)
    if not 0 <= l + 1 < size:
        raise FrobiusError(f"wires {l},{l + 1} out of range for size {size}")
    j = p.index(l)
    if p.index(l + 1) != j + 1:
        raise NotParallel(f"wires {l},{l + 1} are not parallel in {p}")
    rest = tuple(
        (p[w] if p[w] < l else p[w] - 2) for w in range(size) if w not in (j, j + 1)
    )
    return j, rest
