"""Seeded random generators for terms, diagrams, and matrices.

Everything takes an explicit :class:`random.Random` so runs are exactly
reproducible from a seed.  Terms are grown as stacks of elementary layers
``id_l x beta x id_r``, which keeps them well-typed by construction and
puts a hard bound on the wire count (``max_width``); diagrams are grown
from strands, cups and caps and then shuffled, which keeps the sign rules
satisfied by construction.
"""

from __future__ import annotations

import random

from .brauer import ExactMatrix
from .onecob import OneCobDiagram, make_diagram
from .terms import (
    Comp,
    Delta,
    Eps,
    Eta,
    Id,
    Mu,
    Tau,
    Tensor,
    Term,
    count_nodes,
    typecheck,
)

__all__ = [
    "GENERATOR_ATOMS",
    "random_term",
    "random_composable_terms",
    "random_diagram",
    "random_diagram_from",
    "random_composable_diagrams",
    "random_matrix",
]

# the closed generator vocabulary used by enumeration and fuzzing
GENERATOR_ATOMS: tuple[Term, ...] = (
    Id(0),
    Id(1),
    Id(2),
    Tau(1, 1),
    Tau(1, 2),
    Tau(2, 1),
    Mu(),
    Eta(),
    Delta(),
    Eps(),
)

# layer vocabulary: (builder, source, target)
_LAYER_GENS: tuple[tuple[Term, int, int], ...] = (
    (Mu(), 2, 1),
    (Eta(), 0, 1),
    (Delta(), 1, 2),
    (Eps(), 1, 0),
    (Tau(1, 1), 2, 2),
    (Tau(1, 2), 3, 3),
    (Tau(2, 1), 3, 3),
)


def _layer(beta: Term, l: int, r: int) -> Term:
    """id_l x beta x id_r with zero-width identities dropped."""
    t = beta
    if l:
        t = Tensor(Id(l), t)
    if r:
        t = Tensor(t, Id(r))
    return t


def random_term(
    rng: random.Random,
    max_nodes: int = 25,
    max_width: int = 4,
    source: "int | None" = None,
) -> Term:
    """A random well-typed term built from generator layers."""
    width = rng.randint(0, max_width) if source is None else source
    term: Term = Id(width)
    nodes = 1
    while nodes + 6 <= max_nodes:
        if rng.random() < 0.15:
            break
        options = [
            (beta, s, t)
            for beta, s, t in _LAYER_GENS
            if s <= width and width - s + t <= max_width
        ]
        if not options:
            break
        beta, s, t = rng.choice(options)
        l = rng.randint(0, width - s)
        r = width - s - l
        layer = _layer(beta, l, r)
        term = layer if isinstance(term, Id) else Comp(layer, term)
        width = width - s + t
        nodes = count_nodes(term)
    return term


def random_composable_terms(
    rng: random.Random, max_nodes: int = 25, max_width: int = 4
) -> tuple[Term, Term]:
    """A pair (f, g) with target(f) = source(g)."""
    f = random_term(rng, max_nodes, max_width)
    mid = typecheck(f).target
    g = random_term(rng, max_nodes, max(max_width, mid), source=mid)
    return f, g


def random_diagram(rng: random.Random, max_pairs: int = 4) -> OneCobDiagram:
    """A random valid diagram grown from strands, cups, and caps."""
    k = rng.randint(0, max_pairs)
    ins: list[tuple[str, int]] = []
    outs: list[tuple[str, int]] = []
    for pid in range(k):
        r = rng.random()
        if r < 0.5:
            s = rng.choice("+-")
            ins.append((s, pid))
            outs.append((s, pid))
        elif r < 0.75:
            ins.append(("+", pid))
            ins.append(("-", pid))
        else:
            outs.append(("+", pid))
            outs.append(("-", pid))
    rng.shuffle(ins)
    rng.shuffle(outs)
    ends: dict[int, list[tuple[str, int]]] = {}
    for idx, (_, pid) in enumerate(ins):
        ends.setdefault(pid, []).append(("i", idx))
    for idx, (_, pid) in enumerate(outs):
        ends.setdefault(pid, []).append(("o", idx))
    circles = 1 if rng.random() < 0.15 else 0
    return make_diagram(
        "".join(s for s, _ in ins),
        "".join(s for s, _ in outs),
        [tuple(v) for v in ends.values()],
        circles,
    )


def random_diagram_from(
    rng: random.Random, in_signs: str, max_pairs: int = 4
) -> OneCobDiagram:
    """A random valid diagram with the given input signs."""
    unused = list(range(len(in_signs)))
    pairs: list[tuple[tuple[str, int], tuple[str, int]]] = []
    outs: list[tuple[str, int]] = []  # (sign, provisional id)
    tmp = 0
    while unused:
        a = unused.pop(rng.randrange(len(unused)))
        opposite = [x for x in unused if in_signs[x] != in_signs[a]]
        if opposite and rng.random() < 0.4:
            b = rng.choice(opposite)
            unused.remove(b)
            pairs.append((("i", a), ("i", b)))
        else:
            outs.append((in_signs[a], tmp))
            pairs.append((("i", a), ("t", tmp)))
            tmp += 1
    budget = max_pairs - len(pairs)
    for _ in range(rng.randint(0, max(0, budget))):
        outs.append(("+", tmp))
        outs.append(("-", tmp + 1))
        pairs.append((("t", tmp), ("t", tmp + 1)))
        tmp += 2
    rng.shuffle(outs)
    where = {t: idx for idx, (_, t) in enumerate(outs)}

    def final(e: tuple[str, int]) -> tuple[str, int]:
        return e if e[0] == "i" else ("o", where[e[1]])

    circles = 1 if rng.random() < 0.15 else 0
    return make_diagram(
        in_signs,
        "".join(s for s, _ in outs),
        [(final(a), final(b)) for a, b in pairs],
        circles,
    )


def random_composable_diagrams(
    rng: random.Random, max_pairs: int = 4
) -> tuple[OneCobDiagram, OneCobDiagram]:
    """A pair (f, g) with f's output signs equal to g's input signs."""
    f = random_diagram(rng, max_pairs=max(1, max_pairs // 2))
    g = random_diagram_from(rng, f.out_signs, max_pairs=max_pairs)
    return f, g


def random_matrix(
    rng: random.Random, rows: int, cols: int, lo: int = -9, hi: int = 9
) -> ExactMatrix:
    return ExactMatrix(
        rows, cols, tuple(rng.randint(lo, hi) for _ in range(rows * cols))
    )
