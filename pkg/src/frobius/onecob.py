"""One-dimensional cobordisms: matchings of signed boundary points.

An arrow from a sign sequence to a sign sequence is a perfect matching of
all boundary points together with a count of free circles.  Matched points
must be compatibly oriented: two ingoing points or two outgoing points can
only be joined by an arc if their signs differ, while an ingoing point
joined to an outgoing point keeps its sign.  Composition glues the middle
boundary and follows paths; every cycle that closes in the middle becomes
one more circle.

The four fixtures ``mu1``, ``eta1``, ``delta1``, ``eps1`` equip the
two-point object "+-" with multiplication, unit, comultiplication and
counit.  They satisfy the Frobenius axioms diagrammatically but not
commutativity: ``compose_diagram(mu1, symmetry_diagram("+-", "+-"))`` has a
different matching from ``mu1``, although the counit-rounded forms agree.

Text format (used by the CLI): ``+-+- ; +- ; (i0 o0)(i1 i2)(i3 o1) ; 0``
with input signs, output signs, matched pairs, circle count.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ArityMismatch, BadMatching, FrobiusError, SignClash, SignMismatch

__all__ = [
    "Endpoint",
    "OneCobDiagram",
    "make_diagram",
    "compose_diagram",
    "tensor_diagram",
    "id_diagram",
    "symmetry_diagram",
    "parse_diagram",
    "print_diagram",
    "mu1",
    "eta1",
    "delta1",
    "eps1",
]

# an endpoint is ("i", k) for the k-th ingoing point or ("o", k) for outgoing
Endpoint = tuple[str, int]


@dataclass(frozen=True)
class OneCobDiagram:
    in_signs: str
    out_signs: str
    matching: frozenset[frozenset[Endpoint]]
    circles: int


def _sign_of(d_in: str, d_out: str, e: Endpoint) -> str:
    side, k = e
    return d_in[k] if side == "i" else d_out[k]


def make_diagram(
    in_signs: str,
    out_signs: str,
    matching: "frozenset[frozenset[Endpoint]] | set | list",
    circles: int = 0,
) -> OneCobDiagram:
    """Validate and build a diagram; pairs may be given as any 2-sets/tuples."""
    for s in (in_signs, out_signs):
        if any(ch not in "+-" for ch in s):
            raise SignClash(f"signs must be '+' or '-', got {s!r}")
    if circles < 0:
        raise BadMatching("negative circle count")

    pairs = frozenset(frozenset(pair) for pair in matching)
    seen: set[Endpoint] = set()
    for pair in pairs:
        if len(pair) != 2:
            raise BadMatching(f"not a two-point pair: {set(pair)!r}")
        for side, k in pair:
            n = len(in_signs) if side == "i" else len(out_signs)
            if side not in "io" or not 0 <= k < n:
                raise BadMatching(f"endpoint {side}{k} out of range")
            if (side, k) in seen:
                raise BadMatching(f"endpoint {side}{k} matched twice")
            seen.add((side, k))
    expected = len(in_signs) + len(out_signs)
    if len(seen) != expected:
        raise BadMatching(f"matching covers {len(seen)} of {expected} endpoints")

    for pair in pairs:
        (s1, k1), (s2, k2) = sorted(pair)
        a = _sign_of(in_signs, out_signs, (s1, k1))
        b = _sign_of(in_signs, out_signs, (s2, k2))
        if s1 == s2 and a == b:
            raise SignClash(f"{s1}{k1} and {s2}{k2} carry equal signs")
        if s1 != s2 and a != b:
            raise SignClash(f"{s1}{k1} and {s2}{k2} carry different signs")

    return OneCobDiagram(in_signs, out_signs, pairs, circles)


def id_diagram(signs: str) -> OneCobDiagram:
    return make_diagram(
        signs, signs, [(("i", k), ("o", k)) for k in range(len(signs))], 0
    )


def symmetry_diagram(s1: str, s2: str) -> OneCobDiagram:
    """The block swap: s1's strands cross over s2's."""
    n, m = len(s1), len(s2)
    pairs = [(("i", k), ("o", k + m)) for k in range(n)]
    pairs += [(("i", n + k), ("o", k)) for k in range(m)]
    return make_diagram(s1 + s2, s2 + s1, pairs, 0)


def compose_diagram(g: OneCobDiagram, f: OneCobDiagram) -> OneCobDiagram:
    """g after f: glue f's outputs to g's inputs, following paths."""
    if len(f.out_signs) != len(g.in_signs):
        raise ArityMismatch(
            f"cannot glue {len(f.out_signs)} outputs to {len(g.in_signs)} inputs"
        )
    if f.out_signs != g.in_signs:
        raise SignMismatch(f"signs {f.out_signs!r} vs {g.in_signs!r} at the glue line")

    # nodes: ("fin", k) result inputs, ("mid", k) glued points, ("gout", k)
    def f_node(e: Endpoint) -> tuple[str, int]:
        return ("fin", e[1]) if e[0] == "i" else ("mid", e[1])

    def g_node(e: Endpoint) -> tuple[str, int]:
        return ("mid", e[1]) if e[0] == "i" else ("gout", e[1])

    nbrs: dict[tuple[str, int], list[tuple[str, int]]] = {}
    for pair in f.matching:
        a, b = pair
        nbrs.setdefault(f_node(a), []).append(f_node(b))
        nbrs.setdefault(f_node(b), []).append(f_node(a))
    for pair in g.matching:
        a, b = pair
        nbrs.setdefault(g_node(a), []).append(g_node(b))
        nbrs.setdefault(g_node(b), []).append(g_node(a))

    def boundary(node: tuple[str, int]) -> Endpoint | None:
        if node[0] == "fin":
            return ("i", node[1])
        if node[0] == "gout":
            return ("o", node[1])
        return None

    visited: set[tuple[str, int]] = set()
    new_pairs: list[tuple[Endpoint, Endpoint]] = []
    for start in nbrs:
        if boundary(start) is None or start in visited:
            continue
        visited.add(start)
        prev, cur = start, nbrs[start][0]
        while boundary(cur) is None:
            visited.add(cur)
            nxt = [x for x in nbrs[cur] if x != prev]
            # a middle point has two incident arcs; leave by the other one
            prev, cur = cur, nxt[0] if nxt else nbrs[cur][0]
        visited.add(cur)
        end_a, end_b = boundary(start), boundary(cur)
        assert end_a is not None and end_b is not None
        new_pairs.append((end_a, end_b))

    loops = 0
    for start in nbrs:
        if start in visited:
            continue
        loops += 1
        prev, cur = start, nbrs[start][0]
        visited.add(start)
        while cur != start:
            visited.add(cur)
            nxt = [x for x in nbrs[cur] if x != prev]
            prev, cur = cur, nxt[0] if nxt else nbrs[cur][0]

    return make_diagram(
        f.in_signs, g.out_signs, new_pairs, f.circles + g.circles + loops
    )


def tensor_diagram(f: OneCobDiagram, g: OneCobDiagram) -> OneCobDiagram:
    """Put f and g side by side, shifting g's endpoints."""
    di, do = len(f.in_signs), len(f.out_signs)

    def shift(e: Endpoint) -> Endpoint:
        return (e[0], e[1] + (di if e[0] == "i" else do))

    pairs = [tuple(pair) for pair in f.matching]
    pairs += [tuple(shift(e) for e in pair) for pair in g.matching]
    return make_diagram(
        f.in_signs + g.in_signs,
        f.out_signs + g.out_signs,
        pairs,
        f.circles + g.circles,
    )


# --- text format --------------------------------------------------------------

_PAIR_RE = re.compile(r"\(\s*([io])(\d+)\s+([io])(\d+)\s*\)")


def parse_diagram(text: str) -> OneCobDiagram:
    """Parse ``ins ; outs ; (..)(..) ; circles``; empty sign fields allowed."""
    parts = [p.strip() for p in text.split(";")]
    if len(parts) != 4:
        raise FrobiusError(f"diagram text needs 4 ';'-separated fields, got {len(parts)}")
    in_signs, out_signs, pair_text, circle_text = parts
    pairs: list[tuple[Endpoint, Endpoint]] = []
    for m in _PAIR_RE.finditer(pair_text):
        pairs.append(((m.group(1), int(m.group(2))), (m.group(3), int(m.group(4)))))
    leftovers = _PAIR_RE.sub("", pair_text).strip()
    if leftovers:
        raise FrobiusError(f"unreadable pair text near {leftovers!r}")
    try:
        circles = int(circle_text) if circle_text else 0
    except ValueError:
        raise FrobiusError(f"bad circle count {circle_text!r}") from None
    return make_diagram(in_signs, out_signs, pairs, circles)


def print_diagram(d: OneCobDiagram) -> str:
    """Canonical text: pairs sorted (inputs before outputs, by index)."""
    pairs = sorted(tuple(sorted(pair)) for pair in d.matching)
    body = "".join(f"({a[0]}{a[1]} {b[0]}{b[1]})" for a, b in pairs)
    return f"{d.in_signs} ; {d.out_signs} ; {body} ; {d.circles}"


mu1 = make_diagram(
    "+-+-", "+-", [(("i", 0), ("o", 0)), (("i", 1), ("i", 2)), (("i", 3), ("o", 1))]
)
eta1 = make_diagram("", "+-", [(("o", 0), ("o", 1))])
delta1 = make_diagram(
    "+-", "+-+-", [(("i", 0), ("o", 0)), (("o", 1), ("o", 2)), (("i", 1), ("o", 3))]
)
eps1 = make_diagram("+-", "", [(("i", 0), ("i", 1))])
