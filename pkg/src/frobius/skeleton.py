"""Topological skeletons of terms: connectivity, genus, and closed pieces.

A term denotes a surface with ``n_in`` input and ``n_out`` output boundary
circles.  Its skeleton forgets everything except which boundary circles lie
on a common connected piece, the genus of each piece, and the multiset of
genera of pieces with no boundary at all.  Composition glues two skeletons
along their shared boundary: connected pieces merge when a glued circle
joins them, and every extra gluing edge beyond a spanning tree of a merged
cluster closes a loop, adding one to the genus.  This gives a second,
independent route to the canonical form: the skeleton is computed by pure
graph bookkeeping (union-find plus cycle counting) with no term rewriting,
and :func:`normal_of_skeleton` reads the normal form straight off it.

Skeletons of equal terms are equal, and a term is invertible exactly when
its skeleton is a genus-zero perfect matching of inputs to outputs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ArityMismatch, FrobiusError
from .normalize import NormalForm
from .perms import block_tau, invert
from .terms import Comp, Delta, Eps, Eta, Id, Mu, Tau, Tensor, Term, typecheck

__all__ = [
    "Component",
    "CobSkeleton",
    "generator_skeleton",
    "compose_skeleton",
    "tensor_skeleton",
    "cob_skeleton",
    "normal_of_skeleton",
    "skeleton_of_normal",
    "rho",
    "is_isomorphism_shape",
    "euler_characteristic",
    "skeleton_to_json_dict",
    "skeleton_from_json_dict",
]


@dataclass(frozen=True)
class Component:
    """One connected piece with boundary: its ports and genus."""

    in_ports: tuple[int, ...]
    out_ports: tuple[int, ...]
    genus: int


def _mk(n_in: int, n_out: int, comps: list[Component], closed: list[int]) -> "CobSkeleton":
    comps = sorted(comps, key=lambda c: (c.in_ports, c.out_ports))
    return CobSkeleton(n_in, n_out, tuple(comps), tuple(sorted(closed)))


@dataclass(frozen=True)
class CobSkeleton:
    """Connectivity invariant of a term: pieces with ports, plus closed genera."""

    n_in: int
    n_out: int
    components: tuple[Component, ...]
    closed: tuple[int, ...]


def generator_skeleton(t: Term) -> CobSkeleton:
    """Skeleton of a single generator (or identity)."""
    if isinstance(t, Id):
        return _mk(t.n, t.n, [Component((i,), (i,), 0) for i in range(t.n)], [])
    if isinstance(t, Tau):
        sigma = block_tau(t.n, t.m)
        k = t.n + t.m
        return _mk(k, k, [Component((i,), (sigma[i],), 0) for i in range(k)], [])
    if isinstance(t, Mu):
        return _mk(2, 1, [Component((0, 1), (0,), 0)], [])
    if isinstance(t, Eta):
        return _mk(0, 1, [Component((), (0,), 0)], [])
    if isinstance(t, Delta):
        return _mk(1, 2, [Component((0,), (0, 1), 0)], [])
    if isinstance(t, Eps):
        return _mk(1, 0, [Component((0,), (), 0)], [])
    raise FrobiusError("not a generator term")


def tensor_skeleton(s: CobSkeleton, t: CobSkeleton) -> CobSkeleton:
    """Side-by-side union, shifting the second skeleton's ports."""
    shifted = [
        Component(
            tuple(i + s.n_in for i in c.in_ports),
            tuple(j + s.n_out for j in c.out_ports),
            c.genus,
        )
        for c in t.components
    ]
    return _mk(
        s.n_in + t.n_in,
        s.n_out + t.n_out,
        list(s.components) + shifted,
        list(s.closed) + list(t.closed),
    )


def compose_skeleton(s: CobSkeleton, t: CobSkeleton) -> CobSkeleton:
    """Glue ``t`` after ``s`` along the shared boundary circles."""
    if s.n_out != t.n_in:
        raise ArityMismatch(f"cannot glue {s.n_out} outputs to {t.n_in} inputs")

    # vertices: 0..len(s)-1 are s components, then t components
    ns = len(s.components)
    parent = list(range(ns + len(t.components)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    out_owner = {}
    for i, c in enumerate(s.components):
        for w in c.out_ports:
            out_owner[w] = i
    in_owner = {}
    for i, c in enumerate(t.components):
        for w in c.in_ports:
            in_owner[w] = ns + i

    for w in range(s.n_out):
        a, b = find(out_owner[w]), find(in_owner[w])
        if a != b:
            parent[a] = b

    members: dict[int, list[int]] = {}
    for v in range(ns + len(t.components)):
        members.setdefault(find(v), []).append(v)
    edge_count: dict[int, int] = {}
    for w in range(s.n_out):
        r = find(out_owner[w])
        edge_count[r] = edge_count.get(r, 0) + 1

    comps: list[Component] = []
    closed = list(s.closed) + list(t.closed)
    for root, vs in members.items():
        genus = edge_count.get(root, 0) - len(vs) + 1
        ins: list[int] = []
        outs: list[int] = []
        for v in vs:
            if v < ns:
                genus += s.components[v].genus
                ins.extend(s.components[v].in_ports)
            else:
                genus += t.components[v - ns].genus
                outs.extend(t.components[v - ns].out_ports)
        if not ins and not outs:
            closed.append(genus)
        else:
            comps.append(Component(tuple(sorted(ins)), tuple(sorted(outs)), genus))
    return _mk(s.n_in, t.n_out, comps, closed)


def cob_skeleton(t: Term) -> CobSkeleton:
    """Skeleton of an arbitrary well-typed term, computed compositionally."""
    typecheck(t)
    memo: dict[int, CobSkeleton] = {}
    stack: list[tuple[Term, bool]] = [(t, False)]
    while stack:
        node, expanded = stack.pop()
        if id(node) in memo:
            continue
        if isinstance(node, Comp):
            if expanded:
                memo[id(node)] = compose_skeleton(memo[id(node.f)], memo[id(node.g)])
            else:
                stack.extend([(node, True), (node.g, False), (node.f, False)])
        elif isinstance(node, Tensor):
            if expanded:
                memo[id(node)] = tensor_skeleton(memo[id(node.left)], memo[id(node.right)])
            else:
                stack.extend([(node, True), (node.left, False), (node.right, False)])
        else:
            memo[id(node)] = generator_skeleton(node)
    return memo[id(t)]


def normal_of_skeleton(s: CobSkeleton) -> NormalForm:
    """Read the canonical form directly off a skeleton."""
    input_only = sorted(
        (c for c in s.components if not c.out_ports), key=lambda c: c.in_ports[0]
    )
    output_only = sorted(
        (c for c in s.components if not c.in_ports), key=lambda c: c.out_ports[0]
    )
    mixed = sorted(
        (c for c in s.components if c.in_ports and c.out_ports),
        key=lambda c: c.out_ports[0],
    )

    head = [0] * s.n_in
    offset = 0
    for c in input_only + mixed:
        for port in c.in_ports:
            head[port] = offset
            offset += 1
    tail = [0] * s.n_out
    offset = 0
    for c in output_only + mixed:
        for port in c.out_ports:
            tail[offset] = port
            offset += 1

    return NormalForm(
        closed=tuple(sorted(s.closed)),
        input_only=tuple((c.genus, len(c.in_ports)) for c in input_only),
        output_only=tuple((c.genus, len(c.out_ports)) for c in output_only),
        mixed=tuple((len(c.out_ports), c.genus, len(c.in_ports)) for c in mixed),
        head=tuple(head),
        tail=tuple(tail),
    )


def skeleton_of_normal(nf: NormalForm) -> CobSkeleton:
    """The skeleton a normal form describes (inverse of normal_of_skeleton)."""
    chi_inv = invert(nf.head)
    comps: list[Component] = []
    in_at = out_at = 0

    def take_ins(n: int) -> tuple[int, ...]:
        nonlocal in_at
        ports = tuple(sorted(chi_inv[in_at + k] for k in range(n)))
        in_at += n
        return ports

    def take_outs(p: int) -> tuple[int, ...]:
        nonlocal out_at
        ports = tuple(sorted(nf.tail[out_at + k] for k in range(p)))
        out_at += p
        return ports

    for g, n in nf.input_only:
        comps.append(Component(take_ins(n), (), g))
    for g, p in nf.output_only:
        comps.append(Component((), take_outs(p), g))
    for p, g, n in nf.mixed:
        comps.append(Component(take_ins(n), take_outs(p), g))
    return _mk(nf.n_in, nf.n_out, comps, list(nf.closed))


def rho(s: CobSkeleton) -> frozenset[frozenset[tuple[int, int]]]:
    """Boundary partition: which endpoints (i, 0) / (j, 1) share a piece."""
    parts = []
    for c in s.components:
        parts.append(
            frozenset(
                [(i, 0) for i in c.in_ports] + [(j, 1) for j in c.out_ports]
            )
        )
    return frozenset(parts)


def is_isomorphism_shape(s: CobSkeleton) -> bool:
    """True when the skeleton is a genus-zero matching with nothing closed."""
    return not s.closed and all(
        len(c.in_ports) == 1 and len(c.out_ports) == 1 and c.genus == 0
        for c in s.components
    )


def euler_characteristic(s: CobSkeleton) -> int:
    """Sum of 2 - 2g - b over all pieces; additive under compose and tensor."""
    total = sum(
        2 - 2 * c.genus - len(c.in_ports) - len(c.out_ports) for c in s.components
    )
    total += sum(2 - 2 * g for g in s.closed)
    return total


def skeleton_to_json_dict(s: CobSkeleton) -> dict:
    return {
        "nIn": s.n_in,
        "nOut": s.n_out,
        "components": [
            {"in": list(c.in_ports), "out": list(c.out_ports), "genus": c.genus}
            for c in s.components
        ],
        "closed": list(s.closed),
    }


def skeleton_from_json_dict(d: dict) -> CobSkeleton:
    return _mk(
        d["nIn"],
        d["nOut"],
        [
            Component(tuple(c["in"]), tuple(c["out"]), c["genus"])
            for c in d["components"]
        ],
        list(d["closed"]),
    )
