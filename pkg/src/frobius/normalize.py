"""Normalization of Frobenius terms to their unique canonical form.

Every well-typed term is equal to a *special* term

    tail . (E(p1,m1,n1) x ... x E(pk,mk,nk)) . head

where head and tail are wirings and E(p, m, n) is the connected block with
n inputs, p outputs and genus m, defined as Lambda_(p-1) . H_m . V_(n-1)
over the ladders

    V_(-1) = eta,   V_0 = id1,   V_k = mu . (mu x id1) . ... . (mu x id_(k-1))
    H_0 = id1,      H_k = (mu . delta) composed k times
    Lambda_(-1) = eps,  Lambda_0 = id1,
    Lambda_k = (delta x id_(k-1)) . ... . (delta x id1) . delta

A wiring-only term is already special (the pure_tau variant).

:func:`to_special` is a structural rewriter.  The term is first flattened
into elementary slices id_l x beta x id_r (beta a single generator), applied
innermost first; each slice is then absorbed into the running special term:

* a wiring slice composes into the tail;
* delta and eps factor the touched wire out of the tail and add or remove
  one output of the block it leads to (a fork or a cap anywhere on a block's
  output bundle stays on that block);
* eta slides past the tail and becomes a fresh one-output block in front;
* mu first rewires so that both multiplied wires leave adjacent output
  offsets, which is always possible because permuting a block's own outputs
  or reordering whole blocks (conjugating head and tail by block rotations)
  does not change the term; if the two offsets belong to the same block the
  block gains a handle (one less output, genus + 1), and if they belong to
  two different blocks the blocks fuse (outputs add minus one, genera and
  inputs add).

:func:`to_normal` then brings a special term into the unique normal form:
blocks are split into closed / input-only / output-only / mixed classes,
closed genera are sorted, input-only blocks are ordered by their least
input port, the other two classes by their least output port, and head and
tail are rewired so every block meets its ports in increasing order.  All
of those rewirings are invisible up to the PROP equations, so structural
equality of the results decides equality of terms.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import FrobiusError
from .perms import (
    Perm,
    block_tau,
    compose,
    factor_out,
    factor_out_pair,
    identity,
    invert,
    pad,
    tau_term_of_perm,
    tensor,
)
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
    "EBlock",
    "SpecialTerm",
    "NormalForm",
    "MAX_TERM_NODES",
    "to_special",
    "to_normal",
    "normalize",
    "equal",
    "expand_to_term",
    "validate_normal_form",
]

MAX_TERM_NODES = 10**5


@dataclass(frozen=True)
class EBlock:
    """Connected block with ``outs`` outputs, genus ``genus``, ``ins`` inputs."""

    outs: int
    genus: int
    ins: int


@dataclass(frozen=True)
class SpecialTerm:
    """Either a bare wiring (``pure_tau``) or ``tail . blocks . head``."""

    pure_tau: Perm | None = None
    tail: Perm = ()
    center: tuple[EBlock, ...] = ()
    head: Perm = ()

    def __post_init__(self) -> None:
        if self.pure_tau is None:
            if not self.center:
                raise FrobiusError("block variant requires a nonempty center")
            if len(self.tail) != sum(b.outs for b in self.center):
                raise FrobiusError("tail size does not match total outputs")
            if len(self.head) != sum(b.ins for b in self.center):
                raise FrobiusError("head size does not match total inputs")

    @property
    def is_pure(self) -> bool:
        return self.pure_tau is not None


@dataclass(frozen=True)
class NormalForm:
    """The unique canonical form of a term.

    ``closed`` lists genera of closed pieces, weakly increasing.
    ``input_only`` holds (genus, ins) pairs, ``output_only`` (genus, outs),
    ``mixed`` (outs, genus, ins) triples; ``head`` maps each input port to
    its block offset and ``tail`` maps each block output offset to its port.
    """

    closed: tuple[int, ...] = ()
    input_only: tuple[tuple[int, int], ...] = ()
    output_only: tuple[tuple[int, int], ...] = ()
    mixed: tuple[tuple[int, int, int], ...] = ()
    head: Perm = ()
    tail: Perm = ()

    @property
    def n_in(self) -> int:
        return len(self.head)

    @property
    def n_out(self) -> int:
        return len(self.tail)

    def center_blocks(self) -> tuple[EBlock, ...]:
        """All blocks in center order: closed, input-only, output-only, mixed."""
        return (
            tuple(EBlock(0, m, 0) for m in self.closed)
            + tuple(EBlock(0, g, n) for g, n in self.input_only)
            + tuple(EBlock(p, g, 0) for g, p in self.output_only)
            + tuple(EBlock(p, g, n) for p, g, n in self.mixed)
        )

    def to_json_dict(self) -> dict:
        return {
            "closed": list(self.closed),
            "inputOnly": [list(b) for b in self.input_only],
            "outputOnly": [list(b) for b in self.output_only],
            "mixed": [list(b) for b in self.mixed],
            "head": list(self.head),
            "tail": list(self.tail),
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "NormalForm":
        return cls(
            closed=tuple(d["closed"]),
            input_only=tuple((g, n) for g, n in d["inputOnly"]),
            output_only=tuple((g, p) for g, p in d["outputOnly"]),
            mixed=tuple((p, g, n) for p, g, n in d["mixed"]),
            head=tuple(d["head"]),
            tail=tuple(d["tail"]),
        )


# --- stage one: term to special term ----------------------------------------

_Slice = tuple[int, Term, int]  # (left pad, generator, right pad)


def _slices(t: Term) -> tuple[int, list[_Slice]]:
    """Flatten ``t`` into (source arity, elementary layers applied in order)."""
    info: dict[int, tuple[int, int, list[_Slice]]] = {}
    stack: list[tuple[Term, bool]] = [(t, False)]
    while stack:
        node, expanded = stack.pop()
        if id(node) in info:
            continue
        if isinstance(node, Id):
            info[id(node)] = (node.n, node.n, [])
        elif isinstance(node, Tau):
            k = node.n + node.m
            info[id(node)] = (k, k, [(0, node, 0)])
        elif isinstance(node, Mu):
            info[id(node)] = (2, 1, [(0, node, 0)])
        elif isinstance(node, Eta):
            info[id(node)] = (0, 1, [(0, node, 0)])
        elif isinstance(node, Delta):
            info[id(node)] = (1, 2, [(0, node, 0)])
        elif isinstance(node, Eps):
            info[id(node)] = (1, 0, [(0, node, 0)])
        elif isinstance(node, Comp):
            if expanded:
                fs = info[id(node.f)]
                gs = info[id(node.g)]
                info[id(node)] = (fs[0], gs[1], fs[2] + gs[2])
            else:
                stack.extend([(node, True), (node.g, False), (node.f, False)])
        else:
            if expanded:
                a = info[id(node.left)]
                b = info[id(node.right)]
                # id_n1 x b runs first, then a x id_m2
                merged = [(l + a[0], beta, r) for l, beta, r in b[2]]
                merged += [(l, beta, r + b[1]) for l, beta, r in a[2]]
                info[id(node)] = (a[0] + b[0], a[1] + b[1], merged)
            else:
                stack.extend([(node, True), (node.left, False), (node.right, False)])
    src, _, slices = info[id(t)]
    return src, slices


class _Builder:
    """Mutable working state for slice absorption."""

    def __init__(self, n: int) -> None:
        self.pure: list[int] | None = list(range(n))
        self.tail: Perm = ()
        self.center: list[EBlock] = []
        self.head: Perm = ()

    # -- helpers --

    def _leave_pure(self) -> None:
        assert self.pure is not None
        n = len(self.pure)
        self.tail = tuple(self.pure)
        self.center = [EBlock(1, 0, 1)] * n
        self.head = identity(n)
        self.pure = None

    def _block_of(self, offset: int) -> tuple[int, int]:
        """(index, start offset) of the block owning output ``offset``."""
        start = 0
        for i, b in enumerate(self.center):
            if offset < start + b.outs:
                return i, start
            start += b.outs
        raise AssertionError("offset outside center outputs")

    def _out_start(self, i: int) -> int:
        return sum(b.outs for b in self.center[:i])

    def _swap_blocks(self, i: int) -> None:
        """Exchange blocks i, i+1, conjugating tail and head accordingly."""
        a, b = self.center[i], self.center[i + 1]
        o = self._out_start(i)
        self.tail = compose(self.tail, pad(block_tau(b.outs, a.outs), o, len(self.tail)))
        s = sum(blk.ins for blk in self.center[:i])
        self.head = compose(pad(block_tau(a.ins, b.ins), s, len(self.head)), self.head)
        self.center[i], self.center[i + 1] = b, a

    def _rewire_outputs(self, assignments: dict[int, int]) -> None:
        """Post-permute the tail by a block-diagonal move (old -> new offset).

        Sound because any permutation of one block's own output bundle is
        absorbed by its Lambda ladder.
        """
        rho = list(range(len(self.tail)))
        for old, new in assignments.items():
            rho[old] = new
        self.tail = compose(self.tail, invert(tuple(rho)))

    def _block_diagonal_targets(self, i: int, first: list[int]) -> dict[int, int]:
        """Send chosen offsets of block i to its leading slots, rest in order."""
        start = self._out_start(i)
        members = list(range(start, start + self.center[i].outs))
        rest = [x for x in members if x not in first]
        return {old: start + k for k, old in enumerate(first + rest)}

    # -- per-generator absorption --

    def absorb_tau(self, l: int, node: Tau, width: int) -> None:
        move = pad(block_tau(node.n, node.m), l, width)
        if self.pure is not None:
            self.pure = list(compose(move, tuple(self.pure)))
        else:
            self.tail = compose(move, self.tail)

    def absorb_eta(self, l: int) -> None:
        p = len(self.tail)
        self.tail = compose(pad(block_tau(1, l), 0, p + 1), tensor((0,), self.tail))
        self.center.insert(0, EBlock(1, 0, 0))

    def absorb_delta(self, l: int) -> None:
        p = len(self.tail)
        j, rest = factor_out(self.tail, l)
        i, _ = self._block_of(j)
        self.tail = compose(
            pad(block_tau(2, l), 0, p + 1),
            compose(tensor((0, 1), rest), pad(block_tau(j, 2), 0, p + 1)),
        )
        b = self.center[i]
        self.center[i] = EBlock(b.outs + 1, b.genus, b.ins)

    def absorb_eps(self, l: int) -> None:
        j, rest = factor_out(self.tail, l)
        i, _ = self._block_of(j)
        self.tail = rest
        b = self.center[i]
        self.center[i] = EBlock(b.outs - 1, b.genus, b.ins)

    def absorb_mu(self, l: int) -> None:
        a = self.tail.index(l)
        b = self.tail.index(l + 1)
        ui, _ = self._block_of(a)
        vi, _ = self._block_of(b)
        same = ui == vi
        if same:
            # same block: the two wires leave one output bundle; rewire them
            # to its first two slots, then close the handle
            self._rewire_outputs(self._block_diagonal_targets(ui, [a, b]))
        else:
            # two blocks: bring v directly after u, then rewire so the wires
            # leave the last slot of u and the first slot of v
            if vi > ui + 1:
                while vi > ui + 1:
                    self._swap_blocks(vi - 1)
                    vi -= 1
            else:
                while vi < ui:
                    self._swap_blocks(vi)
                    if vi + 1 == ui:
                        ui -= 1
                    vi += 1
            a = self.tail.index(l)
            b = self.tail.index(l + 1)
            start_u = self._out_start(ui)
            end_u = start_u + self.center[ui].outs
            rest_u = [x for x in range(start_u, end_u) if x != a]
            moves = {a: end_u - 1}
            moves.update({old: start_u + k for k, old in enumerate(rest_u)})
            moves.update(self._block_diagonal_targets(vi, [b]))
            self._rewire_outputs(moves)
        p = len(self.tail)
        j, rest = factor_out_pair(self.tail, l)
        self.tail = compose(
            pad(block_tau(1, l), 0, p - 1),
            compose(tensor((0,), rest), pad(block_tau(j, 1), 0, p - 1)),
        )
        if same:
            blk = self.center[ui]
            self.center[ui] = EBlock(blk.outs - 1, blk.genus + 1, blk.ins)
        else:
            u, v = self.center[ui], self.center[ui + 1]
            self.center[ui] = EBlock(u.outs + v.outs - 1, u.genus + v.genus, u.ins + v.ins)
            del self.center[ui + 1]

    def freeze(self) -> SpecialTerm:
        if self.pure is not None:
            return SpecialTerm(pure_tau=tuple(self.pure))
        return SpecialTerm(tail=self.tail, center=tuple(self.center), head=self.head)


def to_special(t: Term) -> SpecialTerm:
    """Rewrite ``t`` into an equal special term."""
    if count_nodes(t) > MAX_TERM_NODES:
        raise FrobiusError(f"term exceeds {MAX_TERM_NODES} nodes")
    typecheck(t)
    n, slices = _slices(t)
    st = _Builder(n)
    for l, beta, r in slices:
        if isinstance(beta, Tau):
            st.absorb_tau(l, beta, l + beta.n + beta.m + r)
            continue
        if st.pure is not None:
            st._leave_pure()
        if isinstance(beta, Eta):
            st.absorb_eta(l)
        elif isinstance(beta, Delta):
            st.absorb_delta(l)
        elif isinstance(beta, Eps):
            st.absorb_eps(l)
        else:
            st.absorb_mu(l)
    return st.freeze()


# --- stage two: special term to normal form ---------------------------------


def to_normal(s: SpecialTerm) -> NormalForm:
    """Sort a special term's blocks and wirings into the normal form."""
    if s.is_pure:
        sigma = s.pure_tau
        assert sigma is not None
        n = len(sigma)
        if n == 0:
            return NormalForm()
        s = SpecialTerm(tail=sigma, center=(EBlock(1, 0, 1),) * n, head=identity(n))

    chi_inv = invert(s.head)
    closed: list[int] = []
    input_only: list[tuple[int, tuple[int, ...]]] = []  # (genus, in ports)
    output_only: list[tuple[int, tuple[int, ...]]] = []  # (genus, out ports)
    mixed: list[tuple[EBlock, tuple[int, ...], tuple[int, ...]]] = []
    in_at = out_at = 0
    for b in s.center:
        ins = tuple(sorted(chi_inv[in_at + k] for k in range(b.ins)))
        outs = tuple(sorted(s.tail[out_at + k] for k in range(b.outs)))
        in_at += b.ins
        out_at += b.outs
        if not ins and not outs:
            closed.append(b.genus)
        elif not outs:
            input_only.append((b.genus, ins))
        elif not ins:
            output_only.append((b.genus, outs))
        else:
            mixed.append((b, ins, outs))
    closed.sort()
    input_only.sort(key=lambda x: x[1][0])
    output_only.sort(key=lambda x: x[1][0])
    mixed.sort(key=lambda x: x[2][0])

    head = [0] * len(s.head)
    offset = 0
    for _, ports in input_only:
        for port in ports:
            head[port] = offset
            offset += 1
    for _, ports, _outs in mixed:
        for port in ports:
            head[port] = offset
            offset += 1

    tail = [0] * len(s.tail)
    offset = 0
    for _, ports in output_only:
        for port in ports:
            tail[offset] = port
            offset += 1
    for _, _ins, ports in mixed:
        for port in ports:
            tail[offset] = port
            offset += 1

    return NormalForm(
        closed=tuple(closed),
        input_only=tuple((g, len(ports)) for g, ports in input_only),
        output_only=tuple((g, len(ports)) for g, ports in output_only),
        mixed=tuple((b.outs, b.genus, b.ins) for b, _i, _o in mixed),
        head=tuple(head),
        tail=tuple(tail),
    )


def normalize(t: Term) -> NormalForm:
    """The canonical form of ``t``; equal terms get equal results."""
    return to_normal(to_special(t))


def equal(f: Term, g: Term) -> bool:
    """Decide equality in the PROP.  Terms of different types are unequal."""
    if typecheck(f) != typecheck(g):
        return False
    return normalize(f) == normalize(g)


# --- expansion back to terms -------------------------------------------------


def _v_term(ins: int) -> Term | None:
    """V ladder: ``ins`` wires multiplied down to one; None when trivial."""
    if ins == 0:
        return Eta()
    if ins == 1:
        return None
    k = ins - 1
    term: Term = Tensor(Mu(), Id(k - 1)) if k >= 2 else Mu()
    for i in range(k - 2, 0, -1):
        term = Comp(Tensor(Mu(), Id(i)), term)
    if k >= 2:
        term = Comp(Mu(), term)
    return term


def _lambda_term(outs: int) -> Term | None:
    if outs == 0:
        return Eps()
    if outs == 1:
        return None
    term: Term = Delta()
    for i in range(1, outs - 1):
        term = Comp(Tensor(Delta(), Id(i)), term)
    return term


def _h_term(genus: int) -> Term | None:
    if genus == 0:
        return None
    handle: Term = Comp(Mu(), Delta())
    term = handle
    for _ in range(genus - 1):
        term = Comp(handle, term)
    return term


def _block_term(b: EBlock) -> Term:
    term: Term | None = None
    for part in (_v_term(b.ins), _h_term(b.genus), _lambda_term(b.outs)):
        if part is not None:
            term = part if term is None else Comp(part, term)
    return term if term is not None else Id(1)


def _wrap(center: tuple[EBlock, ...], head: Perm, tail: Perm) -> Term:
    term: Term | None = None
    for b in center:
        bt = _block_term(b)
        term = bt if term is None else Tensor(term, bt)
    if term is None:
        term = Id(0)
    if head != identity(len(head)):
        term = Comp(term, tau_term_of_perm(head))
    if tail != identity(len(tail)):
        term = Comp(tau_term_of_perm(tail), term)
    return term


def expand_to_term(x: "EBlock | SpecialTerm | NormalForm") -> Term:
    """A term whose normal form is ``x`` (round-trip witness)."""
    if isinstance(x, EBlock):
        return _block_term(x)
    if isinstance(x, SpecialTerm):
        if x.is_pure:
            assert x.pure_tau is not None
            return tau_term_of_perm(x.pure_tau)
        return _wrap(x.center, x.head, x.tail)
    return _wrap(x.center_blocks(), x.head, x.tail)


# --- validation ---------------------------------------------------------------


def validate_normal_form(nf: NormalForm) -> None:
    """Raise if any structural or ordering constraint fails."""
    if sorted(nf.head) != list(range(nf.n_in)) or sorted(nf.tail) != list(range(nf.n_out)):
        raise FrobiusError("head/tail are not permutations")
    if any(n < 1 for _, n in nf.input_only):
        raise FrobiusError("input-only block without inputs")
    if any(p < 1 for _, p in nf.output_only):
        raise FrobiusError("output-only block without outputs")
    if any(p < 1 or n < 1 for p, _, n in nf.mixed):
        raise FrobiusError("mixed block missing a port")
    if sum(n for _, n in nf.input_only) + sum(n for _, _, n in nf.mixed) != nf.n_in:
        raise FrobiusError("input counts do not cover the head")
    if sum(p for _, p in nf.output_only) + sum(p for p, _, _ in nf.mixed) != nf.n_out:
        raise FrobiusError("output counts do not cover the tail")
    if list(nf.closed) != sorted(nf.closed):
        raise FrobiusError("closed genera out of order")

    chi_inv = invert(nf.head)
    offset = 0
    starts: list[int] = []
    for _, n in nf.input_only:
        ports = [chi_inv[offset + k] for k in range(n)]
        if ports != sorted(ports):
            raise FrobiusError("input-only block wired out of order")
        starts.append(ports[0])
        offset += n
    if starts != sorted(starts):
        raise FrobiusError("input-only blocks out of order")
    for _, _, n in nf.mixed:
        ports = [chi_inv[offset + k] for k in range(n)]
        if ports != sorted(ports):
            raise FrobiusError("mixed block inputs wired out of order")
        offset += n

    offset = 0
    starts = []
    for _, p in nf.output_only:
        ports = [nf.tail[offset + k] for k in range(p)]
        if ports != sorted(ports):
            raise FrobiusError("output-only block wired out of order")
        starts.append(ports[0])
        offset += p
    if starts != sorted(starts):
        raise FrobiusError("output-only blocks out of order")
    starts = []
    for p, _, _ in nf.mixed:
        ports = [nf.tail[offset + k] for k in range(p)]
        if ports != sorted(ports):
            raise FrobiusError("mixed block outputs wired out of order")
        starts.append(ports[0])
        offset += p
    if starts != sorted(starts):
        raise FrobiusError("mixed blocks out of order")
