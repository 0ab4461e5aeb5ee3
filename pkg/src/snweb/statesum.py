"""State-sum evaluation of planar webs and crossing resolution.

A planar web is cut into *bands* (strand paths from a source leg to a sink
leg) and *annuli* (closed strand loops).  Turning is counted in half-turns
from the bends: ``cupE`` and ``capQ`` contribute ``+1/2``, ``cupQ`` and
``capE`` ``-1/2``; vertex legs are vertical so vertices add nothing.

A state labels every band and annulus by ``1..n`` with distinct labels
around each vertex.  Its weight is ``q^rot * prod_v (-q)^l(v)`` where
``rot = sum_e ind(e) (2 S(e) - n - 1)`` and ``l(v)`` is the inversion count
of the labels read left to right on the legs of ``v``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

from . import combinat
from .diagram import (CAPS, CROSSINGS, CUPS, UP, DiagramCombination, Slice,
                      SlicedDiagram, flip, ladder_slices)
from .errors import HasCrossings, NonIntegralResult, NotDivisible
from .poly import ZERO, LaurentPoly, RationalFunc, t_power

HALF_TURN = {"cupE": 1, "capQ": 1, "cupQ": -1, "capE": -1}


@dataclass
class Edge:
    """A band (``source`` and ``sink`` set) or an annulus (both ``None``)."""

    id: int
    half_turns: int
    source: Optional[Tuple[int, int]] = None  # (vertex id, leg)
    sink: Optional[Tuple[int, int]] = None

    @property
    def is_annulus(self) -> bool:
        return self.source is None

    @property
    def ind(self) -> Fraction:
        return Fraction(self.half_turns, 2)


@dataclass
class Vertex:
    id: int
    kind: str  # 'vin' or 'vout'
    slice_index: int
    legs: List[int] = field(default_factory=list)  # edge ids, left to right


@dataclass
class WebGeometry:
    n: int
    edges: List[Edge]
    vertices: List[Vertex]

    @property
    def bands(self) -> List[Edge]:
        return [e for e in self.edges if not e.is_annulus]

    @property
    def annuli(self) -> List[Edge]:
        return [e for e in self.edges if e.is_annulus]


class _Piece:
    __slots__ = ("parent", "half", "source", "sink")

    def __init__(self, half=0, source=None):
        self.parent = self
        self.half = half
        self.source = source
        self.sink = None

    def root(self):
        p = self
        while p.parent is not p:
            p.parent = p.parent.parent
            p = p.parent
        return p


def _require_planar(d: SlicedDiagram):
    if any(s.gen in CROSSINGS or s.gen == "x4" for s in d.slices):
        raise HasCrossings("a planar web is required; resolve crossings first")


def trace_edges(d: SlicedDiagram) -> WebGeometry:
    """Split a crossingless closed web into bands and annuli with their turning."""
    _require_planar(d)
    d.require_closed()
    n = d.n
    strands: List[_Piece] = []
    every: List[_Piece] = []
    vertices: List[Vertex] = []
    for i, s in enumerate(d.slices):
        p = s.at
        if s.gen in CUPS:
            piece = _Piece(HALF_TURN[s.gen])
            every.append(piece)
            strands[p:p] = [piece, piece]
        elif s.gen in CAPS:
            a, b = strands[p].root(), strands[p + 1].root()
            del strands[p:p + 2]
            if a is b:
                a.half += HALF_TURN[s.gen]
            else:
                a.parent = b
                b.half += a.half + HALF_TURN[s.gen]
                b.source = b.source or a.source
                b.sink = b.sink or a.sink
        elif s.gen == "vout":
            v = Vertex(len(vertices), "vout", i)
            vertices.append(v)
            new = [_Piece(0, (v.id, j)) for j in range(n)]
            every.extend(new)
            strands[p:p] = new
        else:
            v = Vertex(len(vertices), "vin", i)
            vertices.append(v)
            for j in range(n):
                strands[p + j].root().sink = (v.id, j)
            del strands[p:p + n]
    edges: List[Edge] = []
    seen: Set[int] = set()
    for piece in every:
        r = piece.root()
        if id(r) in seen:
            continue
        seen.add(id(r))
        edges.append(Edge(len(edges), r.half, r.source, r.sink))
    for v in vertices:
        v.legs = [-1] * n
    for e in edges:
        if e.is_annulus:
            continue
        vertices[e.source[0]].legs[e.source[1]] = e.id
        vertices[e.sink[0]].legs[e.sink[1]] = e.id
    return WebGeometry(n, edges, vertices)


# -- states ---------------------------------------------------------------

WebState = Dict[int, int]


def _components(geo: WebGeometry) -> List[List[int]]:
    """Vertex ids grouped by band-connectivity, each in breadth-first order."""
    adj: Dict[int, Set[int]] = {v.id: set() for v in geo.vertices}
    for e in geo.bands:
        adj[e.source[0]].add(e.sink[0])
        adj[e.sink[0]].add(e.source[0])
    out, done = [], set()
    for v in geo.vertices:
        if v.id in done:
            continue
        order, frontier = [], [v.id]
        done.add(v.id)
        while frontier:
            x = frontier.pop(0)
            order.append(x)
            for y in sorted(adj[x]):
                if y not in done:
                    done.add(y)
                    frontier.append(y)
        out.append(order)
    return out


def _component_states(geo: WebGeometry, order: Sequence[int]) -> Iterator[Tuple[Dict[int, int], int]]:
    """Admissible labelings of the bands of one component, with ``sum_v l``."""
    n = geo.n
    verts = geo.vertices
    labels: Dict[int, int] = {}

    def rec(pos: int, total: int):
        if pos == len(order):
            yield dict(labels), total
            return
        legs = verts[order[pos]].legs
        fixed = [labels.get(e) for e in legs]
        used = {x for x in fixed if x is not None}
        if len(used) != sum(1 for x in fixed if x is not None):
            return
        free = [j for j, x in enumerate(fixed) if x is None]
        spare = [x for x in range(1, n + 1) if x not in used]
        for choice in itertools.permutations(spare):
            for j, x in zip(free, choice):
                labels[legs[j]] = x
            perm = [labels[e] for e in legs]
            yield from rec(pos + 1, total + combinat.sequence_length(perm))
        for j in free:
            labels.pop(legs[j], None)

    yield from rec(0, 0)


def enumerate_states(d: SlicedDiagram, geo: Optional[WebGeometry] = None) -> Iterator[WebState]:
    geo = geo or trace_edges(d)
    parts = [[s for s, _ in _component_states(geo, comp)] for comp in _components(geo)]
    annuli = [e.id for e in geo.annuli]
    for combo in itertools.product(*parts):
        base: WebState = {}
        for s in combo:
            base.update(s)
        for labs in itertools.product(range(1, geo.n + 1), repeat=len(annuli)):
            state = dict(base)
            state.update(zip(annuli, labs))
            yield state


def _double_rotation(state: WebState, geo: WebGeometry) -> int:
    n = geo.n
    return sum(e.half_turns * (2 * state[e.id] - n - 1) for e in geo.edges)


def rotation_index(state: WebState, geo: WebGeometry) -> int:
    twice = _double_rotation(state, geo)
    if twice % 2:
        raise NonIntegralResult("rotation index is not an integer")
    return twice // 2


def vertex_lengths(state: WebState, geo: WebGeometry) -> int:
    """``sum_v l(P(S, v))``."""
    return sum(combinat.sequence_length([state[e] for e in v.legs]) for v in geo.vertices)


def state_weight(state: WebState, geo: WebGeometry) -> LaurentPoly:
    ell = vertex_lengths(state, geo)
    return t_power(geo.n * (rotation_index(state, geo) + ell), (-1) ** ell)


def _component_sum(geo: WebGeometry, order) -> Tuple[LaurentPoly, Set[int]]:
    """Weight sum of one component in ``s = t^(1/2)``, and its parities of ``sum l``."""
    n = geo.n
    band_ids = {e for v in order for e in geo.vertices[v].legs}
    half = {e: geo.edges[e].half_turns for e in band_ids}
    acc: Dict[int, int] = {}
    parities: Set[int] = set()
    for labels, ell in _component_states(geo, order):
        twice = sum(half[e] * (2 * x - n - 1) for e, x in labels.items())
        e2 = n * (twice + 2 * ell)
        acc[e2] = acc.get(e2, 0) + (-1 if ell % 2 else 1)
        parities.add(ell % 2)
    return LaurentPoly(acc), parities


def _annulus_sum(n: int, half_turns: int) -> LaurentPoly:
    return LaurentPoly({n * half_turns * (2 * i - n - 1): 1 for i in range(1, n + 1)})


def _factored(d: SlicedDiagram):
    geo = trace_edges(d)
    total = LaurentPoly.const(1)
    parities = []
    for comp in _components(geo):
        value, par = _component_sum(geo, comp)
        total = total * value
        parities.append(par)
    for e in geo.annuli:
        total = total * _annulus_sum(geo.n, e.half_turns)
    try:
        return total.rescale(2), parities
    except NotDivisible as exc:
        raise NonIntegralResult("state sum has a half-integral exponent") from exc


def state_sum(d: SlicedDiagram) -> LaurentPoly:
    """``sum_S q^rot(S) prod_v (-q)^l(P(S, v))``, factored over components."""
    return _factored(d)[0]


# -- crossing resolution ------------------------------------------------------

def _unmix(d: SlicedDiagram) -> SlicedDiagram:
    """Replace every crossing between non-upward strands by bent up-up ones."""
    slices = list(d.slices)
    while True:
        cur = d.with_slices(slices)
        for i, (s, sig) in enumerate(zip(cur.slices, cur.signatures)):
            if s.gen in CROSSINGS and (sig[s.at], sig[s.at + 1]) != (UP, UP):
                b = sig[s.at + 1]
                other = "xm" if s.gen == "xp" else "xp"
                cup = "cupE" if b == UP else "cupQ"
                cap = "capE" if b == UP else "capQ"
                slices[i:i + 1] = [Slice(cup, s.at), Slice(other, s.at + 1), Slice(cap, s.at + 2)]
                break
        else:
            return cur


def skein_coefficients(n: int, gen: str) -> Tuple[RationalFunc, RationalFunc]:
    """``(a, b)`` with ``<crossing> = a <identity> + b <ladder>``.

    The positive rule is the three-term relation with the ladder; the
    negative one follows from ``t <xp> - t^-1 <xm> = (q - q^-1) <id>``.
    """
    fact = combinat.quantum_factorial(n - 2).substitute_power(n)
    a_plus = RationalFunc(t_power(n - 1))
    b_plus = RationalFunc(t_power(-(n * n * (n - 1)) // 2 - 1, -1), fact)
    if gen == "xp":
        return a_plus, b_plus
    skew = t_power(n) - t_power(-n)
    return a_plus * t_power(2) - RationalFunc(t_power(1) * skew), b_plus * t_power(2)


def resolve_crossings(d: SlicedDiagram) -> DiagramCombination:
    """Expand a diagram with crossings into a combination of planar webs.

    Crossings are rewritten bottom-most first.
    """
    d = _unmix(d)
    done: Dict[SlicedDiagram, RationalFunc] = {}
    todo: List[Tuple[SlicedDiagram, RationalFunc]] = [(d, RationalFunc(1))]
    while todo:
        cur, c = todo.pop()
        idx = next((i for i, s in enumerate(cur.slices) if s.gen in CROSSINGS), None)
        if idx is None:
            done[cur] = done.get(cur, RationalFunc(0)) + c
            continue
        s = cur.slices[idx]
        a, b = skein_coefficients(cur.n, s.gen)
        smooth = list(cur.slices[:idx]) + list(cur.slices[idx + 1:])
        ladder = list(cur.slices[:idx]) + ladder_slices(cur.n, s.at) + list(cur.slices[idx + 1:])
        todo.append((cur.with_slices(smooth), c * a))
        todo.append((cur.with_slices(ladder), c * b))
    return DiagramCombination(sorted(done.items(), key=lambda kv: len(kv[0].slices)))


def resolved_state_sum(d: SlicedDiagram) -> LaurentPoly:
    """State sum of any closed web: resolve crossings, sum the leaves, reduce."""
    if not any(s.gen in CROSSINGS for s in d.slices):
        return state_sum(d)
    total = RationalFunc(0)
    for leaf, c in resolve_crossings(d):
        total = total + c * state_sum(leaf)
    try:
        return total.to_poly()
    except NotDivisible as exc:
        raise NonIntegralResult("resolved state sum does not reduce to a polynomial") from exc


@dataclass
class LeafReport:
    leaf: SlicedDiagram
    coefficient: RationalFunc
    value: LaurentPoly
    even_lengths: bool
    nonnegative: bool

    @property
    def ok(self) -> bool:
        return self.even_lengths and self.nonnegative


def positivity_report(d: SlicedDiagram) -> List[LeafReport]:
    """Check every resolution leaf for even ``sum_v l`` and non-negative coefficients."""
    out = []
    for leaf, c in resolve_crossings(d):
        value, parities = _factored(leaf)
        if any(not p for p in parities):
            even = True  # no states at all
        else:
            even = all(len(p) == 1 for p in parities) and sum(min(p) for p in parities) % 2 == 0
        out.append(LeafReport(leaf, c, value, even, value.is_nonnegative()))
    return out
