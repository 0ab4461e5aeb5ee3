"""MOY graphs: labeled trivalent planar graphs and their two brackets.

Encoding mirrors :mod:`snweb.diagram`: a stack of slices over a signature
of ``(orientation, label)`` strands.

    mcup(l, kind)   produces (u l, d l) for kind E, (d l, u l) for kind Q
    mcap(l, kind)   consumes (u l, d l) for kind Q, (d l, u l) for kind E
    split(k, l)     consumes (u k+l), produces (u k, u l)
    merge(k, l)     consumes (u k, u l), produces (u k+l)

The big edge of a vertex is ``e0``; ``e1`` is the left small leg and ``e2``
the right one.  Exponents are kept in ``v = q^(1/(4n))`` (so ``t = v^4``)
for the normalized state sum and in ``w = q^(1/4)`` for the unnormalized
bracket.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Set, Tuple

from . import combinat
from .diagram import DOWN, UP, Slice, SlicedDiagram, close_right
from .errors import FlowViolation, NoStates, ValidationError, WebSyntaxError
from .poly import LaurentPoly, divide_exact
from .statesum import HALF_TURN
from .tensor import evaluate

MOY_GENS = ("mcup", "mcap", "split", "merge")
Strand = Tuple[str, int]


@dataclass(frozen=True)
class MOYSlice:
    gen: str
    at: int
    labels: Tuple[int, ...]
    kind: str = ""

    def __post_init__(self):
        if not self.kind and self.gen in ("mcup", "mcap"):
            object.__setattr__(self, "kind", "E" if self.gen == "mcup" else "Q")


def _step(sig: Tuple[Strand, ...], s: MOYSlice, n: int, index: int) -> Tuple[Strand, ...]:
    if s.gen not in MOY_GENS:
        raise ValidationError(f"unknown MOY generator {s.gen!r}", index)
    if any(not isinstance(x, int) or x < 1 for x in s.labels):
        raise FlowViolation(f"slice {index}: labels must be positive integers")
    need = {"mcup": 1, "mcap": 1, "split": 2, "merge": 2}[s.gen]
    if len(s.labels) != need:
        raise ValidationError(f"{s.gen} takes {need} label(s)", index)
    if sum(s.labels) > n:
        raise FlowViolation(f"slice {index}: label {sum(s.labels)} exceeds n = {n}")
    arity = {"mcup": 0, "mcap": 2, "split": 1, "merge": 2}[s.gen]
    if s.at < 0 or s.at + arity > len(sig):
        raise ValidationError(f"{s.gen} at {s.at} runs past the {len(sig)} strands", index)
    here = sig[s.at:s.at + arity]
    if s.gen in ("mcup", "mcap") and s.kind not in ("E", "Q"):
        raise ValidationError(f"{s.gen} kind must be 'E' or 'Q'", index)
    if s.gen == "mcup":
        (l,) = s.labels
        out = ((UP, l), (DOWN, l)) if s.kind == "E" else ((DOWN, l), (UP, l))
    elif s.gen == "mcap":
        (l,) = s.labels
        want = (UP, DOWN) if s.kind == "Q" else (DOWN, UP)
        if (here[0][0], here[1][0]) != want:
            raise ValidationError(f"mcap kind {s.kind} expects {''.join(want)}", index)
        if here[0][1] != l or here[1][1] != l:
            raise FlowViolation(f"slice {index}: mcap joins labels {here[0][1]} and {here[1][1]}, declared {l}")
        out = ()
    elif s.gen == "split":
        k, l = s.labels
        if here[0][0] != UP:
            raise ValidationError("vertices take upward edges only", index)
        if here[0][1] != k + l:
            raise FlowViolation(f"slice {index}: split({k},{l}) on an edge labeled {here[0][1]}")
        out = ((UP, k), (UP, l))
    else:
        k, l = s.labels
        if here[0][0] != UP or here[1][0] != UP:
            raise ValidationError("vertices take upward edges only", index)
        if (here[0][1], here[1][1]) != (k, l):
            raise FlowViolation(
                f"slice {index}: merge({k},{l}) on edges labeled {here[0][1]},{here[1][1]}")
        out = ((UP, k + l),)
    return sig[:s.at] + out + sig[s.at + arity:]


@dataclass(frozen=True)
class MOYGraph:
    n: int
    slices: Tuple[MOYSlice, ...]
    signatures: Tuple[Tuple[Strand, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise ValidationError(f"n must be an integer >= 2, got {self.n!r}")
        object.__setattr__(self, "slices", tuple(self.slices))
        sigs = [()]
        for i, s in enumerate(self.slices):
            sigs.append(_step(sigs[-1], s, self.n, i))
        if sigs[-1]:
            raise ValidationError("MOY graph does not close up")
        object.__setattr__(self, "signatures", tuple(sigs))


def parse_moy(text: str) -> MOYGraph:
    """``{"n": 3, "slices": [{"gen": "split", "at": 0, "labels": [1, 2]}, ...]}``."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise WebSyntaxError(f"invalid JSON: {exc}") from exc
    if not isinstance(obj, dict) or "n" not in obj or not isinstance(obj.get("slices"), list):
        raise WebSyntaxError("expected an object with 'n' and a 'slices' array")
    slices = []
    for i, item in enumerate(obj["slices"]):
        if not isinstance(item, dict) or item.get("gen") not in MOY_GENS:
            raise WebSyntaxError(f"slice {i}: expected a MOY generator")
        at, labels = item.get("at"), item.get("labels")
        if not isinstance(at, int) or not isinstance(labels, list):
            raise WebSyntaxError(f"slice {i}: 'at' must be an integer and 'labels' an array")
        slices.append(MOYSlice(item["gen"], at, tuple(labels), item.get("kind", "")))
    return MOYGraph(obj["n"], tuple(slices))


def render_moy(g: MOYGraph) -> str:
    items = []
    for s in g.slices:
        obj = {"gen": s.gen, "at": s.at, "labels": list(s.labels)}
        if s.gen in ("mcup", "mcap"):
            obj["kind"] = s.kind
        items.append(obj)
    return json.dumps({"n": g.n, "slices": items}, separators=(", ", ": "))


# -- corpus -------------------------------------------------------------------

def moy_annulus(n: int, label: int, kind: str = "E") -> MOYGraph:
    cap = "Q" if kind == "E" else "E"
    return MOYGraph(n, (MOYSlice("mcup", 0, (label,), kind), MOYSlice("mcap", 0, (label,), cap)))


def moy_theta(n: int, k: int, l: int) -> MOYGraph:
    return MOYGraph(n, (
        MOYSlice("mcup", 0, (k + l,), "E"),
        MOYSlice("split", 0, (k, l)),
        MOYSlice("merge", 0, (k, l)),
        MOYSlice("mcap", 0, (k + l,), "Q"),
    ))


def moy_square(n: int) -> MOYGraph:
    return MOYGraph(n, (
        MOYSlice("mcup", 0, (2,), "E"),
        MOYSlice("mcup", 1, (1,), "E"),
        MOYSlice("split", 0, (1, 1)),
        MOYSlice("merge", 1, (1, 1)),
        MOYSlice("split", 1, (1, 1)),
        MOYSlice("merge", 0, (1, 1)),
        MOYSlice("mcap", 1, (1,), "Q"),
        MOYSlice("mcap", 0, (2,), "Q"),
    ))


def moy_corpus(n: int) -> List[Tuple[str, MOYGraph]]:
    out = [(f"annulus{k}", moy_annulus(n, k)) for k in range(1, n + 1)]
    out.append(("annulus1-cw", moy_annulus(n, 1, "Q")))
    out.append(("theta112", moy_theta(n, 1, 1)))
    if n >= 3:
        out.append(("theta123", moy_theta(n, 1, 2)))
    out.append(("square", moy_square(n)))
    return out


# -- W expansion -----------------------------------------------------------------

def expand_W(g: MOYGraph) -> SlicedDiagram:
    """The n-web with each ``l``-labeled edge replaced by ``l`` parallel strands.

    Both trivalent vertices become a sink and a source on ``k + l`` strands
    joined by ``n - k - l`` bands returning on the right.
    """
    n = g.n
    slices: List[Slice] = []
    for s, sig in zip(g.slices, g.signatures):
        base = sum(l for _, l in sig[:s.at])
        if s.gen == "mcup":
            (l,) = s.labels
            gen = "cupE" if s.kind == "E" else "cupQ"
            slices += [Slice(gen, base + j) for j in range(l)]
        elif s.gen == "mcap":
            (l,) = s.labels
            gen = "capQ" if s.kind == "Q" else "capE"
            slices += [Slice(gen, base + l - 1 - j) for j in range(l)]
        else:
            k, l = s.labels
            m = n - k - l
            slices += close_right(n, [Slice("vin", base), Slice("vout", base)], m, base)
    d = SlicedDiagram(n, tuple(slices))
    d.require_closed()
    return d


def moy_bracket(g: MOYGraph) -> LaurentPoly:
    """``[g]_n`` in ``t``."""
    return evaluate(expand_W(g))


# -- edges and states ---------------------------------------------------------------

@dataclass
class MOYEdge:
    id: int
    label: int
    half_turns: int
    ends: List[Tuple[int, str]] = field(default_factory=list)  # (vertex, role)

    @property
    def is_annulus(self) -> bool:
        return not self.ends


@dataclass
class MOYVertex:
    id: int
    gen: str
    e0: int = -1
    e1: int = -1
    e2: int = -1


@dataclass
class MOYGeometry:
    n: int
    edges: List[MOYEdge]
    vertices: List[MOYVertex]


class _Piece:
    __slots__ = ("parent", "half", "ends", "label")

    def __init__(self, label, half=0):
        self.parent = self
        self.half = half
        self.ends = []
        self.label = label

    def root(self):
        p = self
        while p.parent is not p:
            p.parent = p.parent.parent
            p = p.parent
        return p


def trace_moy(g: MOYGraph) -> MOYGeometry:
    strands: List[_Piece] = []
    every: List[_Piece] = []
    vertices: List[MOYVertex] = []
    for s, sig in zip(g.slices, g.signatures):
        p = s.at
        if s.gen == "mcup":
            piece = _Piece(s.labels[0], HALF_TURN["cup" + s.kind])
            every.append(piece)
            strands[p:p] = [piece, piece]
        elif s.gen == "mcap":
            a, b = strands[p].root(), strands[p + 1].root()
            del strands[p:p + 2]
            if a is b:
                a.half += HALF_TURN["cap" + s.kind]
            else:
                a.parent = b
                b.half += a.half + HALF_TURN["cap" + s.kind]
                b.ends += a.ends
        elif s.gen == "split":
            v = MOYVertex(len(vertices), "split")
            vertices.append(v)
            strands[p].root().ends.append((v.id, "e0"))
            k, l = s.labels
            left, right = _Piece(k), _Piece(l)
            left.ends.append((v.id, "e1"))
            right.ends.append((v.id, "e2"))
            every += [left, right]
            strands[p:p + 1] = [left, right]
        else:
            v = MOYVertex(len(vertices), "merge")
            vertices.append(v)
            strands[p].root().ends.append((v.id, "e1"))
            strands[p + 1].root().ends.append((v.id, "e2"))
            k, l = s.labels
            big = _Piece(k + l)
            big.ends.append((v.id, "e0"))
            every.append(big)
            strands[p:p + 2] = [big]
    edges: List[MOYEdge] = []
    seen: Dict[int, int] = {}
    for piece in every:
        r = piece.root()
        if id(r) not in seen:
            seen[id(r)] = len(edges)
            edges.append(MOYEdge(len(edges), r.label, r.half, list(r.ends)))
    for e in edges:
        for vid, role in e.ends:
            setattr(vertices[vid], role, e.id)
    return MOYGeometry(g.n, edges, vertices)


MOYState = Dict[int, FrozenSet[int]]


def _vertex_components(geo: MOYGeometry) -> List[List[int]]:
    adj: Dict[int, Set[int]] = {v.id: set() for v in geo.vertices}
    for e in geo.edges:
        ids = [vid for vid, _ in e.ends]
        for a in ids:
            adj[a].update(x for x in ids if x != a)
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


def _component_states(geo: MOYGeometry, order: Sequence[int]) -> Iterator[MOYState]:
    n = geo.n
    full = frozenset(range(1, n + 1))
    edges = geo.edges
    s: Dict[int, FrozenSet[int]] = {}

    def subsets(pool, size):
        return (frozenset(c) for c in itertools.combinations(sorted(pool), size))

    def rec(pos):
        if pos == len(order):
            yield dict(s)
            return
        v = geo.vertices[order[pos]]
        e0, e1, e2 = v.e0, v.e1, v.e2
        l1, l2 = edges[e1].label, edges[e2].label
        fresh: List[int] = []
        if e0 in s:
            big = s[e0]
            if e1 in s:
                lefts = [s[e1]] if s[e1] <= big else []
            elif e2 in s:
                lefts = [big - s[e2]] if s[e2] <= big else []
            else:
                lefts = list(subsets(big, l1))
            for left in lefts:
                right = big - left
                if e2 in s and s[e2] != right:
                    continue
                added = [e for e in (e1, e2) if e not in s]
                s[e1], s[e2] = left, right
                yield from rec(pos + 1)
                for e in added:
                    del s[e]
            return
        if e1 in s and e2 in s:
            choices = [(s[e1], s[e2])] if not (s[e1] & s[e2]) else []
        elif e1 in s:
            choices = [(s[e1], r) for r in subsets(full - s[e1], l2)]
        elif e2 in s:
            choices = [(l, s[e2]) for l in subsets(full - s[e2], l1)]
        else:
            choices = []
            for big in subsets(full, l1 + l2):
                choices += [(l, big - l) for l in subsets(big, l1)]
        for left, right in choices:
            added = [e for e in (e0, e1, e2) if e not in s]
            s[e1], s[e2], s[e0] = left, right, left | right
            yield from rec(pos + 1)
            for e in added:
                del s[e]

    yield from rec(0)


def enumerate_moy_states(g: MOYGraph, geo: Optional[MOYGeometry] = None) -> Iterator[MOYState]:
    geo = geo or trace_moy(g)
    parts = [list(_component_states(geo, comp)) for comp in _vertex_components(geo)]
    annuli = [e for e in geo.edges if e.is_annulus]
    ann_choices = [[frozenset(c) for c in itertools.combinations(range(1, geo.n + 1), e.label)]
                   for e in annuli]
    for combo in itertools.product(*parts):
        base: MOYState = {}
        for st in combo:
            base.update(st)
        for labs in itertools.product(*ann_choices):
            state = dict(base)
            state.update({e.id: x for e, x in zip(annuli, labs)})
            yield state


def double_rot(state: MOYState, geo: MOYGeometry) -> Tuple[int, int]:
    """``2 rot(s)`` as ``(numerator, 2)``: loops of each colour traced through their edges."""
    n = geo.n
    total = sum(e.half_turns * sum(2 * i - n - 1 for i in state[e.id]) for e in geo.edges)
    return total, 2


def _two_rot(state: MOYState, geo: MOYGeometry) -> int:
    num, den = double_rot(state, geo)
    if num % den:
        raise AssertionError("2 rot(s) is not an integer")
    return num // den


def _pi_total(state: MOYState, geo: MOYGeometry) -> int:
    return sum(combinat.pi_count(state[v.e1], state[v.e2]) for v in geo.vertices)


def normalization(g: MOYGraph, geo: Optional[MOYGeometry] = None) -> LaurentPoly:
    """``N(g)`` in ``v = q^(1/(4n))``; annuli are not edges."""
    geo = geo or trace_moy(g)
    n = geo.n
    scale = 4 * n
    out = LaurentPoly.const(1)
    for e in geo.edges:
        if not e.is_annulus:
            out = out * combinat.quantum_factorial(e.label).substitute_power(scale)
    for v in geo.vertices:
        a, b, c = (geo.edges[x].label for x in (v.e1, v.e2, v.e0))
        out = out.shift(2 * n * (n * (n - 1) - a * b))
        out = out * combinat.quantum_factorial(n - c).substitute_power(scale)
    return out


def moy_state_sum(g: MOYGraph) -> LaurentPoly:
    """``N(g) * sum_s q^(2 rot s) prod_v (-q)^pi``, in ``v = q^(1/(4n))``."""
    geo = trace_moy(g)
    n = geo.n
    acc: Dict[int, int] = {}
    for state in enumerate_moy_states(g, geo):
        p = _pi_total(state, geo)
        e = 4 * n * _two_rot(state, geo) + 4 * n * p
        acc[e] = acc.get(e, 0) + (-1 if p % 2 else 1)
    return normalization(g, geo) * LaurentPoly(acc)


def bracket_in_v(g: MOYGraph) -> LaurentPoly:
    return moy_bracket(g).substitute_power(4)


def moy_original_bracket(g: MOYGraph) -> LaurentPoly:
    """``{g}_n`` in ``w = q^(1/4)``."""
    geo = trace_moy(g)
    shift = -sum(geo.edges[v.e1].label * geo.edges[v.e2].label for v in geo.vertices)
    acc: Dict[int, int] = {}
    for state in enumerate_moy_states(g, geo):
        e = shift + 2 * _two_rot(state, geo) + 2 * _pi_total(state, geo)
        acc[e] = acc.get(e, 0) + 1
    return LaurentPoly(acc)


def eta(g: MOYGraph) -> int:
    """Parity of ``2 rot(s)``, read off the cups and caps alone."""
    geo = trace_moy(g)
    if next(enumerate_moy_states(g, geo), None) is None:
        raise NoStates("the graph admits no n-state")
    n = geo.n
    twice = (n + 1) * sum(e.label * e.half_turns for e in geo.edges)
    if twice % 2:
        raise AssertionError("cup/cap rotation sum is not an integer")
    return (twice // 2) % 2


def eta_over_states(g: MOYGraph) -> Set[int]:
    geo = trace_moy(g)
    return {_two_rot(s, geo) % 2 for s in enumerate_moy_states(g, geo)}


@dataclass
class SubstitutionReport:
    lhs: LaurentPoly
    rhs: LaurentPoly
    eta: int

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


def substitution_check(g: MOYGraph) -> SubstitutionReport:
    """``{g} * q^(sum|e1||e2|/4)`` at ``q^(1/2) -> -q`` against ``[g] (-1)^eta / N(g)``, in ``q``."""
    geo = trace_moy(g)
    n = g.n
    shift = sum(geo.edges[v.e1].label * geo.edges[v.e2].label for v in geo.vertices)
    lifted = moy_original_bracket(g).shift(shift)
    in_half_q = lifted.rescale(2)
    lhs = in_half_q.negate_variable()
    e = eta(g)
    ratio = divide_exact(bracket_in_v(g), normalization(g, geo)).rescale(4 * n)
    rhs = ratio * (-1 if e else 1)
    return SubstitutionReport(lhs, rhs, e)
