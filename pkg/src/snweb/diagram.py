"""Sliced (Morse-form) web and link diagrams.

A diagram is read bottom to top as a stack of elementary slices.  Each slice
acts on a few adjacent strands of the current *signature*, a tuple over
``'u'`` (strand oriented upwards, a copy of ``V``) and ``'d'`` (downwards,
``V*``); all other strands pass straight through.

Generators::

    xp, xm    crossing of strands at, at+1            (a, b) -> (b, a)
    capE      consumes (d, u)       capQ   consumes (u, d)
    cupE      produces (u, d)       cupQ   produces (d, u)
    vout      source, produces n up-strands
    vin       sink, consumes n up-strands
    x4        singular 4-valent vertex (u, u) -> (u, u), singular links only

``xp`` is the crossing whose strand running from bottom-left to top-right
passes over; its sign is ``+1`` when both strands have the same orientation.
A vertex's marked point is at its leftmost leg.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import (NoSuchVertex, NotALink, ValidationError, WebSyntaxError)
from .poly import RationalFunc

UP, DOWN = "u", "d"
CROSSINGS = ("xp", "xm")
CAPS = ("capE", "capQ")
CUPS = ("cupE", "cupQ")
VERTICES = ("vin", "vout")
WEB_GENS = CROSSINGS + CAPS + CUPS + VERTICES
SINGULAR_GENS = WEB_GENS + ("x4",)

Signature = Tuple[str, ...]


def flip(o: str) -> str:
    return DOWN if o == UP else UP


@dataclass(frozen=True)
class Slice:
    gen: str
    at: int


def consumed(gen: str, n: int) -> int:
    if gen in CROSSINGS or gen == "x4":
        return 2
    if gen in CAPS:
        return 2
    if gen == "vin":
        return n
    return 0


def produced(gen: str, n: int) -> Signature:
    """Output orientations of a generator whose input is fixed by its type."""
    if gen == "cupE":
        return (UP, DOWN)
    if gen == "cupQ":
        return (DOWN, UP)
    if gen == "vout":
        return (UP,) * n
    return ()


def local_output(gen: str, local_in: Signature, n: int) -> Signature:
    if gen in CROSSINGS or gen == "x4":
        return (local_in[1], local_in[0])
    return produced(gen, n)


def required_input(gen: str, n: int) -> Optional[Signature]:
    """The input orientations a generator insists on (None = any)."""
    return {
        "capE": (DOWN, UP),
        "capQ": (UP, DOWN),
        "vin": (UP,) * n,
        "x4": (UP, UP),
    }.get(gen, None if gen in CROSSINGS else ())


def step_signature(sig: Signature, s: Slice, n: int, index: Optional[int] = None,
                   gens: Sequence[str] = SINGULAR_GENS) -> Signature:
    """Signature after applying slice ``s``; raises ValidationError."""
    if s.gen not in gens:
        raise ValidationError(f"generator {s.gen!r} not allowed here", index)
    k = consumed(s.gen, n)
    if s.at < 0 or s.at + k > len(sig):
        raise ValidationError(
            f"{s.gen} at {s.at} needs {k} strands but only {len(sig)} present", index)
    local_in = tuple(sig[s.at:s.at + k])
    need = required_input(s.gen, n)
    if need is not None and local_in != need:
        raise ValidationError(
            f"{s.gen} at {s.at} expects orientations {''.join(need)} "
            f"but found {''.join(local_in)}", index)
    return sig[:s.at] + local_output(s.gen, local_in, n) + sig[s.at + k:]


@dataclass(frozen=True)
class SlicedDiagram:
    """A validated stack of slices with boundary signatures."""

    n: int
    slices: Tuple[Slice, ...]
    bottom: Signature = ()
    singular: bool = False
    signatures: Tuple[Signature, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise ValidationError(f"n must be an integer >= 2, got {self.n!r}")
        object.__setattr__(self, "slices", tuple(self.slices))
        object.__setattr__(self, "bottom", tuple(self.bottom))
        for o in self.bottom:
            if o not in (UP, DOWN):
                raise ValidationError(f"bad orientation {o!r} in bottom boundary")
        gens = SINGULAR_GENS if self.singular else WEB_GENS
        sigs = [self.bottom]
        for i, s in enumerate(self.slices):
            sigs.append(step_signature(sigs[-1], s, self.n, i, gens))
        object.__setattr__(self, "signatures", tuple(sigs))

    @property
    def top(self) -> Signature:
        return self.signatures[-1]

    def is_closed(self) -> bool:
        return not self.bottom and not self.top

    def require_closed(self):
        if self.top:
            raise ValidationError("diagram does not close up (non-empty top boundary)")
        if self.bottom:
            raise ValidationError("diagram has a non-empty bottom boundary")

    def has_crossings(self) -> bool:
        return any(s.gen in CROSSINGS for s in self.slices)

    def has_vertices(self) -> bool:
        return any(s.gen in VERTICES for s in self.slices)

    def with_slices(self, slices: Iterable[Slice], bottom: Optional[Signature] = None) -> "SlicedDiagram":
        return SlicedDiagram(self.n, tuple(slices),
                             self.bottom if bottom is None else bottom, self.singular)

    def crossing_signs(self) -> List[int]:
        out = []
        for s, sig in zip(self.slices, self.signatures):
            if s.gen in CROSSINGS:
                out.append(crossing_sign(s.gen, sig[s.at], sig[s.at + 1]))
        return out

    def __len__(self):
        return len(self.slices)


def crossing_sign(gen: str, a: str, b: str) -> int:
    base = 1 if gen == "xp" else -1
    return base if a == b else -base


# -- text format ----------------------------------------------------------

def parse_web(text: str, singular: bool = False, require_closed: bool = True) -> SlicedDiagram:
    """Parse the JSON diagram format.

    ``{"n": 3, "slices": [{"gen": "cupE", "at": 0}, ...]}``; an optional
    ``"bottom"`` string such as ``"ud"`` declares an open tangle.
    """
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise WebSyntaxError(f"invalid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise WebSyntaxError("top level must be an object")
    if "n" not in obj or "slices" not in obj:
        raise WebSyntaxError("fields 'n' and 'slices' are required")
    n = obj["n"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise WebSyntaxError("'n' must be an integer")
    if not isinstance(obj["slices"], list):
        raise WebSyntaxError("'slices' must be an array")
    gens = SINGULAR_GENS if singular else WEB_GENS
    slices = []
    for i, item in enumerate(obj["slices"]):
        if not isinstance(item, dict) or "gen" not in item or "at" not in item:
            raise WebSyntaxError(f"slice {i}: expected an object with 'gen' and 'at'")
        gen, at = item["gen"], item["at"]
        if gen not in gens:
            raise WebSyntaxError(f"slice {i}: unknown generator {gen!r}")
        if not isinstance(at, int) or isinstance(at, bool):
            raise WebSyntaxError(f"slice {i}: 'at' must be an integer")
        slices.append(Slice(gen, at))
    bottom = obj.get("bottom", "")
    if not isinstance(bottom, str) or set(bottom) - {UP, DOWN}:
        raise WebSyntaxError("'bottom' must be a string over 'u' and 'd'")
    d = SlicedDiagram(n, tuple(slices), tuple(bottom), singular)
    if require_closed:
        d.require_closed()
    return d


def render_web(d: SlicedDiagram) -> str:
    obj = {"n": d.n}
    if d.bottom:
        obj["bottom"] = "".join(d.bottom)
    obj["slices"] = [{"gen": s.gen, "at": s.at} for s in d.slices]
    return json.dumps(obj, separators=(", ", ": "))


# -- derived quantities ---------------------------------------------------

def writhe(d: SlicedDiagram) -> int:
    return sum(d.crossing_signs())


def vertex_count(d: SlicedDiagram) -> Tuple[int, int]:
    """``(sinks, sources)``."""
    sinks = sum(1 for s in d.slices if s.gen == "vin")
    sources = sum(1 for s in d.slices if s.gen == "vout")
    return sinks, sources


class _DSU:
    def __init__(self):
        self.parent: Dict[int, int] = {}

    def add(self) -> int:
        x = len(self.parent)
        self.parent[x] = x
        return x

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def component_count(d: SlicedDiagram) -> int:
    """Number of link components of a closed vertex-free diagram."""
    if d.has_vertices() or any(s.gen == "x4" for s in d.slices):
        raise NotALink("component count is defined for links only")
    d.require_closed()
    dsu = _DSU()
    strands: List[int] = []
    for s in d.slices:
        p = s.at
        if s.gen in CUPS:
            x = dsu.add()
            strands[p:p] = [x, x]
        elif s.gen in CAPS:
            dsu.union(strands[p], strands[p + 1])
            del strands[p:p + 2]
        elif s.gen in CROSSINGS:
            strands[p], strands[p + 1] = strands[p + 1], strands[p]
    return len({dsu.find(x) for x in dsu.parent})


# -- constructions --------------------------------------------------------

def closed(n: int, slices: Iterable[Slice], singular: bool = False) -> SlicedDiagram:
    d = SlicedDiagram(n, tuple(slices), (), singular)
    d.require_closed()
    return d


def unknot(n: int, ccw: bool = True) -> SlicedDiagram:
    """``ccw`` is the orientation whose value is ``sum q^(2i-n-1)``."""
    if ccw:
        return closed(n, [Slice("cupE", 0), Slice("capQ", 0)])
    return closed(n, [Slice("cupQ", 0), Slice("capE", 0)])


def theta(n: int) -> SlicedDiagram:
    """Source directly below sink, joined by ``n`` parallel bands."""
    return closed(n, [Slice("vout", 0), Slice("vin", 0)])


def kink_slices(orientation: str, side: str, gen: str, at: int = 0) -> List[Slice]:
    """A curl on the strand at ``at``, closed on the ``side`` ('right'/'left')."""
    if side == "right":
        cup = "cupE" if orientation == UP else "cupQ"
        cap = "capQ" if orientation == UP else "capE"
        return [Slice(cup, at + 1), Slice(gen, at), Slice(cap, at + 1)]
    cup = "cupQ" if orientation == UP else "cupE"
    cap = "capE" if orientation == UP else "capQ"
    return [Slice(cup, at), Slice(gen, at + 1), Slice(cap, at)]


def kinked_unknot(n: int, gen: str = "xp", side: str = "right") -> SlicedDiagram:
    return closed(n, [Slice("cupE", 0)] + kink_slices(UP, side, gen, 0) + [Slice("capQ", 0)])


def braid_slices(word: Sequence[int], at: int = 0, gen: str = "xp") -> List[Slice]:
    """Slices for the product ``s_w1 ... s_wm`` acting as an operator.

    The rightmost letter acts first, so it sits lowest.  ``gen`` may also be
    a sequence of per-letter generators.
    """
    gens = [gen] * len(word) if isinstance(gen, str) else list(gen)
    return [Slice(g, at + i - 1) for i, g in reversed(list(zip(word, gens)))]


def close_right(k: int, inner: Sequence[Slice], closing: int, at: int = 0) -> List[Slice]:
    """Close the last ``closing`` of ``k`` up-strands of a tangle on the right.

    Uses nested ``cupE`` below and ``capQ`` above, the last strand innermost.
    """
    first = at + k - closing
    below = [Slice("cupE", first + j) for j in range(closing)]
    above = [Slice("capQ", at + k - 1 - j) for j in range(closing)]
    return below + list(inner) + above


def braid_closure(n: int, word: Sequence[int], gens="xp", strands: Optional[int] = None) -> SlicedDiagram:
    k = strands if strands is not None else (max(word) + 1 if word else 1)
    body = braid_slices(word, 0, gens)
    slices = []
    for j in range(k):
        slices.append(Slice("cupE", j))
    # cupE at j on a signature u^j d^j makes u^(j+1) d^(j+1): nested closure
    slices += body
    for j in range(k):
        slices.append(Slice("capQ", k - 1 - j))
    return closed(n, slices)


def ladder_slices(n: int, at: int) -> List[Slice]:
    """The web replacing two up-strands at ``at``: sink, source, ``n-2`` bands.

    The two strands enter a sink together with ``n-2`` strands coming round
    from the right; a source above emits the two strands and the ``n-2``
    bands, which return to the sink.  For ``n = 2`` it is source over sink.
    """
    m = n - 2
    return close_right(n, [Slice("vin", at), Slice("vout", at)], m, at)


def sink_source_slices(n: int, at: int = 0) -> List[Slice]:
    return [Slice("vin", at), Slice("vout", at)]


def juxtapose(d1: SlicedDiagram, d2: SlicedDiagram) -> SlicedDiagram:
    """Place closed ``d2`` to the right of closed ``d1`` (disjoint union)."""
    if d1.n != d2.n:
        raise ValidationError("cannot juxtapose diagrams of different rank")
    d1.require_closed()
    d2.require_closed()
    return closed(d1.n, list(d1.slices) + list(d2.slices), d1.singular or d2.singular)


def insert_slices(d: SlicedDiagram, index: int, new: Sequence[Slice]) -> SlicedDiagram:
    """Insert slices before slice ``index`` (no position shifting)."""
    sl = list(d.slices)
    sl[index:index] = list(new)
    return d.with_slices(sl)


def vertex_slices(d: SlicedDiagram) -> List[int]:
    return [i for i, s in enumerate(d.slices) if s.gen in VERTICES]


def rotate_basepoint(d: SlicedDiagram, vertex_index: int, k: int) -> SlicedDiagram:
    """Move the marked point of a vertex ``k`` legs along its boundary.

    The first ``k`` legs are routed once around the vertex: over the top of a
    sink and under the bottom of a source, so the new vertex sees the legs in
    the order ``k+1, ..., n, 1, ..., k``.  ``vertex_index`` counts vertices in
    slice order.
    """
    n = d.n
    verts = vertex_slices(d)
    if not 0 <= vertex_index < len(verts):
        raise NoSuchVertex(f"diagram has {len(verts)} vertices, asked for {vertex_index}")
    if not 0 <= k < n:
        raise ValueError(f"rotation must satisfy 0 <= k < n, got {k}")
    if k == 0:
        return d
    idx = verts[vertex_index]
    s = d.slices[idx]
    p = s.at
    if s.gen == "vin":
        new = [Slice("cupE", p + n + j) for j in range(k)]
        new.append(Slice("vin", p + k))
        new += [Slice("capQ", p + k - 1 - j) for j in range(k)]
    else:
        new = [Slice("cupE", p + j) for j in range(k)]
        new.append(Slice("vout", p + k))
        new += [Slice("capQ", p + k + n - 1 - j) for j in range(k)]
    sl = list(d.slices)
    sl[idx:idx + 1] = new
    return d.with_slices(sl)


# -- formal combinations --------------------------------------------------

class DiagramCombination:
    """A formal ``RationalFunc``-linear combination of diagrams."""

    def __init__(self, terms: Iterable[Tuple[SlicedDiagram, RationalFunc]] = ()):
        self.terms: List[Tuple[SlicedDiagram, RationalFunc]] = []
        for d, c in terms:
            c = RationalFunc._lift(c)
            if not c.is_zero():
                self.terms.append((d, c))

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)

    def scaled(self, c) -> "DiagramCombination":
        return DiagramCombination((d, c * v) for d, v in self.terms)

    def __add__(self, other: "DiagramCombination") -> "DiagramCombination":
        return DiagramCombination(self.terms + other.terms)
