"""Independent oracles and specializations of the bracket.

* the Kauffman bracket, by brute-force smoothing with its own loop counter;
* Kuperberg's rank-3 relations, under two candidate vertex normalizations;
* singular links (four-valent vertices expanded into ladders) and their
  normalized bracket;
* the writhe- and sink-normalized invariant ``P_n``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from . import combinat
from .diagram import (CAPS, CROSSINGS, CUPS, DOWN, UP, Slice, SlicedDiagram,
                      braid_closure, closed, component_count, kink_slices,
                      ladder_slices, vertex_count, writhe)
from .errors import HasVertices, NonIntegralResult, NotDivisible
from .poly import LaurentPoly, divide_exact, t_power
from .tensor import SparseOperator, evaluate, tangle

# -- standard links ----------------------------------------------------------------


def hopf(n: int) -> SlicedDiagram:
    return braid_closure(n, [1, 1], strands=2)


def trefoil(n: int) -> SlicedDiagram:
    return braid_closure(n, [1, 1, 1], strands=2)


# -- Kauffman bracket ---------------------------------------------------------------


class _LoopCounter:
    def __init__(self):
        self.parent: List[int] = []

    def new(self) -> int:
        self.parent.append(len(self.parent))
        return len(self.parent) - 1

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def join(self, a: int, b: int):
        self.parent[self.find(a)] = self.find(b)

    def classes(self) -> int:
        return len({self.find(x) for x in range(len(self.parent))})


def _loops_after_smoothing(d: SlicedDiagram, vertical: List[bool]) -> int:
    lc = _LoopCounter()
    strands: List[int] = []
    k = 0
    for s in d.slices:
        p = s.at
        if s.gen in CUPS:
            x = lc.new()
            strands[p:p] = [x, x]
        elif s.gen in CAPS:
            lc.join(strands[p], strands[p + 1])
            del strands[p:p + 2]
        else:
            if not vertical[k]:
                lc.join(strands[p], strands[p + 1])
                x = lc.new()
                strands[p], strands[p + 1] = x, x
            k += 1
    return lc.classes()


def kauffman_bracket(d: SlicedDiagram) -> LaurentPoly:
    """``[D]`` in ``A``, by summing over all ``2^c`` smoothings."""
    if any(s.gen not in CROSSINGS + CAPS + CUPS for s in d.slices):
        raise HasVertices("the Kauffman bracket is defined for link diagrams only")
    d.require_closed()
    kinds = [s.gen for s in d.slices if s.gen in CROSSINGS]
    delta = LaurentPoly({2: -1, -2: -1})
    total = LaurentPoly()
    for choice in itertools.product((True, False), repeat=len(kinds)):
        # choice[i] True = A-smoothing; for xp that is the vertical one
        vertical = [a if g == "xp" else not a for a, g in zip(choice, kinds)]
        a = sum(choice)
        loops = _loops_after_smoothing(d, vertical)
        total = total + t_power(a - (len(kinds) - a)) * delta ** loops
    return total


@dataclass
class KauffmanReport:
    bracket: LaurentPoly
    kauffman: LaurentPoly
    writhe: int
    components: int

    @property
    def predicted(self) -> LaurentPoly:
        return self.kauffman * (-1 if (self.writhe + self.components) % 2 else 1)

    @property
    def ok(self) -> bool:
        return self.bracket == self.predicted


def kauffman_compare(d: SlicedDiagram) -> KauffmanReport:
    """Rank-2 bracket against ``(-1)^(w + c) [D]`` with ``A = t``."""
    d2 = d if d.n == 2 else SlicedDiagram(2, d.slices, d.bottom)
    return KauffmanReport(evaluate(d2), kauffman_bracket(d2), writhe(d2), component_count(d2))


# -- Kuperberg relations, n = 3 -----------------------------------------------------

KUPERBERG_NORMALIZATIONS = {
    # factor per sink-source pair, in t (q = t^3)
    "theorem": t_power(-9, -1),   # ((-q)^(-3/2))^2
    "proof": t_power(-6),         # (q^-1)^2
}


def bigon_tangle() -> List[Slice]:
    """A bigon on a downward strand: source below, sink above."""
    return [Slice("vout", 0), Slice("capQ", 2), Slice("cupQ", 0), Slice("vin", 1)]


def square_tangle() -> List[Slice]:
    """Four vertices in a square, external legs alternating, boundary ``du -> du``."""
    return [Slice("vout", 0), Slice("capQ", 2), Slice("cupE", 3), Slice("vin", 1),
            Slice("vout", 1), Slice("capQ", 3), Slice("cupQ", 0), Slice("vin", 1)]


@dataclass
class RelationResult:
    name: str
    holds: bool
    detail: str = ""


@dataclass
class KuperbergReport:
    normalization: str
    results: List[RelationResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.holds for r in self.results)

    def get(self, name: str) -> RelationResult:
        return next(r for r in self.results if r.name == name)


def kuperberg_suite(normalization: str = "theorem") -> KuperbergReport:
    """Relations (i)-(vii) for ``c^(pairs) <.>_3`` as operator identities."""
    n = 3
    c2 = KUPERBERG_NORMALIZATIONS[normalization]
    rep = KuperbergReport(normalization)
    uu = (UP, UP)
    ident = SparseOperator.identity(uu, n)
    lp = tangle(n, [Slice("xp", 0)], uu)
    lm = tangle(n, [Slice("xm", 0)], uu)
    h = tangle(n, ladder_slices(n, 0), uu).scale(c2)
    rep.results.append(RelationResult(
        "i", lp == h.scale(t_power(-1)) + ident.scale(t_power(2))))
    rep.results.append(RelationResult(
        "ii", lm == h.scale(t_power(1)) + ident.scale(t_power(-2))))
    circle = evaluate(closed(n, [Slice("cupE", 0), Slice("capQ", 0)]))
    rep.results.append(RelationResult("iii", circle == combinat.quantum_int(3).substitute_power(3)))
    bigon = tangle(n, bigon_tangle(), (DOWN,)).scale(c2)
    two = combinat.quantum_int(2).substitute_power(3)
    rep.results.append(RelationResult(
        "iv", bigon == SparseOperator.identity((DOWN,), n).scale(two * -1)))
    du = (DOWN, UP)
    square = tangle(n, square_tangle(), du).scale(c2 * c2)
    arcs = SparseOperator.identity(du, n) + tangle(n, [Slice("capE", 0), Slice("cupQ", 0)], du)
    rep.results.append(RelationResult("v", square == arcs))
    rep.results.append(RelationResult(
        "vi", lp.scale(t_power(1)) - lm.scale(t_power(-1)) == ident.scale(t_power(3) - t_power(-3))))
    kink = tangle(n, kink_slices(UP, "right", "xp", 0), (UP,))
    rep.results.append(RelationResult(
        "vii", kink == SparseOperator.identity((UP,), n).scale(t_power(8))))
    return rep


# -- singular links ------------------------------------------------------------------


def psi_expand(d: SlicedDiagram) -> SlicedDiagram:
    """Replace every four-valent vertex by a sink-source ladder with ``n-2`` rungs."""
    out: List[Slice] = []
    for s in d.slices:
        if s.gen == "x4":
            out += ladder_slices(d.n, s.at)
        else:
            out.append(s)
    return SlicedDiagram(d.n, tuple(out), d.bottom)


def singular_count(d: SlicedDiagram) -> int:
    return sum(1 for s in d.slices if s.gen == "x4")


def singular_bracket(d: SlicedDiagram) -> LaurentPoly:
    """``(D)_n`` in ``t``."""
    n = d.n
    v = singular_count(d)
    w = writhe(d)
    value = evaluate(psi_expand(d))
    denom = (combinat.quantum_factorial(n - 2).substitute_power(n)
             * t_power(n * n * (n - 1) // 2)) ** v
    try:
        return divide_exact(value, denom).shift(w)
    except NotDivisible as exc:
        raise NonIntegralResult("singular bracket is not a Laurent polynomial") from exc


@dataclass
class RingReport:
    in_q: bool
    in_q_n: bool
    step: int


def ring_membership(p: LaurentPoly, n: int) -> RingReport:
    """Which of ``Z[q^+-1]`` and ``Z[q^+-n]`` contains ``p`` (given in ``t``)."""
    from math import gcd

    g = 0
    for e in p.exponents():
        g = gcd(g, e)
    return RingReport(all(e % n == 0 for e in p.exponents()),
                      all(e % (n * n) == 0 for e in p.exponents()), g)


def normalized_invariant(d: SlicedDiagram) -> LaurentPoly:
    """``P_n = q^((1/n - n) w - n(n-1) v) <d>_n`` with ``v`` the number of sinks."""
    n = d.n
    sinks, _ = vertex_count(d)
    return evaluate(d).shift((1 - n * n) * writhe(d) - n * n * (n - 1) * sinks)
