"""Seeded random diagrams for property suites.

* ``random_link``: random cups and crossings (random orientations) on a
  growing signature, then closed generically by caps on adjacent
  opposite-orientation pairs.
* ``random_braid_closure``: a random word in ``xp``/``xm`` on at most five
  strands, closed on the right.
* ``random_web``: random cups, caps, sources and sinks, closed by caps,
  then sinks on runs of ``n`` up-strands or sources in front of downs.

Reidemeister moves are inserted between two slices at a random position;
all of them preserve validity because they are identity tangles up to
isotopy.
"""

from __future__ import annotations

import random
from typing import List, Optional, Sequence, Tuple

from .diagram import (DOWN, UP, Signature, Slice, SlicedDiagram, braid_slices,
                      closed, kink_slices, step_signature)


def _opposite_pairs(sig: Signature) -> List[int]:
    return [i for i in range(len(sig) - 1) if sig[i] != sig[i + 1]]


def _cap_for(a: str) -> str:
    return "capQ" if a == UP else "capE"


def _close(n: int, slices: List[Slice], sig: Signature, rng: random.Random,
           allow_vertices: bool = False) -> List[Slice]:
    sig = tuple(sig)
    while sig:
        pairs = _opposite_pairs(sig)
        if pairs:
            p = rng.choice(pairs)
            s = Slice(_cap_for(sig[p]), p)
        elif allow_vertices and sig[0] == UP:
            s = Slice("vin", 0)
        elif allow_vertices:
            s = Slice("vout", 0)
        else:
            raise AssertionError("cannot close a one-sided signature without vertices")
        slices.append(s)
        sig = step_signature(sig, s, n)
    return slices


def random_link(rng: random.Random, n: int, crossings: int, max_width: int = 6) -> SlicedDiagram:
    """A closed link diagram with exactly ``crossings`` crossings."""
    slices: List[Slice] = []
    sig: Signature = ()
    placed = 0
    while placed < crossings:
        grow = len(sig) < 2 or (len(sig) < max_width and rng.random() < 0.3)
        if grow:
            s = Slice(rng.choice(("cupE", "cupQ")), rng.randint(0, len(sig)))
        elif len(sig) > 2 and rng.random() < 0.15 and _opposite_pairs(sig):
            p = rng.choice(_opposite_pairs(sig))
            s = Slice(_cap_for(sig[p]), p)
        else:
            s = Slice(rng.choice(("xp", "xm")), rng.randint(0, len(sig) - 2))
            placed += 1
        slices.append(s)
        sig = step_signature(sig, s, n)
    return closed(n, _close(n, slices, sig, rng))


def random_braid_closure(rng: random.Random, n: int, max_strands: int = 5,
                         length: int = 6) -> SlicedDiagram:
    k = rng.randint(2, max_strands)
    word = [rng.randint(1, k - 1) for _ in range(length)]
    gens = [rng.choice(("xp", "xm")) for _ in word]
    body = braid_slices(word, 0, gens)
    cups = [Slice("cupE", j) for j in range(k)]
    caps = [Slice("capQ", k - 1 - j) for j in range(k)]
    return closed(n, cups + body + caps)


def random_web(rng: random.Random, n: int, steps: int = 8, crossings: int = 0,
               max_width: int = 8) -> SlicedDiagram:
    """A closed web; planar unless ``crossings`` > 0."""
    slices: List[Slice] = []
    sig: Signature = ()
    placed = 0
    for _ in range(steps + crossings):
        options = []
        if len(sig) + 2 <= max_width:
            options += ["cup"]
        if len(sig) + n <= max_width:
            options += ["vout"]
        runs = [i for i in range(len(sig) - n + 1) if all(o == UP for o in sig[i:i + n])]
        if runs:
            options += ["vin", "vin"]
        if _opposite_pairs(sig):
            options += ["cap"]
        if placed < crossings and len(sig) >= 2:
            options += ["cross", "cross"]
        if not options:
            break
        kind = rng.choice(options)
        if kind == "cup":
            s = Slice(rng.choice(("cupE", "cupQ")), rng.randint(0, len(sig)))
        elif kind == "vout":
            s = Slice("vout", rng.randint(0, len(sig)))
        elif kind == "vin":
            s = Slice("vin", rng.choice(runs))
        elif kind == "cap":
            p = rng.choice(_opposite_pairs(sig))
            s = Slice(_cap_for(sig[p]), p)
        else:
            s = Slice(rng.choice(("xp", "xm")), rng.randint(0, len(sig) - 2))
            placed += 1
        slices.append(s)
        sig = step_signature(sig, s, n)
    return closed(n, _close(n, slices, sig, rng, allow_vertices=True))


# -- Reidemeister insertions ---------------------------------------------------

def _random_site(rng: random.Random, d: SlicedDiagram, width: int) -> Optional[Tuple[int, int]]:
    sites = [(i, p) for i, sig in enumerate(d.signatures) for p in range(len(sig) - width + 1)]
    return rng.choice(sites) if sites else None


def insert_r2(rng: random.Random, d: SlicedDiagram) -> Optional[SlicedDiagram]:
    """Insert a crossing followed by its inverse on two adjacent strands."""
    site = _random_site(rng, d, 2)
    if site is None:
        return None
    i, p = site
    g = rng.choice(("xp", "xm"))
    other = "xm" if g == "xp" else "xp"
    sl = list(d.slices)
    sl[i:i] = [Slice(g, p), Slice(other, p)]
    return d.with_slices(sl)


R3_PAIRS = (
    (("xp", "xp", "xp"), ("xp", "xp", "xp")),
    (("xm", "xm", "xm"), ("xm", "xm", "xm")),
    (("xp", "xp", "xm"), ("xm", "xp", "xp")),
)


def r3_pair(p: int, choice: int) -> Tuple[List[Slice], List[Slice]]:
    """Both sides of a third move on strands ``p..p+2``."""
    left, right = R3_PAIRS[choice]
    return braid_slices([1, 2, 1], p, list(left)), braid_slices([2, 1, 2], p, list(right))


def inverse_slices(slices: Sequence[Slice]) -> List[Slice]:
    """Mirror a crossing-only tangle top to bottom."""
    swap = {"xp": "xm", "xm": "xp"}
    return [Slice(swap[s.gen], s.at) for s in reversed(slices)]


def apply_r3(rng: random.Random, d: SlicedDiagram) -> Optional[Tuple[SlicedDiagram, SlicedDiagram]]:
    """Insert either side of a third move, each followed by the inverse of the first side.

    The braid permutes the strands, so the trailing inverse restores the
    signature; the two results differ exactly by the move.
    """
    site = _random_site(rng, d, 3)
    if site is None:
        return None
    i, p = site
    a, b = r3_pair(p, rng.randrange(len(R3_PAIRS)))
    back = inverse_slices(a)
    sl = list(d.slices)
    return (d.with_slices(sl[:i] + a + back + sl[i:]),
            d.with_slices(sl[:i] + b + back + sl[i:]))


def insert_r1(rng: random.Random, d: SlicedDiagram) -> Optional[Tuple[SlicedDiagram, int]]:
    """Insert a curl; returns the new diagram and the sign of the added crossing."""
    site = _random_site(rng, d, 1)
    if site is None:
        return None
    i, p = site
    orientation = d.signatures[i][p]
    side = rng.choice(("left", "right"))
    gen = rng.choice(("xp", "xm"))
    sl = list(d.slices)
    sl[i:i] = kink_slices(orientation, side, gen, p)
    new = d.with_slices(sl)
    sign = sum(new.crossing_signs()) - sum(d.crossing_signs())
    return new, sign


def planar_isotopy(rng: random.Random, d: SlicedDiagram, tries: int = 20) -> SlicedDiagram:
    """Swap adjacent slices acting on disjoint strand ranges, shifting positions."""
    from .diagram import consumed, local_output

    sl = list(d.slices)
    for _ in range(tries):
        if len(sl) < 2:
            break
        i = rng.randrange(len(sl) - 1)
        cur = d.with_slices(sl)
        sig = cur.signatures[i]
        a, b = sl[i], sl[i + 1]
        ka = consumed(a.gen, d.n)
        oa = len(local_output(a.gen, tuple(sig[a.at:a.at + ka]), d.n))
        kb = consumed(b.gen, d.n)
        ob_sig = cur.signatures[i + 1]
        ob = len(local_output(b.gen, tuple(ob_sig[b.at:b.at + kb]), d.n))
        if b.at >= a.at + oa:
            # b sits to the right of a's output: move b below a
            new_b = Slice(b.gen, b.at - oa + ka)
            new_a = Slice(a.gen, a.at)
        elif b.at + kb <= a.at:
            new_b = Slice(b.gen, b.at)
            new_a = Slice(a.gen, a.at - kb + ob)
        else:
            continue
        trial = sl[:i] + [new_b, new_a] + sl[i + 2:]
        try:
            d.with_slices(trial)
        except Exception:
            continue
        sl = trial
    return d.with_slices(sl)
