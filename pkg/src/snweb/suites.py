"""Named, seeded property suites shared by the CLI and the acceptance tests.

Every suite takes ``(seed, size)`` and returns a :class:`SuiteResult`; the
same seed always produces the same diagrams and the same report.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import combinat, hecke
from .crosscheck import (hopf, kauffman_compare, kuperberg_suite, normalized_invariant,
                         ring_membership, singular_bracket, trefoil)
from .diagram import (UP, Slice, SlicedDiagram, braid_slices, close_right, closed,
                      juxtapose, kink_slices, kinked_unknot, rotate_basepoint, theta,
                      unknot, vertex_slices)
from .moy import eta, eta_over_states, bracket_in_v, moy_corpus, moy_state_sum, substitution_check
from .poly import LaurentPoly, t_power
from .random_diagrams import (apply_r3, insert_r1, insert_r2, planar_isotopy,
                              random_braid_closure, random_link, random_web)
from .statesum import positivity_report, resolved_state_sum, state_sum
from .tensor import (SparseOperator, SparseVector, braid_operator, evaluate, hecke_action,
                     lambda_operator, t_minus, t_plus, tangle, uq_generator_action)

RANKS = (2, 3, 4)


@dataclass
class SuiteResult:
    name: str
    cases: List[Tuple[str, bool, str]] = field(default_factory=list)

    def add(self, label: str, ok: bool, detail: str = ""):
        self.cases.append((label, bool(ok), detail))

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.cases)

    @property
    def failures(self) -> List[Tuple[str, bool, str]]:
        return [c for c in self.cases if not c[1]]

    def summary(self) -> str:
        bad = len(self.failures)
        return f"{self.name}: {len(self.cases) - bad}/{len(self.cases)} cases passed"


def qint(m: int, n: int) -> LaurentPoly:
    return combinat.quantum_int(m).substitute_power(n)


def qfact(m: int, n: int) -> LaurentPoly:
    return combinat.quantum_factorial(m).substitute_power(n)


# -- axioms and operator lemmas ---------------------------------------------------------

def axioms(seed: int = 0, size: int = 0, ranks: Sequence[int] = (2, 3, 4, 5),
           sinksource_ranks: Sequence[int] = (2, 3, 4)) -> SuiteResult:
    res = SuiteResult("axioms")
    for n in ranks:
        uu = (UP, UP)
        ident = SparseOperator.identity(uu, n)
        lp = tangle(n, [Slice("xp", 0)], uu)
        lm = tangle(n, [Slice("xm", 0)], uu)
        res.add(f"n={n} skein", lp.scale(t_power(1)) - lm.scale(t_power(-1))
                == ident.scale(t_power(n) - t_power(-n)))
        for side in ("left", "right"):
            for orient in ("u", "d"):
                for gen, sign in (("xp", 1), ("xm", -1)):
                    k = tangle(n, kink_slices(orient, side, gen, 0), (orient,))
                    res.add(f"n={n} kink {gen} {side} {orient}",
                            k == SparseOperator.identity((orient,), n).scale(t_power(sign * (n * n - 1))))
        circle = evaluate(unknot(n))
        res.add(f"n={n} annulus", circle == qint(n, n))
        base = trefoil(n)
        res.add(f"n={n} disjoint annulus", evaluate(juxtapose(base, unknot(n))) == qint(n, n) * evaluate(base))
        res.add(f"n={n} empty", evaluate(closed(n, [])) == LaurentPoly.const(1))
    for n in sinksource_ranks:
        op = tangle(n, [Slice("vin", 0), Slice("vout", 0)], (UP,) * n)
        res.add(f"n={n} sink-source", op == lambda_operator(n, n).scale(t_power(n * n * (n - 1))))
    return res


def closed_scalars(seed: int = 0, size: int = 0, ranks: Sequence[int] = RANKS) -> SuiteResult:
    res = SuiteResult("scalars")
    for n in ranks:
        res.add(f"n={n} theta", evaluate(theta(n)) == qfact(n, n).shift(n * n * (n - 1) // 2))
        total = LaurentPoly()
        for word, c in hecke.lambda_skein(n, n):
            total = total + c * evaluate(closed(n, close_right(n, braid_slices(word), n)))
        res.add(f"n={n} closed antisymmetrizer", total == qfact(n, n).shift(-n * n * (n - 1) // 2))
    return res


def hecke_suite(seed: int = 0, size: int = 0) -> SuiteResult:
    res = SuiteResult("hecke")
    for n in (2, 3, 4):
        for k in (2, 3, 4):
            gens = [hecke.HeckeElement.generator(k, n, i) for i in range(1, k)]
            one = hecke.HeckeElement.one(k, n)
            for i, g in enumerate(gens, 1):
                quad = (g - one.scale(t_power(n))) * (g + one.scale(t_power(-n)))
                res.add(f"n={n} k={k} quadratic g{i}", quad.is_zero())
            for i in range(len(gens) - 1):
                a, b = gens[i], gens[i + 1]
                res.add(f"n={n} k={k} braid {i + 1}", a * b * a == b * a * b)
            for i in range(len(gens)):
                for j in range(i + 2, len(gens)):
                    res.add(f"n={n} k={k} commute {i + 1},{j + 1}", gens[i] * gens[j] == gens[j] * gens[i])
            for sign, eig in (("+", t_power(n - 1)), ("-", t_power(-n - 1, -1))):
                e = hecke.e_element(k, n, sign)
                for i in range(1, k):
                    h = hecke.HeckeElement.basis(combinat.simple(k, i), n)
                    res.add(f"n={n} k={k} e{sign} left h{i}", h * e == e.scale(eig))
                    res.add(f"n={n} k={k} e{sign} right h{i}", e * h == e.scale(eig))
                res.add(f"n={n} k={k} e{sign} idempotent",
                        e * e == e.scale(hecke.poincare_weight(k, n, sign)))
    for k in range(1, 7):
        lhs = LaurentPoly()
        for sigma in combinat.all_perms(k):
            lhs = lhs + LaurentPoly.monomial(2 * combinat.length(sigma))
        res.add(f"k={k} Poincare", lhs == combinat.quantum_factorial(k).shift(k * (k - 1) // 2))
    for n in (2, 3, 4):
        for k in (1, 2, 3, 4):
            for sigma in combinat.all_perms(k):
                op = braid_operator(combinat.reduced_word(sigma), k, n)
                res.add(f"n={n} k={k} action {sigma}",
                        op == hecke_action(hecke.HeckeElement.basis(sigma, n)))
    return res


def operator_lemmas(seed: int = 0, size: int = 0) -> SuiteResult:
    res = SuiteResult("operator-lemmas")
    for n in (2, 3, 4, 5):
        for k in range(1, 4):
            # past k = n both antisymmetrizers vanish
            coeff = qint(n - k, n).shift(-n * k) if k <= n else LaurentPoly()
            res.add(f"n={n} k={k} closure",
                    partial_closure(k + 1, n) == lambda_operator(k, n).scale(coeff))
        kink = tangle(n, kink_slices(UP, "right", "xp", 0), (UP,))
        res.add(f"n={n} kink eigenvalue",
                kink == SparseOperator.identity((UP,), n).scale(t_power(n * n - 1)))
    for n in (2, 3, 4):
        tp = t_plus(n)
        for i in range(1, n):
            h = braid_operator([i], n, n)
            res.add(f"n={n} h{i} T+", h.apply(tp) == tp.scale(t_power(-n - 1, -1)))
    return res


def partial_closure(k: int, n: int) -> SparseOperator:
    """The antisymmetrizer on ``k`` strands with its last strand closed on the right."""
    sig = (UP,) * (k - 1)
    total = SparseOperator.zero(sig, sig, n)
    for word, c in hecke.lambda_skein(k, n):
        total = total + tangle(n, close_right(k, braid_slices(word), 1), sig).scale(c)
    return total


def equivariance(seed: int = 0, size: int = 0) -> SuiteResult:
    import itertools

    res = SuiteResult("equivariance")
    for n in (2, 3, 4):
        tp = t_plus(n)
        basis = [SparseVector((UP,) * n, n, {idx: LaurentPoly.const(1)})
                 for idx in itertools.product(range(1, n + 1), repeat=n)]
        for i in range(1, n):
            for which in ("K", "E", "F"):
                u = uq_generator_action(which, i, n, n)
                img = u.apply(tp)
                res.add(f"n={n} {which}{i} T+", img == tp if which == "K" else img.is_zero())
                ok = True
                for vec in basis:
                    got = t_minus(n, u.apply(vec))
                    want = t_minus(n, vec) if which == "K" else LaurentPoly()
                    ok = ok and got == want
                res.add(f"n={n} T- {which}{i}", ok)
    return res


# -- random suites ----------------------------------------------------------------------

def _rank(i: int, ranks: Sequence[int] = RANKS) -> int:
    return ranks[i % len(ranks)]


def kauffman_suite(seed: int = 0, size: int = 50) -> SuiteResult:
    res = SuiteResult("kauffman")
    for name, d in (("unknot", unknot(2)), ("hopf", hopf(2)), ("trefoil", trefoil(2)),
                    ("kink", kinked_unknot(2))):
        r = kauffman_compare(d)
        res.add(name, r.ok, f"<D>_2 = {r.bracket}, [D] = {r.kauffman}")
    rng = random.Random(seed)
    for i in range(size):
        d = random_link(rng, 2, rng.randint(0, 8))
        r = kauffman_compare(d)
        res.add(f"random {i}", r.ok, f"<D>_2 = {r.bracket}, [D] = {r.kauffman}")
    return res


def dual_evaluators(seed: int = 0, size: int = 100, links: Optional[int] = None) -> SuiteResult:
    res = SuiteResult("statesum")
    rng = random.Random(seed)
    for i in range(size):
        n = _rank(i)
        w = random_web(rng, n, steps=rng.randint(4, 12))
        res.add(f"web {i} n={n}", state_sum(w) == evaluate(w))
    for i in range(size // 3 if links is None else links):
        n = _rank(i)
        d = random_link(rng, n, rng.randint(1, 6))
        res.add(f"link {i} n={n}", resolved_state_sum(d) == evaluate(d))
    return res


def core_independence(seed: int = 0, size: int = 20) -> SuiteResult:
    res = SuiteResult("core")
    rng = random.Random(seed)
    for i in range(size):
        n = _rank(i)
        w = random_web(rng, n, steps=10)
        res.add(f"web {i} n={n}", state_sum(planar_isotopy(rng, w)) == state_sum(w))
    return res


def reidemeister(seed: int = 0, size: int = 30) -> SuiteResult:
    res = SuiteResult("reidemeister")
    rng = random.Random(seed)
    for i in range(size):
        n = _rank(i)
        d = random_link(rng, n, rng.randint(0, 4)) if i % 2 else random_web(rng, n, 6, crossings=2)
        base = evaluate(d)
        r2 = insert_r2(rng, d)
        if r2 is not None:
            res.add(f"R2 {i} n={n}", evaluate(r2) == base)
        r3 = apply_r3(rng, d)
        if r3 is not None:
            res.add(f"R3 {i} n={n}", evaluate(r3[0]) == evaluate(r3[1]))
        r1 = insert_r1(rng, d)
        if r1 is not None:
            new, sign = r1
            res.add(f"R1 {i} n={n}", evaluate(new) == base.shift(sign * (n * n - 1)))
    # every orientation pattern of the second and third moves, as operators
    for n in RANKS:
        for a in "ud":
            for b in "ud":
                sig = (a, b)
                for g, h in (("xp", "xm"), ("xm", "xp")):
                    res.add(f"R2 op n={n} {a}{b} {g}",
                            tangle(n, [Slice(g, 0), Slice(h, 0)], sig) == SparseOperator.identity(sig, n))
                for c in "ud":
                    from .random_diagrams import R3_PAIRS, r3_pair
                    for j in range(len(R3_PAIRS)):
                        left, right = r3_pair(0, j)
                        res.add(f"R3 op n={n} {a}{b}{c} #{j}",
                                tangle(n, left, (a, b, c)) == tangle(n, right, (a, b, c)))
    return res


def marked_points(seed: int = 0, size: int = 10) -> SuiteResult:
    res = SuiteResult("marked")
    rng = random.Random(seed)
    for n in (3, 2):
        found = 0
        while found < size:
            w = random_web(rng, n, steps=rng.randint(6, 12))
            verts = vertex_slices(w)
            if not verts:
                continue
            found += 1
            v, k = rng.randrange(len(verts)), rng.randrange(1, n)
            a, b = evaluate(w), evaluate(rotate_basepoint(w, v, k))
            if n % 2:
                res.add(f"n={n} web {found}", a == b, f"{a} vs {b}")
            else:
                res.add(f"n={n} web {found} mod 2", a.mod(2) == b.mod(2), f"{a} vs {b}")
    return res


def moy_suite(seed: int = 0, size: int = 0, ranks: Sequence[int] = RANKS) -> SuiteResult:
    res = SuiteResult("moy")
    for n in ranks:
        for name, g in moy_corpus(n):
            left, right = bracket_in_v(g), moy_state_sum(g)
            res.add(f"n={n} {name} state sum", left == right, f"{left} vs {right}")
            sub = substitution_check(g)
            res.add(f"n={n} {name} substitution", sub.ok, f"{sub.lhs} vs {sub.rhs}")
            parities = eta_over_states(g)
            res.add(f"n={n} {name} eta", parities == {eta(g)}, f"{sorted(parities)}")
    return res


def _uu_sites(d: SlicedDiagram) -> List[Tuple[int, int]]:
    return [(i, p) for i, sig in enumerate(d.signatures)
            for p in range(len(sig) - 1) if sig[p] == UP and sig[p + 1] == UP]


def random_singular(rng: random.Random, n: int, crossings: int, vertices: int) -> SlicedDiagram:
    """A random link with up to ``vertices`` crossings-free sites turned into four-valent vertices."""
    d = random_link(rng, n, crossings)
    d = SlicedDiagram(n, d.slices, (), True)
    for _ in range(vertices):
        sites = _uu_sites(d)
        if not sites:
            break
        i, p = rng.choice(sites)
        sl = list(d.slices)
        sl[i:i] = [Slice("x4", p)]
        d = d.with_slices(sl)
    return d


def singular_suite(seed: int = 0, size: int = 10, ranks: Sequence[int] = RANKS) -> SuiteResult:
    res = SuiteResult("singular")
    rng = random.Random(seed)
    for n in ranks:
        q = t_power(n)
        empty = closed(n, [], singular=True)
        circle = SlicedDiagram(n, unknot(n).slices, (), True)
        res.add(f"n={n} empty", singular_bracket(empty) == LaurentPoly.const(1))
        res.add(f"n={n} annulus", singular_bracket(circle) == qint(n, n))
        done = 0
        while done < size:
            d = random_singular(rng, n, rng.randint(1, 3), rng.randint(0, 1))
            sites = _uu_sites(d)
            if not sites:
                continue
            done += 1
            i, p = rng.choice(sites)
            sl = list(d.slices)

            def put(new):
                return d.with_slices(sl[:i] + new + sl[i:])

            lp, lm, l0, x = (singular_bracket(put(extra)) for extra in
                             ([Slice("xp", p)], [Slice("xm", p)], [], [Slice("x4", p)]))
            res.add(f"n={n} case {done} (i)", lp == q * l0 - x)
            res.add(f"n={n} case {done} (ii)", lm == t_power(-n) * l0 - x)
            r1 = insert_r1(rng, d)
            if r1 is not None:
                new, sign = r1
                res.add(f"n={n} case {done} (iii)",
                        singular_bracket(new) == singular_bracket(d).shift(sign * n * n))
            res.add(f"n={n} case {done} (iv)",
                    singular_bracket(juxtapose(d, circle)) == qint(n, n) * singular_bracket(d))
            ring = ring_membership(l0, n)
            res.add(f"n={n} case {done} ring", ring.in_q,
                    "" if ring.in_q_n else f"exponent lattice step {ring.step} (finer than q^n)")
    return res


def positivity(seed: int = 0, size: int = 20, ranks: Sequence[int] = RANKS) -> SuiteResult:
    res = SuiteResult("positivity")
    rng = random.Random(seed)
    for i in range(size):
        n = ranks[i % len(ranks)]
        d = random_link(rng, n, rng.randint(1, 6))
        leaves = positivity_report(d)
        bad = [r for r in leaves if not r.ok]
        res.add(f"link {i} n={n} ({len(leaves)} leaves)", not bad,
                f"{len(bad)} leaves fail" if bad else "")
    return res


def pn_suite(seed: int = 0, size: int = 10, ranks: Sequence[int] = RANKS) -> SuiteResult:
    res = SuiteResult("pn")
    rng = random.Random(seed)
    for n in ranks:
        res.add(f"n={n} unknot", normalized_invariant(unknot(n)) == qint(n, n))
        res.add(f"n={n} kink", normalized_invariant(kinked_unknot(n)) == qint(n, n))
        done = 0
        while done < size:
            d = random_link(rng, n, rng.randint(1, 4))
            sites = _uu_sites(d)
            if not sites:
                continue
            done += 1
            i, p = rng.choice(sites)
            sl = list(d.slices)
            lp, lm, l0 = (normalized_invariant(d.with_slices(sl[:i] + extra + sl[i:]))
                          for extra in ([Slice("xp", p)], [Slice("xm", p)], []))
            res.add(f"n={n} triple {done}",
                    lp.shift(n * n) - lm.shift(-n * n) == (t_power(n) - t_power(-n)) * l0)
            r1 = insert_r1(rng, d)
            if r1 is not None:
                res.add(f"n={n} R1 {done}", normalized_invariant(r1[0]) == normalized_invariant(d))
        # sink-source relation inside a random braid closure on n strands
        word = [rng.randint(1, n - 1) for _ in range(3)] if n > 1 else []
        ctx = braid_slices(word, 0, [rng.choice(("xp", "xm")) for _ in word])
        lhs = normalized_invariant(closed(n, close_right(n, ctx + [Slice("vin", 0), Slice("vout", 0)], n)))
        rhs = LaurentPoly()
        for sigma in combinat.all_perms(n):
            ell = combinat.length(sigma)
            body = ctx + braid_slices(combinat.reduced_word(sigma))
            rhs = rhs + normalized_invariant(closed(n, close_right(n, body, n))).shift(
                n * (n - 1) * ell) * (-1 if ell % 2 else 1)
        res.add(f"n={n} sink-source relation", lhs == rhs)
    return res


def kuperberg(seed: int = 0, size: int = 0) -> SuiteResult:
    res = SuiteResult("kuperberg")
    for r in kuperberg_suite("theorem").results:
        res.add(f"theorem normalization ({r.name})", r.holds)
    return res


SUITES: Dict[str, Callable[[int, int], SuiteResult]] = {
    "axioms": axioms,
    "scalars": closed_scalars,
    "hecke": hecke_suite,
    "operators": operator_lemmas,
    "equivariance": equivariance,
    "kauffman": kauffman_suite,
    "statesum": dual_evaluators,
    "core": core_independence,
    "reidemeister": reidemeister,
    "marked": marked_points,
    "moy": moy_suite,
    "singular": singular_suite,
    "positivity": positivity,
    "pn": pn_suite,
    "kuperberg": kuperberg,
}
