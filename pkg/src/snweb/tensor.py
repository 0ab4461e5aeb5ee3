"""Reshetikhin-Turaev evaluation of sliced diagrams by sparse contraction.

All tensors are written in ``t`` with ``q = t**n``.  For up-oriented strands

* ``xp`` acts by the braiding ``R(e_i x e_j) = t^-1 (e_j x e_i + [i<j](q - 1/q) e_i x e_j)``
  (``t^(n-1) e_i x e_i`` on the diagonal) and ``xm`` by its inverse;
* ``capE(e^i x e_j) = delta_ij``, ``capQ(e_i x e^j) = q^(2i-n-1) delta_ij``;
* ``cupE = sum e_i x e^i``, ``cupQ = sum q^(n+1-2i) e^i x e_i``;
* ``vout = T_+ = sum (-q)^l(sigma) e_sigma`` and ``vin = T_-`` its dual.

Crossings between strands of other orientations are obtained by bending
one strand with a cup below and a cap above an up-up crossing of the
opposite type; the tables are built once and cached.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from . import combinat, kernel
from .diagram import (CAPS, CROSSINGS, CUPS, DOWN, UP, Signature, Slice,
                      SlicedDiagram, braid_slices, consumed, flip,
                      local_output, required_input)
from .errors import InvalidSignature, OpenDiagram, OutOfRange, SignatureMismatch
from .poly import ONE, ZERO, LaurentPoly

Index = Tuple[int, ...]
RawPoly = Dict[int, int]
Table = Dict[Index, Tuple[Tuple[Index, RawPoly], ...]]


def _mono(e: int, c: int = 1) -> RawPoly:
    return {e: c}


def _sign_pow(e: int, ell: int) -> RawPoly:
    """``(-q)^ell`` style monomial ``(-1)^ell t^e``."""
    return {e: -1 if ell % 2 else 1}


# -- generator tables -----------------------------------------------------

def _braiding_table(n: int, inverse: bool) -> Table:
    table: Dict[Index, list] = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if not inverse:
                if i == j:
                    imgs = [((i, i), _mono(n - 1))]
                elif i > j:
                    imgs = [((j, i), _mono(-1))]
                else:
                    imgs = [((j, i), _mono(-1)), ((i, j), {n - 1: 1, -n - 1: -1})]
            else:
                if i == j:
                    imgs = [((i, i), _mono(1 - n))]
                elif i < j:
                    imgs = [((j, i), _mono(1))]
                else:
                    imgs = [((j, i), _mono(1)), ((i, j), {n + 1: -1, 1 - n: 1})]
            table[(i, j)] = tuple(imgs)
    return table


def _vertex_tables(n: int) -> Tuple[Table, Table]:
    out_images = []
    in_table: Table = {}
    for sigma in combinat.all_perms(n):
        ell = combinat.length(sigma)
        w = _sign_pow(n * ell, ell)
        out_images.append((sigma, w))
        in_table[sigma] = (((), w),)
    return {(): tuple(out_images)}, in_table


def _mixed_crossing_slices(gen: str, a: str, b: str) -> List[Slice]:
    """Bend strand ``b`` round the left to reduce to a crossing of the other type."""
    other = "xm" if gen == "xp" else "xp"
    cup = "cupE" if b == UP else "cupQ"
    cap = "capE" if b == UP else "capQ"
    return [Slice(cup, 0), Slice(other, 1), Slice(cap, 2)]


@lru_cache(maxsize=None)
def generator_table(gen: str, n: int, local_in: Signature) -> Table:
    """Sparse local table of a generator on the given input orientations."""
    need = required_input(gen, n)
    if need is not None and tuple(local_in) != need:
        raise InvalidSignature(f"{gen} cannot act on {''.join(local_in)}")
    if gen in CROSSINGS:
        if len(local_in) != 2:
            raise InvalidSignature(f"{gen} acts on two strands")
        if local_in == (UP, UP):
            return _braiding_table(n, inverse=(gen == "xm"))
        sub = SlicedDiagram(n, tuple(_mixed_crossing_slices(gen, *local_in)), tuple(local_in))
        return _table_from_state(_identity_state(local_in, n), sub, n)
    if gen == "capE":
        return {(i, i): (((), _mono(0)),) for i in range(1, n + 1)}
    if gen == "capQ":
        return {(i, i): (((), _mono(n * (2 * i - n - 1))),) for i in range(1, n + 1)}
    if gen == "cupE":
        return {(): tuple(((i, i), _mono(0)) for i in range(1, n + 1))}
    if gen == "cupQ":
        return {(): tuple(((i, i), _mono(n * (n + 1 - 2 * i))) for i in range(1, n + 1))}
    if gen == "vout":
        return _vertex_tables(n)[0]
    if gen == "vin":
        return _vertex_tables(n)[1]
    raise InvalidSignature(f"no tensor for generator {gen!r}")


def _identity_state(sig: Signature, n: int) -> Dict[Index, RawPoly]:
    return {idx + idx: {0: 1} for idx in product(range(1, n + 1), repeat=len(sig))}


def _table_from_state(state, d: SlicedDiagram, n: int) -> Table:
    k = len(d.bottom)
    state = propagate(state, d, offset=k)
    table: Dict[Index, list] = {}
    for key, poly in state.items():
        table.setdefault(key[:k], []).append((key[k:], poly))
    return {a: tuple(v) for a, v in table.items()}


def propagate(state: Dict[Index, RawPoly], d: SlicedDiagram, offset: int = 0) -> Dict[Index, RawPoly]:
    """Push a raw state through every slice of ``d``.

    Keys carry ``offset`` spectator positions on the left (used to remember
    the input index when building operators).
    """
    n = d.n
    for s, sig in zip(d.slices, d.signatures):
        if not state:
            return state
        if s.gen == "x4":
            raise InvalidSignature("singular vertices must be expanded before evaluation")
        k = consumed(s.gen, n)
        local_in = tuple(sig[s.at:s.at + k])
        table = generator_table(s.gen, n, local_in)
        state = kernel.apply_local(state, s.at + offset, k, table)
    return state


# -- public objects ---------------------------------------------------------

class SparseVector:
    """Vector in a tensor product of ``V`` and ``V*`` keyed by basis indices."""

    def __init__(self, signature: Signature, n: int, entries: Mapping[Index, LaurentPoly] | None = None):
        self.signature = tuple(signature)
        self.n = n
        self.entries: Dict[Index, LaurentPoly] = {
            tuple(k): v for k, v in (entries or {}).items() if not v.is_zero()}

    @classmethod
    def _from_raw(cls, signature, n, raw):
        return cls(signature, n, {k: LaurentPoly(v) for k, v in raw.items()})

    def _raw(self):
        return {k: dict(v._terms) for k, v in self.entries.items()}

    def __eq__(self, other):
        if not isinstance(other, SparseVector):
            return NotImplemented
        return self.signature == other.signature and self.entries == other.entries

    def __add__(self, other):
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out.get(k, ZERO) + v
        return SparseVector(self.signature, self.n, out)

    def scale(self, c) -> "SparseVector":
        c = LaurentPoly._coerce(c)
        return SparseVector(self.signature, self.n, {k: c * v for k, v in self.entries.items()})

    def is_zero(self):
        return not self.entries

    def __repr__(self):
        return f"SparseVector({''.join(self.signature)}, {len(self.entries)} entries)"


class SparseOperator:
    """Linear map between tensor products, stored as ``{(in, out): coeff}``."""

    def __init__(self, in_sig: Signature, out_sig: Signature, n: int,
                 entries: Mapping[Tuple[Index, Index], LaurentPoly] | None = None):
        self.in_sig = tuple(in_sig)
        self.out_sig = tuple(out_sig)
        self.n = n
        self.entries: Dict[Tuple[Index, Index], LaurentPoly] = {
            (tuple(a), tuple(b)): v for (a, b), v in (entries or {}).items() if not v.is_zero()}

    @classmethod
    def identity(cls, sig: Signature, n: int) -> "SparseOperator":
        return cls(sig, sig, n, {(i, i): ONE for i in product(range(1, n + 1), repeat=len(sig))})

    @classmethod
    def zero(cls, in_sig, out_sig, n):
        return cls(in_sig, out_sig, n)

    def _rows(self) -> Dict[Index, List[Tuple[Index, LaurentPoly]]]:
        rows: Dict[Index, list] = {}
        for (a, b), v in self.entries.items():
            rows.setdefault(a, []).append((b, v))
        return rows

    def apply(self, vec: SparseVector) -> SparseVector:
        if vec.signature != self.in_sig:
            raise SignatureMismatch("vector does not match operator input")
        rows = self._rows()
        out: Dict[Index, LaurentPoly] = {}
        for a, x in vec.entries.items():
            for b, v in rows.get(a, ()):
                out[b] = out.get(b, ZERO) + x * v
        return SparseVector(self.out_sig, self.n, out)

    def compose(self, first: "SparseOperator") -> "SparseOperator":
        """``self o first``: apply ``first``, then ``self``."""
        if first.out_sig != self.in_sig:
            raise SignatureMismatch("cannot compose: signatures differ")
        rows = self._rows()
        out: Dict[Tuple[Index, Index], LaurentPoly] = {}
        for (a, b), v in first.entries.items():
            for c, w in rows.get(b, ()):
                out[(a, c)] = out.get((a, c), ZERO) + v * w
        return SparseOperator(first.in_sig, self.out_sig, self.n, out)

    __matmul__ = compose

    def __add__(self, other: "SparseOperator") -> "SparseOperator":
        if (self.in_sig, self.out_sig) != (other.in_sig, other.out_sig):
            raise SignatureMismatch("cannot add operators with different signatures")
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out.get(k, ZERO) + v
        return SparseOperator(self.in_sig, self.out_sig, self.n, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "SparseOperator":
        c = LaurentPoly._coerce(c)
        return SparseOperator(self.in_sig, self.out_sig, self.n,
                              {k: c * v for k, v in self.entries.items()})

    def is_zero(self):
        return not self.entries

    def __eq__(self, other):
        if not isinstance(other, SparseOperator):
            return NotImplemented
        return ((self.in_sig, self.out_sig, self.n) == (other.in_sig, other.out_sig, other.n)
                and self.entries == other.entries)

    def __repr__(self):
        return (f"SparseOperator({''.join(self.in_sig)} -> {''.join(self.out_sig)}, "
                f"{len(self.entries)} entries)")


def generator_tensor(gen: str, n: int, local_sig: Signature) -> SparseOperator:
    local_sig = tuple(local_sig)
    table = generator_table(gen, n, local_sig)
    out_sig = local_output(gen, local_sig, n)
    entries = {}
    for a, imgs in table.items():
        for b, poly in imgs:
            entries[(a, b)] = LaurentPoly(poly)
    return SparseOperator(local_sig, out_sig, n, entries)


def evaluate(d: SlicedDiagram) -> LaurentPoly:
    """The bracket of a closed diagram, as a Laurent polynomial in ``t``."""
    if not d.is_closed():
        raise OpenDiagram("evaluate needs a closed diagram; use operator_of_tangle")
    state = propagate({(): {0: 1}}, d)
    return LaurentPoly(state.get((), {}))


def operator_of_tangle(d: SlicedDiagram) -> SparseOperator:
    k = len(d.bottom)
    state = propagate(_identity_state(d.bottom, d.n), d, offset=k)
    entries = {(key[:k], key[k:]): LaurentPoly(p) for key, p in state.items()}
    return SparseOperator(d.bottom, d.top, d.n, entries)


def tangle(n: int, slices: Iterable[Slice], bottom: Signature) -> SparseOperator:
    return operator_of_tangle(SlicedDiagram(n, tuple(slices), tuple(bottom)))


def braid_operator(word: Sequence[int], k: int, n: int, gen: str = "xp") -> SparseOperator:
    return tangle(n, braid_slices(word, 0, gen), (UP,) * k)


# -- vectors attached to vertices -------------------------------------------

def t_plus(n: int) -> SparseVector:
    d = SlicedDiagram(n, (Slice("vout", 0),))
    state = propagate({(): {0: 1}}, d)
    return SparseVector._from_raw((UP,) * n, n, state)


def t_minus(n: int, vec: SparseVector) -> LaurentPoly:
    """The sink functional applied to a vector of ``V^(x)n``."""
    table = generator_table("vin", n, (UP,) * n)
    out = ZERO
    for idx, c in vec.entries.items():
        for _, w in table.get(idx, ()):
            out = out + c * LaurentPoly(w)
    return out


# -- U_q(sl_n) on V^(x)k ------------------------------------------------------

def _k_diag(n: int, i: int, inverse: bool = False) -> Dict[int, RawPoly]:
    s = -1 if inverse else 1
    diag = {j: {0: 1} for j in range(1, n + 1)}
    diag[i] = {-s * n: 1}
    diag[i + 1] = {s * n: 1}
    return diag


def uq_generator_action(which: str, i: int, k: int, n: int) -> SparseOperator:
    """Matrix of the iterated coproduct of ``K_i``, ``E_i`` or ``F_i`` on ``V^(x)k``.

    ``rho(K_i) = q^-1 E_ii + q E_(i+1,i+1) + ...``, ``rho(E_i) = E_(i+1,i)``,
    ``rho(F_i) = E_(i,i+1)``; ``Delta(E) = sum 1..1 E K..K`` and
    ``Delta(F) = sum K^-1..K^-1 F 1..1``.
    """
    if not 1 <= i <= n - 1:
        raise OutOfRange(f"generator index {i} outside 1..{n - 1}")
    if which not in ("K", "E", "F"):
        raise ValueError(f"unknown generator {which!r}")
    sig = (UP,) * k
    kd = _k_diag(n, i)
    kinv = _k_diag(n, i, inverse=True)
    entries: Dict[Tuple[Index, Index], LaurentPoly] = {}
    for idx in product(range(1, n + 1), repeat=k):
        if which == "K":
            e = sum(next(iter(kd[x])) for x in idx)
            entries[(idx, idx)] = LaurentPoly.monomial(e)
            continue
        src, dst = (i, i + 1) if which == "E" else (i + 1, i)
        for j, x in enumerate(idx):
            if x != src:
                continue
            new = idx[:j] + (dst,) + idx[j + 1:]
            if which == "E":
                e = sum(next(iter(kd[y])) for y in idx[j + 1:])
            else:
                e = sum(next(iter(kinv[y])) for y in idx[:j])
            key = (idx, new)
            entries[key] = entries.get(key, ZERO) + LaurentPoly.monomial(e)
    return SparseOperator(sig, sig, n, entries)


# -- Hecke algebra action ---------------------------------------------------

def hecke_action(x, n: Optional[int] = None) -> SparseOperator:
    """Operator of a Hecke element on ``V^(x)k``: ``h_sigma`` acts by the braid of sigma."""
    n = x.n if n is None else n
    sig = (UP,) * x.k
    total = SparseOperator.zero(sig, sig, n)
    for sigma, c in x.coeffs.items():
        op = braid_operator(combinat.reduced_word(sigma), x.k, n)
        total = total + op.scale(c)
    return total


def lambda_operator(k: int, n: int) -> SparseOperator:
    """Operator of the antisymmetrizing skein on ``k`` up-strands."""
    from .hecke import lambda_skein

    sig = (UP,) * k
    total = SparseOperator.zero(sig, sig, n)
    for word, c in lambda_skein(k, n):
        total = total + braid_operator(word, k, n).scale(c)
    return total
