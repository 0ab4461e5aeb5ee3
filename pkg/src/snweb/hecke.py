"""The Hecke algebra ``H_k`` on the basis ``h_sigma``, with ``q = t**n``.

The defining relations used for multiplication are

* ``h_sigma h_tau = h_{sigma tau}`` whenever lengths add, and
* ``(h_s - t^(n-1)) (h_s + t^(-n-1)) = 0`` for every simple transposition.

so ``h_s`` obeys the same quadratic equation as the braiding on ``V (x) V``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, List, Mapping, Tuple

from . import combinat
from .combinat import Perm
from .errors import MismatchedAlgebra
from .poly import ONE, ZERO, LaurentPoly, t_power


class HeckeElement:
    """A ``LaurentPoly``-linear combination of basis vectors ``h_sigma``."""

    __slots__ = ("k", "n", "coeffs")

    def __init__(self, k: int, n: int, coeffs: Mapping[Perm, LaurentPoly] | None = None):
        self.k = k
        self.n = n
        self.coeffs: Dict[Perm, LaurentPoly] = {}
        for perm, c in (coeffs or {}).items():
            perm = tuple(perm)
            if len(perm) != k:
                raise MismatchedAlgebra(f"{perm} is not in S_{k}")
            if not c.is_zero():
                self.coeffs[perm] = c

    @classmethod
    def basis(cls, sigma, n: int) -> "HeckeElement":
        sigma = combinat.check_perm(sigma)
        return cls(len(sigma), n, {sigma: ONE})

    @classmethod
    def one(cls, k: int, n: int) -> "HeckeElement":
        return cls.basis(combinat.identity(k), n)

    @classmethod
    def generator(cls, k: int, n: int, i: int) -> "HeckeElement":
        """``g_i = t * h_(i,i+1)``, the generator with eigenvalues ``t^n, -t^-n``."""
        return cls(k, n, {combinat.simple(k, i): t_power(1)})

    def _check(self, other: "HeckeElement"):
        if not isinstance(other, HeckeElement):
            raise MismatchedAlgebra("can only combine Hecke elements")
        if (self.k, self.n) != (other.k, other.n):
            raise MismatchedAlgebra(
                f"H_{self.k}(n={self.n}) vs H_{other.k}(n={other.n})")

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for p, c in other.coeffs.items():
            out[p] = out.get(p, ZERO) + c
        return HeckeElement(self.k, self.n, out)

    def __neg__(self):
        return HeckeElement(self.k, self.n, {p: -c for p, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "HeckeElement":
        c = LaurentPoly._coerce(c)
        return HeckeElement(self.k, self.n, {p: c * v for p, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return hecke_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return (self.k, self.n) == (other.k, other.n) and self.coeffs == other.coeffs

    def is_zero(self):
        return not self.coeffs

    def __repr__(self):
        body = " + ".join(f"({c.render()})*h{p}" for p, c in sorted(self.coeffs.items()))
        return f"HeckeElement(k={self.k}, n={self.n}: {body or '0'})"


@lru_cache(maxsize=None)
def _quadratic_coeff(n: int) -> LaurentPoly:
    return t_power(n - 1) - t_power(-n - 1)


def _times_simple(terms: Dict[Perm, LaurentPoly], i: int, n: int) -> Dict[Perm, LaurentPoly]:
    """Right multiplication of a basis expansion by ``h_(i,i+1)``."""
    out: Dict[Perm, LaurentPoly] = {}
    a = _quadratic_coeff(n)
    for sigma, c in terms.items():
        swapped = list(sigma)
        swapped[i - 1], swapped[i] = swapped[i], swapped[i - 1]
        swapped = tuple(swapped)
        if sigma[i - 1] < sigma[i]:
            out[swapped] = out.get(swapped, ZERO) + c
        else:
            out[sigma] = out.get(sigma, ZERO) + a * c
            out[swapped] = out.get(swapped, ZERO) + c.shift(-2)
    return out


def hecke_mul(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    a._check(b)
    total: Dict[Perm, LaurentPoly] = {}
    for tau, cb in b.coeffs.items():
        cur = dict(a.coeffs)
        for i in combinat.reduced_word(tau):
            cur = _times_simple(cur, i, a.n)
        for p, c in cur.items():
            total[p] = total.get(p, ZERO) + c * cb
    return HeckeElement(a.k, a.n, total)


def e_element(k: int, n: int, sign: str) -> HeckeElement:
    """The Hecke (anti)symmetrizers.

    ``e_+ = sum q^((n+1)/n l) h_sigma`` and
    ``e_- = sum (-q^((1-n)/n))^l h_sigma``, written in ``t``.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    coeffs = {}
    for sigma in combinat.all_perms(k):
        ell = combinat.length(sigma)
        if sign == "+":
            coeffs[sigma] = t_power((n + 1) * ell)
        else:
            coeffs[sigma] = t_power((1 - n) * ell, (-1) ** ell)
    return HeckeElement(k, n, coeffs)


def poincare_weight(k: int, n: int, sign: str) -> LaurentPoly:
    """``P_+ = sum q^(2 l)``, ``P_- = sum q^(-2 l)`` over ``S_k``, in ``t``."""
    s = 1 if sign == "+" else -1
    out = ZERO
    for sigma in combinat.all_perms(k):
        out = out + t_power(s * 2 * n * combinat.length(sigma))
    return out


def lambda_skein(k: int, n: int) -> List[Tuple[List[int], LaurentPoly]]:
    """The antisymmetrizing skein as ``(reduced word, coefficient in t)`` pairs."""
    if k < 1:
        raise ValueError("k must be at least 1")
    out = []
    for sigma in combinat.all_perms(k):
        ell = combinat.length(sigma)
        out.append((combinat.reduced_word(sigma), t_power((1 - n) * ell, (-1) ** ell)))
    return out
