"""Exact Laurent polynomials in one variable and their fractions.

Every invariant in the package is a :class:`LaurentPoly` in ``t``, where
``q = t**n`` for the rank ``n`` of the diagram at hand.  Coefficients are
Python ints, so nothing ever overflows or rounds.
"""

from __future__ import annotations

from typing import Dict, Iterable, Mapping, Tuple

from .errors import DivisionByZero, NotDivisible


def _clean(terms: Mapping[int, int]) -> Dict[int, int]:
    return {e: c for e, c in terms.items() if c}


class LaurentPoly:
    """An element of ``Z[t, 1/t]`` stored as ``{exponent: coefficient}``.

    Instances are immutable and hashable; zero coefficients are never stored,
    so two equal polynomials always have identical term maps.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        self._terms = _clean(terms) if terms else {}
        self._hash = None

    @classmethod
    def _wrap(cls, terms: Dict[int, int]) -> "LaurentPoly":
        # trusted constructor: caller guarantees no zero coefficients
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def from_coeffs(cls, low: int, coeffs: Iterable[int]) -> "LaurentPoly":
        """Build from a dense coefficient list starting at exponent ``low``."""
        return cls({low + i: c for i, c in enumerate(coeffs)})

    # -- inspection -----------------------------------------------------
    @property
    def terms(self) -> Dict[int, int]:
        return dict(self._terms)

    def items(self) -> Iterable[Tuple[int, int]]:
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def coeff(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def min_exp(self) -> int:
        return min(self._terms)

    def max_exp(self) -> int:
        return max(self._terms)

    def exponents(self):
        return sorted(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    # -- ring structure -------------------------------------------------
    @staticmethod
    def _coerce(other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._wrap({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out: Dict[int, int] = {}
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = ea + eb
                out[e] = out.get(e, 0) + ca * cb
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_monomial():
                raise NotDivisible("only monomials have Laurent inverses")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise NotDivisible("monomial coefficient is not a unit")
            return LaurentPoly({e * k: c ** (-k)})
        result = LaurentPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``t**k``."""
        return LaurentPoly._wrap({e + k: c for e, c in self._terms.items()})

    def divmod_exact(self, other: "LaurentPoly") -> "LaurentPoly":
        return divide_exact(self, other)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- transformations ------------------------------------------------
    def substitute_power(self, a: int) -> "LaurentPoly":
        """Image under ``t -> t**a``."""
        if a == 0:
            return LaurentPoly.const(sum(self._terms.values()))
        return LaurentPoly._wrap({e * a: c for e, c in self._terms.items()})

    def negate_variable(self) -> "LaurentPoly":
        """Image under ``t -> -t``."""
        return LaurentPoly._wrap(
            {e: (-c if e % 2 else c) for e, c in self._terms.items()})

    def rescale(self, k: int) -> "LaurentPoly":
        """Divide every exponent by ``k``; they must all be divisible."""
        if any(e % k for e in self._terms):
            raise NotDivisible(f"exponents not all divisible by {k}")
        return LaurentPoly._wrap({e // k: c for e, c in self._terms.items()})

    def mod(self, m: int) -> "LaurentPoly":
        """Coefficient-wise reduction into ``{0, ..., m-1}``."""
        return LaurentPoly({e: c % m for e, c in self._terms.items()})

    def evaluate(self, x):
        return sum(c * x ** e for e, c in self._terms.items())

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self._terms.values())

    # -- text -----------------------------------------------------------
    def render(self, var: str = "t", scale: int = 1,
               descending: bool = False) -> str:
        """Canonical text, ascending exponents by default.

        ``scale`` names the variable ``var = t**scale``; every exponent must
        then be divisible by ``scale``.
        """
        if not self._terms:
            return "0"
        p = self.rescale(scale) if scale != 1 else self
        items = sorted(p._terms.items(), reverse=descending)
        parts = []
        for i, (e, c) in enumerate(items):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                mono = var if e == 1 else f"{var}^{e}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            if i == 0:
                parts.append(("-" if sign == "-" else "") + body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"LaurentPoly({self.render()!r})"


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
T = LaurentPoly.monomial(1)


def t_power(k: int, coeff: int = 1) -> LaurentPoly:
    return LaurentPoly.monomial(k, coeff)


def poly_arith(a: LaurentPoly, b: LaurentPoly, op: str) -> LaurentPoly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def divide_exact(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Return ``c`` with ``c * b == a`` or raise :class:`NotDivisible`."""
    if b.is_zero():
        raise DivisionByZero("division by the zero polynomial")
    if a.is_zero():
        return ZERO
    bt = b._terms
    if len(bt) == 1:
        (eb, cb), = bt.items()
        out = {}
        for e, c in a._terms.items():
            qc, r = divmod(c, cb)
            if r:
                raise NotDivisible(f"{a} is not divisible by {b}")
            out[e - eb] = qc
        return LaurentPoly._wrap(out)
    b_top = max(bt)
    b_lead = bt[b_top]
    b_low = min(bt)
    rem = dict(a._terms)
    out: Dict[int, int] = {}
    a_low = min(rem)
    while rem:
        top = max(rem)
        if top - b_top < a_low - b_low:
            raise NotDivisible(f"{a} is not divisible by {b}")
        qc, r = divmod(rem[top], b_lead)
        if r:
            raise NotDivisible(f"{a} is not divisible by {b}")
        shift = top - b_top
        out[shift] = qc
        for e, c in bt.items():
            k = e + shift
            v = rem.get(k, 0) - qc * c
            if v:
                rem[k] = v
            else:
                rem.pop(k, None)
    return LaurentPoly(out)


def poly_divide_exact(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return divide_exact(a, b)


def poly_substitute(p: LaurentPoly, rule) -> LaurentPoly:
    """Apply ``t -> t**a`` (``rule`` an int) or ``t -> -t`` (``rule == '-t'``)."""
    if rule == "-t":
        return p.negate_variable()
    if isinstance(rule, int):
        return p.substitute_power(rule)
    raise ValueError(f"unsupported substitution {rule!r}")


class RationalFunc:
    """A fraction ``num / den`` of Laurent polynomials, ``den`` nonzero.

    Kept unreduced; :meth:`to_poly` performs the exact division that must
    succeed for every externally visible value.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = LaurentPoly._coerce(num)
        den = ONE if den is None else LaurentPoly._coerce(den)
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        if den.is_monomial():
            # keep monomial denominators absorbed; they are units up to sign
            (e, c), = den._terms.items()
            if c in (1, -1):
                num = num.shift(-e) * c
                den = ONE
        self.num = num
        self.den = den

    @staticmethod
    def _lift(x) -> "RationalFunc":
        if isinstance(x, RationalFunc):
            return x
        return RationalFunc(x)

    def is_zero(self):
        return self.num.is_zero()

    def __add__(self, other):
        other = self._lift(other)
        if self.den == other.den:
            return RationalFunc(self.num + other.num, self.den)
        return RationalFunc(self.num * other.den + other.num * self.den,
                            self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunc(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        return RationalFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other.num.is_zero():
            raise DivisionByZero("division by zero rational function")
        return RationalFunc(self.num * other.den, self.den * other.num)

    def __eq__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            other = RationalFunc(other)
        if not isinstance(other, RationalFunc):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        try:
            return hash(self.to_poly())
        except NotDivisible:
            return hash((self.num, self.den))

    def to_poly(self) -> LaurentPoly:
        return divide_exact(self.num, self.den)

    def is_poly(self) -> bool:
        try:
            self.to_poly()
        except NotDivisible:
            return False
        return True

    def __repr__(self):
        if self.den == ONE:
            return f"RationalFunc({self.num.render()!r})"
        return f"RationalFunc(({self.num.render()}) / ({self.den.render()}))"
