"""Permutations, quantum integers and the small counting lemmas built on them.

Permutations are 1-indexed image tuples: ``(3, 1, 2)`` sends 1->3, 2->1,
3->2.  Products compose right to left, ``(a * b)(x) = a(b(x))``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations as _iter_perms
from typing import Iterable, List, Sequence, Tuple

from .errors import NegativeArgument, OutOfRange, ValidationError
from .poly import LaurentPoly

Perm = Tuple[int, ...]


def check_perm(images: Sequence[int]) -> Perm:
    images = tuple(images)
    if sorted(images) != list(range(1, len(images) + 1)):
        raise ValidationError(f"{images} is not a permutation of 1..{len(images)}")
    return images


def identity(k: int) -> Perm:
    return tuple(range(1, k + 1))


def compose(a: Perm, b: Perm) -> Perm:
    """``a * b``, i.e. apply ``b`` first."""
    return tuple(a[x - 1] for x in b)


def inverse(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, x in enumerate(a, 1):
        out[x - 1] = i
    return tuple(out)


def transposition(k: int, i: int, j: int) -> Perm:
    imgs = list(range(1, k + 1))
    imgs[i - 1], imgs[j - 1] = imgs[j - 1], imgs[i - 1]
    return tuple(imgs)


def simple(k: int, i: int) -> Perm:
    """The elementary transposition ``s_i = (i, i+1)`` in ``S_k``."""
    return transposition(k, i, i + 1)


def all_perms(k: int) -> List[Perm]:
    return [tuple(p) for p in _iter_perms(range(1, k + 1))]


def length(sigma: Sequence[int]) -> int:
    """Number of inversions, equal to the minimal word length in the ``s_i``."""
    s = tuple(sigma)
    k = len(s)
    return sum(1 for i in range(k) for j in range(i + 1, k) if s[i] > s[j])


def sequence_length(seq: Sequence[int]) -> int:
    """Inversions of a repetition-free sequence (length of its sorting perm)."""
    return length(seq)


def reduced_word(sigma: Sequence[int]) -> List[int]:
    """Canonical reduced word ``[i1, ..., im]`` with ``sigma = s_i1 ... s_im``.

    Bubble sort on the image list, always pushing the largest displaced value
    rightwards; recording the swaps ``j1, j2, ...`` gives
    ``sigma s_j1 s_j2 ... = id`` and hence the word is the reversed record.
    """
    imgs = list(sigma)
    record = []
    for value in range(len(imgs), 0, -1):
        pos = imgs.index(value)
        while pos < value - 1:
            imgs[pos], imgs[pos + 1] = imgs[pos + 1], imgs[pos]
            record.append(pos + 1)
            pos += 1
    return record[::-1]


def word_to_perm(word: Iterable[int], k: int) -> Perm:
    p = identity(k)
    for i in word:
        p = compose(p, simple(k, i))
    return p


@lru_cache(maxsize=None)
def quantum_int(m: int) -> LaurentPoly:
    """``[m] = (q^m - q^-m) / (q - q^-1)`` as a Laurent polynomial in ``q``."""
    if m < 0:
        raise NegativeArgument(f"[m] requested for m={m}")
    return LaurentPoly({e: 1 for e in range(1 - m, m, 2)})


@lru_cache(maxsize=None)
def quantum_factorial(m: int) -> LaurentPoly:
    if m < 0:
        raise NegativeArgument(f"[m]! requested for m={m}")
    out = LaurentPoly.const(1)
    for i in range(1, m + 1):
        out = out * quantum_int(i)
    return out


def pi_count(s1: Iterable[int], s2: Iterable[int]) -> int:
    """#{(a, b) in s1 x s2 : a > b}."""
    s2 = list(s2)
    return sum(1 for a in s1 for b in s2 if a > b)


def tau(n: int, k: int) -> Perm:
    """Block rotation sending ``1..k`` to ``n-k+1..n`` and the rest down by ``k``."""
    if not 0 <= k <= n:
        raise OutOfRange(f"tau({n}, {k}) needs 0 <= k <= n")
    return tuple(n - k + i for i in range(1, k + 1)) + tuple(range(1, n - k + 1))
