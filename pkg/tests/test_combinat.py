import itertools
import math

import pytest
from hypothesis import given, strategies as st

from snweb import combinat
from snweb.errors import NegativeArgument, OutOfRange

perms = st.integers(1, 6).flatmap(lambda k: st.permutations(range(1, k + 1)).map(tuple))


def inversions(sigma):
    return sum(1 for i, j in itertools.combinations(range(len(sigma)), 2) if sigma[i] > sigma[j])


@given(perms)
def test_length_counts_inversions(sigma):
    assert combinat.length(sigma) == inversions(sigma)


@given(perms)
def test_reduced_word(sigma):
    word = combinat.reduced_word(sigma)
    assert len(word) == inversions(sigma)
    assert combinat.word_to_perm(word, len(sigma)) == sigma


@given(perms)
def test_compose_inverse(a):
    assert combinat.compose(a, combinat.inverse(a)) == combinat.identity(len(a))


@pytest.mark.parametrize("m", range(0, 8))
def test_quantum_numbers_at_one(m):
    assert combinat.quantum_int(m).evaluate(1) == m
    assert combinat.quantum_factorial(m).evaluate(1) == math.factorial(m)


def test_quantum_int_values():
    assert combinat.quantum_int(3).render() == "t^-2 + 1 + t^2"
    assert combinat.quantum_int(0).is_zero()
    with pytest.raises(NegativeArgument):
        combinat.quantum_int(-1)


def test_pi_count():
    assert combinat.pi_count({3, 1}, {2}) == 1
    assert combinat.pi_count({1}, {2, 3}) == 0
    assert combinat.pi_count({4, 5}, {1, 2}) == 4


def test_tau():
    assert combinat.tau(4, 1) == (4, 1, 2, 3)
    assert combinat.tau(3, 0) == (1, 2, 3)
    with pytest.raises(OutOfRange):
        combinat.tau(3, 4)


def test_all_perms_count():
    assert len(combinat.all_perms(4)) == 24
