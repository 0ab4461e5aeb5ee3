import itertools
import math

import pytest

from snweb.combinat import quantum_factorial, quantum_int
from snweb.diagram import (DOWN, UP, Slice, SlicedDiagram, braid_closure, closed,
                           kinked_unknot, theta, unknot)
from snweb.errors import OpenDiagram
from snweb.poly import LaurentPoly, t_power
from snweb.tensor import (SparseOperator, braid_operator, evaluate, t_minus, t_plus, tangle)


def qn(m, n):
    return quantum_int(m).substitute_power(n)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
@pytest.mark.parametrize("ccw", [True, False])
def test_unknot_is_quantum_n(n, ccw):
    assert evaluate(unknot(n, ccw)) == qn(n, n)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_theta(n):
    expect = quantum_factorial(n).substitute_power(n).shift(n * n * (n - 1) // 2)
    assert evaluate(theta(n)) == expect


@pytest.mark.parametrize("n", [2, 3, 4])
def test_hopf_from_skein_by_hand(n):
    # closures of s^0 and s^1 on two strands are two circles and a curl
    q = t_power(n)
    zero = qn(n, n) * qn(n, n)
    one = qn(n, n).shift(n * n - 1)
    hopf = (zero.shift(-1) + (q - t_power(-n)) * one).shift(-1)
    assert evaluate(braid_closure(n, [1, 1], strands=2)) == hopf


@pytest.mark.parametrize("n", [2, 3])
def test_quadratic_relation(n):
    r = braid_operator([1], 2, n)
    one = SparseOperator.identity((UP, UP), n)
    prod = (r - one.scale(t_power(n - 1))).compose(r + one.scale(t_power(-n - 1)))
    assert prod == SparseOperator.zero((UP, UP), (UP, UP), n)


@pytest.mark.parametrize("n", [2, 3])
def test_yang_baxter(n):
    assert braid_operator([1, 2, 1], 3, n) == braid_operator([2, 1, 2], 3, n)


@pytest.mark.parametrize("sig", list(itertools.product((UP, DOWN), repeat=2)))
def test_crossing_inverse(sig):
    a = tangle(3, [Slice("xp", 0), Slice("xm", 0)], sig)
    assert a == SparseOperator.identity(sig, 3)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_kink(n):
    assert evaluate(kinked_unknot(n)) == qn(n, n).shift(n * n - 1)
    assert evaluate(kinked_unknot(n, "xm", "left")) == qn(n, n).shift(1 - n * n)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_t_plus_shape(n):
    tp = t_plus(n)
    assert len(tp.entries) == math.factorial(n)
    # pairing with T_- is the theta web
    assert t_minus(n, tp) == evaluate(theta(n))


def test_evaluate_needs_closed():
    with pytest.raises(OpenDiagram):
        evaluate(SlicedDiagram(2, (Slice("cupE", 0),)))


def test_empty_is_one():
    assert evaluate(closed(4, [])) == LaurentPoly.const(1)
