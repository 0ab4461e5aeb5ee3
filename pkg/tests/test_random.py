import random

import pytest

from snweb.diagram import CROSSINGS, render_web, writhe
from snweb.random_diagrams import (apply_r3, insert_r1, insert_r2, planar_isotopy,
                                   random_braid_closure, random_link, random_web)
from snweb.statesum import state_sum
from snweb.tensor import evaluate


def test_seeded_generation_is_deterministic():
    a = random_link(random.Random(5), 3, 6)
    b = random_link(random.Random(5), 3, 6)
    assert render_web(a) == render_web(b)


@pytest.mark.parametrize("k", [0, 1, 4, 8])
def test_link_has_requested_crossings(k):
    d = random_link(random.Random(k), 2, k)
    assert d.is_closed()
    assert sum(1 for s in d.slices if s.gen in CROSSINGS) == k


@pytest.mark.parametrize("seed", range(5))
def test_planar_webs(seed):
    d = random_web(random.Random(seed), 3, 10)
    assert d.is_closed() and not d.has_crossings()


def test_braid_closure_is_closed():
    assert random_braid_closure(random.Random(1), 3).is_closed()


@pytest.mark.parametrize("seed", range(8))
def test_moves(seed):
    rng = random.Random(seed)
    n = 2 + seed % 3
    d = random_link(rng, n, 3)
    assert evaluate(insert_r2(rng, d)) == evaluate(d)
    a, b = apply_r3(rng, d) or (d, d)
    assert evaluate(a) == evaluate(b)
    new, sign = insert_r1(rng, d)
    assert writhe(new) - writhe(d) == sign
    assert evaluate(new) == evaluate(d).shift(sign * (n * n - 1))


@pytest.mark.parametrize("seed", range(5))
def test_planar_isotopy_keeps_value(seed):
    rng = random.Random(seed)
    d = random_web(rng, 3, 10)
    assert state_sum(planar_isotopy(rng, d)) == state_sum(d)
