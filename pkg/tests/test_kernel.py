import random

import pytest

from snweb import kernel
from snweb.random_diagrams import random_link
from snweb.tensor import evaluate

BACKENDS = kernel.backends()


def random_state(rng, width, n):
    return {tuple(rng.randint(1, n) for _ in range(width)):
            {rng.randint(-4, 4): rng.randint(-3, 3) for _ in range(2)} for _ in range(6)}


def random_table(rng, arity, n):
    table = {}
    for _ in range(5):
        key = tuple(rng.randint(1, n) for _ in range(arity))
        table[key] = tuple((tuple(rng.randint(1, n) for _ in range(arity)),
                            {rng.randint(-2, 2): rng.randint(-2, 2)}) for _ in range(2))
    return table


@pytest.mark.skipif("cython" not in BACKENDS, reason="compiled kernel not built")
@pytest.mark.parametrize("seed", range(20))
def test_backends_agree_on_apply_local(seed):
    rng = random.Random(seed)
    state = random_state(rng, 4, 3)
    table = random_table(rng, 2, 3)
    pos = rng.randint(0, 2)
    a = BACKENDS["python"].apply_local(state, pos, 2, table)
    b = BACKENDS["cython"].apply_local(state, pos, 2, table)
    assert a == b


@pytest.mark.skipif("cython" not in BACKENDS, reason="compiled kernel not built")
def test_backends_agree_on_evaluation(monkeypatch):
    rng = random.Random(3)
    links = [random_link(rng, 3, 5) for _ in range(5)]
    values = {}
    for name, impl in BACKENDS.items():
        monkeypatch.setattr(kernel, "apply_local", impl.apply_local)
        values[name] = [evaluate(d) for d in links]
    assert values["python"] == values["cython"]


def test_prune_drops_zeros():
    assert BACKENDS["python"].prune({(1,): {0: 0}, (2,): {1: 2, 3: 0}}) == {(2,): {1: 2}}


def test_backend_name():
    assert kernel.BACKEND in BACKENDS
