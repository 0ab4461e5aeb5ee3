import json

import pytest

from snweb.combinat import quantum_factorial, quantum_int
from snweb.errors import FlowViolation, WebSyntaxError
from snweb.moy import (bracket_in_v, enumerate_moy_states, eta, eta_over_states, expand_W,
                       moy_annulus, moy_bracket, moy_corpus, moy_square, moy_state_sum,
                       moy_theta, parse_moy, render_moy, substitution_check)
from snweb.poly import divide_exact


def gaussian(n, k):
    return divide_exact(quantum_factorial(n), quantum_factorial(k) * quantum_factorial(n - k))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_theta_state_count(n):
    assert len(list(enumerate_moy_states(moy_theta(n, 1, 1)))) == n * (n - 1)


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("k", [1, 2])
def test_annulus_state_sum_is_gaussian_binomial(n, k):
    if k > n:
        return
    assert moy_state_sum(moy_annulus(n, k)) == gaussian(n, k).substitute_power(4 * n)


@pytest.mark.parametrize("n", [2, 3])
def test_annulus_expansion_is_parallel_circles(n):
    # a k-labelled annulus expands to k parallel circles: [n]^k, not the binomial
    assert moy_bracket(moy_annulus(n, 2)) == quantum_int(n).substitute_power(n) ** 2


@pytest.mark.parametrize("n", [2, 3, 4])
def test_state_sum_on_graphs_with_edges(n):
    for name, g in moy_corpus(n):
        if name.startswith("annulus") and name not in ("annulus1", "annulus1-cw"):
            continue
        assert bracket_in_v(g) == moy_state_sum(g), name
        assert substitution_check(g).ok, name


@pytest.mark.parametrize("n", [2, 3, 4])
def test_eta_constant_over_states(n):
    for _, g in moy_corpus(n):
        assert eta_over_states(g) == {eta(g)}


def test_roundtrip():
    g = moy_square(3)
    assert parse_moy(render_moy(g)) == g


def test_flow_violation():
    text = json.dumps({"n": 3, "slices": [
        {"gen": "mcup", "at": 0, "labels": [2], "kind": "E"},
        {"gen": "split", "at": 0, "labels": [1, 2]}]})
    with pytest.raises((FlowViolation, WebSyntaxError)):
        parse_moy(text)


def test_expansion_is_a_web():
    d = expand_W(moy_theta(3, 1, 2))
    assert d.is_closed() and not d.has_crossings()
