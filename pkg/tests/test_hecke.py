import pytest

from snweb import combinat, hecke
from snweb.hecke import HeckeElement
from snweb.poly import LaurentPoly, t_power
from snweb.tensor import braid_operator, hecke_action


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("k", [2, 3, 4])
def test_quadratic_and_braid(n, k):
    one = HeckeElement.one(k, n)
    gens = [HeckeElement.generator(k, n, i) for i in range(1, k)]
    for g in gens:
        assert ((g - one.scale(t_power(n))) * (g + one.scale(t_power(-n)))).is_zero()
    for a, b in zip(gens, gens[1:]):
        assert a * b * a == b * a * b


def test_basis_multiplication_on_reduced_products():
    # h_s1 h_s2 = h_(s1 s2) when lengths add
    k, n = 3, 2
    a = HeckeElement.basis(combinat.simple(k, 1), n)
    b = HeckeElement.basis(combinat.simple(k, 2), n)
    prod = combinat.compose(combinat.simple(k, 1), combinat.simple(k, 2))
    assert a * b == HeckeElement.basis(prod, n)


@pytest.mark.parametrize("sign", ["+", "-"])
def test_idempotent_up_to_poincare(sign):
    e = hecke.e_element(3, 2, sign)
    assert e * e == e.scale(hecke.poincare_weight(3, 2, sign))


def test_poincare_weight_at_one():
    assert hecke.poincare_weight(4, 3, "+").evaluate(1) == 24


def test_mismatched_algebras():
    with pytest.raises(Exception):
        HeckeElement.one(2, 2) + HeckeElement.one(3, 2)


@pytest.mark.parametrize("n", [2, 3])
def test_action_is_braid_operator(n):
    for sigma in combinat.all_perms(3):
        assert braid_operator(combinat.reduced_word(sigma), 3, n) == \
            hecke_action(HeckeElement.basis(sigma, n))


def test_lambda_skein_signs():
    terms = hecke.lambda_skein(3, 2)
    assert len(terms) == 6
    assert sum(c.evaluate(1) for _, c in terms) == 0
    assert LaurentPoly.const(1) in [c for w, c in terms if not w]
