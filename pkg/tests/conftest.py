import random
from fractions import Fraction

import pytest

from sullivan.core import Polynomial
from sullivan.graphs import asymmetric_graph_6, complete_graph, path_graph
from sullivan.models import build_mk, build_mng


@pytest.fixture(scope="session")
def m6():
    return build_mk(6)


@pytest.fixture(scope="session")
def m8():
    return build_mk(8)


@pytest.fixture(scope="session")
def mng_p3():
    return build_mng(1, path_graph(3))


@pytest.fixture(scope="session")
def mng_k3():
    return build_mng(1, complete_graph(3))


@pytest.fixture(scope="session")
def mng_asym6():
    return build_mng(1, asymmetric_graph_6())


def random_polynomial(algebra, rng, max_terms=3, max_exp=2, degree_cap=None):
    """Small random element: a few random bounded monomials with random
    nonzero rational coefficients."""
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        mono = [0] * len(algebra.generators)
        for i, g in enumerate(algebra.generators):
            if degree_cap is not None and g.degree > degree_cap:
                continue
            if rng.random() < 0.4:
                mono[i] = rng.randint(1, 1 if g.is_odd else max_exp)
        coeff = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        if coeff:
            key = tuple(mono)
            terms[key] = terms.get(key, Fraction(0)) + coeff
    return Polynomial(algebra, terms)


def random_homogeneous(algebra, rng, degree, max_terms=3):
    basis = algebra.basis_of_degree(degree)
    if not basis:
        return algebra.zero()
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        mono = rng.choice(basis)
        terms[mono] = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
    return Polynomial(algebra, terms)


@pytest.fixture()
def rng():
    return random.Random(20260810)
