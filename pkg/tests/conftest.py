import random

import pytest

from edgeschur.poly import MultiPoly, av, xv, yv


@pytest.fixture
def X():
    return lambda i: MultiPoly.var(xv(i))


@pytest.fixture
def Y():
    return lambda j: MultiPoly.var(yv(j))


@pytest.fixture
def A():
    return lambda d: MultiPoly.var(av(d))


@pytest.fixture
def one():
    return MultiPoly.one()


def random_poly(rng: random.Random, nvars: int = 3, max_deg: int = 3,
                nterms: int = 4, coeff: int = 5) -> MultiPoly:
    vars_ = ([xv(i) for i in range(1, nvars + 1)]
             + [av(d) for d in range(-1, 2)])
    out = MultiPoly.zero()
    for _ in range(nterms):
        term = MultiPoly.const(rng.randint(-coeff, coeff))
        for _ in range(rng.randint(0, max_deg)):
            term = term * MultiPoly.var(rng.choice(vars_))
        out = out + term
    return out
