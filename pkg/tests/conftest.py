import random

import pytest
from hypothesis import settings

from slchyp import RATIONALS, TriPoly, parse_poly, prime_field

settings.register_profile("suite", deadline=None, max_examples=60)
settings.load_profile("suite")


FIELDS = {
    0: RATIONALS,
    2: prime_field(2),
    3: prime_field(3),
    5: prime_field(5),
    7: prime_field(7),
    11: prime_field(11),
}


def ctx_for(p):
    return FIELDS[p]


def poly(text, p=0):
    return parse_poly(text, ctx_for(p))


@pytest.fixture
def rng():
    return random.Random(20260809)


def random_poly(rnd, ctx, max_terms=6, max_exp=4, nonzero=True):
    """Random sparse TriPoly with small support."""
    while True:
        terms = {}
        for _ in range(rnd.randint(1, max_terms)):
            m = tuple(rnd.randint(0, max_exp) for _ in range(3))
            if ctx.is_rational:
                c = ctx.from_int(rnd.randint(-4, 4))
            else:
                c = ctx.from_int(rnd.randint(0, ctx.characteristic - 1))
            if not c.is_zero():
                terms[m] = terms[m] + c if m in terms else c
        f = TriPoly.make(ctx, terms)
        if not nonzero or not f.is_zero():
            return f


def random_invertible_matrix(rnd, ctx):
    from slchyp.normalize.auto import mat_det

    span = ctx.characteristic - 1 if not ctx.is_rational else 3
    while True:
        rows = []
        for _ in range(3):
            row = []
            for _ in range(3):
                if ctx.is_rational:
                    row.append(ctx.from_int(rnd.randint(-3, 3)))
                else:
                    row.append(ctx.from_int(rnd.randint(0, span)))
            rows.append(tuple(row))
        m = tuple(rows)
        if not mat_det(m).is_zero():
            return m
