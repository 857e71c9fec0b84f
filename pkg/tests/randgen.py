"""Seeded random polynomials and ideals for cross-checks."""

import random

from frobenius_fte import PolyRing
from frobenius_fte.algebra import monomials_of_degree


def random_form(S, degree, rng, density=0.6):
    terms = {}
    for m in monomials_of_degree(S.nvars, degree):
        if rng.random() < density:
            terms[m] = rng.randrange(1, S.p)
    if not terms:
        m = rng.choice(list(monomials_of_degree(S.nvars, degree)))
        terms[m] = 1
    return sum((S.monomial(m, c) for m, c in terms.items()), S.zero())


def random_poly(S, max_degree, rng, n_terms=4):
    f = S.zero()
    for _ in range(n_terms):
        d = rng.randint(0, max_degree)
        m = rng.choice(list(monomials_of_degree(S.nvars, d)))
        f = f + S.monomial(m, rng.randrange(1, S.p))
    return f


def random_instance(rng, max_vars=3, max_degree=3, max_gens=3, primes=(2, 3, 5)):
    p = rng.choice(primes)
    n = rng.randint(1, max_vars)
    S = PolyRing.create(p, ["x", "y", "z"][:n])
    k = rng.randint(1, max_gens)
    gens = [random_form(S, rng.randint(1, max_degree), rng) for _ in range(k)]
    return S, gens
