"""Shared randomized generators and brute-force oracles for the test suite.

Everything here is deterministic given an explicit random.Random seed, so
frozen expected values and randomized sweeps are reproducible run to run.
"""

from __future__ import annotations

import random
from typing import Sequence

from hypothesis import strategies as st

from ratgen.poly import Monomial, Polynomial
from ratgen.recurrence import RationalGF

COEFF_VARS = ("x", "y", "z")


def random_poly(
    rng: random.Random,
    variables: Sequence[str] = COEFF_VARS,
    max_terms: int = 2,
    max_degree: int = 2,
    coeff_bound: int = 5,
    allow_zero: bool = True,
) -> Polynomial:
    terms: dict[Monomial, int] = {}
    n_terms = rng.randint(0 if allow_zero else 1, max_terms)
    for _ in range(n_terms):
        mono = tuple(
            sorted(
                (v, e)
                for v in variables
                if (e := rng.randint(0, max_degree)) > 0
            )
        )
        terms[mono] = terms.get(mono, 0) + rng.randint(-coeff_bound, coeff_bound)
    return Polynomial(terms)


def random_gf(rng: random.Random) -> RationalGF:
    """An admissible instance: <=3 variables, m<=3, n<=4, h in {1,2}."""
    variables = COEFF_VARS[: rng.choice([0, 1, 1, 2, 2, 3])]
    m = rng.randint(0, 3)
    n = rng.randint(0, 4)
    h = rng.choice([1, 2])
    num = [random_poly(rng, variables) for _ in range(m + 1)]
    den = [Polynomial.one()] + [random_poly(rng, variables) for _ in range(n)]
    return RationalGF(num, den, h)


def random_denominator(rng: random.Random, max_n: int = 4) -> list[Polynomial]:
    variables = COEFF_VARS[: rng.choice([0, 1, 1, 2])]
    n = rng.randint(0, max_n)
    return [Polynomial.one()] + [random_poly(rng, variables) for _ in range(n)]


# -- hypothesis strategies ----------------------------------------------------

def monomials(
    variables: Sequence[str] = COEFF_VARS, max_degree: int = 4
) -> st.SearchStrategy[Monomial]:
    return st.builds(
        lambda exps: tuple(
            sorted((v, e) for v, e in zip(variables, exps) if e > 0)
        ),
        st.lists(
            st.integers(min_value=0, max_value=max_degree),
            min_size=len(variables),
            max_size=len(variables),
        ),
    )


def polynomials(
    variables: Sequence[str] = COEFF_VARS,
    max_degree: int = 4,
    coeff_bound: int = 9,
    max_terms: int = 4,
) -> st.SearchStrategy[Polynomial]:
    return st.builds(
        Polynomial,
        st.dictionaries(
            monomials(variables, max_degree),
            st.integers(min_value=-coeff_bound, max_value=coeff_bound),
            max_size=max_terms,
        ),
    )
