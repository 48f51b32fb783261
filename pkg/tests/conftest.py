"""Shared brute-force oracles and hypothesis strategies.

The oracles here work on raw exponent tuples and never call into the
package, so they stay independent of the code they check.
"""

from itertools import combinations_with_replacement, product

import pytest
from hypothesis import strategies as st

from socles.ideal import MonomialIdeal, minimalize


def bf_divides(u, v):
    return all(a <= b for a, b in zip(u, v))


def bf_member(gens, u):
    return any(bf_divides(g, u) for g in gens)


def bf_power_member(gens, k, u):
    """``u`` lies in ``(gens)^k``: some k-multiset of generators has product dividing ``u``."""
    for combo in combinations_with_replacement(gens, k):
        prod = [sum(col) for col in zip(*combo)]
        if bf_divides(prod, u):
            return True
    return False


def bf_socle(member, n, side):
    """Socle monomials in the box ``[0, side]^n`` for a membership predicate."""
    out = []
    for u in product(range(side + 1), repeat=n):
        if member(u):
            continue
        if all(member(tuple(a + (j == i) for j, a in enumerate(u))) for i in range(n)):
            out.append(u)
    return out


TRIANGLE = ((1, 1, 0), (1, 0, 1), (0, 1, 1))
TRIANGLE_SQUARE = {
    (2, 2, 0), (2, 0, 2), (0, 2, 2), (2, 1, 1), (1, 2, 1), (1, 1, 2),
}


@pytest.fixture
def triangle():
    return MonomialIdeal.from_generators(3, TRIANGLE)


@st.composite
def monomials(draw, n, max_exp=3):
    return tuple(draw(st.integers(0, max_exp)) for _ in range(n))


@st.composite
def ideals(draw, n=None, max_exp=3, max_gens=5, squarefree=False):
    if n is None:
        n = draw(st.integers(1, 4))
    top = 1 if squarefree else max_exp
    gens = draw(
        st.lists(
            monomials(n, top).filter(any),
            min_size=1,
            max_size=max_gens,
        )
    )
    return minimalize(gens, n=n)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
