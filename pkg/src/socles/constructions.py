"""Example ideal families, closed-form thresholds and seeded random ideals."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .criteria import SimplicialComplex
from .ideal import Monomial, MonomialIdeal, minimalize


@dataclass(frozen=True)
class ParameterTriple:
    n: int
    d: int
    k: int

    def __post_init__(self):
        if not 1 <= self.d <= self.n:
            raise ValueError(f"need 1 <= d <= n, got d={self.d}, n={self.n}")
        if self.k < 1:
            raise ValueError("k must be positive")


def _sq(n: int, support) -> Monomial:
    return Monomial.from_support(n, support)


def example_a(n: int) -> MonomialIdeal:
    """``(x_1...x_{n-1}, x_1 x_n, ..., x_{n-1} x_n)``; its square has depth 0."""
    if n < 3:
        raise ValueError("example_a needs n >= 3")
    gens = [_sq(n, range(1, n))] + [_sq(n, (i, n)) for i in range(1, n)]
    return minimalize(gens, n=n)


def example_b(d: int) -> MonomialIdeal:
    """Degree-``d`` ideal in ``2d-1`` variables whose square has depth 0.

    Generators: ``x_1..x_d``; ``x_i x_{d+1}..x_{2d-1}`` for ``1 <= i <= d``;
    ``x_2..x_d x_j`` for ``d+1 <= j <= 2d-1``.
    """
    if d < 2:
        raise ValueError("example_b needs d >= 2")
    n = 2 * d - 1
    tail = list(range(d + 1, n + 1))
    middle = list(range(2, d + 1))
    gens = [_sq(n, range(1, d + 1))]
    gens += [_sq(n, [i] + tail) for i in range(1, d + 1)]
    gens += [_sq(n, middle + [j]) for j in tail]
    return minimalize(gens, n=n)


def squarefree_veronese(n: int, d: int) -> MonomialIdeal:
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got d={d}, n={n}")
    return minimalize((_sq(n, F) for F in combinations(range(1, n + 1), d)), n=n)


def hh_depth(n: int, d: int, k: int) -> int:
    """``max(0, n - k(n-d) - 1)``.

    Only meaningful as ``depth S/I^k`` for ``I = squarefree_veronese(n, d)``;
    do not apply it to other ideals.
    """
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got d={d}, n={n}")
    if k < 1:
        raise ValueError("k must be positive")
    return max(0, n - k * (n - d) - 1)


def threshold(n: int, k: int) -> Fraction:
    """The degree threshold ``((k-1)n + 1)/k`` as an exact rational."""
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    return Fraction((k - 1) * n + 1, k)


def admissible_params(k: int, r: int) -> ParameterTriple:
    """``d = (r+1)k - r``, ``n = (r+1)k + 1``: the equality case ``d == threshold(n, k)``."""
    if k < 2:
        raise ValueError("k must be at least 2")
    if r < 0:
        raise ValueError("r must be nonnegative")
    return ParameterTriple(n=(r + 1) * k + 1, d=(r + 1) * k - r, k=k)


def allk_ideal(k: int) -> MonomialIdeal:
    """All squarefree monomials of degree ``k`` in ``k+1`` variables."""
    if k < 2:
        raise ValueError("allk_ideal needs k >= 2")
    return squarefree_veronese(k + 1, k)


def intersection_chain_check(sets: Sequence[Sequence[int]], k: int, n: int) -> bool:
    """Every running intersection of ``k`` d-subsets of ``[n]`` beats its lower bound.

    With ``d > threshold(n, k)``, the first ``i`` sets must meet in more than
    ``((k-i)n + i)/k`` elements.  Always true under the precondition, so a
    ``False`` result flags a bug.
    """
    if k < 1 or len(sets) != k:
        raise ValueError(f"need exactly k={k} sets")
    sizes = {len(set(s)) for s in sets}
    if len(sizes) != 1:
        raise ValueError("all sets must have the same cardinality d")
    for s in sets:
        if len(set(s)) != len(s) or any(not 1 <= v <= n for v in s):
            raise ValueError(f"{s} is not a subset of 1..{n}")
    d = sizes.pop()
    if not d > threshold(n, k):
        raise ValueError(f"d={d} does not exceed the threshold {threshold(n, k)}")
    acc = set(sets[0])
    for i in range(1, k + 1):
        if i > 1:
            acc &= set(sets[i - 1])
        # |acc| > ((k-i)n + i)/k, cross-multiplied
        if not k * len(acc) > (k - i) * n + i:
            return False
    return True


# seeded random instances


def random_squarefree_ideal(rng: random.Random, n: int, max_gens: int = 6) -> MonomialIdeal:
    """Nonzero proper squarefree ideal from up to ``max_gens`` random nonempty supports."""
    m = rng.randint(1, max_gens)
    gens = []
    for _ in range(m):
        mask = rng.randint(1, (1 << n) - 1)
        gens.append(tuple((mask >> i) & 1 for i in range(n)))
    return minimalize(gens, n=n)


def random_monomial_ideal(
    rng: random.Random, n: int, max_exp: int = 3, max_gens: int = 6
) -> MonomialIdeal:
    """Nonzero proper monomial ideal with exponents in ``0..max_exp``."""
    m = rng.randint(1, max_gens)
    gens = []
    while len(gens) < m:
        g = tuple(rng.randint(0, max_exp) for _ in range(n))
        if any(g):
            gens.append(g)
    return minimalize(gens, n=n)


def random_single_degree_ideal(rng: random.Random, n: int, d: int, m: int) -> MonomialIdeal:
    """``m`` distinct uniformly chosen ``d``-subsets of ``[n]`` (capped at ``C(n, d)``)."""
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got d={d}, n={n}")
    pool = list(combinations(range(1, n + 1), d))
    chosen = rng.sample(pool, min(m, len(pool)))
    return minimalize((_sq(n, F) for F in chosen), n=n)


def random_complex(rng: random.Random, n: int, max_sets: int = 6) -> SimplicialComplex:
    """Maximal elements of a few random nonempty subsets of ``[n]``."""
    m = rng.randint(1, max_sets)
    sets = []
    for _ in range(m):
        mask = rng.randint(1, (1 << n) - 1)
        sets.append([i + 1 for i in range(n) if (mask >> i) & 1])
    return SimplicialComplex.from_sets(n, sets, maximalize=True)
