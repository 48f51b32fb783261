"""Socle monomials of ``S/J`` for a monomial ideal ``J``.

Two independent strategies are provided.  ``box`` scans every monomial in
the exponent box that must contain the socle and tests the defining
condition directly (vectorised with numpy).  ``colon`` computes ``J : m``
through colon/intersection arithmetic and lists the monomials of
``(J : m) \\ J`` inside the same box.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import product as cartesian
from typing import Sequence

import numpy as np

from .ideal import (
    Monomial,
    MonomialIdeal,
    _mono,
    colon_by_maximal,
    contains,
    max_degrees,
    power,
    product,
)

DEFAULT_BOX_BUDGET = 2_000_000
STRATEGIES = ("box", "colon", "both")

# rows * generators * n entries materialised per numpy chunk
_CHUNK_CELLS = 4_000_000


class BudgetExceeded(RuntimeError):
    """The socle search box is larger than the configured candidate budget."""

    def __init__(self, volume: int, budget: int):
        self.volume = volume
        self.budget = budget
        super().__init__(f"socle search box has {volume} candidates, budget is {budget}")


class StrategyMismatch(AssertionError):
    """The box and colon strategies returned different socles."""

    def __init__(self, J: MonomialIdeal, box: frozenset, colon: frozenset):
        self.ideal = J
        self.box = box
        self.colon = colon
        super().__init__(
            f"strategies disagree on {J}: box-only {sorted(box - colon)}, "
            f"colon-only {sorted(colon - box)}"
        )


@dataclass(frozen=True)
class SocleReport:
    ideal_n: int
    socle_monomials: tuple[Monomial, ...]
    depth_zero: bool
    has_maximal_socle: bool = False
    k: int | None = None
    strategy: str = field(default="box", compare=False)

    def to_dict(self) -> dict:
        return {
            "n": self.ideal_n,
            "k": self.k,
            "socle": [list(u) for u in self.socle_monomials],
            "depth_zero": self.depth_zero,
            "has_maximal_socle": self.has_maximal_socle,
        }


def _require_proper_nonzero(J: MonomialIdeal) -> None:
    if J.is_zero():
        raise ValueError("the socle engine needs a nonzero ideal")
    if J.is_unit():
        raise ValueError("the socle engine needs a proper ideal")


def is_socle_element(J: MonomialIdeal, u: Sequence[int]) -> bool:
    """``u ∉ J`` and ``u·x_i ∈ J`` for every variable."""
    if len(u) != J.n:
        raise ValueError(f"variable count mismatch: {len(u)} vs {J.n}")
    if contains(J, u):
        return False
    u = _mono(u)
    return all(contains(J, u.times_variable(i)) for i in range(1, J.n + 1))


def socle_box_bound(J: MonomialIdeal) -> tuple[int, ...]:
    """Componentwise bound ``c_i - 1`` on exponents of socle monomials.

    A variable absent from every generator (``c_i = 0``) gets bound 0.  No
    socle monomial exists in that case, so the box is then vacuous: every
    candidate in it fails the socle test.
    """
    _require_proper_nonzero(J)
    return tuple(max(c - 1, 0) for c in max_degrees(J))


def box_volume(bound: Sequence[int]) -> int:
    return math.prod(b + 1 for b in bound)


def _membership(gens: np.ndarray, pts: np.ndarray) -> np.ndarray:
    """Boolean vector: ``pts[r]`` is divisible by some row of ``gens``."""
    m, n = gens.shape
    out = np.empty(len(pts), dtype=bool)
    step = max(1, _CHUNK_CELLS // max(1, m * n))
    for s in range(0, len(pts), step):
        block = pts[s : s + step]
        out[s : s + step] = (gens[None, :, :] <= block[:, None, :]).all(axis=2).any(axis=1)
    return out


def _box_points(bound: Sequence[int]) -> np.ndarray:
    # lexicographic order, last coordinate fastest
    grids = np.indices([b + 1 for b in bound]).reshape(len(bound), -1).T
    return np.ascontiguousarray(grids, dtype=np.int64)


def _socle_box(J: MonomialIdeal, bound: Sequence[int]) -> frozenset[Monomial]:
    gens = np.array(J.generators, dtype=np.int64)
    pts = _box_points(bound)
    alive = ~_membership(gens, pts)
    for i in range(J.n):
        if not alive.any():
            break
        idx = np.flatnonzero(alive)
        shifted = pts[idx].copy()
        shifted[:, i] += 1
        alive[idx] = _membership(gens, shifted)
    return frozenset(_mono(int(a) for a in row) for row in pts[alive])


def _socle_colon(J: MonomialIdeal, bound: Sequence[int]) -> frozenset[Monomial]:
    Jm = colon_by_maximal(J)
    if Jm.generators == J.generators:
        return frozenset()
    found = set()
    for g in Jm.generators:
        if any(a > b for a, b in zip(g, bound)):
            continue
        for u in cartesian(*(range(a, b + 1) for a, b in zip(g, bound))):
            if u not in found and not contains(J, u):
                found.add(u)
    return frozenset(_mono(u) for u in found)


def socle_monomials(
    J: MonomialIdeal,
    *,
    k: int | None = None,
    strategy: str = "box",
    budget: int = DEFAULT_BOX_BUDGET,
    widen: int = 0,
) -> SocleReport:
    """All monomials ``u`` with ``u ∉ J`` and ``u·x_i ∈ J`` for every ``i``.

    ``k`` is recorded in the report when the caller knows ``J`` to be a k-th
    power of a squarefree ideal; it only drives ``has_maximal_socle``.
    ``strategy="both"`` runs both routes and raises :class:`StrategyMismatch`
    if they disagree.  A box larger than ``budget`` raises
    :class:`BudgetExceeded` rather than returning a partial answer.

    ``widen`` enlarges every box side by that many exponents.  The extra
    layers cannot hold socle monomials; scanning them is what makes an
    exponent-bound check non-vacuous.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
    if widen < 0:
        raise ValueError("widen must be nonnegative")
    _require_proper_nonzero(J)
    bound = tuple(b + widen for b in socle_box_bound(J))
    volume = box_volume(bound)
    if volume > budget:
        raise BudgetExceeded(volume, budget)

    if strategy == "box":
        soc = _socle_box(J, bound)
    elif strategy == "colon":
        soc = _socle_colon(J, bound)
    else:
        soc = _socle_box(J, bound)
        other = _socle_colon(J, bound)
        if soc != other:
            raise StrategyMismatch(J, soc, other)

    monos = tuple(sorted(soc))
    maximal = k is not None and Monomial.full(J.n, k - 1) in soc
    return SocleReport(
        ideal_n=J.n,
        socle_monomials=monos,
        depth_zero=bool(monos),
        has_maximal_socle=maximal,
        k=k,
        strategy=strategy,
    )


def depth_zero_profile(
    I: MonomialIdeal,
    l_max: int,
    *,
    strategy: str = "box",
    budget: int = DEFAULT_BOX_BUDGET,
) -> tuple[bool, ...]:
    """``depth S/I^l == 0`` for ``l = 1..l_max``."""
    if not I.is_squarefree():
        raise ValueError("depth_zero_profile expects a squarefree ideal")
    if l_max < 1:
        raise ValueError("l_max must be positive")
    _require_proper_nonzero(I)
    out = []
    J = I
    for ell in range(1, l_max + 1):
        if ell > 1:
            J = product(J, I)
        out.append(socle_monomials(J, k=ell, strategy=strategy, budget=budget).depth_zero)
    return tuple(out)


def verify_exponent_bound(
    I: MonomialIdeal,
    k: int,
    *,
    strategy: str = "box",
    budget: int = DEFAULT_BOX_BUDGET,
    widen: int = 1,
) -> bool:
    """Every socle monomial of ``S/I^k`` has all exponents ``<= k-1``.

    This always holds for squarefree ``I``; ``False`` means a bug.
    """
    if not I.is_squarefree():
        raise ValueError("verify_exponent_bound expects a squarefree ideal")
    rep = socle_monomials(power(I, k), k=k, strategy=strategy, budget=budget, widen=widen)
    return all(a <= k - 1 for u in rep.socle_monomials for a in u)
