"""Exact arithmetic on monomials and monomial ideals.

A monomial in ``n`` variables is an exponent vector; a monomial ideal is
stored by its minimal generating set, sorted lexicographically.  Everything
here is immutable and free of shared state.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

# Exponents are treated as machine-width unsigned values.
MAX_EXPONENT = 2**63 - 1


class ParseError(ValueError):
    """Malformed ideal/graph/complex document; ``lineno`` is 1-based when known."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class Monomial(tuple):
    """Exponent vector ``(a_1, ..., a_n)`` of ``x_1^a_1 ... x_n^a_n``.

    Ordering and hashing are those of the underlying tuple, so sorting a
    collection of monomials orders them lexicographically.
    """

    __slots__ = ()

    def __new__(cls, exponents: Iterable[int]):
        exps = tuple(exponents)
        if not exps:
            raise ValueError("a monomial needs at least one variable")
        for a in exps:
            if isinstance(a, bool) or not isinstance(a, int):
                raise TypeError(f"exponent {a!r} is not an integer")
            if a < 0:
                raise ValueError(f"negative exponent {a}")
            if a > MAX_EXPONENT:
                raise OverflowError(f"exponent {a} exceeds {MAX_EXPONENT}")
        return tuple.__new__(cls, exps)

    @classmethod
    def unit(cls, n: int) -> "Monomial":
        return _mono((0,) * n)

    @classmethod
    def variable(cls, n: int, i: int) -> "Monomial":
        """The variable ``x_i`` (1-based)."""
        _check_index(n, i)
        return _mono(1 if j == i - 1 else 0 for j in range(n))

    @classmethod
    def from_support(cls, n: int, support: Iterable[int], power: int = 1) -> "Monomial":
        """``x_F^power`` for a 1-based vertex set ``F``."""
        exps = [0] * n
        for v in support:
            _check_index(n, v)
            exps[v - 1] = power
        return _mono(exps)

    @classmethod
    def full(cls, n: int, power: int = 1) -> "Monomial":
        """``x_[n]^power``."""
        return _mono((power,) * n)

    @property
    def n(self) -> int:
        return len(self)

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(self)

    @property
    def degree(self) -> int:
        return sum(self)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i + 1 for i, a in enumerate(self) if a)

    def is_squarefree(self) -> bool:
        return all(a <= 1 for a in self)

    def divides(self, other: "Monomial") -> bool:
        _check_same_n(self, other)
        return all(a <= b for a, b in zip(self, other))

    def times(self, other: "Monomial") -> "Monomial":
        _check_same_n(self, other)
        out = tuple(a + b for a, b in zip(self, other))
        if max(out) > MAX_EXPONENT:
            raise OverflowError("exponent overflow in monomial product")
        return tuple.__new__(Monomial, out)

    def lcm(self, other: "Monomial") -> "Monomial":
        _check_same_n(self, other)
        return tuple.__new__(Monomial, (max(a, b) for a, b in zip(self, other)))

    def times_variable(self, i: int) -> "Monomial":
        _check_index(len(self), i)
        exps = list(self)
        exps[i - 1] += 1
        if exps[i - 1] > MAX_EXPONENT:
            raise OverflowError("exponent overflow in monomial product")
        return tuple.__new__(Monomial, exps)

    def __repr__(self) -> str:
        return f"Monomial({tuple(self)!r})"

    def __str__(self) -> str:
        parts = []
        for i, a in enumerate(self, start=1):
            if a == 1:
                parts.append(f"x{i}")
            elif a > 1:
                parts.append(f"x{i}^{a}")
        return "*".join(parts) if parts else "1"


def _mono(exps: Iterable[int]) -> Monomial:
    # trusted constructor: skips validation
    return tuple.__new__(Monomial, exps)


def _check_same_n(u: Sequence[int], v: Sequence[int]) -> None:
    if len(u) != len(v):
        raise ValueError(f"variable count mismatch: {len(u)} vs {len(v)}")


def _check_index(n: int, i: int) -> None:
    if not 1 <= i <= n:
        raise IndexError(f"variable index {i} outside 1..{n}")


def divides(u: Monomial, v: Monomial) -> bool:
    """True iff ``u`` divides ``v`` (componentwise ``<=``)."""
    return u.divides(v)


def _minimal(gens: Iterable[tuple[int, ...]]) -> tuple[Monomial, ...]:
    """Inclusion-minimal elements of a set of exponent vectors, lex-sorted."""
    uniq = set(gens)
    # a proper divisor has strictly smaller degree, so scanning by degree
    # means each candidate only needs checking against already-kept elements
    ordered = sorted(uniq, key=lambda g: (sum(g), g))
    kept: list[tuple[tuple[int, ...], int]] = []
    for g in ordered:
        mask = _support_mask(g)
        for h, hmask in kept:
            if hmask & ~mask == 0 and all(a <= b for a, b in zip(h, g)):
                break
        else:
            kept.append((g, mask))
    return tuple(sorted(_mono(g) for g, _ in kept))


def _support_mask(g: Sequence[int]) -> int:
    m = 0
    for i, a in enumerate(g):
        if a:
            m |= 1 << i
    return m


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal of ``K[x_1..x_n]`` given by its minimal generators.

    Construct through :func:`minimalize` or :meth:`from_generators`; the
    plain constructor trusts that ``generators`` is already minimal and
    lex-sorted.  The empty generator tuple is the zero ideal.  The unit
    ideal only arises as a colon result; socle computations reject it.
    """

    n: int
    generators: tuple[Monomial, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        for g in self.generators:
            if len(g) != self.n:
                raise ValueError(f"generator {g!r} does not have {self.n} variables")

    @classmethod
    def from_generators(cls, n: int, gens: Iterable[Sequence[int]]) -> "MonomialIdeal":
        monos = [g if isinstance(g, Monomial) else Monomial(g) for g in gens]
        return minimalize(monos, n=n)

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n, ())

    @classmethod
    def maximal(cls, n: int) -> "MonomialIdeal":
        """The graded maximal ideal ``(x_1, ..., x_n)``."""
        return cls(n, tuple(sorted(Monomial.variable(n, i) for i in range(1, n + 1))))

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return len(self.generators) == 1 and not any(self.generators[0])

    def is_proper(self) -> bool:
        return not self.is_unit()

    def is_squarefree(self) -> bool:
        return all(g.is_squarefree() for g in self.generators)

    def is_single_degree(self) -> bool:
        return len({g.degree for g in self.generators}) <= 1

    def __contains__(self, u: Monomial) -> bool:
        return contains(self, u)

    def __len__(self) -> int:
        return len(self.generators)

    def __str__(self) -> str:
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


def minimalize(gens: Iterable[Sequence[int]], n: int | None = None) -> MonomialIdeal:
    """Minimal generating set of the ideal generated by ``gens``.

    ``n`` is required when ``gens`` may be empty.
    """
    gens = [tuple(g) for g in gens]
    if n is None:
        if not gens:
            raise ValueError("n is required for an empty generator set")
        n = len(gens[0])
    for g in gens:
        if len(g) != n:
            raise ValueError(f"variable count mismatch: {len(g)} vs {n}")
    return MonomialIdeal(n, _minimal(gens))


def _require_nonzero(J: MonomialIdeal, what: str) -> None:
    if J.is_zero():
        raise ValueError(f"{what} is undefined for the zero ideal")


def contains(J: MonomialIdeal, u: Sequence[int]) -> bool:
    """Membership: some minimal generator divides ``u``."""
    _check_same_n(u, range(J.n))
    return any(all(a <= b for a, b in zip(g, u)) for g in J.generators)


def product(J1: MonomialIdeal, J2: MonomialIdeal) -> MonomialIdeal:
    if J1.n != J2.n:
        raise ValueError(f"variable count mismatch: {J1.n} vs {J2.n}")
    prods = {u.times(v) for u in J1.generators for v in J2.generators}
    return MonomialIdeal(J1.n, _minimal(prods))


def power(J: MonomialIdeal, k: int) -> MonomialIdeal:
    """``J^k`` for ``k >= 1``.

    The k-fold product is enumerated as multisets of generators, which
    avoids the repeated pairs an iterated product would revisit.
    """
    if k < 1:
        raise ValueError("only positive powers are supported; J^0 is the unit ideal")
    if k == 1 or J.is_zero() or J.is_unit():
        return J
    n = J.n
    prods = set()
    for combo in combinations_with_replacement(J.generators, k):
        prods.add(tuple(map(sum, zip(*combo))))
    if prods and max(max(p) for p in prods) > MAX_EXPONENT:
        raise OverflowError("exponent overflow in ideal power")
    return MonomialIdeal(n, _minimal(prods))


def colon_by_variable(J: MonomialIdeal, i: int) -> MonomialIdeal:
    """``J : x_i`` (1-based ``i``)."""
    _check_index(J.n, i)
    out = []
    for g in J.generators:
        if g[i - 1]:
            h = list(g)
            h[i - 1] -= 1
            out.append(tuple(h))
        else:
            out.append(tuple(g))
    return MonomialIdeal(J.n, _minimal(out))


def intersect(J1: MonomialIdeal, J2: MonomialIdeal) -> MonomialIdeal:
    """``J1 ∩ J2``, generated by pairwise lcms of generators."""
    if J1.n != J2.n:
        raise ValueError(f"variable count mismatch: {J1.n} vs {J2.n}")
    gens = set()
    # a generator already lying in the other ideal is its own lcm with the
    # divisor found there, and every other lcm it forms is a multiple of it
    rest1 = []
    for u in J1.generators:
        if contains(J2, u):
            gens.add(tuple(u))
        else:
            rest1.append(u)
    rest2 = []
    for v in J2.generators:
        if contains(J1, v):
            gens.add(tuple(v))
        else:
            rest2.append(v)
    for u in rest1:
        for v in rest2:
            gens.add(tuple(max(a, b) for a, b in zip(u, v)))
    return MonomialIdeal(J1.n, _minimal(gens))


def colon_by_maximal(J: MonomialIdeal) -> MonomialIdeal:
    """``J : m`` for the graded maximal ideal ``m``; the unit ideal when ``J ⊇ m``."""
    _require_nonzero(J, "J : m")
    acc = colon_by_variable(J, 1)
    for i in range(2, J.n + 1):
        acc = intersect(acc, colon_by_variable(J, i))
    return acc


def max_degrees(J: MonomialIdeal) -> tuple[int, ...]:
    """Per-variable maximal exponent over the minimal generators."""
    _require_nonzero(J, "max_degrees")
    return tuple(max(col) for col in zip(*J.generators))


def ideals_equal(J1: MonomialIdeal, J2: MonomialIdeal) -> bool:
    return J1.n == J2.n and J1.generators == J2.generators


def to_dict(J: MonomialIdeal) -> dict:
    return {"n": J.n, "generators": [list(g) for g in J.generators]}


def serialize(J: MonomialIdeal) -> str:
    return json.dumps(to_dict(J), sort_keys=True) + "\n"


def from_dict(doc: object) -> MonomialIdeal:
    if not isinstance(doc, dict):
        raise ParseError("ideal document must be an object with 'n' and 'generators'")
    if "n" not in doc or "generators" not in doc:
        raise ParseError("ideal document needs fields 'n' and 'generators'")
    n = doc["n"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ParseError(f"n must be a positive integer, got {n!r}")
    gens = doc["generators"]
    if not isinstance(gens, list):
        raise ParseError("generators must be a list")
    monos = []
    for idx, g in enumerate(gens):
        if not isinstance(g, list) or len(g) != n:
            raise ParseError(f"generator #{idx} must be a list of {n} integers")
        try:
            monos.append(Monomial(g))
        except (TypeError, ValueError, OverflowError) as exc:
            raise ParseError(f"generator #{idx}: {exc}") from None
    return minimalize(monos, n=n)


def parse(text: str) -> MonomialIdeal:
    """Inverse of :func:`serialize`."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno) from None
    return from_dict(doc)
