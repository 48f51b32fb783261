"""Graphs, simplicial complexes and the combinatorial socle deciders.

Vertex sets are 1-based throughout.  Facets are kept as sorted tuples and
also as bitmasks (bit ``v-1`` for vertex ``v``) for the intersection scans.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .ideal import Monomial, MonomialIdeal, ParseError, minimalize


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (1 <= u < v <= self.n):
                raise ValueError(f"edge {(u, v)} must satisfy 1 <= u < v <= {self.n}")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge {(u, v)}")
            seen.add((u, v))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> "Graph":
        """Normalise orientation and ordering; duplicates are merged."""
        norm = set()
        for e in edges:
            u, v = e
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            norm.add((min(u, v), max(u, v)))
        return cls(n, tuple(sorted(norm)))

    def neighbors(self, v: int) -> set[int]:
        out = set()
        for a, b in self.edges:
            if a == v:
                out.add(b)
            elif b == v:
                out.add(a)
        return out

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex on ``[n]`` given by its facets (an antichain)."""

    n: int
    facets: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        sets = [frozenset(F) for F in self.facets]
        for F in self.facets:
            if not F:
                raise ValueError("facets must be nonempty")
            if tuple(sorted(set(F))) != tuple(F):
                raise ValueError(f"facet {F} must be a strictly increasing tuple")
            if F[0] < 1 or F[-1] > self.n:
                raise ValueError(f"facet {F} has a vertex outside 1..{self.n}")
        for A, B in combinations(sets, 2):
            if A <= B or B <= A:
                raise ValueError(f"facets {sorted(A)} and {sorted(B)} are comparable")

    @classmethod
    def from_sets(cls, n: int, sets: Iterable[Iterable[int]], maximalize: bool = False) -> "SimplicialComplex":
        """Build from vertex sets; with ``maximalize`` keep only the maximal ones."""
        uniq = {frozenset(s) for s in sets}
        if maximalize:
            uniq = {A for A in uniq if not any(A < B for B in uniq)}
        return cls(n, tuple(sorted(tuple(sorted(A)) for A in uniq)))

    @property
    def masks(self) -> tuple[int, ...]:
        return tuple(_mask(F) for F in self.facets)


def _mask(F: Iterable[int]) -> int:
    m = 0
    for v in F:
        m |= 1 << (v - 1)
    return m


def _unmask(m: int) -> tuple[int, ...]:
    out = []
    v = 1
    while m:
        if m & 1:
            out.append(v)
        m >>= 1
        v += 1
    return tuple(out)


def edge_ideal(G: Graph) -> MonomialIdeal:
    if not G.edges:
        raise ValueError("the edge ideal of an edgeless graph is the zero ideal")
    return minimalize((Monomial.from_support(G.n, e) for e in G.edges), n=G.n)


def facet_ideal(D: SimplicialComplex) -> MonomialIdeal:
    return minimalize((Monomial.from_support(D.n, F) for F in D.facets), n=D.n)


def facets_of(I: MonomialIdeal) -> SimplicialComplex:
    """Inverse of :func:`facet_ideal`."""
    if I.is_zero():
        raise ValueError("the zero ideal has no facets")
    if not I.is_squarefree():
        raise ValueError("facets_of expects a squarefree ideal")
    if I.is_unit():
        raise ValueError("the unit ideal would need the empty facet")
    return SimplicialComplex.from_sets(I.n, (g.support for g in I.generators))


def _pad(tup: tuple, k: int) -> tuple:
    # repeating a facet does not change the intersection
    return tup + (tup[-1],) * (k - len(tup))


def condition_a(D: SimplicialComplex, k: int) -> tuple[bool, tuple[tuple[int, ...], ...] | None]:
    """Every k facets (repetition allowed) share a vertex.

    Returns ``(True, None)`` or ``(False, witness)`` with a k-tuple of facets
    whose intersection is empty.
    """
    if k < 1:
        raise ValueError("k must be positive")
    masks = D.masks
    full = (1 << D.n) - 1
    for size in range(1, min(k, len(masks)) + 1):
        for idx in combinations(range(len(masks)), size):
            acc = full
            for i in idx:
                acc &= masks[i]
            if not acc:
                return False, _pad(tuple(D.facets[i] for i in idx), k)
    return True, None


def condition_b(
    D: SimplicialComplex, k: int
) -> tuple[bool, dict[int, tuple[tuple[int, ...], ...] | None]]:
    """For every vertex ``j`` some k facets intersect in exactly ``{j}``.

    Returns the verdict and a map vertex -> witness k-tuple (``None`` for
    vertices that have none).  The first witness in enumeration order
    (by subset size, then facet order) is reported.
    """
    if k < 1:
        raise ValueError("k must be positive")
    masks = D.masks
    full = (1 << D.n) - 1
    wit: dict[int, tuple | None] = {j: None for j in range(1, D.n + 1)}
    missing = D.n
    for size in range(1, min(k, len(masks)) + 1):
        for idx in combinations(range(len(masks)), size):
            acc = full
            for i in idx:
                acc &= masks[i]
            if acc and acc & (acc - 1) == 0:
                j = acc.bit_length()
                if wit[j] is None:
                    wit[j] = _pad(tuple(D.facets[i] for i in idx), k)
                    missing -= 1
                    if not missing:
                        return True, wit
    return missing == 0, wit


def maximal_socle_criterion(D: SimplicialComplex, k: int) -> bool:
    """``x_[n]^(k-1)`` is a socle monomial of ``S/I(D)^k``."""
    return condition_a(D, k)[0] and condition_b(D, k)[0]


def graph_depth2_criterion(G: Graph) -> tuple[bool, tuple[int, int, int] | None]:
    """Look for a triangle ``C`` with every vertex of ``G`` adjacent to ``C``.

    Vertices of ``C`` count as adjacent through the triangle's own edges.
    Returns the first such triangle in lexicographic order.
    """
    if G.n < 3:
        return False, None
    nbr = [0] * (G.n + 1)
    for u, v in G.edges:
        nbr[u] |= 1 << (v - 1)
        nbr[v] |= 1 << (u - 1)
    full = (1 << G.n) - 1
    for a, b in G.edges:
        common = nbr[a] & nbr[b]
        for c in _unmask(common):
            if c <= b:
                continue
            # a < b < c; closed neighbourhoods cover C itself
            if (nbr[a] | nbr[b] | nbr[c]) == full:
                return True, (a, b, c)
    return False, None


def graph_maximal_socle(G: Graph) -> bool:
    """``x_[n]`` is a socle monomial of ``S/I_G^2``: ``G`` is exactly a triangle."""
    return G.n == 3 and len(G.edges) == 3


def _data_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((lineno, line))
    return out


def _int_tokens(line: str, lineno: int) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise ParseError(f"expected integers, got {line!r}", lineno) from None


def _parse_header(lines: list[tuple[int, str]]) -> int:
    if not lines:
        raise ParseError("empty file: first line must be n", 1)
    lineno, line = lines[0]
    toks = _int_tokens(line, lineno)
    if len(toks) != 1 or toks[0] < 1:
        raise ParseError("first line must be a single positive integer n", lineno)
    return toks[0]


def parse_graph(text: str) -> Graph:
    """First line ``n``, then one ``u v`` edge per line.  ``#`` starts a comment."""
    lines = _data_lines(text)
    n = _parse_header(lines)
    edges = set()
    for lineno, line in lines[1:]:
        toks = _int_tokens(line, lineno)
        if len(toks) != 2:
            raise ParseError("an edge line needs exactly two vertices", lineno)
        u, v = toks
        for w in toks:
            if not 1 <= w <= n:
                raise ParseError(f"vertex {w} outside 1..{n}", lineno)
        if u == v:
            raise ParseError(f"loop at vertex {u}", lineno)
        edges.add((min(u, v), max(u, v)))
    return Graph(n, tuple(sorted(edges)))


def parse_facets(text: str) -> SimplicialComplex:
    """First line ``n``, then one facet (space-separated vertices) per line.

    Non-maximal sets are rejected rather than silently dropped.
    """
    lines = _data_lines(text)
    n = _parse_header(lines)
    sets = []
    for lineno, line in lines[1:]:
        toks = _int_tokens(line, lineno)
        for w in toks:
            if not 1 <= w <= n:
                raise ParseError(f"vertex {w} outside 1..{n}", lineno)
        sets.append((lineno, frozenset(toks)))
    for i, (la, A) in enumerate(sets):
        for lb, B in sets[:i]:
            if A <= B or B <= A:
                raise ParseError(f"facet is comparable with the facet on line {lb}", la)
    return SimplicialComplex.from_sets(n, (s for _, s in sets))


def format_graph(G: Graph) -> str:
    return "\n".join([str(G.n)] + [f"{u} {v}" for u, v in G.edges]) + "\n"


def format_facets(D: SimplicialComplex) -> str:
    return "\n".join([str(D.n)] + [" ".join(map(str, F)) for F in D.facets]) + "\n"
