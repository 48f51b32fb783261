"""Censuses and property suites that pit the combinatorial deciders against
the socle oracle.

Every run is a pure function of its :class:`RunConfig`; randomised parts
draw from ``random.Random`` instances seeded by a string derived from the
config seed and the instance family, so reruns are byte-identical.
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from itertools import combinations
from math import comb
from typing import Callable, Iterator

from . import constructions as C
from .criteria import (
    Graph,
    SimplicialComplex,
    condition_a,
    condition_b,
    edge_ideal,
    facet_ideal,
    facets_of,
    graph_depth2_criterion,
    graph_maximal_socle,
)
from .ideal import Monomial, MonomialIdeal, contains, max_degrees, power, to_dict
from .socle import (
    DEFAULT_BOX_BUDGET,
    STRATEGIES,
    BudgetExceeded,
    StrategyMismatch,
    depth_zero_profile,
    is_socle_element,
    socle_monomials,
)

EXHAUSTIVE_GRAPH_LIMIT = 2**15
OUTPUT_FORMATS = ("text", "structured")


@dataclass(frozen=True)
class RunConfig:
    seed: int = 0
    box_budget: int = DEFAULT_BOX_BUDGET
    l_max: int = 3
    k_max: int = 3
    n_max: int = 6
    sample_count: int = 200
    output_format: str = "text"
    strategy: str = "both"

    def __post_init__(self):
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        for name in ("box_budget", "l_max", "k_max", "n_max", "sample_count"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(f"output_format must be one of {OUTPUT_FORMATS}")
        if self.strategy not in STRATEGIES:
            raise ValueError(f"strategy must be one of {STRATEGIES}")

    def rng(self, *tags) -> random.Random:
        return random.Random("/".join(map(str, (self.seed,) + tags)))

    def socle(self, J: MonomialIdeal, **kw):
        return socle_monomials(J, strategy=self.strategy, budget=self.box_budget, **kw)

    def profile(self, I: MonomialIdeal, l_max: int) -> tuple[bool, ...]:
        return depth_zero_profile(I, l_max, strategy=self.strategy, budget=self.box_budget)


@dataclass
class CensusResult:
    """Outcome of a decider-vs-oracle comparison over many instances.

    ``budget_exceeded`` instances are neither agreements nor disagreements
    and are not included in ``instances_checked``.
    """

    name: str
    instances_checked: int = 0
    agreements: int = 0
    disagreements: list[dict] = field(default_factory=list)
    budget_exceeded: list[dict] = field(default_factory=list)
    records: list[dict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disagreements

    def add(self, record: dict, agree: bool) -> None:
        record = dict(record, agree=agree)
        self.records.append(record)
        self.instances_checked += 1
        if agree:
            self.agreements += 1
        else:
            self.disagreements.append(record)

    def skip(self, record: dict, exc: BudgetExceeded) -> None:
        record = dict(record, budget_exceeded={"volume": exc.volume, "budget": exc.budget})
        self.records.append(record)
        self.budget_exceeded.append(record)

    def mismatch(self, record: dict, exc: StrategyMismatch) -> None:
        record = dict(
            record,
            strategy_mismatch={
                "box": sorted(map(list, exc.box)),
                "colon": sorted(map(list, exc.colon)),
            },
        )
        self.add(record, False)

    def summary(self) -> dict:
        return {
            "name": self.name,
            "instances_checked": self.instances_checked,
            "agreements": self.agreements,
            "disagreements": len(self.disagreements),
            "budget_exceeded": len(self.budget_exceeded),
            "ok": self.ok,
        }

    def to_dict(self, include_records: bool = True) -> dict:
        out = {"summary": self.summary(), "disagreements": self.disagreements}
        if self.notes:
            out["notes"] = self.notes
        if include_records:
            out["records"] = self.records
        return out


def _run(result: CensusResult, record: dict, check: Callable[[dict], bool]) -> None:
    """Run one instance check, routing budget and strategy failures."""
    try:
        agree = check(record)
    except BudgetExceeded as exc:
        result.skip(record, exc)
        return
    except StrategyMismatch as exc:
        result.mismatch(record, exc)
        return
    result.add(record, agree)


def graph_dict(G: Graph) -> dict:
    return {"n": G.n, "edges": [list(e) for e in G.edges]}


def complex_dict(D: SimplicialComplex) -> dict:
    return {"n": D.n, "facets": [list(F) for F in D.facets]}


def _mono_list(monos) -> list[list[int]]:
    return [list(u) for u in monos]


# graphs


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labelled simple graph on ``[n]``, ordered by edge-subset bitmask."""
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, tuple(p for b, p in enumerate(pairs) if mask >> b & 1))


def sampled_graphs(n: int, count: int, rng: random.Random) -> Iterator[Graph]:
    pairs = list(combinations(range(1, n + 1), 2))
    for _ in range(count):
        mask = rng.getrandbits(len(pairs))
        yield Graph(n, tuple(p for b, p in enumerate(pairs) if mask >> b & 1))


def graph_oracle(G: Graph, cfg: RunConfig) -> tuple[bool, bool, list]:
    """``(depth S/I_G^2 == 0, x_[n] in Soc(S/I_G^2), socle)`` from exact arithmetic."""
    if not G.edges:
        # S/(0) = S has positive depth for n >= 1
        return False, False, []
    J = power(edge_ideal(G), 2)
    rep = cfg.socle(J, k=2)
    return rep.depth_zero, is_socle_element(J, Monomial.full(G.n)), _mono_list(rep.socle_monomials)


def census_graphs(n: int, cfg: RunConfig, exhaustive: bool | None = None) -> CensusResult:
    """Depth-zero-square criterion and the triangle clause vs the socle oracle."""
    if n < 1:
        raise ValueError("n must be positive")
    total = 2 ** comb(n, 2)
    if exhaustive is None:
        exhaustive = total <= EXHAUSTIVE_GRAPH_LIMIT
    result = CensusResult(name=f"graphs-n{n}")
    if exhaustive:
        graphs = all_graphs(n)
        result.notes.append(f"exhaustive over {total} labelled graphs")
    else:
        graphs = sampled_graphs(n, cfg.sample_count, cfg.rng("graphs", n))
        result.notes.append(f"{cfg.sample_count} seeded samples of {total} labelled graphs")

    for idx, G in enumerate(graphs):
        record = {"index": idx, "instance": graph_dict(G)}

        def check(rec, G=G):
            crit, wit = graph_depth2_criterion(G)
            maximal = graph_maximal_socle(G)
            oracle, oracle_max, socle = graph_oracle(G, cfg)
            rec.update(
                criterion=crit,
                witness=list(wit) if wit else None,
                oracle=oracle,
                maximal_socle=maximal,
                oracle_maximal_socle=oracle_max,
                socle=socle,
            )
            return crit == oracle and maximal == oracle_max

        _run(result, record, check)
    return result


# complexes


def complex_oracle(D: SimplicialComplex, k: int, cfg: RunConfig) -> dict:
    """Membership facts for ``x_[n]^(k-1)`` and its variable multiples in ``I(D)^k``."""
    J = power(facet_ideal(D), k)
    top = Monomial.full(D.n, k - 1)
    not_in = not contains(J, top)
    multiples = [contains(J, top.times_variable(j)) for j in range(1, D.n + 1)]
    rep = cfg.socle(J, k=k)
    return {
        "top_not_in_power": not_in,
        "multiples_in_power": multiples,
        "socle_has_top": rep.has_maximal_socle,
        "depth_zero": rep.depth_zero,
    }


def check_complex(D: SimplicialComplex, k: int, cfg: RunConfig, rec: dict) -> bool:
    a, a_wit = condition_a(D, k)
    orc = complex_oracle(D, k, cfg)
    rec.update(condition_a=a, condition_a_witness=_mono_list(a_wit) if a_wit else None, oracle=orc)
    agree = a == orc["top_not_in_power"]
    if a:
        b, b_wit = condition_b(D, k)
        rec["condition_b"] = b
        rec["condition_b_witnesses"] = {
            str(j): (_mono_list(w) if w else None) for j, w in b_wit.items()
        }
        agree &= b == all(orc["multiples_in_power"])
        agree &= (a and b) == orc["socle_has_top"]
    else:
        agree &= not orc["socle_has_top"]
    return agree


def census_complexes(n: int, k: int, cfg: RunConfig) -> CensusResult:
    """Facet-intersection conditions vs membership in ``I(D)^k``, on seeded complexes."""
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    rng = cfg.rng("complexes", n, k)
    result = CensusResult(name=f"complexes-n{n}-k{k}")
    result.notes.append(f"{cfg.sample_count} seeded random antichains")
    for idx in range(cfg.sample_count):
        D = C.random_complex(rng, n)
        record = {"index": idx, "instance": complex_dict(D), "k": k}
        _run(result, record, lambda rec, D=D: check_complex(D, k, cfg, rec))
    return result


# property suites


def suite_powersocle(cfg: RunConfig) -> CensusResult:
    """Socle monomials of ``S/I^k`` (squarefree ``I``) have exponents <= k-1."""
    rng = cfg.rng("powersocle")
    result = CensusResult(name="powersocle")
    n_hi, k_hi = min(cfg.n_max, 5), min(cfg.k_max, 3)
    for idx in range(cfg.sample_count):
        n, k = rng.randint(1, n_hi), rng.randint(1, k_hi)
        I = C.random_squarefree_ideal(rng, n)
        record = {"index": idx, "instance": to_dict(I), "k": k}

        def check(rec, I=I, k=k):
            rep = cfg.socle(power(I, k), k=k, widen=1)
            rec["socle"] = _mono_list(rep.socle_monomials)
            return all(a <= k - 1 for u in rep.socle_monomials for a in u)

        _run(result, record, check)
    return result


def suite_socle_bound(cfg: RunConfig) -> CensusResult:
    """Socle monomials of ``S/J`` (any monomial ``J``) satisfy ``a_i <= c_i - 1``."""
    rng = cfg.rng("socle-bound")
    result = CensusResult(name="socle-bound")
    n_hi = min(cfg.n_max, 5)
    for idx in range(cfg.sample_count):
        n = rng.randint(1, n_hi)
        J = C.random_monomial_ideal(rng, n, max_exp=3)
        record = {"index": idx, "instance": to_dict(J)}

        def check(rec, J=J):
            c = max_degrees(J)
            rep = cfg.socle(J, widen=1)
            rec.update(max_degrees=list(c), socle=_mono_list(rep.socle_monomials))
            return all(a <= ci - 1 for u in rep.socle_monomials for a, ci in zip(u, c))

        _run(result, record, check)
    return result


def suite_however_a(cfg: RunConfig) -> CensusResult:
    """Single-degree squarefree ``I`` with ``d > ((k-1)n+1)/k``: ``Soc(S/I^k)`` is empty."""
    rng = cfg.rng("however-a")
    result = CensusResult(name="however-a")
    n_hi, k_hi = min(cfg.n_max, 6), min(cfg.k_max, 3)
    for idx in range(cfg.sample_count):
        n, k = rng.randint(2, max(2, n_hi)), rng.randint(1, k_hi)
        t = C.threshold(n, k)
        d = rng.choice([d for d in range(1, n + 1) if d > t])
        m = rng.randint(1, min(comb(n, d), 8))
        I = C.random_single_degree_ideal(rng, n, d, m)
        record = {"index": idx, "instance": to_dict(I), "k": k, "d": d, "threshold": str(t)}

        def check(rec, I=I, k=k):
            rep = cfg.socle(power(I, k), k=k)
            rec["socle"] = _mono_list(rep.socle_monomials)
            return not rep.depth_zero

        _run(result, record, check)
    return result


def hh_cases(cfg: RunConfig) -> Iterator[tuple[int, int, int]]:
    for n in range(1, min(cfg.n_max, 6) + 1):
        for d in range(1, n + 1):
            for k in range(1, min(cfg.k_max, 3) + 1):
                yield n, d, k


def suite_hh_boundary(cfg: RunConfig) -> CensusResult:
    """``hh_depth(n,d,k) == 0`` iff the squarefree Veronese power has a socle."""
    result = CensusResult(name="hh-boundary")
    for idx, (n, d, k) in enumerate(hh_cases(cfg)):
        record = {"index": idx, "n": n, "d": d, "k": k}

        def check(rec, n=n, d=d, k=k):
            formula = C.hh_depth(n, d, k)
            rep = cfg.socle(power(C.squarefree_veronese(n, d), k), k=k)
            rec.update(hh_depth=formula, depth_zero=rep.depth_zero)
            return (formula == 0) == rep.depth_zero

        _run(result, record, check)
    return result


def _equality_instances(cfg: RunConfig) -> Iterator[tuple[str, MonomialIdeal, int]]:
    """Single-degree ideals with ``d == threshold(n, k)``."""
    for n, d, k in hh_cases(cfg):
        if C.threshold(n, k) == d:
            yield f"veronese({n},{d})", C.squarefree_veronese(n, d), k
    for d in range(2, 4):
        yield f"example_b({d})", C.example_b(d), 2
    for k in range(2, min(cfg.k_max, 3) + 1):
        yield f"allk({k})", C.allk_ideal(k), k
    rng = cfg.rng("however-c")
    params = [(n, d, k) for n, d, k in hh_cases(cfg) if C.threshold(n, k) == d and n > 1 and d > 1]
    for i in range(cfg.sample_count if params else 0):
        n, d, k = params[i % len(params)]
        m = rng.randint(1, comb(n, d))
        yield f"random({n},{d},{k})#{i}", C.random_single_degree_ideal(rng, n, d, m), k


def suite_however_c(cfg: RunConfig) -> CensusResult:
    """Equality case with depth zero at ``k``: socle is exactly ``{x_[n]^(k-1)}``
    and every power from ``k`` to ``k+2`` keeps depth zero."""
    result = CensusResult(name="however-c")
    depth_zero_cases = 0
    for idx, (label, I, k) in enumerate(_equality_instances(cfg)):
        record = {"index": idx, "label": label, "instance": to_dict(I), "k": k}

        def check(rec, I=I, k=k):
            nonlocal depth_zero_cases
            if not I.is_single_degree():
                raise ValueError(f"{label} is not generated in a single degree")
            d = I.generators[0].degree
            if C.threshold(I.n, k) != d:
                raise ValueError(f"{label} is not an equality case")
            rep = cfg.socle(power(I, k), k=k)
            rec["depth_zero_at_k"] = rep.depth_zero
            if not rep.depth_zero:
                # the statement is conditional on depth zero at k
                rec["vacuous"] = True
                return True
            depth_zero_cases += 1
            top = Monomial.full(I.n, k - 1)
            profile = cfg.profile(I, k + 2)
            rec.update(socle=_mono_list(rep.socle_monomials), profile=list(profile))
            return rep.socle_monomials == (top,) and all(profile[k - 1 :])

        _run(result, record, check)
    result.notes.append(f"{depth_zero_cases} instances with depth zero at k")
    return result


def suite_allk(cfg: RunConfig) -> CensusResult:
    """All squarefree ``k``-subsets of ``[k+1]``: profile is False^(k-1) then True."""
    result = CensusResult(name="allk")
    for idx, k in enumerate(range(2, max(2, min(cfg.k_max, 3)) + 1)):
        I = C.allk_ideal(k)
        record = {"index": idx, "k": k, "instance": to_dict(I)}

        def check(rec, I=I, k=k):
            profile = cfg.profile(I, k + 1)
            D = facets_of(I)
            a, b = condition_a(D, k)[0], condition_b(D, k)[0]
            rep = cfg.socle(power(I, k), k=k)
            rec.update(profile=list(profile), condition_a=a, condition_b=b,
                       has_maximal_socle=rep.has_maximal_socle)
            expected = (False,) * (k - 1) + (True, True)
            return profile == expected and a and b and rep.has_maximal_socle and k < I.n

        _run(result, record, check)
    return result


def suite_examples(cfg: RunConfig) -> CensusResult:
    """The two depth-zero-square families carry ``x_[n]`` in the socle of ``S/I^2``."""
    result = CensusResult(name="examples")
    cases = [(f"example_a({n})", C.example_a(n)) for n in range(3, 7)]
    cases += [(f"example_b({d})", C.example_b(d)) for d in range(2, 5)]
    for idx, (label, I) in enumerate(cases):
        record = {"index": idx, "label": label, "instance": to_dict(I)}

        def check(rec, I=I):
            rep = cfg.socle(power(I, 2), k=2)
            D = facets_of(I)
            a, b = condition_a(D, 2)[0], condition_b(D, 2)[0]
            rec.update(depth_zero=rep.depth_zero, has_maximal_socle=rep.has_maximal_socle,
                       condition_a=a, condition_b=b)
            return rep.depth_zero and rep.has_maximal_socle and a and b

        _run(result, record, check)
    return result


def suite_smallern(cfg: RunConfig) -> CensusResult:
    """Maximal socle at power ``k`` with ``n > 1`` forces ``k < n`` and positive
    depth at every lower power."""
    result = CensusResult(name="smallern")
    rng = cfg.rng("smallern")
    n_hi, k_hi = min(cfg.n_max, 6), min(cfg.k_max, 3)
    found = 0
    flagged_maximal = 0
    known = [(facets_of(C.example_a(n)), 2) for n in range(3, n_hi + 1)]
    known += [(facets_of(C.allk_ideal(k)), k) for k in range(2, k_hi + 1)]
    sampled = []
    for _ in range(cfg.sample_count):
        n, k = rng.randint(2, max(2, n_hi)), rng.randint(1, k_hi)
        sampled.append((C.random_complex(rng, n), k))
    for idx, (D, k) in enumerate(known + sampled):
        n = D.n
        I = facet_ideal(D)
        record = {"index": idx, "instance": complex_dict(D), "k": k}

        def check(rec, I=I, k=k, n=n):
            nonlocal found, flagged_maximal
            rep = cfg.socle(power(I, k), k=k)
            rec["has_maximal_socle"] = rep.has_maximal_socle
            if not rep.has_maximal_socle:
                return True
            found += 1
            if I == MonomialIdeal.maximal(n):
                # the graded maximal ideal has depth zero already at the first power
                flagged_maximal += 1
                rec["flag"] = "maximal-ideal"
            profile = cfg.profile(I, k)
            rec["profile"] = list(profile)
            return k < n and not any(profile[: k - 1])

        _run(result, record, check)
    result.notes.append(f"{found} instances had a maximal socle")
    if flagged_maximal:
        result.notes.append(f"{flagged_maximal} of them were the graded maximal ideal")
    return result


def suite_chain(cfg: RunConfig) -> CensusResult:
    """Running intersections of ``k`` large ``d``-subsets stay above their bound."""
    rng = cfg.rng("chain")
    result = CensusResult(name="chain")
    for idx in range(cfg.sample_count):
        n, k = rng.randint(2, max(2, cfg.n_max)), rng.randint(1, max(1, cfg.k_max))
        t = C.threshold(n, k)
        d = rng.choice([d for d in range(1, n + 1) if d > t])
        sets = [sorted(rng.sample(range(1, n + 1), d)) for _ in range(k)]
        record = {"index": idx, "n": n, "k": k, "d": d, "sets": sets}
        _run(result, record, lambda rec, sets=sets, k=k, n=n: C.intersection_chain_check(sets, k, n))
    return result


SUITES: dict[str, Callable[[RunConfig], CensusResult]] = {
    "powersocle": suite_powersocle,
    "socle-bound": suite_socle_bound,
    "however-a": suite_however_a,
    "however-c": suite_however_c,
    "hh-boundary": suite_hh_boundary,
    "allk": suite_allk,
    "examples": suite_examples,
    "smallern": suite_smallern,
    "chain": suite_chain,
}


def run_suites(names: list[str], cfg: RunConfig) -> list[CensusResult]:
    if names == ["all"]:
        names = list(SUITES)
    unknown = [s for s in names if s not in SUITES]
    if unknown:
        raise KeyError(f"unknown suite(s) {unknown}; choose from {sorted(SUITES)} or 'all'")
    return [SUITES[s](cfg) for s in names]


def config_dict(cfg: RunConfig) -> dict:
    return asdict(cfg)
