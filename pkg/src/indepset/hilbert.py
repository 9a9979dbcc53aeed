"""Hilbert numerators of monomial ideals and the graph-state specialisation
that computes independence polynomials.

Two engines live here:

* :func:`hilbert_numerator` runs the general pivot recursion on explicit
  minimal generator sets (``HN(I) = z^deg(p) HN(I:p) + HN(I+p)`` with a
  product of ``1 - z^d`` at pairwise-coprime leaves).
* :func:`independence_polynomial` runs the same recursion for modified edge
  ideals, where every ideal on the way is described by the set of variables
  still appearing squared, i.e. a live vertex set of the graph.  Pivoting on
  vertex v gives Plus = live - {v} and Colon = live - N[v].
"""

from __future__ import annotations

import random
import sys
from contextlib import contextmanager
from dataclasses import asdict, dataclass, field
from math import comb

from .graph import Graph
from .monomial_ideal import Monomial, MonomialIdeal, check_edge_ideal_structure
from .polynomial import Polynomial, add_coeffs, divide_exact, mul_coeffs

STRATEGY_KINDS = ("first", "max-degree", "cocoa-like", "most-frequent-power")


class PivotStrategyError(RuntimeError):
    """A pivot strategy produced a pivot that does not shrink both subproblems."""


@dataclass(frozen=True)
class PivotStrategy:
    """How to choose the pivot at each recursion node.

    ``first``: lowest-index variable shared by two generators (lowest live
    vertex with a live neighbour).  ``max-degree``: variable in the most
    generators, lowest index on ties.  ``cocoa-like``: most frequent variable
    with seeded random tie-break, then the highest power of it dividing two
    randomly drawn generators containing it.  ``most-frequent-power``
    (monomial engine only): most frequent variable, raised to the largest
    power that still divides two generators.
    """

    kind: str = "max-degree"
    seed: int = 0

    def __post_init__(self):
        if self.kind not in STRATEGY_KINDS:
            raise ValueError(f"unknown pivot strategy {self.kind!r}; "
                             f"expected one of {', '.join(STRATEGY_KINDS)}")

    @property
    def name(self) -> str:
        if self.kind in ("cocoa-like", "most-frequent-power"):
            return f"{self.kind}(seed={self.seed})"
        return self.kind


FIRST = PivotStrategy("first")
MAX_DEGREE = PivotStrategy("max-degree")


def cocoa_like(seed: int = 0) -> PivotStrategy:
    return PivotStrategy("cocoa-like", seed)


def most_frequent_power(seed: int = 0) -> PivotStrategy:
    return PivotStrategy("most-frequent-power", seed)


@dataclass
class RecursionStats:
    strategy: str
    nodes: int = 0
    depth: int = 0
    memo_hits: int = 0

    def to_json(self) -> dict:
        return {"nodes": self.nodes, "depth": self.depth,
                "memo_hits": self.memo_hits, "strategy": self.strategy}


@dataclass
class HilbertResult:
    numerator: Polynomial
    n_vars: int
    series: Polynomial | None = None
    stats: RecursionStats = field(default_factory=lambda: RecursionStats("?"))

    def __post_init__(self):
        if self.series is not None:
            expected = self.series * Polynomial.one_minus_z_power(1, self.n_vars)
            if expected != self.numerator:
                raise ArithmeticError("numerator != series * (1-z)^n")

    def to_json(self) -> dict:
        return {
            "numerator": self.numerator.to_json(),
            "n_vars": self.n_vars,
            "series": None if self.series is None else self.series.to_json(),
            "stats": self.stats.to_json(),
        }


@contextmanager
def _recursion_room(depth: int):
    old = sys.getrecursionlimit()
    need = 4 * depth + 200
    if need > old:
        sys.setrecursionlimit(need)
    try:
        yield
    finally:
        sys.setrecursionlimit(old)


# -- general monomial engine -------------------------------------------------

def _variable_counts(ideal: MonomialIdeal) -> dict:
    counts = {}
    for m in ideal.gens:
        for v, _ in m.exps:
            counts[v] = counts.get(v, 0) + 1
    return counts


def choose_monomial_pivot(ideal: MonomialIdeal, strategy: PivotStrategy,
                          rng: random.Random) -> Monomial:
    """Pick a pivot for a non-coprime ideal."""
    counts = _variable_counts(ideal)
    if strategy.kind == "first":
        return Monomial.var(min(v for v, c in counts.items() if c >= 2))
    best = max(counts.values())
    tied = sorted(v for v, c in counts.items() if c == best)
    if strategy.kind == "max-degree":
        return Monomial.var(tied[0])
    v = rng.choice(tied)
    powers = sorted((m.exponent(v) for m in ideal.gens if m.support >> v & 1), reverse=True)
    if strategy.kind == "cocoa-like":
        a, b = rng.sample(powers, 2)
        return Monomial.var(v, min(a, b))
    return Monomial.var(v, powers[1])


def _product_one_minus(degrees) -> tuple:
    out = (1,)
    for d in degrees:
        out = mul_coeffs(out, (1,) + (0,) * (d - 1) + (-1,) if d else ())
    return out


def is_zero_dimensional(ideal: MonomialIdeal, n_vars: int) -> bool:
    """Every variable has a pure power among the generators."""
    pure = 0
    for m in ideal.gens:
        if len(m.exps) <= 1:
            pure |= m.support if m.exps else (1 << n_vars) - 1
    return pure & ((1 << n_vars) - 1) == (1 << n_vars) - 1


def hilbert_numerator(ideal: MonomialIdeal, n_vars: int,
                      strategy: PivotStrategy = MAX_DEGREE, memo: bool = True,
                      structure_graph: Graph | None = None) -> HilbertResult:
    """Hilbert numerator of k[x_1..x_n]/I by pivot recursion.

    If ``structure_graph`` is given, ``ideal`` must be its modified edge
    ideal and every node of the recursion is checked to keep the
    edge-ideal shape (variables to power one or two, edge monomials only
    between squared variables).
    """
    if ideal.max_variable() >= n_vars:
        raise ValueError(f"ideal uses x{ideal.max_variable() + 1} but n_vars={n_vars}")
    stats = RecursionStats(strategy.name)
    rng = random.Random(strategy.seed)
    cache = {}

    def rec(I: MonomialIdeal, depth: int) -> tuple:
        stats.nodes += 1
        if depth > stats.depth:
            stats.depth = depth
        if memo:
            hit = cache.get(I)
            if hit is not None:
                stats.memo_hits += 1
                return hit
        if structure_graph is not None:
            check_edge_ideal_structure(I, n_vars, structure_graph)
        if I.pairwise_coprime():
            result = _product_one_minus(m.degree for m in I.gens)
        else:
            p = choose_monomial_pivot(I, strategy, rng)
            colon = I.colon(p)
            plus = I.add_monomial(p)
            total = I.sum_deg()
            if not (colon.sum_deg() < total and plus.sum_deg() < total):
                raise PivotStrategyError(
                    f"pivot {p} chosen by {strategy.name} does not decrease the degree sum "
                    f"({total} -> colon {colon.sum_deg()}, plus {plus.sum_deg()})")
            f1 = rec(colon, depth + 1)
            f2 = rec(plus, depth + 1)
            result = add_coeffs((0,) * p.degree + f1 if f1 else (), f2)
        if memo:
            cache[I] = result
        return result

    with _recursion_room(ideal.sum_deg() + 1):
        numerator = Polynomial._raw(rec(ideal, 0))
    series = None
    if is_zero_dimensional(ideal, n_vars):
        series = divide_exact(numerator, Polynomial.one_minus_z_power(1, n_vars))
    return HilbertResult(numerator, n_vars, series, stats)


# -- graph-state engine -------------------------------------------------------

def _binomial_row(k: int) -> tuple:
    return tuple(comb(k, i) for i in range(k + 1))


def independence_polynomial(g: Graph, strategy: PivotStrategy = MAX_DEGREE,
                            memo: bool = True, components: bool = True) -> HilbertResult:
    """I(G, z) via the specialised recursion on live vertex sets.

    ``memo`` caches results keyed on the live-vertex mask; ``components``
    multiplies over connected components of the live subgraph instead of
    pivoting across them.
    """
    if strategy.kind == "most-frequent-power":
        raise ValueError("most-frequent-power applies to hilbert_numerator only")
    adj = g.adj
    closed = [row | (1 << v) for v, row in enumerate(adj)]
    stats = RecursionStats(strategy.name)
    rng = random.Random(strategy.seed)
    cache = {}
    binomials = {}
    kind = strategy.kind

    def pick(live: int) -> int:
        if kind == "first":
            rest = live
            while rest:
                low = rest & -rest
                v = low.bit_length() - 1
                if adj[v] & live:
                    return v
                rest ^= low
            raise PivotStrategyError("no live vertex with a live neighbour")
        best = 0
        tied = []
        rest = live
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            d = (adj[v] & live).bit_count()
            if d > best:
                best = d
                tied = [v]
            elif d == best and d:
                tied.append(v)
        if not tied:
            raise PivotStrategyError("no live vertex with a live neighbour")
        if kind == "max-degree" or len(tied) == 1:
            return tied[0]
        # every generator containing x_v is x_v^2 or x_v*x_u, so the highest
        # common power of x_v in any two of them is 1: the pivot is x_v
        return rng.choice(tied)

    def rec(live: int, depth: int) -> tuple:
        stats.nodes += 1
        if depth > stats.depth:
            stats.depth = depth
        if memo:
            hit = cache.get(live)
            if hit is not None:
                stats.memo_hits += 1
                return hit
        has_edge = False
        rest = live
        while rest:
            low = rest & -rest
            if adj[low.bit_length() - 1] & live:
                has_edge = True
                break
            rest ^= low
        if not has_edge:
            k = live.bit_count()
            result = binomials.get(k)
            if result is None:
                result = binomials[k] = _binomial_row(k)
        else:
            comps = g.components(live) if components else (live,)
            if len(comps) > 1:
                result = (1,)
                for comp in comps:
                    result = mul_coeffs(result, rec(comp, depth + 1))
            else:
                v = pick(live)
                if not live >> v & 1:
                    raise PivotStrategyError(f"pivot x{v + 1} is not a squared variable")
                colon = rec(live & ~closed[v], depth + 1)
                plus = rec(live & ~(1 << v), depth + 1)
                result = add_coeffs((0,) + colon, plus)
        if memo:
            cache[live] = result
        return result

    with _recursion_room(2 * g.n + 1):
        series = Polynomial._raw(rec(g.all_vertices, 0))
    numerator = series * Polynomial.one_minus_z_power(1, g.n)
    return HilbertResult(numerator, g.n, series, stats)


def antichain_polynomial_fast(p, strategy: PivotStrategy = MAX_DEGREE,
                              memo: bool = True, components: bool = True) -> Polynomial:
    """A(P, x) as the Hilbert series of k[x]/I_G(P), the initial ideal of J_P."""
    from .poset import comparability_graph
    return independence_polynomial(comparability_graph(p), strategy, memo, components).series


def strategy_from_name(name: str, seed: int = 0) -> PivotStrategy:
    return PivotStrategy(name, seed)
