"""Compare pivot strategies on Boolean lattices and random graphs.

    python3 scripts/bench_strategies.py --max-k 6 --graphs 20
"""

import argparse
import random
import time
from dataclasses import dataclass, field

from indepset.graph import random_graph
from indepset.hilbert import (FIRST, MAX_DEGREE, cocoa_like, hilbert_numerator,
                              independence_polynomial, most_frequent_power)
from indepset.monomial_ideal import modified_edge_ideal
from indepset.poset import boolean_lattice, comparability_graph


@dataclass
class BenchConfig:
    max_k: int = 5
    graphs: int = 10
    graph_n: int = 12
    density: float = 0.3
    seed: int = 0
    memo: bool = True
    components: bool = True
    strategies: list = field(default_factory=lambda: ["first", "max-degree", "cocoa-like"])


def _strategy(name, seed):
    return {"first": FIRST, "max-degree": MAX_DEGREE, "cocoa-like": cocoa_like(seed),
            "most-frequent-power": most_frequent_power(seed)}[name]


def bench_boolean(cfg: BenchConfig):
    print(f"{'k':>2} {'strategy':<22} {'count':>12} {'nodes':>8} {'depth':>6} "
          f"{'memo':>8} {'seconds':>9}")
    for k in range(cfg.max_k + 1):
        g = comparability_graph(boolean_lattice(k))
        for name in cfg.strategies:
            if name == "most-frequent-power":
                continue
            start = time.perf_counter()
            r = independence_polynomial(g, _strategy(name, cfg.seed), cfg.memo, cfg.components)
            dt = time.perf_counter() - start
            s = r.stats
            print(f"{k:>2} {s.strategy:<22} {r.series(1):>12} {s.nodes:>8} {s.depth:>6} "
                  f"{s.memo_hits:>8} {dt:>9.3f}")


def bench_monomial(cfg: BenchConfig):
    """Monomial-list engine on random modified edge ideals, totals per strategy."""
    rng = random.Random(cfg.seed)
    gs = [random_graph(cfg.graph_n, cfg.density, rng) for _ in range(cfg.graphs)]
    names = list(cfg.strategies)
    if "most-frequent-power" not in names:
        names.append("most-frequent-power")
    print(f"\n{cfg.graphs} random graphs, n={cfg.graph_n}, density={cfg.density}")
    print(f"{'strategy':<30} {'nodes':>10} {'seconds':>9}")
    for name in names:
        nodes = 0
        start = time.perf_counter()
        for g in gs:
            r = hilbert_numerator(modified_edge_ideal(g), g.n, _strategy(name, cfg.seed), cfg.memo)
            nodes += r.stats.nodes
        print(f"{_strategy(name, cfg.seed).name:<30} {nodes:>10} {time.perf_counter() - start:>9.3f}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    cfg = BenchConfig()
    ap.add_argument("--max-k", type=int, default=cfg.max_k)
    ap.add_argument("--graphs", type=int, default=cfg.graphs)
    ap.add_argument("--graph-n", type=int, default=cfg.graph_n)
    ap.add_argument("--density", type=float, default=cfg.density)
    ap.add_argument("--seed", type=int, default=cfg.seed)
    ap.add_argument("--no-memo", action="store_true")
    ap.add_argument("--no-components", action="store_true")
    a = ap.parse_args()
    cfg = BenchConfig(a.max_k, a.graphs, a.graph_n, a.density, a.seed,
                      not a.no_memo, not a.no_components)
    bench_boolean(cfg)
    bench_monomial(cfg)


if __name__ == "__main__":
    main()
