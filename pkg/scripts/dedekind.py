"""Dedekind numbers as antichain counts of Boolean lattices.

    python3 scripts/dedekind.py --max-k 6 --oracle-up-to 5
"""

import argparse
import time
from dataclasses import dataclass

from indepset.graph import count_independent_sets_by_size
from indepset.hilbert import MAX_DEGREE, independence_polynomial
from indepset.poset import boolean_lattice, comparability_graph

# OEIS A000372
KNOWN = [2, 3, 6, 20, 168, 7581, 7828354, 2414682040998]


@dataclass
class DedekindConfig:
    max_k: int = 6
    oracle_up_to: int = 5


def run(cfg: DedekindConfig) -> bool:
    ok = True
    for k in range(cfg.max_k + 1):
        g = comparability_graph(boolean_lattice(k))
        start = time.perf_counter()
        r = independence_polynomial(g, MAX_DEGREE)
        dt = time.perf_counter() - start
        count = r.series(1)
        line = f"k={k} count={count} nodes={r.stats.nodes} time={dt:.3f}s"
        if k < len(KNOWN):
            good = count == KNOWN[k]
            ok &= good
            line += " known=" + ("ok" if good else f"MISMATCH({KNOWN[k]})")
        if k <= cfg.oracle_up_to:
            start = time.perf_counter()
            oracle = sum(count_independent_sets_by_size(g))
            good = oracle == count
            ok &= good
            line += f" oracle={'ok' if good else oracle} ({time.perf_counter() - start:.2f}s)"
        print(line, flush=True)
    return ok


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-k", type=int, default=6)
    ap.add_argument("--oracle-up-to", type=int, default=5)
    a = ap.parse_args()
    raise SystemExit(0 if run(DedekindConfig(a.max_k, a.oracle_up_to)) else 1)


if __name__ == "__main__":
    main()
