"""Compare I(G_P, x) with A(P, 2x) on small posets and print where they differ.

    python3 scripts/cm_counterexample.py
"""

import argparse
import random
from dataclasses import dataclass

from indepset.cm_bipartite import graph_from_poset
from indepset.graph import enumerate_independent_sets, independence_polynomial_oracle, mask_to_set
from indepset.poset import antichain, antichain_polynomial, chain, random_poset


@dataclass
class SweepConfig:
    samples: int = 50
    max_n: int = 7
    seed: int = 1


def describe(p, name):
    bip, _ = graph_from_poset(p)
    g = bip.to_graph()
    lhs = independence_polynomial_oracle(g)
    rhs = antichain_polynomial(p).scale_argument(2)
    print(f"{name}: I(G_P) = {lhs}   A(P, 2x) = {rhs}   {'equal' if lhs == rhs else 'DIFFER'}")
    return g, lhs == rhs


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=50)
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--seed", type=int, default=1)
    a = ap.parse_args()
    cfg = SweepConfig(a.samples, a.max_n, a.seed)

    describe(antichain(2), "antichain(2)")
    g, _ = describe(chain(2), "chain(2)")
    n = g.n // 2
    names = [f"x{i + 1}" for i in range(n)] + [f"y{j + 1}" for j in range(n)]
    print("independent sets of G_P for chain(2):")
    for s in enumerate_independent_sets(g):
        print("  {" + ", ".join(names[v] for v in sorted(mask_to_set(s))) + "}")

    rng = random.Random(cfg.seed)
    agree = with_relations = 0
    for _ in range(cfg.samples):
        p = random_poset(rng.randint(1, cfg.max_n), rng)
        bip, _ = graph_from_poset(p)
        same = independence_polynomial_oracle(bip.to_graph()) == \
            antichain_polynomial(p).scale_argument(2)
        has = bool(p.strict_pairs())
        with_relations += has
        agree += same
        assert same == (not has)
    print(f"random sweep: {agree}/{cfg.samples} agree; "
          f"{with_relations} posets had a relation and all of those differ")


if __name__ == "__main__":
    main()
