"""Cohen-Macaulay bipartite graphs through the Herzog-Hibi labelling.

A labelled bipartite graph has sides x_0..x_{n-1} and y_0..y_{n-1} and edges
(i, j) meaning x_i -- y_j.  It is Cohen-Macaulay-labelled when

1. (i, i) is an edge for every i,
2. (i, j) an edge implies i <= j,
3. (i, j) and (j, k) edges imply (i, k) is an edge.

As an ordinary :class:`Graph`, x_i is vertex i and y_j is vertex n + j.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ValidationError
from .graph import Graph, independence_polynomial_oracle, iter_bits
from .hilbert import independence_polynomial
from .poset import Poset, antichain_polynomial


@dataclass(frozen=True)
class BipartiteLabeledGraph:
    n: int
    edges: frozenset

    def __post_init__(self):
        for i, j in self.edges:
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise ValidationError(f"edge (x{i + 1}, y{j + 1}) out of range for n={self.n}")

    def has_edge(self, i: int, j: int) -> bool:
        return (i, j) in self.edges

    def to_graph(self) -> Graph:
        return Graph(2 * self.n, [(i, self.n + j) for i, j in sorted(self.edges)])

    @classmethod
    def from_graph(cls, g: Graph) -> "BipartiteLabeledGraph":
        """Inverse of :meth:`to_graph`; every edge must join 0..n-1 to n..2n-1."""
        if g.n % 2:
            raise ValidationError("a labelled bipartite graph needs an even vertex count")
        n = g.n // 2
        edges = set()
        for a, b in g.edges():
            if a < n <= b:
                edges.add((a, b - n))
            else:
                raise ValidationError(f"edge {a + 1} {b + 1} does not join the x-side "
                                      f"1..{n} to the y-side {n + 1}..{2 * n}")
        return cls(n, frozenset(edges))

    def header_comment(self) -> str:
        return f"CM bipartite: x-side 1..{self.n}, y-side {self.n + 1}..{2 * self.n}"


def is_cohen_macaulay_labeling(g: BipartiteLabeledGraph) -> tuple:
    """Return ``(ok, violation)``; ``violation`` describes the first failed condition."""
    for i in range(g.n):
        if not g.has_edge(i, i):
            return False, f"condition 1: (x{i + 1}, y{i + 1}) is not an edge"
    for i, j in sorted(g.edges):
        if i > j:
            return False, f"condition 2: edge (x{i + 1}, y{j + 1}) has {i + 1} > {j + 1}"
    out = {}
    for i, j in g.edges:
        out.setdefault(i, set()).add(j)
    for i, j in sorted(g.edges):
        for k in sorted(out.get(j, ())):
            if k not in out[i]:
                return False, (f"condition 3: (x{i + 1}, y{j + 1}) and (x{j + 1}, y{k + 1}) "
                               f"are edges but (x{i + 1}, y{k + 1}) is not")
    return True, None


def poset_from_graph(g: BipartiteLabeledGraph) -> Poset:
    """P_G on the x-side: x_i <= x_j iff (x_i, y_j) is an edge."""
    ok, why = is_cohen_macaulay_labeling(g)
    if not ok:
        raise ValidationError(f"graph is not Cohen-Macaulay labelled: {why}")
    up = [0] * g.n
    for i, j in g.edges:
        up[i] |= 1 << j
    return Poset(g.n, up)


def graph_from_poset(p: Poset) -> tuple:
    """G_P, relabelled along a linear extension so that condition 2 holds.

    Returns ``(graph, index_map)`` where element ``e`` of ``p`` becomes
    label ``index_map[e]``.
    """
    order = p.linear_extension()
    index_map = {e: k for k, e in enumerate(order)}
    edges = frozenset((index_map[a], index_map[b])
                      for a in range(p.n) for b in iter_bits(p.up[a]))
    return BipartiteLabeledGraph(p.n, edges), index_map


def cm_independence_identity_check(p: Poset, graph_method: str = "oracle",
                                   poset_method: str = "fast") -> bool:
    """I(G_P, x) == A(P, 2x), coefficient by coefficient.

    By default the two sides come from independent routes: enumeration of
    independent sets of G_P as an ordinary 2n-vertex graph, and the Hilbert
    recursion on the comparability graph of ``p``.
    """
    bip, _ = graph_from_poset(p)
    g = bip.to_graph()
    if graph_method == "oracle":
        lhs = independence_polynomial_oracle(g)
    elif graph_method == "fast":
        lhs = independence_polynomial(g).series
    else:
        raise ValueError(f"unknown method {graph_method!r}")
    rhs = antichain_polynomial(p, method=poset_method).scale_argument(2)
    return lhs == rhs
