"""Finite simple graphs on bitmask adjacency rows, plus the enumeration oracle.

Vertices are ``0..n-1`` everywhere in the Python API.  The text format is
1-based::

    graph 3
    1 2
    2 3

Vertex sets are plain ints used as bitmasks (bit ``v`` set iff ``v`` is in
the set); :func:`mask_to_set` and :func:`set_to_mask` convert.
"""

from __future__ import annotations

import random
from typing import Iterable, Iterator

from .errors import ValidationError
from .polynomial import Polynomial


def mask_to_set(mask: int) -> frozenset:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)


def set_to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class Graph:
    """Immutable simple graph.  ``adj[v]`` is the neighbourhood bitmask of v."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable[tuple] = ()):
        if n < 0:
            raise ValidationError("vertex count must be non-negative")
        adj = [0] * n
        for i, j in edges:
            if not (0 <= i < n and 0 <= j < n):
                raise ValidationError(f"edge ({i}, {j}) out of range for n={n}")
            if i == j:
                raise ValidationError(f"self-loop at vertex {i}")
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(adj))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_adjacency(cls, adj: Iterable[int]) -> "Graph":
        adj = tuple(adj)
        n = len(adj)
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise ValidationError(f"vertex {v} has out-of-range neighbours")
            if row >> v & 1:
                raise ValidationError(f"self-loop at vertex {v}")
            for u in iter_bits(row):
                if not adj[u] >> v & 1:
                    raise ValidationError(f"adjacency not symmetric at ({v}, {u})")
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    @property
    def all_vertices(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list:
        return [(i, j) for i in range(self.n) for j in iter_bits(self.adj[i]) if i < j]

    def num_edges(self) -> int:
        return sum(popcount(r) for r in self.adj) // 2

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def degree(self, v: int, live: int | None = None) -> int:
        row = self.adj[v] if live is None else self.adj[v] & live
        return popcount(row)

    def closed_neighborhood(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"

    def components(self, live: int | None = None) -> list:
        """Connected components of the subgraph induced on ``live``, as masks,
        ordered by lowest vertex."""
        if live is None:
            live = self.all_vertices
        adj = self.adj
        comps = []
        rest = live
        while rest:
            seed = rest & -rest
            comp = seed
            frontier = seed
            while frontier:
                low = frontier & -frontier
                frontier ^= low
                new = adj[low.bit_length() - 1] & rest & ~comp
                comp |= new
                frontier |= new
            comps.append(comp)
            rest &= ~comp
        return comps


def _check_vertex_set(g: Graph, s: int):
    if s < 0 or s >> g.n:
        raise ValidationError(f"vertex set {sorted(mask_to_set(s))} out of range for n={g.n}")


def is_independent(g: Graph, s) -> bool:
    """True iff no edge has both endpoints in ``s`` (a mask or an iterable)."""
    if not isinstance(s, int):
        s = set_to_mask(s)
    _check_vertex_set(g, s)
    for v in iter_bits(s):
        if g.adj[v] & s:
            return False
    return True


def enumerate_independent_sets(g: Graph) -> Iterator[int]:
    """Yield every independent set of ``g`` exactly once, as a bitmask.

    Branches on the lowest undecided vertex, excluding it first and then
    including it (which removes its closed neighbourhood).  Each branch of
    the search tree ends in a distinct independent set, so the work is
    O(#independent sets * n).
    """
    adj = g.adj
    stack = [(g.all_vertices, 0)]
    while stack:
        cand, chosen = stack.pop()
        if not cand:
            yield chosen
            continue
        low = cand & -cand
        v = low.bit_length() - 1
        # push include first so the exclude branch is emitted first
        stack.append((cand & ~adj[v] & ~low, chosen | low))
        stack.append((cand & ~low, chosen))


def count_independent_sets_by_size(g: Graph) -> list:
    """Same search tree as :func:`enumerate_independent_sets`, tallying
    leaf sizes instead of materialising the sets."""
    adj = g.adj
    counts = [0] * (g.n + 1)
    stack = [(g.all_vertices, 0)]
    pop = stack.pop
    push = stack.append
    while stack:
        cand, size = pop()
        if not cand:
            counts[size] += 1
            continue
        low = cand & -cand
        push((cand & ~adj[low.bit_length() - 1] & ~low, size + 1))
        push((cand & ~low, size))
    return counts


def independence_polynomial_oracle(g: Graph) -> Polynomial:
    """Ground-truth independence polynomial by exhaustive enumeration."""
    return Polynomial(count_independent_sets_by_size(g))


def induced_subgraph(g: Graph, keep) -> tuple:
    """Return ``(subgraph, index_map)`` with ``index_map[old] = new``."""
    if not isinstance(keep, int):
        keep = set_to_mask(keep)
    _check_vertex_set(g, keep)
    order = list(iter_bits(keep))
    index = {old: new for new, old in enumerate(order)}
    adj = []
    for old in order:
        row = 0
        for u in iter_bits(g.adj[old] & keep):
            row |= 1 << index[u]
        adj.append(row)
    return Graph.from_adjacency(adj), index


# constructors

def complete_graph(m: int) -> Graph:
    return Graph(m, [(i, j) for i in range(m) for j in range(i + 1, m)])


def edgeless_graph(n: int) -> Graph:
    return Graph(n)


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def random_graph(n: int, density: float, rng: random.Random) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)
                     if rng.random() < density])


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    off = g1.n
    return Graph(g1.n + g2.n, g1.edges() + [(i + off, j + off) for i, j in g2.edges()])


def lex_product_graph(g1: Graph, g2: Graph) -> Graph:
    """G1[G2]: (a, b) ~ (c, d) iff a ~ c, or a == c and b ~ d.
    Vertex (a, b) gets index a*|G2| + b."""
    n2 = g2.n
    edges = []
    for a in range(g1.n):
        for c in range(g1.n):
            for b in range(n2):
                for d in range(n2):
                    u, w = a * n2 + b, c * n2 + d
                    if u < w and (g1.has_edge(a, c) or (a == c and g2.has_edge(b, d))):
                        edges.append((u, w))
    return Graph(g1.n * n2, edges)


# text format

def parse_graph(text: str) -> Graph:
    """Parse ``graph <n>`` followed by 1-based ``i j`` edge lines.
    ``#`` starts a comment.  Duplicate edges are accepted."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "graph":
                raise ValidationError("expected header 'graph <n>'", lineno)
            try:
                n = int(fields[1])
            except ValueError:
                raise ValidationError(f"bad vertex count {fields[1]!r}", lineno) from None
            if n < 0:
                raise ValidationError("vertex count must be non-negative", lineno)
            continue
        if len(fields) != 2:
            raise ValidationError(f"expected 'i j', got {line!r}", lineno)
        try:
            i, j = int(fields[0]), int(fields[1])
        except ValueError:
            raise ValidationError(f"non-integer vertex in {line!r}", lineno) from None
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValidationError(f"vertex out of range 1..{n} in {line!r}", lineno)
        if i == j:
            raise ValidationError(f"self-loop at vertex {i}", lineno)
        edges.append((i - 1, j - 1))
    if n is None:
        raise ValidationError("missing header 'graph <n>'")
    return Graph(n, edges)


def format_graph(g: Graph, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"graph {g.n}")
    lines.extend(f"{i + 1} {j + 1}" for i, j in g.edges())
    return "\n".join(lines) + "\n"
