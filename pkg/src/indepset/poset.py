"""Finite posets stored as a transitively closed relation on bitmask rows.

Elements are ``0..n-1`` in the Python API.  ``up[i]`` is the mask of all j
with i <= j (i included); ``down[i]`` the mask of all j with j <= i.  The
text format is 1-based::

    poset 3
    1 < 2      # 1 <= 2, distinct elements
    2 <= 3
"""

from __future__ import annotations

import random
from collections import deque
from typing import Iterable, Iterator

from .errors import ValidationError
from .graph import (Graph, count_independent_sets_by_size, enumerate_independent_sets,
                    iter_bits, popcount, set_to_mask)
from .polynomial import Polynomial


class Poset:
    __slots__ = ("n", "up", "down")

    def __init__(self, n: int, up: Iterable[int]):
        """Wrap an already closed relation; validates all three order axioms."""
        up = tuple(up)
        if len(up) != n:
            raise ValidationError(f"expected {n} rows, got {len(up)}")
        full = (1 << n) - 1
        down = [0] * n
        for i, row in enumerate(up):
            if row & ~full:
                raise ValidationError(f"row {i} references elements outside 0..{n - 1}")
            if not row >> i & 1:
                raise ValidationError(f"relation is not reflexive at {i}")
            for j in iter_bits(row):
                down[j] |= 1 << i
        for i, row in enumerate(up):
            for j in iter_bits(row):
                if j != i and up[j] >> i & 1:
                    raise ValidationError(f"antisymmetry violated by {i} and {j}")
                if up[j] & ~row:
                    raise ValidationError(f"relation is not transitive at {i} <= {j}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "up", up)
        object.__setattr__(self, "down", tuple(down))

    def __setattr__(self, name, value):
        raise AttributeError("Poset is immutable")

    def leq(self, a: int, b: int) -> bool:
        return bool(self.up[a] >> b & 1)

    def less(self, a: int, b: int) -> bool:
        return a != b and self.leq(a, b)

    def comparable(self, a: int, b: int) -> bool:
        return self.leq(a, b) or self.leq(b, a)

    def strict_pairs(self) -> list:
        """All (a, b) with a < b."""
        return [(a, b) for a in range(self.n) for b in iter_bits(self.up[a]) if b != a]

    def relation_matrix(self) -> tuple:
        return tuple(tuple(self.leq(a, b) for b in range(self.n)) for a in range(self.n))

    def linear_extension(self) -> list:
        """Elements sorted so that a < b implies a comes first."""
        return sorted(range(self.n), key=lambda i: (popcount(self.down[i]), i))

    def relabel(self, new_index: dict) -> "Poset":
        """Return the isomorphic poset where element ``i`` becomes ``new_index[i]``."""
        up = [0] * self.n
        for i in range(self.n):
            row = 0
            for j in iter_bits(self.up[i]):
                row |= 1 << new_index[j]
            up[new_index[i]] = row
        return Poset(self.n, up)

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return self.n == other.n and self.up == other.up

    def __hash__(self):
        return hash((self.n, self.up))

    def __repr__(self):
        return f"Poset(n={self.n}, covers={covers(self)})"


def _find_path(succ: list, src: int, dst: int) -> list:
    prev = {src: None}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        if u == dst and len(prev) > 1:
            break
        for w in succ[u]:
            if w not in prev:
                prev[w] = u
                queue.append(w)
    path = [dst]
    while path[-1] != src:
        path.append(prev[path[-1]])
    return path[::-1]


def from_relations(n: int, pairs: Iterable[tuple]) -> Poset:
    """Reflexive-transitive closure of ``pairs`` (each (i, j) meaning i <= j).

    Raises ValidationError naming one cycle if the closure is not antisymmetric.
    """
    pairs = list(pairs)
    up = [1 << i for i in range(n)]
    succ = [[] for _ in range(n)]
    for i, j in pairs:
        if not (0 <= i < n and 0 <= j < n):
            raise ValidationError(f"relation ({i}, {j}) out of range for n={n}")
        up[i] |= 1 << j
        if i != j:
            succ[i].append(j)
    for k in range(n):
        row_k = up[k]
        bit = 1 << k
        for i in range(n):
            if up[i] & bit:
                up[i] |= row_k
    for i in range(n):
        for j in iter_bits(up[i]):
            if j != i and up[j] >> i & 1:
                cycle = _find_path(succ, i, j) + _find_path(succ, j, i)[1:]
                shown = " <= ".join(str(v + 1) for v in cycle)
                exc = ValidationError(f"relations contain a cycle: {shown}")
                exc.cycle = cycle
                raise exc
    return Poset(n, up)


def covers(p: Poset) -> list:
    """Transitive reduction: sorted pairs (a, b) with b covering a."""
    out = []
    for a in range(p.n):
        above = p.up[a] & ~(1 << a)
        # b covers a iff nothing strictly above a is strictly below b
        for b in iter_bits(above):
            if not (above & p.down[b] & ~(1 << b)):
                out.append((a, b))
    return out


def lower_covers(p: Poset, i: int) -> int:
    """Mask of the elements covered by ``i``."""
    below = p.down[i] & ~(1 << i)
    mask = 0
    for j in iter_bits(below):
        if not (below & p.up[j] & ~(1 << j)):
            mask |= 1 << j
    return mask


def comparability_graph(p: Poset) -> Graph:
    adj = [(p.up[i] | p.down[i]) & ~(1 << i) for i in range(p.n)]
    return Graph.from_adjacency(adj)


def enumerate_antichains(p: Poset) -> Iterator[int]:
    """Antichains as bitmasks, via independent sets of the comparability graph."""
    return enumerate_independent_sets(comparability_graph(p))


def antichain_polynomial_oracle(p: Poset) -> Polynomial:
    return Polynomial(count_independent_sets_by_size(comparability_graph(p)))


def antichain_polynomial(p: Poset, method: str = "fast", **kwargs) -> Polynomial:
    """A(P, x) = I(G(P), x).  ``method`` is ``"fast"`` (Hilbert recursion)
    or ``"oracle"`` (enumeration)."""
    if method == "oracle":
        return antichain_polynomial_oracle(p)
    if method == "fast":
        from .hilbert import antichain_polynomial_fast
        return antichain_polynomial_fast(p, **kwargs)
    raise ValueError(f"unknown method {method!r}")


def is_antichain(p: Poset, s) -> bool:
    if not isinstance(s, int):
        s = set_to_mask(s)
    for v in iter_bits(s):
        if (p.up[v] | p.down[v]) & s & ~(1 << v):
            return False
    return True


# constructors

def chain(m: int) -> Poset:
    """The total order 0 < 1 < ... < m-1."""
    if m < 1:
        raise ValueError("chain length must be at least 1")
    full = (1 << m) - 1
    return Poset(m, [full & ~((1 << i) - 1) for i in range(m)])


def antichain(n: int) -> Poset:
    return Poset(n, [1 << i for i in range(n)])


def boolean_lattice(k: int) -> Poset:
    """Subsets of a k-set ordered by inclusion; element index = subset bitmask."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if k > 20:
        raise ValueError(f"boolean_lattice({k}) would have 2^{k} elements; limit is k <= 20")
    n = 1 << k
    up = []
    for s in range(n):
        free = (n - 1) & ~s
        # supersets of s are s | t for t a submask of the complement
        row = 0
        t = free
        while True:
            row |= 1 << (s | t)
            if t == 0:
                break
            t = (t - 1) & free
        up.append(row)
    return Poset(n, up)


def lex_product(p1: Poset, p2: Poset) -> Poset:
    """P1[P2]: (a, b) <= (c, d) iff a < c, or a == c and b <= d.
    Element (a, b) gets index a*|P2| + b."""
    n2 = p2.n
    up = []
    for a in range(p1.n):
        strictly_above = 0
        for c in iter_bits(p1.up[a] & ~(1 << a)):
            strictly_above |= ((1 << n2) - 1) << (c * n2)
        for b in range(n2):
            up.append(strictly_above | (p2.up[b] << (a * n2)))
    return Poset(p1.n * n2, up)


def random_poset(n: int, rng: random.Random, density: float | None = None) -> Poset:
    """Closure of a random DAG over a random element order."""
    if density is None:
        density = rng.choice([0.1, 0.25, 0.5])
    perm = list(range(n))
    rng.shuffle(perm)
    pairs = [(perm[i], perm[j]) for i in range(n) for j in range(i + 1, n)
             if rng.random() < density]
    return from_relations(n, pairs)


# text format

def parse_poset(text: str) -> Poset:
    n = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "poset":
                raise ValidationError("expected header 'poset <n>'", lineno)
            try:
                n = int(fields[1])
            except ValueError:
                raise ValidationError(f"bad element count {fields[1]!r}", lineno) from None
            if n < 0:
                raise ValidationError("element count must be non-negative", lineno)
            continue
        if len(fields) != 3 or fields[1] not in ("<", "<="):
            raise ValidationError(f"expected 'i <= j' or 'i < j', got {line!r}", lineno)
        try:
            i, j = int(fields[0]), int(fields[2])
        except ValueError:
            raise ValidationError(f"non-integer element in {line!r}", lineno) from None
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValidationError(f"element out of range 1..{n} in {line!r}", lineno)
        if fields[1] == "<" and i == j:
            raise ValidationError(f"strict relation needs distinct elements: {line!r}", lineno)
        pairs.append((i - 1, j - 1, lineno))
    if n is None:
        raise ValidationError("missing header 'poset <n>'")
    try:
        return from_relations(n, [(i, j) for i, j, _ in pairs])
    except ValidationError as exc:
        cycle = getattr(exc, "cycle", None)
        if cycle is None:
            raise
        where = {(i, j): ln for i, j, ln in reversed(pairs)}
        lines = sorted({where[e] for e in zip(cycle, cycle[1:])})
        raise ValidationError(str(exc), lines[-1]) from None


def format_poset(p: Poset, comments: Iterable[str] = ()) -> str:
    """Write the cover relation, 1-based."""
    lines = [f"# {c}" for c in comments]
    lines.append(f"poset {p.n}")
    lines.extend(f"{a + 1} < {b + 1}" for a, b in covers(p))
    return "\n".join(lines) + "\n"
