"""Monomials and minimally generated monomial ideals.

Variable ``i`` (0-based) corresponds to vertex ``i`` of a graph and is
rendered as ``x{i+1}``.
"""

from __future__ import annotations

import re
from typing import Iterable

from .errors import ValidationError
from .graph import Graph


class Monomial:
    """Sparse exponent vector; ``exps`` is a sorted tuple of (var, exp > 0)."""

    __slots__ = ("exps", "support", "degree", "_hash")

    def __init__(self, exps=()):
        if isinstance(exps, dict):
            items = exps.items()
        else:
            items = exps
        merged = {}
        for v, e in items:
            if v < 0 or e < 0:
                raise ValueError(f"bad variable/exponent ({v}, {e})")
            if e:
                merged[v] = merged.get(v, 0) + e
        self.exps = tuple(sorted(merged.items()))
        support = 0
        for v in merged:
            support |= 1 << v
        self.support = support
        self.degree = sum(merged.values())
        self._hash = hash(self.exps)

    @classmethod
    def var(cls, i: int, e: int = 1) -> "Monomial":
        return cls(((i, e),))

    def as_dict(self) -> dict:
        return dict(self.exps)

    def exponent(self, i: int) -> int:
        for v, e in self.exps:
            if v == i:
                return e
        return 0

    def divides(self, other: "Monomial") -> bool:
        if self.support & ~other.support:
            return False
        od = dict(other.exps)
        return all(od[v] >= e for v, e in self.exps)

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(self.exps + other.exps)

    def quotient(self, other: "Monomial") -> "Monomial":
        """self / other; ``other`` must divide ``self``."""
        d = dict(self.exps)
        for v, e in other.exps:
            left = d.get(v, 0) - e
            if left < 0:
                raise ValueError(f"{other} does not divide {self}")
            d[v] = left
        return Monomial(d)

    def gcd(self, other: "Monomial") -> "Monomial":
        od = dict(other.exps)
        return Monomial((v, min(e, od[v])) for v, e in self.exps if v in od)

    def lcm(self, other: "Monomial") -> "Monomial":
        d = dict(self.exps)
        for v, e in other.exps:
            d[v] = max(d.get(v, 0), e)
        return Monomial(d)

    def colon(self, other: "Monomial") -> "Monomial":
        """m / gcd(m, p): the generator of <m> : p."""
        return self.quotient(self.gcd(other))

    def sort_key(self):
        return tuple((v, -e) for v, e in self.exps)

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exps == other.exps

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        return f"Monomial({self})"

    def __str__(self):
        if not self.exps:
            return "1"
        return "*".join(f"x{v + 1}" if e == 1 else f"x{v + 1}^{e}" for v, e in self.exps)

    def to_json(self) -> dict:
        return {str(v + 1): e for v, e in self.exps}


ONE = Monomial()


def interreduce(gens: Iterable[Monomial]) -> "MonomialIdeal":
    return MonomialIdeal(gens)


def _minimalize(gens: Iterable[Monomial]) -> frozenset:
    kept = []
    for m in sorted(set(gens), key=lambda m: m.degree):
        if not any(k.divides(m) for k in kept):
            kept.append(m)
    return frozenset(kept)


class MonomialIdeal:
    """Monomial ideal held by its (unique) minimal generating set."""

    __slots__ = ("gens",)

    def __init__(self, gens: Iterable[Monomial] = (), minimal: bool = False):
        self.gens = frozenset(gens) if minimal else _minimalize(gens)

    def sorted_gens(self) -> list:
        return sorted(self.gens)

    def contains(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.gens)

    def is_zero(self) -> bool:
        return not self.gens

    def sum_deg(self) -> int:
        return sum(m.degree for m in self.gens)

    def pairwise_coprime(self) -> bool:
        seen = 0
        for m in self.gens:
            if seen & m.support:
                return False
            seen |= m.support
        return True

    def colon(self, p: Monomial) -> "MonomialIdeal":
        return MonomialIdeal(m.colon(p) for m in self.gens)

    def colon_by_variable(self, i: int) -> "MonomialIdeal":
        bit = 1 << i
        out = []
        for m in self.gens:
            if m.support & bit:
                e = m.exponent(i)
                out.append(Monomial((v, e - 1 if v == i else e) for v, e in m.exps))
            else:
                out.append(m)
        return MonomialIdeal(out)

    def add_monomial(self, p: Monomial) -> "MonomialIdeal":
        if self.contains(p):
            return self
        return MonomialIdeal([m for m in self.gens if not p.divides(m)] + [p], minimal=True)

    def add_variable(self, i: int) -> "MonomialIdeal":
        return self.add_monomial(Monomial.var(i))

    def max_variable(self) -> int:
        """Highest variable index used, or -1."""
        support = 0
        for m in self.gens:
            support |= m.support
        return support.bit_length() - 1

    def __eq__(self, other):
        return isinstance(other, MonomialIdeal) and self.gens == other.gens

    def __hash__(self):
        return hash(self.gens)

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.sorted_gens())

    def __repr__(self):
        return f"MonomialIdeal<{self}>"

    def __str__(self):
        return ", ".join(str(m) for m in self.sorted_gens())

    def to_json(self) -> list:
        return [m.to_json() for m in self.sorted_gens()]

    @classmethod
    def from_json(cls, data) -> "MonomialIdeal":
        return cls(Monomial((int(v) - 1, e) for v, e in d.items()) for d in data)


# module-level operation aliases

def colon_by_variable(ideal: MonomialIdeal, i: int) -> MonomialIdeal:
    return ideal.colon_by_variable(i)


def add_variable(ideal: MonomialIdeal, i: int) -> MonomialIdeal:
    return ideal.add_variable(i)


def pairwise_coprime(ideal: MonomialIdeal) -> bool:
    return ideal.pairwise_coprime()


def sum_deg(ideal: MonomialIdeal) -> int:
    return ideal.sum_deg()


def edge_ideal(g: Graph) -> MonomialIdeal:
    """I'_G = <x_i x_j : ij an edge>."""
    return MonomialIdeal((Monomial(((i, 1), (j, 1))) for i, j in g.edges()), minimal=True)


def modified_edge_ideal(g: Graph) -> MonomialIdeal:
    """I_G = I'_G + <x_i^2 : all i>."""
    gens = [Monomial.var(i, 2) for i in range(g.n)]
    gens += [Monomial(((i, 1), (j, 1))) for i, j in g.edges()]
    return MonomialIdeal(gens, minimal=True)


def check_edge_ideal_structure(ideal: MonomialIdeal, n_vars: int, g: Graph | None = None) -> None:
    """Assert the shape every ideal reachable from I_G has: each variable
    occurs as a generator x_i or x_i^2, and every other generator is an edge
    monomial x_i x_j between two squared variables (and an edge of ``g``)."""
    power = {}
    edges = []
    for m in ideal.gens:
        if len(m.exps) == 1 and m.exps[0][1] in (1, 2):
            v, e = m.exps[0]
            power[v] = e
        elif m.degree == 2 and len(m.exps) == 2:
            edges.append(m.exps)
        else:
            raise AssertionError(f"unexpected generator {m}")
    if sorted(power) != list(range(n_vars)):
        raise AssertionError(f"variables missing as pure powers: "
                             f"{sorted(set(range(n_vars)) - set(power))}")
    for (i, _), (j, _) in edges:
        if power[i] != 2 or power[j] != 2:
            raise AssertionError(f"edge monomial x{i + 1}*x{j + 1} on a non-squared variable")
        if g is not None and not g.has_edge(i, j):
            raise AssertionError(f"x{i + 1}*x{j + 1} is not an edge of the graph")


_TOKEN = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str) -> Monomial:
    text = text.replace(" ", "")
    if text == "1":
        return ONE
    exps = []
    for factor in text.split("*"):
        match = _TOKEN.match(factor)
        if not match:
            raise ValueError(f"malformed factor {factor!r}")
        v = int(match.group(1))
        if v < 1:
            raise ValueError(f"variable index must be >= 1 in {factor!r}")
        exps.append((v - 1, int(match.group(2) or 1)))
    return Monomial(exps)


def parse_ideal(text: str) -> tuple:
    """Parse ``ideal <n_vars>`` then one monomial per line.

    Returns ``(ideal, n_vars, changed)``; ``changed`` is True when
    interreduction dropped or merged any listed generator.
    """
    n_vars = None
    listed = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n_vars is None:
            fields = line.split()
            if len(fields) != 2 or fields[0] != "ideal":
                raise ValidationError("expected header 'ideal <n_vars>'", lineno)
            try:
                n_vars = int(fields[1])
            except ValueError:
                raise ValidationError(f"bad variable count {fields[1]!r}", lineno) from None
            if n_vars < 0:
                raise ValidationError("variable count must be non-negative", lineno)
            continue
        try:
            m = parse_monomial(line)
        except ValueError as exc:
            raise ValidationError(f"malformed monomial {line!r}: {exc}", lineno) from None
        if m.support >> n_vars:
            raise ValidationError(f"monomial {line!r} uses a variable beyond x{n_vars}", lineno)
        listed.append(m)
    if n_vars is None:
        raise ValidationError("missing header 'ideal <n_vars>'")
    ideal = MonomialIdeal(listed)
    changed = len(ideal.gens) != len(listed)
    return ideal, n_vars, changed


def format_ideal(ideal: MonomialIdeal, n_vars: int) -> str:
    lines = [f"ideal {n_vars}"] + [str(m) for m in ideal.sorted_gens()]
    return "\n".join(lines) + "\n"
