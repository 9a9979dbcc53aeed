"""Binomial ideals attached to a poset and their universal Groebner basis.

For a poset on elements 0..n-1 (variable x_{i+1} for element i):

* ``jp_generators``: x_i - x_i * prod_{j <= i} x_j, one per element.
* ``jp_cover_generators``: the same with the product over i and its lower covers.
* ``groebner_basis``: x_i^2 - x_i for every i and x_i x_j - x_i for every j < i.

Every basis element has a trailing term that strictly divides its leading
term, so the leading term is the same under every monomial order and one
reduction routine serves all of them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import ValidationError
from .graph import iter_bits
from .monomial_ideal import Monomial, MonomialIdeal
from .poset import Poset, is_antichain, lower_covers


# sparse multivariate polynomials: dict Monomial -> int, no zero coefficients

def poly_add(f: dict, g: dict, scale: int = 1) -> dict:
    out = dict(f)
    for m, c in g.items():
        v = out.get(m, 0) + scale * c
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


def poly_mul_monomial(f: dict, m: Monomial) -> dict:
    return {t * m: c for t, c in f.items()}


def poly_to_text(f: dict) -> str:
    if not f:
        return "0"
    terms = sorted(f.items(), key=lambda mc: (-mc[0].degree, mc[0].sort_key()))
    parts = []
    for m, c in terms:
        body = str(m)
        mag = abs(c)
        if mag != 1:
            body = f"{mag}" if body == "1" else f"{mag}*{body}"
        sign = "-" if c < 0 else "+"
        parts.append(f"-{body}" if not parts and c < 0 else body if not parts else f"{sign} {body}")
    return " ".join(parts)


def poly_to_json(f: dict) -> list:
    terms = sorted(f.items(), key=lambda mc: (-mc[0].degree, mc[0].sort_key()))
    return [{"coeff": str(c), "monomial": m.to_json()} for m, c in terms]


def poly_eval_01(f: dict, point) -> int:
    """Evaluate at a 0/1 point given as a tuple or as a bitmask of ones."""
    if not isinstance(point, int):
        point = sum(1 << i for i, a in enumerate(point) if a)
    return sum(c for m, c in f.items() if m.support & point == m.support)


def poly_eval(f: dict, point) -> int:
    total = 0
    for m, c in f.items():
        term = c
        for v, e in m.exps:
            term *= point[v] ** e
        total += term
    return total


@dataclass(frozen=True)
class Binomial:
    """lead - trail, both with coefficient one."""

    lead: Monomial
    trail: Monomial
    label: tuple

    def __post_init__(self):
        if self.lead == self.trail:
            raise ValueError("lead and trail coincide")

    def as_poly(self) -> dict:
        return {self.lead: 1, self.trail: -1}

    def __str__(self):
        if self.label[0] == "sq":
            i = self.label[1]
            return f"x{i + 1}^2 - x{i + 1}"
        _, j, i = self.label
        return f"x{i + 1}*x{j + 1} - x{i + 1}"


@dataclass(frozen=True)
class ProductGenerator:
    """x_i - x_i * prod(x_j for j in factors); ``factors`` includes i."""

    element: int
    factors: tuple

    def as_poly(self) -> dict:
        x_i = Monomial.var(self.element)
        prod = Monomial((j, 1) for j in self.factors)
        return poly_add({x_i: 1}, {x_i * prod: 1}, scale=-1)

    def __str__(self):
        i = self.element + 1
        prod = "*".join(f"x{j + 1}" for j in self.factors)
        return f"x{i} - x{i}*{prod}"


@dataclass(frozen=True)
class GeneratorSet:
    kind: str            # "Jp", "JpCover" or "Gb"
    n: int
    generators: tuple
    order: tuple         # a linear extension, used to prune variety sweeps

    def polys(self) -> list:
        return [g.as_poly() for g in self.generators]

    def __len__(self):
        return len(self.generators)

    def to_text(self) -> str:
        return "\n".join(str(g) for g in self.generators)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "generators": [{"text": str(g), "terms": poly_to_json(g.as_poly())}
                           for g in self.generators],
        }


def jp_generators(p: Poset) -> GeneratorSet:
    gens = tuple(ProductGenerator(i, tuple(iter_bits(p.down[i]))) for i in range(p.n))
    return GeneratorSet("Jp", p.n, gens, tuple(p.linear_extension()))


def jp_cover_generators(p: Poset) -> GeneratorSet:
    gens = tuple(ProductGenerator(i, tuple(iter_bits(lower_covers(p, i) | 1 << i)))
                 for i in range(p.n))
    return GeneratorSet("JpCover", p.n, gens, tuple(p.linear_extension()))


def groebner_basis(p: Poset) -> GeneratorSet:
    gens = [Binomial(Monomial.var(i, 2), Monomial.var(i), ("sq", i)) for i in range(p.n)]
    for j, i in p.strict_pairs():
        gens.append(Binomial(Monomial(((i, 1), (j, 1))), Monomial.var(i), ("rel", j, i)))
    return GeneratorSet("Gb", p.n, tuple(gens), tuple(p.linear_extension()))


def leading_term_ideal(p: Poset) -> MonomialIdeal:
    return MonomialIdeal(b.lead for b in groebner_basis(p).generators)


# -- Buchberger verification --------------------------------------------------

def s_polynomial(f: Binomial, g: Binomial) -> dict:
    lcm = f.lead.lcm(g.lead)
    return poly_add(poly_mul_monomial(f.as_poly(), lcm.quotient(f.lead)),
                    poly_mul_monomial(g.as_poly(), lcm.quotient(g.lead)), scale=-1)


def _reducer_for(m: Monomial, leads: dict):
    vars_ = [v for v, _ in m.exps]
    for v, e in m.exps:
        if e >= 2:
            b = leads.get(Monomial.var(v, 2))
            if b is not None:
                return b
    for a, c in combinations(vars_, 2):
        b = leads.get(Monomial(((a, 1), (c, 1))))
        if b is not None:
            return b
    return None


def normal_form(f: dict, basis) -> dict:
    """Reduce ``f`` until no term is divisible by a leading term of ``basis``.

    Each step replaces a term c*m (lead | m) by c*(m/lead)*trail, which has
    strictly smaller degree, so the loop terminates whatever term is picked.
    Requires every lead to be a square or a product of two distinct variables.
    """
    leads = {b.lead: b for b in basis}
    f = dict(f)
    while True:
        target = None
        for m in sorted(f, key=lambda m: (-m.degree, m.sort_key())):
            b = _reducer_for(m, leads)
            if b is not None:
                target = (m, b)
                break
        if target is None:
            return f
        m, b = target
        c = f.pop(m)
        f = poly_add(f, {m.quotient(b.lead) * b.trail: c})


@dataclass
class BuchbergerReport:
    pairs_checked: int = 0
    failures: list = field(default_factory=list)
    reduced: bool = True
    non_redundant: bool = True
    order_independent_leads: bool = True
    membership_failures: list = field(default_factory=list)
    problems: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (not self.failures and self.reduced and self.non_redundant
                and self.order_independent_leads and not self.membership_failures)

    def to_json(self) -> dict:
        return {
            "pairs_checked": self.pairs_checked,
            "failures": self.failures,
            "reduced": self.reduced,
            "non_redundant": self.non_redundant,
            "order_independent_leads": self.order_independent_leads,
            "membership_failures": self.membership_failures,
            "problems": self.problems,
            "ok": self.ok,
        }


def verify_basis(basis) -> BuchbergerReport:
    """Buchberger criterion plus reducedness for a list of Binomials."""
    basis = list(basis)
    report = BuchbergerReport()
    for b in basis:
        if not (b.trail.divides(b.lead) and b.trail.degree < b.lead.degree):
            report.order_independent_leads = False
            report.problems.append(f"{b}: trail does not strictly divide lead")
    for f, g in combinations(basis, 2):
        report.pairs_checked += 1
        rem = normal_form(s_polynomial(f, g), basis)
        if rem:
            report.failures.append({"pair": [str(f), str(g)], "remainder": poly_to_text(rem)})
    for b in basis:
        for c in basis:
            if c is b:
                continue
            if c.lead.divides(b.lead):
                report.non_redundant = False
                report.problems.append(f"lead of {c} divides lead of {b}")
            if c.lead.divides(b.trail):
                report.reduced = False
                report.problems.append(f"lead of {c} divides trailing term of {b}")
    return report


def verify_buchberger(p: Poset) -> BuchbergerReport:
    """Check that Gb_P is a reduced Groebner basis containing J_P and J'_P.

    The membership part reduces every generator of both presentations of
    J_P to normal form modulo Gb_P; zero means it lies in the ideal spanned
    by the basis.
    """
    gb = groebner_basis(p)
    report = verify_basis(gb.generators)
    for gens in (jp_generators(p), jp_cover_generators(p)):
        for g in gens.generators:
            rem = normal_form(g.as_poly(), gb.generators)
            if rem:
                report.membership_failures.append(
                    {"generator": str(g), "kind": gens.kind, "remainder": poly_to_text(rem)})
    return report


# -- varieties and the antichain bijection ---------------------------------

MAX_VARIETY_VARS = 30


def enumerate_variety(gens: GeneratorSet, n: int | None = None) -> list:
    """All 0/1 points annihilating every generator, sorted as bitstrings.

    Variables are assigned along ``gens.order``; a generator is checked as
    soon as its last variable is assigned, which prunes every branch that
    breaks down-closure immediately when the order is a linear extension.
    """
    if n is None:
        n = gens.n
    if n > MAX_VARIETY_VARS:
        raise ValueError(f"variety sweep over {n} variables exceeds the limit of {MAX_VARIETY_VARS}")
    order = list(gens.order) if len(gens.order) == n else list(range(n))
    position = {v: k for k, v in enumerate(order)}
    checks = [[] for _ in range(n)]
    for poly in gens.polys():
        support = 0
        for m in poly:
            support |= m.support
        if support >> n:
            raise ValueError("generator uses variables beyond n")
        terms = [(c, m.support) for m, c in poly.items()]
        last = max((position[v] for v in iter_bits(support)), default=0)
        if not support:
            if sum(c for c, _ in terms):
                return []
            continue
        checks[last].append(terms)

    found = []

    def rec(k: int, ones: int):
        if k == n:
            found.append(tuple((ones >> i) & 1 for i in range(n)))
            return
        bit = 1 << order[k]
        for value in (ones, ones | bit):
            if all(sum(c for c, s in terms if value & s == s) == 0 for terms in checks[k]):
                rec(k + 1, value)

    rec(0, 0)
    found.sort()
    return found


def point_to_text(a) -> str:
    return "".join(str(x) for x in a)


def in_variety(p: Poset, a) -> bool:
    """a is a 0/1 vector whose ones form a down-set (the 0/1 zeros of J_P)."""
    if len(a) != p.n or any(x not in (0, 1) for x in a):
        return False
    ones = sum(1 << i for i, x in enumerate(a) if x)
    return all(p.down[i] & ones == p.down[i] for i in iter_bits(ones))


def bijection_f(p: Poset, a) -> frozenset:
    """Maximal elements of the down-set encoded by ``a``."""
    if not in_variety(p, a):
        raise ValidationError(f"{point_to_text(a)} is not a point of V(J_P)")
    ones = sum(1 << i for i, x in enumerate(a) if x)
    return frozenset(i for i in iter_bits(ones) if not (p.up[i] & ones & ~(1 << i)))


def bijection_g(p: Poset, s) -> tuple:
    """Indicator vector of the down-set generated by the antichain ``s``."""
    s = frozenset(s)
    if any(not (0 <= v < p.n) for v in s) or not is_antichain(p, s):
        raise ValidationError(f"{sorted(v + 1 for v in s)} is not an antichain")
    ones = 0
    for v in s:
        ones |= p.down[v]
    return tuple((ones >> i) & 1 for i in range(p.n))


def radical_membership_check(p: Poset) -> bool:
    """V(J_P) == V(J'_P) pointwise, and every x_i^2 - x_i vanishes there."""
    if p.n > 12:
        raise ValueError("radical_membership_check is limited to n <= 12")
    v_full = enumerate_variety(jp_generators(p))
    v_cover = enumerate_variety(jp_cover_generators(p))
    if v_full != v_cover:
        return False
    squares = [{Monomial.var(i, 2): 1, Monomial.var(i): -1} for i in range(p.n)]
    return all(poly_eval(f, a) == 0 for a in v_cover for f in squares)
