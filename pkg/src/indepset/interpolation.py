"""Recover A(P, x) from evaluations A(P[K_m], t), m = 1..n+1.

For a poset on n elements, A(P, x) = sum_k c_k x^k has degree <= n, and
A(P[K_m], t) = A(P, m t).  The n+1 values at the distinct nodes m*t give a
Vandermonde system for c_0..c_n, which is solved exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import ConsistencyError
from .hilbert import MAX_DEGREE, PivotStrategy, antichain_polynomial_fast
from .polynomial import Polynomial, eval_rational
from .poset import Poset, chain, lex_product


class SingularSystemError(ArithmeticError):
    pass


@dataclass
class VandermondeSystem:
    """``rows[m-1][k] = (m t)^k`` and ``rhs[m-1] = A(P, m t)`` for m = 1..size.

    ``rows`` is the transpose of the matrix with entries (j t)^(i-1); the
    unknowns are the coefficients c_0..c_n.
    """

    t: Fraction
    rows: list
    rhs: list

    @property
    def size(self) -> int:
        return len(self.rows)

    def to_json(self) -> dict:
        return {
            "t": str(self.t),
            "nodes": [str(m * self.t) for m in range(1, self.size + 1)],
            "matrix": [[str(x) for x in row] for row in self.rows],
            "rhs": [str(y) for y in self.rhs],
        }


def evaluate_lex_route(p: Poset, t: Fraction, m: int,
                       strategy: PivotStrategy = MAX_DEGREE) -> Fraction:
    """A(P[K_m], t) from the antichain polynomial of the product poset."""
    return Fraction(eval_rational(antichain_polynomial_fast(lex_product(p, chain(m)), strategy), t))


def evaluate_direct_route(a: Polynomial, t: Fraction, m: int) -> Fraction:
    """A(P, m t) from the antichain polynomial of P itself."""
    return Fraction(eval_rational(a, m * t))


def build_system(p: Poset, t, evaluator: str = "both",
                 strategy: PivotStrategy = MAX_DEGREE) -> VandermondeSystem:
    """Evaluations at m*t for m = 1..n+1.

    ``evaluator`` is ``"lex"``, ``"direct"``, or ``"both"`` (compute both and
    raise ConsistencyError if any right-hand side differs).
    """
    t = Fraction(t)
    if t == 0:
        raise SingularSystemError("t = 0 makes every node coincide")
    if evaluator not in ("lex", "direct", "both"):
        raise ValueError(f"unknown evaluator {evaluator!r}")
    size = p.n + 1
    rows = [[(m * t) ** k for k in range(size)] for m in range(1, size + 1)]
    lex = direct = None
    if evaluator in ("lex", "both"):
        lex = [evaluate_lex_route(p, t, m, strategy) for m in range(1, size + 1)]
    if evaluator in ("direct", "both"):
        a = antichain_polynomial_fast(p, strategy)
        direct = [evaluate_direct_route(a, t, m) for m in range(1, size + 1)]
    if lex is not None and direct is not None and lex != direct:
        bad = next(m for m in range(size) if lex[m] != direct[m]) + 1
        raise ConsistencyError(f"A(P[K_{bad}], {t}) = {lex[bad - 1]} but "
                               f"A(P, {bad * t}) = {direct[bad - 1]}")
    return VandermondeSystem(t, rows, lex if lex is not None else direct)


def bareiss_solve(matrix, rhs) -> list:
    """Solve a square integer system exactly by fraction-free elimination.

    Returns the solution as Fractions; raises SingularSystemError.
    """
    n = len(matrix)
    a = [list(row) + [b] for row, b in zip(matrix, rhs)]
    prev = 1
    for k in range(n):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                raise SingularSystemError(f"matrix is singular (column {k})")
            a[k], a[swap] = a[swap], a[k]
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n + 1):
                # exact by Sylvester's identity
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        s = Fraction(a[i][n]) - sum(a[i][j] * x[j] for j in range(i + 1, n))
        x[i] = s / a[i][i]
    return x


def solve_system(system: VandermondeSystem) -> list:
    """Coefficients c_0..c_n as Fractions.

    With t = a/b, scaling unknown k by b^k turns the nodes into the integers
    m*a; scaling all rows by a common denominator clears the right side.
    """
    a, b = system.t.numerator, system.t.denominator
    size = system.size
    int_rows = [[(m * a) ** k for k in range(size)] for m in range(1, size + 1)]
    den = lcm(*(y.denominator for y in system.rhs))
    int_rhs = [int(y * den) for y in system.rhs]
    scaled = bareiss_solve(int_rows, int_rhs)
    return [c * b ** k / den for k, c in enumerate(scaled)]


def recover_coefficients(p: Poset, t, evaluator: str = "both",
                         strategy: PivotStrategy = MAX_DEGREE) -> Polynomial:
    """Antichain polynomial of ``p`` reconstructed from n+1 evaluations."""
    coeffs = solve_system(build_system(p, t, evaluator, strategy))
    if any(c.denominator != 1 for c in coeffs):
        raise ConsistencyError(f"non-integer coefficient in {[str(c) for c in coeffs]}")
    return Polynomial(int(c) for c in coeffs)


def brown_identity_check(p: Poset, m: int, t) -> bool:
    """A(P[K_m], t) == A(P, A(K_m, t) - 1), both sides evaluated exactly."""
    if m < 1:
        raise ValueError("m must be at least 1")
    t = Fraction(t)
    lhs = eval_rational(antichain_polynomial_fast(lex_product(p, chain(m))), t)
    inner = eval_rational(antichain_polynomial_fast(chain(m)), t) - 1
    rhs = eval_rational(antichain_polynomial_fast(p), inner)
    return lhs == rhs
