"""Dense univariate polynomials with exact integer coefficients.

The zero polynomial is stored as the empty coefficient tuple; every other
polynomial has a non-zero leading coefficient.  Evaluation points are
:class:`fractions.Fraction` values (aliased here as ``Rational``).
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction
Number = Union[int, Fraction]


class InexactDivisionError(ArithmeticError):
    """Raised when a polynomial division leaves a non-zero remainder."""


def _trim(coeffs: Sequence[int]) -> tuple:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


class Polynomial:
    """Immutable polynomial in ``z``; ``coeffs[i]`` is the coefficient of z^i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = []
        for c in coeffs:
            if isinstance(c, bool) or not isinstance(c, int):
                raise TypeError(f"coefficients must be integers, got {c!r}")
            cs.append(c)
        object.__setattr__(self, "coeffs", _trim(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def _raw(cls, coeffs: tuple) -> "Polynomial":
        # trusted constructor: coeffs already trimmed ints
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", coeffs)
        return p

    @classmethod
    def constant(cls, c: int) -> "Polynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, c: int, d: int) -> "Polynomial":
        return cls((0,) * d + (c,))

    @classmethod
    def one_minus_z_power(cls, d: int, e: int = 1) -> "Polynomial":
        """(1 - z^d)^e."""
        base = cls((1,) + (0,) * (d - 1) + (-1,)) if d > 0 else cls()
        return base ** e

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _trim((other,))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)})"

    def __str__(self):
        return self.to_text()

    # arithmetic

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return Polynomial._raw(add_coeffs(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return Polynomial._raw(mul_coeffs(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = (1,)
        base = self.coeffs
        while e:
            if e & 1:
                result = mul_coeffs(result, base)
            e >>= 1
            if e:
                base = mul_coeffs(base, base)
        return Polynomial._raw(result)

    def shift(self, d: int) -> "Polynomial":
        return shift(self, d)

    def __call__(self, t: Number) -> Number:
        return eval_rational(self, t)

    def scale_argument(self, c: Number) -> "Polynomial":
        """Return p(c*z); ``c`` must keep the coefficients integral."""
        out = []
        power = Fraction(1)
        for a in self.coeffs:
            v = a * power
            if v.denominator != 1:
                raise ValueError("scaling produces non-integer coefficients")
            out.append(int(v))
            power *= c
        return Polynomial(out)

    # rendering

    def to_text(self) -> str:
        """Render as ``c0 + c1*z + c2*z^2``, omitting zero terms."""
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                zpow = "z" if i == 1 else f"z^{i}"
                body = zpow if mag == 1 else f"{mag}*{zpow}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def to_json(self) -> list:
        """Coefficients as decimal strings, lowest degree first."""
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data) -> "Polynomial":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(c) for c in data)


def _coerce(x):
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Polynomial((x,))
    return None


def add_coeffs(a: tuple, b: tuple) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def mul_coeffs(a: tuple, b: tuple) -> tuple:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def shift(p: Polynomial, d: int) -> Polynomial:
    """Multiply by z^d."""
    if d < 0:
        raise ValueError("shift amount must be non-negative")
    if not p.coeffs:
        return p
    return Polynomial._raw((0,) * d + p.coeffs)


def divmod_poly(p: Polynomial, q: Polynomial) -> tuple:
    """Long division from the top; requires q's leading coefficient to divide
    every intermediate leading coefficient, else raises InexactDivisionError."""
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(p.coeffs)
    dq = q.degree
    lead = q.coeffs[-1]
    if len(rem) <= dq:
        return Polynomial(), p
    quot = [0] * (len(rem) - dq)
    for k in range(len(rem) - 1 - dq, -1, -1):
        c = rem[k + dq]
        if c == 0:
            continue
        f, r = divmod(c, lead)
        if r:
            raise InexactDivisionError(
                f"leading coefficient {c} not divisible by {lead}")
        quot[k] = f
        for j, qc in enumerate(q.coeffs):
            rem[k + j] -= f * qc
    return Polynomial(quot), Polynomial(rem)


def divide_exact(p: Polynomial, q: Polynomial) -> Polynomial:
    """Return r with r*q == p, or raise InexactDivisionError."""
    quot, rem = divmod_poly(p, q)
    if not rem.is_zero():
        raise InexactDivisionError(f"({p}) is not divisible by ({q}); remainder {rem}")
    return quot


def eval_rational(p: Polynomial, t: Number) -> Number:
    """Exact Horner evaluation.  Integers in, integer out."""
    if isinstance(t, float):
        raise TypeError("floating-point evaluation is not supported")
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * t + c
    return acc


ONE = Polynomial((1,))
ZERO = Polynomial()
