"""Exact integer polynomials and closed-form counts.

Everything here works over Python ints (and ``fractions.Fraction`` where a
formula divides), so counts never lose precision.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Sequence

ActivityVector = tuple[int, ...]


class IntPolynomial:
    """Polynomial with integer coefficients, ``coeffs[i]`` multiplying ``x**i``.

    Trailing zeros are stripped, so the zero polynomial has ``coeffs == ()``.
    Instances are immutable and hashable.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._coeffs = tuple(c)

    @classmethod
    def x(cls) -> IntPolynomial:
        return cls((0, 1))

    @classmethod
    def const(cls, a: int) -> IntPolynomial:
        return cls((a,))

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def __call__(self, x):
        return poly_eval(self, x)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial.const(other)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __bool__(self):
        return bool(self._coeffs)

    def _coerce(self, other) -> IntPolynomial:
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial.const(other)
        raise TypeError(f"cannot combine IntPolynomial with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return IntPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-a for a in self._coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, u in enumerate(a):
            if u:
                for j, v in enumerate(b):
                    out[i + j] += u * v
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        out = IntPolynomial.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def compose(self, inner: IntPolynomial) -> IntPolynomial:
        """Return ``self(inner(x))`` by Horner's scheme."""
        out = IntPolynomial()
        for a in reversed(self._coeffs):
            out = out * inner + a
        return out

    def shift_down(self, k: int = 1) -> IntPolynomial:
        """Exact division by ``x**k``; raises if the low coefficients are nonzero."""
        if any(self._coeffs[:k]):
            raise ValueError(f"polynomial is not divisible by x^{k}")
        return IntPolynomial(self._coeffs[k:])

    def __repr__(self):
        return f"IntPolynomial({list(self._coeffs)})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        terms = []
        for i in range(len(self._coeffs) - 1, -1, -1):
            a = self._coeffs[i]
            if a == 0:
                continue
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            if i == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else f"{mag}*") + ("x" if i == 1 else f"x^{i}")
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        s = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s


def poly_eval(p: IntPolynomial, x):
    """Evaluate ``p`` at ``x`` (int or Fraction) exactly."""
    acc = 0
    for a in reversed(p.coeffs):
        acc = acc * x + a
    return acc


def rising_factorial_shifted(n: int) -> IntPolynomial:
    """``x (x+1) ... (x+n-2)``, the activity polynomial of the braid graph on n vertices.

    For ``n == 1`` the product is empty and the constant 1 is returned.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    out = IntPolynomial.const(1)
    for j in range(n - 1):
        out = out * IntPolynomial((j, 1))
    return out


def unsigned_stirling_first(n: int, k: int) -> int:
    """Number of permutations of n elements with exactly k cycles."""
    if n == k:
        return 1
    if k <= 0 or k > n:
        return 0
    row = [1]  # c(0, .)
    for m in range(1, n + 1):
        new = [0] * (m + 1)
        for j in range(1, m + 1):
            new[j] = (row[j - 1] if j - 1 < len(row) else 0) + (m - 1) * (row[j] if j < len(row) else 0)
        row = new
    return row[k]


def athanasiadis_bounded(n: int) -> int:
    """Bounded-region count of the Linial arrangement from Athanasiadis' formula.

    ``2**-n * sum_j C(n, j) (j-1)**(n-1)``, evaluated with exact rationals.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    total = sum(Fraction(comb(n, j) * (j - 1) ** (n - 1)) for j in range(n + 1))
    value = total / 2**n
    if value.denominator != 1:
        raise ArithmeticError(f"Athanasiadis sum for n={n} is not an integer: {value}")
    return int(value)


def activity_poly_from_vector(vector: Sequence[int]) -> IntPolynomial:
    """The generating polynomial ``sum a_i x**i`` of an activity vector."""
    if any(a < 0 for a in vector):
        raise ValueError(f"activity vector has a negative entry: {tuple(vector)}")
    return IntPolynomial(vector)


def shi_activity_count(n: int, k: int) -> int:
    """``C(n-1, k) (n-1)**(n-1-k)``: rooted trees on [n] where n has k children."""
    return comb(n - 1, k) * (n - 1) ** (n - 1 - k)


def decreasing_tree_count(n: int) -> int:
    return factorial(n - 1)
