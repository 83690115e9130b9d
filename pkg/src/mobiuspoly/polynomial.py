"""Exact univariate polynomial arithmetic over the integers.

A polynomial is stored as a tuple of Python ints in ascending powers of z,
e.g. (1, -4, 4) for 1 - 4z + 4z^2.  The tuple carries no trailing zeros;
the zero polynomial is the empty tuple.  Python ints make every operation
exact at arbitrary precision, so no normalization beyond stripping zeros
is ever needed.

`RationalSeries` pairs two polynomials num/den and expands the power
series of their quotient by the standard linear recurrence; coefficients
stay exact integers whenever den has constant term +-1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError


class IntPolynomial:
    """Immutable dense polynomial with integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = tuple(coeffs)
        n = len(coeffs)
        while n and coeffs[n - 1] == 0:
            n -= 1
        self.coeffs = coeffs[:n]

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, coeff: int, power: int) -> "IntPolynomial":
        if power < 0:
            raise InputError(f"negative power {power} in monomial")
        return cls((0,) * power + (coeff,))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    @staticmethod
    def _coerce(other):
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial((other,))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise InputError(f"polynomial power must be a nonnegative int, got {n!r}")
        result = IntPolynomial((1,))
        for _ in range(n):
            result = result * self
        return result

    def substitute_power(self, n: int) -> "IntPolynomial":
        """Return p(z^n): the coefficient of z^i moves to z^(n*i)."""
        if n < 1:
            raise InputError(f"substitution power must be >= 1, got {n}")
        if n == 1 or not self.coeffs:
            return self
        out = [0] * ((len(self.coeffs) - 1) * n + 1)
        for i, c in enumerate(self.coeffs):
            out[i * n] = c
        return IntPolynomial(out)

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __str__(self):
        # Canonical text form: ascending powers, " + "/" - " joiners,
        # unit coefficients suppressed except on the constant term.
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                term = str(mag)
            elif i == 1:
                term = "z" if mag == 1 else f"{mag}*z"
            else:
                term = f"z^{i}" if mag == 1 else f"{mag}*z^{i}"
            if not parts:
                parts.append(term if c > 0 else "-" + term)
            else:
                parts.append(("+ " if c > 0 else "- ") + term)
        return " ".join(parts)

    def __repr__(self):
        return f"IntPolynomial({self.coeffs!r})"


ZERO = IntPolynomial()
ONE = IntPolynomial((1,))
Z = IntPolynomial((0, 1))


@dataclass(frozen=True)
class RationalSeries:
    """Power series num/den, kept unsimplified (no num/den cancellation)."""

    num: IntPolynomial
    den: IntPolynomial

    def expand(self, k: int) -> list[int]:
        """Exact coefficients c_0..c_k of the power series num/den.

        Uses the recurrence c_m = num_m - sum_{j>=1} den_j * c_{m-j}, which
        needs den to have constant term 1 (a -1 is normalized away first).
        """
        if k < 0:
            raise InputError(f"expansion length must be >= 0, got {k}")
        num, den = self.num, self.den
        d0 = den.coefficient(0)
        if d0 == 0:
            raise InputError("series undefined at 0: denominator constant term is 0")
        if d0 == -1:
            num, den = -num, -den
        elif d0 != 1:
            raise InputError(
                f"denominator constant term must be +-1 for integer expansion, got {d0}"
            )
        coeffs: list[int] = []
        for m in range(k + 1):
            acc = num.coefficient(m)
            for j in range(1, min(m, den.degree) + 1):
                acc -= den.coefficient(j) * coeffs[m - j]
            coeffs.append(acc)
        return coeffs

    def __str__(self):
        return f"({self.num})/({self.den})"
