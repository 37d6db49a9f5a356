"""Dense univariate polynomials over exact rationals.

Polynomials are immutable, stored lowest degree first, and kept canonical by
trimming trailing zeros, so identity checks are literal ``==`` comparisons.
The zero polynomial is the empty coefficient tuple.  Scalars (``int`` or
``Fraction``) mix freely in arithmetic and compare equal to constant
polynomials, which lets polynomial-valued and rational-valued code share the
same formulas.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Polynomial",
    "X",
    "BasisKind",
    "Basis",
    "BasisExpansion",
    "falling_factorial_poly",
    "falling_factorial_value",
    "to_falling_basis",
    "from_falling_basis",
    "expand_in_monic_basis",
]

_SCALARS = (int, Fraction)


class Polynomial:
    """Polynomial in x with exact rational coefficients; ``coeffs[i] * x**i``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Fraction | int] = ()):
        items = [Fraction(c) for c in coeffs]
        while items and not items[-1]:
            items.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(items)

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coefficient(self, i: int) -> Fraction:
        """Coefficient of x**i (zero beyond the degree)."""
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, _SCALARS):
            return self == Polynomial((other,))
        return NotImplemented

    def __hash__(self) -> int:
        # Constants hash like their scalar value so p == q implies equal hashes.
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else 0)
        return hash(self.coeffs)

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self.coeffs)

    def __add__(self, other: Polynomial | Fraction | int) -> Polynomial:
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        summed = list(a)
        for i, c in enumerate(b):
            summed[i] += c
        return Polynomial(summed)

    __radd__ = __add__

    def __sub__(self, other: Polynomial | Fraction | int) -> Polynomial:
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Polynomial | Fraction | int) -> Polynomial:
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: Polynomial | Fraction | int) -> Polynomial:
        if isinstance(other, _SCALARS):
            return Polynomial(Fraction(other) * c for c in self.coeffs)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, other: Polynomial | Fraction | int) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.degree > 0:
                raise ValueError("cannot divide by a non-constant polynomial")
            if other.is_zero:
                raise ZeroDivisionError("polynomial division by zero")
            other = other.coeffs[0]
        return Polynomial(c / Fraction(other) for c in self.coeffs)

    def __rtruediv__(self, other: Fraction | int) -> Polynomial:
        if self.degree > 0:
            raise ValueError("cannot divide by a non-constant polynomial")
        if self.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        return Polynomial((Fraction(other) / self.coeffs[0],))

    def __pow__(self, exponent: int) -> Polynomial:
        if exponent < 0:
            raise ValueError("polynomial powers must be non-negative")
        result = Polynomial((1,))
        square = self
        e = exponent
        while e:
            if e & 1:
                result = result * square
            e >>= 1
            if e:
                square = square * square
        return result

    def __call__(self, point: Fraction | int) -> Fraction:
        """Evaluate at ``point`` by Horner's scheme, exactly."""
        point = Fraction(point)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def derivative(self) -> Polynomial:
        """Formal derivative."""
        return Polynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def shift(self, offset: Fraction | int) -> Polynomial:
        """The polynomial ``p(x + offset)``, expanded exactly."""
        linear = Polynomial((Fraction(offset), Fraction(1)))
        acc = Polynomial()
        for c in reversed(self.coeffs):
            acc = acc * linear + c
        return acc

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "x" if i == 1 else f"x^{i}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)


def _as_poly(value: object) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, _SCALARS):
        return Polynomial((value,))
    return NotImplemented


X = Polynomial((0, 1))


@lru_cache(maxsize=None)
def falling_factorial_poly(m: int) -> Polynomial:
    """The falling factorial x(x-1)...(x-m+1); the empty product is 1."""
    if m < 0:
        raise ValueError("falling factorial degree must be non-negative")
    if m == 0:
        return Polynomial((1,))
    return falling_factorial_poly(m - 1) * Polynomial((-(m - 1), 1))


def falling_factorial_value(point: Fraction | int, m: int) -> Fraction:
    """Value of the falling factorial of length m at ``point``."""
    if m < 0:
        raise ValueError("falling factorial length must be non-negative")
    point = Fraction(point)
    acc = Fraction(1)
    for i in range(m):
        acc *= point - i
    return acc


class BasisKind(Enum):
    MONOMIAL = "monomial"
    FALLING_FACTORIAL = "falling-factorial"
    HIGHER_ORDER_BERNOULLI = "higher-order-bernoulli"
    FROBENIUS_EULER = "frobenius-euler"


@dataclass(frozen=True)
class Basis:
    """A polynomial basis tag; the parametric bases carry their parameters.

    ``order`` is the r of the higher-order-Bernoulli / Frobenius-Euler
    families; ``param`` is the Frobenius-Euler lambda, which must differ
    from 1 for the generating function to exist.
    """

    kind: BasisKind
    order: int | None = None
    param: Fraction | None = None

    def __post_init__(self) -> None:
        needs_order = self.kind in (BasisKind.HIGHER_ORDER_BERNOULLI, BasisKind.FROBENIUS_EULER)
        if needs_order:
            if self.order is None or self.order < 0:
                raise ValueError(f"{self.kind.value} basis needs a non-negative order")
        elif self.order is not None:
            raise ValueError(f"{self.kind.value} basis takes no order")
        if self.kind is BasisKind.FROBENIUS_EULER:
            if self.param is None:
                raise ValueError("frobenius-euler basis needs a parameter")
            object.__setattr__(self, "param", Fraction(self.param))
            if self.param == 1:
                raise ValueError("Frobenius-Euler parameter must differ from 1")
        elif self.param is not None:
            raise ValueError(f"{self.kind.value} basis takes no parameter")

    @classmethod
    def monomial(cls) -> Basis:
        return cls(BasisKind.MONOMIAL)

    @classmethod
    def falling_factorial(cls) -> Basis:
        return cls(BasisKind.FALLING_FACTORIAL)

    @classmethod
    def higher_order_bernoulli(cls, order: int) -> Basis:
        return cls(BasisKind.HIGHER_ORDER_BERNOULLI, order=order)

    @classmethod
    def frobenius_euler(cls, order: int, param: Fraction | int) -> Basis:
        return cls(BasisKind.FROBENIUS_EULER, order=order, param=Fraction(param))


@dataclass(frozen=True)
class BasisExpansion:
    """Coefficients of a polynomial against the degree-m members of a basis."""

    basis: Basis
    coeffs: tuple[Fraction, ...]


def expand_in_monic_basis(p: Polynomial, members: Sequence[Polynomial]) -> tuple[Fraction, ...]:
    """Coefficients of ``p`` against ``members``, where ``members[m]`` must be
    monic of degree m.  Solved by back-substitution down the triangle.
    """
    if p.is_zero:
        return ()
    n = p.degree
    if len(members) <= n:
        raise ValueError(f"need basis members up to degree {n}")
    for m in range(n + 1):
        if members[m].degree != m or members[m].leading_coefficient != 1:
            raise ValueError(f"basis member {m} is not monic of degree {m}")
    out = [Fraction(0)] * (n + 1)
    residue = p
    for m in range(n, -1, -1):
        c = residue.coefficient(m)
        out[m] = c
        if c:
            residue = residue - c * members[m]
    # The residue must vanish once every degree has been eliminated.
    assert residue.is_zero
    return tuple(out)


def to_falling_basis(p: Polynomial) -> BasisExpansion:
    """Rewrite ``p`` in the falling-factorial basis."""
    if p.is_zero:
        return BasisExpansion(Basis.falling_factorial(), ())
    members = [falling_factorial_poly(m) for m in range(p.degree + 1)]
    return BasisExpansion(Basis.falling_factorial(), expand_in_monic_basis(p, members))


def from_falling_basis(expansion: BasisExpansion) -> Polynomial:
    """Reassemble a polynomial from falling-factorial coefficients."""
    if expansion.basis.kind is not BasisKind.FALLING_FACTORIAL:
        raise ValueError("expansion is not in the falling-factorial basis")
    total = Polynomial()
    for m, c in enumerate(expansion.coeffs):
        total = total + c * falling_factorial_poly(m)
    return total
