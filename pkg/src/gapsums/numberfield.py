"""Exact arithmetic in quotient rings Q[theta]/(f), f monic with rational
coefficients.

This is where weight values live: plain rationals, real radicals such as the
cube root of 2, roots of unity, and Gaussian-style elements like 4 + 3i.  All
ring arithmetic is exact; a floating-point complex preview is available
through :func:`numeric_eval` but never feeds back into exact computation.

Inversion runs the extended Euclidean algorithm against the modulus.  Moduli
are not factored up front: if an inversion uncovers a nontrivial factor of
the modulus, a :class:`ReducibleModulusError` naming that factor is raised at
that point.
"""
from __future__ import annotations

import cmath
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import mpmath

from . import polys

__all__ = [
    "Embedding",
    "LambdaSpec",
    "NumberRing",
    "RATIONAL_RING",
    "ReducibleModulusError",
    "RingElement",
    "RingMismatchError",
    "as_element",
    "cyclotomic",
    "element_from_json",
    "element_to_json",
    "is_power_unity",
    "numeric_eval",
]

Rational = int | Fraction


class RingMismatchError(ValueError):
    """Two elements from different rings were combined."""


class ReducibleModulusError(ArithmeticError):
    """An inversion exposed a nontrivial factor of the ring modulus."""

    def __init__(self, factor: Sequence[Fraction]):
        self.factor = tuple(factor)
        super().__init__(
            "modulus is reducible: found factor with ascending coefficients "
            f"[{', '.join(str(c) for c in self.factor)}]"
        )


class NumberRing:
    """The quotient ring Q[theta]/(f).

    ``minpoly`` is the full ascending coefficient vector of f including the
    leading 1, so ``NumberRing([-2, 0, 0, 1])`` is Q[theta]/(theta^3 - 2).
    A degree-1 ring is canonically the rationals.
    """

    __slots__ = ("minpoly",)

    def __init__(self, minpoly: Iterable[Rational]):
        coeffs = tuple(Fraction(c) for c in minpoly)
        if len(coeffs) < 2:
            raise ValueError("ring modulus must have degree >= 1")
        if coeffs[-1] != 1:
            raise ValueError("ring modulus must be monic")
        self.minpoly = coeffs

    @property
    def degree(self) -> int:
        return len(self.minpoly) - 1

    @property
    def zero(self) -> RingElement:
        return RingElement(self, (Fraction(0),) * self.degree)

    @property
    def one(self) -> RingElement:
        return self.element([1])

    @property
    def generator(self) -> RingElement:
        """The class of theta (reduced, so a constant in a degree-1 ring)."""
        if self.degree == 1:
            return self.element([-self.minpoly[0]])
        return self.element([0, 1])

    def element(self, coeffs: Iterable[Rational]) -> RingElement:
        """Build an element from power-basis coordinates, reducing if needed."""
        vec = [Fraction(c) for c in coeffs]
        if len(vec) > self.degree:
            vec = self._reduce(vec)
        vec.extend([Fraction(0)] * (self.degree - len(vec)))
        return RingElement(self, tuple(vec))

    def from_rational(self, value: Rational) -> RingElement:
        return self.element([value])

    def _reduce(self, vec: list[Fraction]) -> list[Fraction]:
        n = self.degree
        lower = self.minpoly[:-1]
        for deg in range(len(vec) - 1, n - 1, -1):
            c = vec[deg]
            if c:
                vec[deg] = Fraction(0)
                for t in range(n):
                    vec[deg - n + t] -= c * lower[t]
        del vec[n:]
        return vec

    def __eq__(self, other: object) -> bool:
        return isinstance(other, NumberRing) and self.minpoly == other.minpoly

    def __hash__(self) -> int:
        return hash(self.minpoly)

    def __repr__(self) -> str:
        return f"NumberRing([{', '.join(str(c) for c in self.minpoly)}])"

    def __str__(self) -> str:
        return f"Q[θ]/({_format_poly(self.minpoly)})"


class RingElement:
    """An element of a :class:`NumberRing` in the power basis 1, theta, ...

    Immutable and hashable; arithmetic operators accept ints and Fractions on
    either side and promote them to constants of the same ring.
    """

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: NumberRing, coeffs: tuple[Fraction, ...]):
        if len(coeffs) != ring.degree:
            raise ValueError("coefficient vector length must equal ring degree")
        self.ring = ring
        self.coeffs = coeffs

    def _coerce(self, other) -> "RingElement":
        if isinstance(other, RingElement):
            if other.ring != self.ring:
                raise RingMismatchError(
                    f"cannot combine elements of {self.ring} and {other.ring}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.from_rational(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RingElement(self.ring, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RingElement(self.ring, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return RingElement(self.ring, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RingElement(self.ring, tuple(a * other for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = self.ring.degree
        prod = [Fraction(0)] * (2 * n - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        vec = self.ring._reduce(prod)
        vec.extend([Fraction(0)] * (n - len(vec)))
        return RingElement(self.ring, tuple(vec))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (Fraction(1) / Fraction(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.ring.one
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.ring.from_rational(other)
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.ring.minpoly, self.coeffs))

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    @property
    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def inverse(self) -> "RingElement":
        """Multiplicative inverse via extended gcd with the modulus.

        Raises ZeroDivisionError for zero, and ReducibleModulusError when the
        gcd is a nontrivial factor of the modulus (i.e. the element is a zero
        divisor, which cannot happen over an irreducible modulus).
        """
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero")
        g, s, _ = polys.ext_gcd(self.coeffs, self.ring.minpoly)
        if len(g) == 1:
            return self.ring.element(s)
        raise ReducibleModulusError(g)

    def __repr__(self) -> str:
        return f"RingElement({self.ring!r}, {tuple(str(c) for c in self.coeffs)})"

    def __str__(self) -> str:
        return _format_poly(self.coeffs)


def _format_poly(coeffs: Sequence[Fraction], var: str = "θ") -> str:
    parts: list[str] = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        if i == 0:
            term = str(c)
        else:
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            power = var if i == 1 else f"{var}^{i}"
            term = f"{mag}{power}"
            if c < 0:
                term = "-" + term
            if parts and not term.startswith("-"):
                term = "+" + term
        parts.append(term)
    if not parts:
        return "0"
    text = parts[0]
    for p in parts[1:]:
        text += f" {p[0]} {p[1:]}" if p[0] in "+-" else f" + {p}"
    return text


RATIONAL_RING = NumberRing((0, 1))  # f(x) = x: the rationals


def as_element(value) -> RingElement:
    """Promote ints and Fractions into the canonical rational ring."""
    if isinstance(value, RingElement):
        return value
    if isinstance(value, (int, Fraction)):
        return RATIONAL_RING.from_rational(value)
    raise TypeError(f"cannot interpret {value!r} as a ring element")


def is_power_unity(x: RingElement, e: int) -> bool:
    """True exactly when x^e = 1 in the ring."""
    if e < 1:
        raise ValueError("exponent must be positive")
    x = as_element(x)
    return x ** e == x.ring.one


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> tuple[int, ...]:
    """Ascending integer coefficients of the n-th cyclotomic polynomial.

    Computed by exact division of x^n - 1 by all lower-order cyclotomic
    polynomials of divisor index.
    """
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    poly: list[Fraction] = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    for d in range(1, n):
        if n % d == 0:
            quot, rem = polys.divmod_exact(poly, cyclotomic(d))
            assert not rem
            poly = quot
    assert all(c.denominator == 1 for c in poly)
    return tuple(int(c) for c in poly)


# ---------------------------------------------------------------------------
# numeric preview


@dataclass(frozen=True)
class Embedding:
    """Selects one complex root of the ring modulus for numeric previews."""

    kind: str  # "index" | "zeta" | "principal"
    order: int = 1
    radicand: Fraction = Fraction(0)
    index: int = 0

    @classmethod
    def at_index(cls, index: int) -> "Embedding":
        return cls(kind="index", index=index)

    @classmethod
    def zeta(cls, order: int) -> "Embedding":
        return cls(kind="zeta", order=order)

    @classmethod
    def principal(cls, order: int, radicand: Rational) -> "Embedding":
        return cls(kind="principal", order=order, radicand=Fraction(radicand))


@lru_cache(maxsize=None)
def _ring_roots(minpoly: tuple[Fraction, ...]) -> tuple[complex, ...]:
    degree = len(minpoly) - 1
    with mpmath.workdps(60):
        coeffs = [mpmath.mpf(c.numerator) / c.denominator for c in reversed(minpoly)]
        try:
            roots = mpmath.polyroots(coeffs, maxsteps=200, extraprec=200)
        except mpmath.libmp.NoConvergence as exc:  # pragma: no cover - defensive
            raise ValueError("root refinement did not converge") from exc
    found = [complex(r) for r in roots]
    found.sort(key=lambda z: (z.real, z.imag))
    if len(found) != degree:  # pragma: no cover - defensive
        raise ValueError("root refinement did not converge")
    return tuple(found)


def _select_root(roots: tuple[complex, ...], embedding: Embedding) -> complex:
    if embedding.kind == "index":
        if not 0 <= embedding.index < len(roots):
            raise ValueError(f"root index {embedding.index} out of range")
        return roots[embedding.index]
    if embedding.kind == "zeta":
        target = cmath.exp(2j * cmath.pi / embedding.order)
    elif embedding.kind == "principal":
        r = float(embedding.radicand)
        if r > 0:
            target = complex(r ** (1.0 / embedding.order))
        else:
            target = abs(r) ** (1.0 / embedding.order) * cmath.exp(1j * cmath.pi / embedding.order)
    else:
        raise ValueError(f"unknown embedding kind {embedding.kind!r}")
    return min(roots, key=lambda z: abs(z - target))


def numeric_eval(x: RingElement, embedding: Embedding | int | None = None) -> complex:
    """Approximate complex value of x under the chosen root of the modulus.

    Diagnostic only; the result never feeds back into exact arithmetic.  An
    integer is accepted as shorthand for ``Embedding.at_index``; the default
    is root index 0 (roots ordered by real part, then imaginary part).
    """
    x = as_element(x)
    if x.ring.degree == 1:
        return complex(float(x.coeffs[0]), 0.0)
    if embedding is None:
        embedding = Embedding.at_index(0)
    elif isinstance(embedding, int):
        embedding = Embedding.at_index(embedding)
    root = _select_root(_ring_roots(x.ring.minpoly), embedding)
    acc = 0j
    for c in reversed(x.coeffs):
        acc = acc * root + float(c)
    return acc


# ---------------------------------------------------------------------------
# weight descriptions


_RAT = r"[+-]?\d+(?:/\d+)?"


@dataclass(frozen=True)
class LambdaSpec:
    """A description of a weight value.

    One of:

    * ``rational``: the value itself;
    * ``root``: theta with theta^order = value (ring x^order - value);
    * ``zeta``: a primitive order-th root of unity (cyclotomic modulus);
    * ``custom``: explicit power-basis coordinates over an explicit modulus.

    The text grammar accepted by :meth:`parse` (whitespace-insensitive,
    exact rational literals only)::

        p/q | root(n, p/q) | zeta(n) | elem(minpoly=[c0, ..., 1]; coeffs=[b0, ...])

    Weights of 0 and 1 are rejected outright where detectable at build time.
    """

    kind: str
    value: Fraction = Fraction(0)
    order: int = 0
    minpoly: tuple[Fraction, ...] = ()
    coeffs: tuple[Fraction, ...] = ()

    @classmethod
    def rational(cls, value: Rational) -> "LambdaSpec":
        value = Fraction(value)
        _check_weight_value(value)
        return cls(kind="rational", value=value)

    @classmethod
    def root(cls, order: int, value: Rational) -> "LambdaSpec":
        value = Fraction(value)
        if order < 1:
            raise ValueError("root order must be positive")
        if value == 0:
            raise ValueError("weight 0 is not allowed")
        if order == 1:
            _check_weight_value(value)
        return cls(kind="root", order=order, value=value)

    @classmethod
    def zeta(cls, order: int) -> "LambdaSpec":
        if order < 1:
            raise ValueError("zeta order must be positive")
        if order == 1:
            raise ValueError("weight 1 is not allowed")
        return cls(kind="zeta", order=order)

    @classmethod
    def custom(cls, minpoly: Iterable[Rational], coeffs: Iterable[Rational]) -> "LambdaSpec":
        spec = cls(
            kind="custom",
            minpoly=tuple(Fraction(c) for c in minpoly),
            coeffs=tuple(Fraction(c) for c in coeffs),
        )
        elem = spec.element()  # validates modulus and the 0/1 exclusion
        if elem.is_rational:
            _check_weight_value(elem.rational_value())
        return spec

    @classmethod
    def parse(cls, text: str) -> "LambdaSpec":
        """Parse the weight grammar; raises ValueError on malformed input."""
        compact = re.sub(r"\s+", "", text)
        if re.fullmatch(_RAT, compact):
            return cls.rational(_parse_rational(compact))
        m = re.fullmatch(rf"root\((\d+),({_RAT})\)", compact)
        if m:
            return cls.root(int(m.group(1)), _parse_rational(m.group(2)))
        m = re.fullmatch(r"zeta\((\d+)\)", compact)
        if m:
            return cls.zeta(int(m.group(1)))
        m = re.fullmatch(r"elem\(minpoly=\[([^\]]*)\];coeffs=\[([^\]]*)\]\)", compact)
        if m:
            return cls.custom(_parse_rational_list(m.group(1)), _parse_rational_list(m.group(2)))
        raise ValueError(f"cannot parse weight specification {text!r}")

    def element(self) -> RingElement:
        """The weight as an exact ring element (degree-1 rings collapse to Q)."""
        if self.kind == "rational":
            return RATIONAL_RING.from_rational(self.value)
        if self.kind == "root":
            if self.order == 1:
                return RATIONAL_RING.from_rational(self.value)
            ring = NumberRing([-self.value] + [0] * (self.order - 1) + [1])
            return ring.generator
        if self.kind == "zeta":
            modulus = cyclotomic(self.order)
            if len(modulus) == 2:
                return RATIONAL_RING.from_rational(-Fraction(modulus[0]))
            return NumberRing(modulus).generator
        if self.kind == "custom":
            ring = NumberRing(self.minpoly)
            elem = ring.element(self.coeffs)
            if ring.degree == 1:
                return RATIONAL_RING.from_rational(polys.eval_at(elem.coeffs, -ring.minpoly[0]))
            if elem.is_zero:
                raise ValueError("weight 0 is not allowed")
            if elem == ring.one:
                raise ValueError("weight 1 is not allowed")
            return elem
        raise ValueError(f"unknown weight kind {self.kind!r}")

    def embedding(self) -> Embedding:
        if self.kind == "root":
            return Embedding.principal(self.order, self.value)
        if self.kind == "zeta":
            return Embedding.zeta(self.order)
        return Embedding.at_index(0)

    def __str__(self) -> str:
        if self.kind == "rational":
            return str(self.value)
        if self.kind == "root":
            return f"root({self.order},{self.value})"
        if self.kind == "zeta":
            return f"zeta({self.order})"
        minpoly = ",".join(str(c) for c in self.minpoly)
        coeffs = ",".join(str(c) for c in self.coeffs)
        return f"elem(minpoly=[{minpoly}];coeffs=[{coeffs}])"


def _check_weight_value(value: Fraction) -> None:
    if value == 0:
        raise ValueError("weight 0 is not allowed")
    if value == 1:
        raise ValueError("weight 1 is not allowed (it degenerates to the unweighted sum)")


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad rational literal {text!r}") from exc


def _parse_rational_list(text: str) -> list[Fraction]:
    if not text:
        return []
    return [_parse_rational(item) for item in text.split(",")]


# ---------------------------------------------------------------------------
# JSON round-tripping (used by the CLI output contract)


def element_to_json(x: RingElement) -> dict:
    """Serialize with rationals as strings so exactness survives the trip."""
    return {
        "ring": {"minpoly": [str(c) for c in x.ring.minpoly]},
        "coeffs": [str(c) for c in x.coeffs],
    }


def element_from_json(data: dict) -> RingElement:
    ring = NumberRing([Fraction(c) for c in data["ring"]["minpoly"]])
    return ring.element([Fraction(c) for c in data["coeffs"]])
