"""Even-degree reduction over K1 = Q(alpha), f(alpha) = 0.

For f of even degree n = 2m the curve y^2 = f(x) is birational over K1 to
y1^2 = h1(x1) with x1 = 1/(x - alpha), y1 = y/(x - alpha)^m, where

    f(x) = (x - alpha) f1(x),  h(x) = f1(x + alpha),  h1(x) = x^(n-1) h(1/x),

and h1 has odd degree n - 1. All arithmetic here is exact over Q.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .config import DEFAULT_PRIME_BUDGET
from .galois import BadPrime, factor_degrees_mod_p, primes_up_to
from .polynomial import IntPolynomial, discriminant, squarefree_check


class ReductionError(ValueError):
    pass


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class NumberFieldContext:
    """Q[x]/(f) with f made monic; elements are coordinate tuples in 1, alpha, ..."""

    modulus: tuple[Fraction, ...]

    @classmethod
    def from_poly(cls, f: IntPolynomial) -> "NumberFieldContext":
        if f.degree < 2:
            raise ReductionError("number field needs a modulus of degree >= 2")
        lc = Fraction(f.lc)
        return cls(tuple(Fraction(c) / lc for c in f.coeffs))

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1

    def element(self, coords: Sequence) -> "NFElement":
        c = [Fraction(x) for x in coords]
        if len(c) > self.degree:
            c = self._reduce(c)
        return NFElement(tuple(c + [Fraction(0)] * (self.degree - len(c))), self)

    def const(self, q) -> "NFElement":
        return self.element([q])

    def zero(self) -> "NFElement":
        return self.const(0)

    def one(self) -> "NFElement":
        return self.const(1)

    @property
    def alpha(self) -> "NFElement":
        return self.element([0, 1])

    def _reduce(self, c: list[Fraction]) -> list[Fraction]:
        n = self.degree
        c = list(c)
        for k in range(len(c) - 1, n - 1, -1):
            top = c[k]
            if top:
                for i in range(n):
                    c[k - n + i] -= top * self.modulus[i]
        return c[:n]


@dataclass(frozen=True)
class NFElement:
    coords: tuple[Fraction, ...]
    field: NumberFieldContext

    def _lift(self, other) -> "NFElement":
        if isinstance(other, NFElement):
            if other.field != self.field:
                raise ValueError("elements of different number fields")
            return other
        return self.field.const(other)

    def __add__(self, other) -> "NFElement":
        o = self._lift(other)
        return NFElement(tuple(a + b for a, b in zip(self.coords, o.coords)), self.field)

    __radd__ = __add__

    def __neg__(self) -> "NFElement":
        return NFElement(tuple(-a for a in self.coords), self.field)

    def __sub__(self, other) -> "NFElement":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "NFElement":
        return self._lift(other) - self

    def __mul__(self, other) -> "NFElement":
        o = self._lift(other)
        n = self.field.degree
        prod = [Fraction(0)] * (2 * n - 1)
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(o.coords):
                    if b:
                        prod[i + j] += a * b
        return NFElement(tuple(self.field._reduce(prod)), self.field)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "NFElement":
        out = self.field.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def to_json(self) -> list[str]:
        return [_fmt(q) for q in self.coords]

    def __repr__(self) -> str:
        terms = [f"{_fmt(q)}*a^{i}" for i, q in enumerate(self.coords) if q]
        return " + ".join(terms) or "0"


@dataclass(frozen=True)
class NFPolynomial:
    coeffs: tuple[NFElement, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1].is_zero():
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_int_poly(cls, f: IntPolynomial, ctx: NumberFieldContext) -> "NFPolynomial":
        return cls(tuple(ctx.const(c) for c in f.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x) -> NFElement:
        if not self.coeffs:
            raise ValueError("evaluating the zero polynomial")
        acc = self.coeffs[-1].field.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def _zip(self, other: "NFPolynomial"):
        if not self.coeffs and not other.coeffs:
            return []
        zero = (self.coeffs or other.coeffs)[0].field.zero()
        n = max(len(self.coeffs), len(other.coeffs))
        pad = lambda p: list(p.coeffs) + [zero] * (n - len(p.coeffs))
        return list(zip(pad(self), pad(other)))

    def __add__(self, other: "NFPolynomial") -> "NFPolynomial":
        return NFPolynomial(tuple(a + b for a, b in self._zip(other)))

    def __sub__(self, other: "NFPolynomial") -> "NFPolynomial":
        return NFPolynomial(tuple(a - b for a, b in self._zip(other)))

    def __mul__(self, other: "NFPolynomial") -> "NFPolynomial":
        if not self.coeffs or not other.coeffs:
            return NFPolynomial(())
        zero = self.coeffs[0].field.zero()
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return NFPolynomial(tuple(out))

    def to_json(self) -> list[list[str]]:
        return [c.to_json() for c in self.coeffs]


def linear_factor(ctx: NumberFieldContext) -> NFPolynomial:
    """x - alpha."""
    return NFPolynomial((-ctx.alpha, ctx.one()))


def deflate(ctx: NumberFieldContext, f: IntPolynomial | None = None) -> NFPolynomial:
    """f1 with (x - alpha) f1 = f, by synthetic division at alpha.

    ``f`` defaults to the monic modulus of ``ctx``.
    """
    if f is None:
        coeffs = [ctx.const(c) for c in ctx.modulus]
    else:
        coeffs = [ctx.const(c) for c in f.coeffs]
    n = len(coeffs) - 1
    if n < 1:
        raise ReductionError("nothing to deflate")
    a = ctx.alpha
    out = [None] * n
    out[n - 1] = coeffs[n]
    for k in range(n - 1, 0, -1):
        out[k - 1] = coeffs[k] + a * out[k]
    remainder = coeffs[0] + a * out[0]
    if not remainder.is_zero():
        raise ReductionError("alpha is not a root of the polynomial")
    return NFPolynomial(tuple(out))


def shift(p: NFPolynomial, a: NFElement) -> NFPolynomial:
    """p(x + a), by Horner recomposition."""
    if p.is_zero():
        return p
    x_plus_a = NFPolynomial((a, a.field.one()))
    acc = NFPolynomial(())
    for c in reversed(p.coeffs):
        acc = acc * x_plus_a + NFPolynomial((c,))
    return acc


def reverse(p: NFPolynomial) -> NFPolynomial:
    """x^deg(p) p(1/x)."""
    if p.is_zero() or p.coeffs[0].is_zero():
        raise ReductionError("reverse needs a nonzero constant term")
    return NFPolynomial(tuple(reversed(p.coeffs)))


@dataclass(frozen=True)
class EvenReduction:
    f: IntPolynomial
    context: NumberFieldContext
    f1: NFPolynomial
    h: NFPolynomial
    h1: NFPolynomial
    identity_holds: bool
    birational_checks: tuple[str, ...]
    transitive_prime: int

    @property
    def m(self) -> int:
        return self.f.degree // 2

    def to_json(self) -> dict:
        return {
            "f": list(self.f.coeffs),
            "n": self.f.degree,
            "field_modulus": [_fmt(q) for q in self.context.modulus],
            "irreducibility_prime": self.transitive_prime,
            "f1": self.f1.to_json(),
            "h": self.h.to_json(),
            "h1": self.h1.to_json(),
            "deg_h1": self.h1.degree,
            "h1_const_nonzero": not self.h1.coeffs[0].is_zero(),
            "master_identity": self.identity_holds,
            "substitution": {"x1": "1/(x - alpha)", "y1": f"y/(x - alpha)^{self.m}", "m": self.m},
            "birational_check_points": list(self.birational_checks),
            "note": "irreducibility of f1 over Q(alpha) and its Galois group are cited, not computed",
        }


def _birational_points(f: IntPolynomial, ctx: NumberFieldContext, h1: NFPolynomial) -> list[Fraction]:
    """Check f(alpha + 1/t) t^n = h1(t) at a few rational t."""
    n = f.degree
    fx = NFPolynomial.from_int_poly(f, ctx)
    checked = []
    for t in (Fraction(1), Fraction(-2), Fraction(3, 5)):
        x = ctx.alpha + (1 / t)
        lhs = fx(x) * (t**n)
        if not (lhs - h1(ctx.const(t))).is_zero():
            raise ReductionError(f"birational identity fails at x1 = {t}")
        checked.append(t)
    return checked


def reduce_even_degree(
    f: IntPolynomial,
    transitive_prime: int | None = None,
    budget: int = DEFAULT_PRIME_BUDGET,
) -> EvenReduction:
    """Build h1 = reverse(shift(deflate(f), alpha)) of odd degree n - 1.

    f must be squarefree of even degree >= 6 and irreducible over Q; the
    latter is certified by a prime at which f stays irreducible.
    """
    n = f.degree
    if n % 2:
        raise ReductionError(f"degree {n} is odd; no reduction needed")
    if n < 6:
        raise ReductionError(f"degree {n} < 6")
    if not squarefree_check(f):
        raise ReductionError("f is not squarefree")
    if transitive_prime is None:
        transitive_prime = find_irreducibility_prime(f, budget)
        if transitive_prime is None:
            raise ReductionError(f"irreducibility over Q not certified by any prime <= {budget}")
    ctx = NumberFieldContext.from_poly(f)
    f1 = deflate(ctx, f)
    identity = (linear_factor(ctx) * f1 - NFPolynomial.from_int_poly(f, ctx)).is_zero()
    h = shift(f1, ctx.alpha)
    h1 = reverse(h)
    if h1.degree != n - 1:
        raise ReductionError("h1 lost degree")
    checks = _birational_points(f, ctx, h1)
    return EvenReduction(f, ctx, f1, h, h1, identity, tuple(_fmt(t) for t in checks), transitive_prime)


def find_irreducibility_prime(f: IntPolynomial, budget: int = DEFAULT_PRIME_BUDGET) -> int | None:
    disc = discriminant(f)
    for p in primes_up_to(budget):
        try:
            if factor_degrees_mod_p(f, p, disc).is_full_cycle():
                return p
        except BadPrime:
            continue
    return None
