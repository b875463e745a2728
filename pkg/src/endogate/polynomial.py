"""Integer polynomials: parsing, pseudo-division, subresultants, discriminants.

Coefficient lists are ascending (c0, c1, ..., cn) with a nonzero last entry;
the zero polynomial is the empty tuple.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence


class PolynomialParseError(ValueError):
    def __init__(self, message: str, token: str | None = None):
        super().__init__(message)
        self.token = token


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPolynomial:
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in self.coeffs))

    @classmethod
    def from_rationals(cls, coeffs: Sequence) -> "IntPolynomial":
        """Clear denominators by their lcm; the roots (and Galois group) are unchanged."""
        fr = [Fraction(c) for c in coeffs]
        den = reduce(math.lcm, (q.denominator for q in fr), 1)
        return cls(tuple(int(q * den) for q in fr))

    @classmethod
    def parse(cls, text: str) -> "IntPolynomial":
        return cls.from_rationals(parse_polynomial(text))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(tuple(i * c for i, c in enumerate(self.coeffs))[1:])

    def content(self) -> int:
        return content(self.coeffs)

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        return IntPolynomial(_mul(self.coeffs, other.coeffs))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return IntPolynomial(_sub(self.coeffs, other.coeffs))

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        return IntPolynomial(_sub(self.coeffs, tuple(-c for c in other.coeffs)))

    def to_string(self) -> str:
        return format_polynomial(self.coeffs)

    def __str__(self) -> str:
        return self.to_string()


def format_polynomial(coeffs: Sequence, var: str = "x") -> str:
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if mono and a == 1:
            body = mono
        elif mono:
            body = f"{a}*{mono}"
        else:
            body = str(a)
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z]\w*)|(\*\*|\^|[+\-*()])|(\S))")


def _tokens(text: str) -> list[str]:
    toks = []
    for num, name, op, bad in _TOKEN.findall(text):
        if bad:
            raise PolynomialParseError(f"unexpected token {bad!r}", bad)
        toks.append(num or name or ("^" if op == "**" else op))
    return toks


def parse_polynomial(text: str, var: str = "x") -> list[Fraction]:
    """Parse a sum of terms like ``3/2 x^4 - x + 1`` into ascending Fractions.

    Terms are an optional sign, an optional integer or rational coefficient
    (optionally parenthesized), and an optional power of ``var``; ``*`` between
    coefficient and variable may be omitted.
    """
    toks = _tokens(text)
    if not toks:
        raise PolynomialParseError("empty polynomial", "")
    pos = 0
    out: dict[int, Fraction] = {}

    def peek():
        return toks[pos] if pos < len(toks) else None

    def take():
        nonlocal pos
        tok = toks[pos]
        pos += 1
        return tok

    def number() -> Fraction | None:
        tok = peek()
        if tok is not None and tok[0].isdigit():
            take()
            return Fraction(tok)
        if tok == "(":
            take()
            sign = 1
            if peek() in ("+", "-"):
                sign = -1 if take() == "-" else 1
            inner = peek()
            if inner is None or not inner[0].isdigit():
                raise PolynomialParseError(f"expected a number, got {inner!r}", inner)
            take()
            if peek() != ")":
                raise PolynomialParseError(f"expected ')', got {peek()!r}", peek())
            take()
            return sign * Fraction(inner)
        return None

    first = True
    while pos < len(toks):
        sign = 1
        tok = peek()
        if tok in ("+", "-"):
            sign = -1 if take() == "-" else 1
        elif not first:
            raise PolynomialParseError(f"expected '+' or '-', got {tok!r}", tok)
        first = False
        coef = number()
        if coef is not None and peek() == "*":
            take()
            if peek() != var:
                raise PolynomialParseError(f"expected {var!r} after '*', got {peek()!r}", peek())
        power = 0
        tok = peek()
        if tok == var:
            take()
            power = 1
            if peek() == "^":
                take()
                exp = peek()
                if exp is None or not exp.isdigit():
                    raise PolynomialParseError(f"bad exponent {exp!r}", exp)
                take()
                power = int(exp)
        elif tok is not None and tok not in ("+", "-"):
            raise PolynomialParseError(f"unexpected token {tok!r}", tok)
        if coef is None and power == 0:
            raise PolynomialParseError(f"dangling sign near token {peek()!r}", peek())
        coef = Fraction(1) if coef is None else coef
        out[power] = out.get(power, Fraction(0)) + sign * coef
    deg = max(out)
    coeffs = [out.get(k, Fraction(0)) for k in range(deg + 1)]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def parse_coeff_list(text: str) -> list[Fraction]:
    """Parse ``c0,c1,...`` (ascending, integers or rationals)."""
    out = []
    for raw in text.split(","):
        tok = raw.strip()
        try:
            out.append(Fraction(tok))
        except (ValueError, ZeroDivisionError):
            raise PolynomialParseError(f"bad coefficient {tok!r}", tok) from None
    while out and out[-1] == 0:
        out.pop()
    return out


# --- arithmetic on ascending integer tuples ---------------------------------


def _mul(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _sub(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    n = max(len(a), len(b))
    return _trim((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n))


def content(a: Sequence[int]) -> int:
    g = 0
    for c in a:
        g = math.gcd(g, c)
    return g


def primitive_part(a: Sequence[int]) -> tuple[int, ...]:
    a = _trim(a)
    if not a:
        return ()
    g = content(a)
    if a[-1] < 0:
        g = -g
    return tuple(c // g for c in a)


def pseudo_remainder(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """lc(b)^(deg a - deg b + 1) * a mod b, computed without division."""
    a, b = list(_trim(a)), _trim(b)
    if not b:
        raise ZeroDivisionError("pseudo-division by zero polynomial")
    db = len(b) - 1
    delta = len(a) - 1 - db
    if delta < 0:
        return tuple(a)
    lb = b[-1]
    r = a
    e = delta + 1
    while r and len(r) - 1 >= db:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [c * lb for c in r]
        for i, c in enumerate(b):
            r[i + shift] -= lr * c
        r = list(_trim(r))
        e -= 1
    return tuple(c * lb**e for c in r)


def _exact_div(a: Sequence[int], d: int) -> tuple[int, ...]:
    out = []
    for c in a:
        q, rem = divmod(c, d)
        if rem:
            raise ArithmeticError("inexact division in subresultant sequence")
        out.append(q)
    return tuple(out)


def _exact(n: int, d: int) -> int:
    q, rem = divmod(n, d)
    if rem:
        raise ArithmeticError("inexact division in subresultant sequence")
    return q


def resultant(a: Sequence[int], b: Sequence[int]) -> int:
    """Res(a, b) by the fraction-free subresultant algorithm."""
    a, b = _trim(a), _trim(b)
    if not a or not b:
        return 0
    da, db = len(a) - 1, len(b) - 1
    if da == 0 and db == 0:
        return 1
    ca, cb = content(a), content(b)
    a, b = _exact_div(a, ca), _exact_div(b, cb)
    t = ca**db * cb**da
    s = 1
    if da < db:
        a, b = b, a
        if da % 2 and db % 2:
            s = -s
    g = h = 1
    while True:
        da, db = len(a) - 1, len(b) - 1
        if db == 0:
            break
        delta = da - db
        if da % 2 and db % 2:
            s = -s
        r = pseudo_remainder(a, b)
        a = b
        if not r:
            return 0
        b = _exact_div(r, g * h**delta)
        g = a[-1]
        # h <- h^(1 - delta) g^delta
        h = _exact(g**delta, h ** (delta - 1)) if delta >= 1 else g**delta * h
    da = len(a) - 1
    # h <- h^(1 - deg a) lc(b)^(deg a)
    h = _exact(b[-1] ** da, h ** (da - 1)) if da >= 1 else h
    return s * t * h


def discriminant(f: IntPolynomial) -> int:
    """disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f)."""
    n = f.degree
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    res = resultant(f.coeffs, f.derivative().coeffs)
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * _exact(res, f.lc)


def gcd_primitive_prs(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """Primitive gcd in Z[x] via the primitive pseudo-remainder sequence."""
    a, b = primitive_part(a), primitive_part(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = pseudo_remainder(a, b)
        a, b = b, primitive_part(r)
    return primitive_part(a)


def squarefree_check(f: IntPolynomial) -> bool:
    """True iff gcd(f, f') is constant."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    if f.degree <= 0:
        return True
    return len(gcd_primitive_prs(f.coeffs, f.derivative().coeffs)) == 1


def is_square_integer(d: int) -> bool:
    return d >= 0 and math.isqrt(d) ** 2 == d


def truncated_exponential(n: int) -> IntPolynomial:
    """n! * (1 + x + x^2/2! + ... + x^n/n!), with integer coefficients n!/k!."""
    nf = math.factorial(n)
    return IntPolynomial(tuple(nf // math.factorial(k) for k in range(n + 1)))
