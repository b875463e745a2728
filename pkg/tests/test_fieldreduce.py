from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from endogate.fieldreduce import (
    NFPolynomial,
    NumberFieldContext,
    ReductionError,
    deflate,
    linear_factor,
    reduce_even_degree,
    reverse,
    shift,
)
from endogate.polynomial import IntPolynomial

A, T = sympy.symbols("a t")


def P(text):
    return IntPolynomial.parse(text)


def sympy_h1(f: IntPolynomial):
    """Coefficients of t^n f(a + 1/t), reduced mod the monic minimal polynomial of a."""
    n = f.degree
    fa = sympy.Poly(list(reversed(f.coeffs)), A)
    monic = fa.monic()
    expr = sympy.expand(sum(c * (A * T + 1) ** k * T ** (n - k) for k, c in enumerate(f.coeffs)))
    out = []
    for j in range(n):
        cj = sympy.Poly(expr.coeff(T, j), A, domain="QQ")
        out.append(cj.rem(monic))
    top = sympy.Poly(expr.coeff(T, n), A, domain="QQ").rem(monic)
    return out, top


def nf_coeffs_as_sympy(h1: NFPolynomial):
    out = []
    for c in h1.coeffs:
        out.append(sympy.Poly(list(reversed([sympy.Rational(q.numerator, q.denominator) for q in c.coords])), A, domain="QQ"))
    return out


@pytest.fixture(scope="module")
def ctx6():
    return NumberFieldContext.from_poly(P("x^6 - x - 1"))


def test_field_arithmetic(ctx6):
    a = ctx6.alpha
    assert (a**6 - a - 1).is_zero()
    assert a**7 == a**2 + a


def test_shift_examples(ctx6):
    a = ctx6.alpha
    p = NFPolynomial((a, ctx6.one()))
    assert shift(p, ctx6.zero()) == p
    assert shift(p, a) == NFPolynomial((a + a, ctx6.one()))


def test_reverse_examples():
    ctx = NumberFieldContext.from_poly(P("x^2 - 2"))
    a = ctx.alpha
    p = NFPolynomial((a + a, ctx.one()))
    assert reverse(p) == NFPolynomial((ctx.one(), a + a))
    assert reverse(reverse(p)) == p
    with pytest.raises(ReductionError):
        reverse(NFPolynomial((ctx.zero(), ctx.one())))


def test_deflate_master_identity(ctx6):
    f = P("x^6 - x - 1")
    f1 = deflate(ctx6, f)
    assert f1.degree == 5
    assert (linear_factor(ctx6) * f1 - NFPolynomial.from_int_poly(f, ctx6)).is_zero()


def test_h_at_zero_is_derivative(ctx6):
    f = P("x^6 - x - 1")
    f1 = deflate(ctx6, f)
    a = ctx6.alpha
    fprime = NFPolynomial.from_int_poly(f.derivative(), ctx6)
    assert f1(a) == fprime(a)
    assert not f1(a).is_zero()
    assert shift(f1, a).coeffs[0] == f1(a)


@pytest.mark.parametrize("text", ["x^6 - x - 1", "x^6 - 2", "x^8 - x - 1", "3x^6 - 1/2 x + 5"])
def test_h1_matches_sympy(text):
    f = P(text)
    red = reduce_even_degree(f)
    assert red.identity_holds
    assert red.h1.degree == f.degree - 1
    ref, top = sympy_h1(f)
    assert top.is_zero
    assert nf_coeffs_as_sympy(red.h1) == ref[: red.h1.degree + 1]


def test_json_metadata():
    js = reduce_even_degree(P("x^6 - x - 1")).to_json()
    assert js["substitution"] == {"x1": "1/(x - alpha)", "y1": "y/(x - alpha)^3", "m": 3}
    assert js["deg_h1"] == 5 and js["h1_const_nonzero"] and js["master_identity"]


@pytest.mark.parametrize(
    "text, msg",
    [
        ("x^5 - x - 1", "odd"),
        ("x^4 - x - 1", "< 6"),
        ("x^6 - 1", "irreducibility"),
        ("x^6 - 2x^3 + 1", "squarefree"),
    ],
)
def test_errors(text, msg):
    with pytest.raises(ReductionError, match=msg):
        reduce_even_degree(P(text), budget=500)


@settings(max_examples=10)
@given(st.lists(st.integers(-4, 4), min_size=6, max_size=6), st.integers(1, 3))
def test_random_sextics(low, lc):
    f = IntPolynomial(tuple(low) + (lc,))
    try:
        red = reduce_even_degree(f, budget=300)
    except ReductionError:
        return
    assert red.identity_holds
    assert red.h1.degree == 5
    assert not red.h1.coeffs[0].is_zero()
    # h1(0) is the leading coefficient of f1, which is lc(f)
    assert red.h1.coeffs[0] == red.context.const(Fraction(f.lc))
