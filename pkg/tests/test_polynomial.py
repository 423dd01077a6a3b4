import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from flagdeform.polynomial import EquivariantPolynomial as P
from flagdeform.polynomial import PolynomialDivisionError

X = sympy.symbols("a1:4")


def polys(nvars=3):
    exps = st.tuples(*[st.integers(0, 3)] * nvars)
    return st.dictionaries(exps, st.integers(-5, 5), max_size=6).map(lambda t: P(nvars, t))


def to_sympy(p):
    return sympy.expand(sum(c * sympy.prod(x**k for x, k in zip(X, e)) for e, c in p.terms.items()))


@settings(max_examples=150, deadline=None)
@given(polys(), polys(), polys())
def test_ring_operations_match_sympy(f, g, h):
    assert to_sympy(f + g) == sympy.expand(to_sympy(f) + to_sympy(g))
    assert to_sympy(f - g) == sympy.expand(to_sympy(f) - to_sympy(g))
    assert to_sympy(f * g) == sympy.expand(to_sympy(f) * to_sympy(g))
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h


@settings(max_examples=100, deadline=None)
@given(polys(), polys())
def test_exact_division_inverts_multiplication(f, g):
    if g.is_zero():
        return
    assert (f * g).exact_div(g) == f


@settings(max_examples=60, deadline=None)
@given(polys(), st.tuples(*[st.integers(-7, 7)] * 3))
def test_evaluate(f, pt):
    expect = to_sympy(f).subs(dict(zip(X, pt)))
    assert f.evaluate(pt) == expect
    assert f.evaluate(pt, 97) == expect % 97


def test_division_remainder_raises():
    a1, a2 = P.linear([1, 0]), P.linear([0, 1])
    with pytest.raises(PolynomialDivisionError):
        (a1 * a1 + a2).exact_div(a1)
    with pytest.raises(PolynomialDivisionError):
        P.linear([3, 0]).exact_div(P.linear([2, 0]))
    with pytest.raises(ZeroDivisionError):
        a1.exact_div(P(2))


def test_degrees_and_constants():
    a1, a2 = P.linear([1, 0]), P.linear([0, 2])
    assert (a1 * a2).degrees() == {2}
    assert (a1 * a2).is_homogeneous(2)
    assert not (a1 + P.constant(2, 1)).is_homogeneous()
    assert P.constant(2, 7).constant_value() == 7
    assert P(2).constant_value() == 0
    with pytest.raises(ValueError):
        a1.constant_value()
