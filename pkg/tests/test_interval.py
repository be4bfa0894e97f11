import math
import random
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetatails import interval as I
from zetatails.errors import DomainError
from zetatails.interval import Interval, iv

CASES = 10_000
ORACLE_DPS = 90


def _oracle(fn, *args):
    with mpmath.workdps(ORACLE_DPS):
        return fn(*(mpmath.mpf(a) for a in args))


def _nested_pair(rng, lo_bound, hi_bound, positive=False):
    """(inner, outer, point) with point in inner and inner inside outer."""
    a = rng.uniform(lo_bound, hi_bound)
    b = rng.uniform(lo_bound, hi_bound)
    a, b = min(a, b), max(a, b)
    x = rng.uniform(a, b)
    pad_lo = rng.uniform(0, (b - a) + 1e-3) * rng.random()
    pad_hi = rng.uniform(0, (b - a) + 1e-3) * rng.random()
    outer_lo = a - pad_lo
    if positive:
        outer_lo = max(outer_lo, a / 2)
    return Interval(a, b), Interval(outer_lo, b + pad_hi), x


UNARY = {
    "exp": (I.exp, mpmath.exp, -30.0, 30.0, False),
    "log": (I.log, mpmath.log, 1e-6, 1e6, True),
    "sqrt": (I.sqrt, mpmath.sqrt, 0.0, 1e6, True),
    "sin": (I.sin, mpmath.sin, -50.0, 50.0, False),
    "cos": (I.cos, mpmath.cos, -50.0, 50.0, False),
    "atan": (I.atan, mpmath.atan, -1e3, 1e3, False),
    "neg": (lambda x: -x, lambda x: -x, -1e6, 1e6, False),
    "abs": (abs, abs, -1e3, 1e3, False),
    "square": (lambda x: x.square(), lambda x: x * x, -1e3, 1e3, False),
}

BINARY = {
    "add": (lambda x, y: x + y, lambda x, y: x + y, False),
    "sub": (lambda x, y: x - y, lambda x, y: x - y, False),
    "mul": (lambda x, y: x * y, lambda x, y: x * y, False),
    "div": (lambda x, y: x / y, lambda x, y: x / y, True),
    "pow": (lambda x, y: x ** y, lambda x, y: x ** y, True),
}


@pytest.mark.parametrize("name", sorted(UNARY))
def test_unary_inclusion_monotone_and_point_consistent(name):
    f, ref, lo, hi, positive = UNARY[name]
    rng = random.Random(f"unary-{name}")
    for _ in range(CASES):
        inner, outer, x = _nested_pair(rng, lo, hi, positive)
        fi, fo = f(inner), f(outer)
        assert fo.contains(fi), (name, inner, outer)
        exact = _oracle(ref, x)
        assert f(Interval(x)).contains(exact), (name, x)
        assert fi.contains(exact), (name, x, inner)


@pytest.mark.parametrize("name", sorted(BINARY))
def test_binary_inclusion_monotone_and_point_consistent(name):
    f, ref, positive_right = BINARY[name]
    rng = random.Random(f"binary-{name}")
    for _ in range(CASES):
        if name == "pow":
            xi, xo, x = _nested_pair(rng, 1e-3, 50.0, positive=True)
            yi, yo, y = _nested_pair(rng, -4.0, 4.0)
        else:
            xi, xo, x = _nested_pair(rng, -1e3, 1e3)
            if positive_right:
                yi, yo, y = _nested_pair(rng, 1e-3, 1e3, positive=True)
                if rng.random() < 0.5:
                    yi, yo, y = -yi, -yo, -y
            else:
                yi, yo, y = _nested_pair(rng, -1e3, 1e3)
        assert f(xo, yo).contains(f(xi, yi)), (name, xi, yi)
        exact = _oracle(ref, x, y)
        assert f(Interval(x), Interval(y)).contains(exact), (name, x, y)


def test_integer_powers_point_consistent():
    rng = random.Random("int-pow")
    for _ in range(CASES):
        x = rng.uniform(-20, 20)
        n = rng.randint(-5, 9)
        if n < 0 and x == 0:
            continue
        inner, outer, _ = _nested_pair(rng, x - 1, x + 1)
        if n < 0 and outer.contains_zero():
            continue
        assert (outer ** n).contains(inner ** n)
        assert (Interval(x) ** n).contains(_oracle(lambda v: v ** n, x))


@settings(max_examples=500, deadline=None)
@given(st.floats(-1e8, 1e8), st.floats(-1e8, 1e8), st.floats(-1e8, 1e8))
def test_mul_distributes_into_enclosure(a, b, c):
    lhs = iv(a) * (iv(b) + iv(c))
    exact = _oracle(lambda x, y, z: x * (y + z), a, b, c)
    assert lhs.contains(exact)
    assert (iv(a) * iv(b) + iv(a) * iv(c)).contains(exact)


@settings(max_examples=500, deadline=None)
@given(st.fractions(min_value=-10**6, max_value=10**6, max_denominator=10**9))
def test_rational_endpoints_enclosed(q):
    assert Interval(q).contains(q)


def test_product_example():
    assert Interval(1, 2) * Interval(3, 4) == Interval(3, 8)


def test_pi_and_gamma_enclosures():
    p = I.pi()
    assert p.width() <= mpmath.mpf("1e-30")
    assert p.contains(_oracle(lambda: +mpmath.pi))
    assert I.euler_gamma().contains(_oracle(lambda: +mpmath.euler))
    assert I.e().contains(_oracle(lambda: mpmath.e + 0))
    assert set(I.constants()) == {"pi", "euler_gamma"}


def test_precision_context_is_scoped():
    base = I.get_precision()
    with I.precision(200):
        assert I.get_precision() == 200
        narrow = I.log(Interval(3))
    assert I.get_precision() == base
    assert narrow.width() < I.log(Interval(3)).width()


def test_certain_comparisons():
    a, b = Interval(1, 2), Interval(3, 4)
    assert a < b and b > a and a <= b
    straddle = Interval(1.5, 3.5)
    assert not (a < straddle) and not (a > straddle)
    assert not (Interval(1, 3) < 2) and not (Interval(1, 3) > 2)


def test_domain_errors():
    with pytest.raises(DomainError):
        I.log(Interval(-1, 1))
    with pytest.raises(DomainError):
        I.sqrt(Interval(-1, 1))
    with pytest.raises(DomainError):
        Interval(1) / Interval(-1, 1)
    with pytest.raises(DomainError):
        Interval(2, 1)
    with pytest.raises(DomainError):
        Interval(-1, 2) ** Fraction(1, 3)


def test_hull_intersect_and_minmax():
    a, b = Interval(0, 2), Interval(1, 3)
    assert a.hull(b) == Interval(0, 3)
    assert a.intersect(b) == Interval(1, 2)
    assert I.imax(a, b) == Interval(1, 3)
    assert I.imin(a, b) == Interval(0, 2)
    with pytest.raises(DomainError):
        Interval(0, 1).intersect(Interval(2, 3))


def test_cos_sin_pair_matches_separate_calls():
    x = Interval(0.3, 0.4)
    c, s = I.cos_sin(x)
    assert c.overlaps(I.cos(x)) and s.overlaps(I.sin(x))
    assert c.contains(_oracle(mpmath.cos, 0.35)) and s.contains(_oracle(mpmath.sin, 0.35))


def test_complex_exponential_encloses_mpmath():
    z = I.ComplexInterval(Interval(0.5), Interval(14.1))
    w = I.cexp(z)
    with mpmath.workdps(40):
        ref = mpmath.exp(mpmath.mpc(0.5, 14.1))
    assert w.re.contains(ref.real) and w.im.contains(ref.imag)


def test_real_base_complex_power_encloses_mpmath():
    s = I.ComplexInterval(Interval(-0.75), Interval(-30))
    w = I.cpow_real_base(Interval(7), s)
    with mpmath.workdps(40):
        ref = mpmath.power(7, mpmath.mpc(-0.75, -30))
    assert w.re.contains(ref.real) and w.im.contains(ref.imag)


def test_float_conversion_is_midpoint():
    assert math.isclose(float(Interval(1, 3)), 2.0)
