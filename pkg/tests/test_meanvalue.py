from fractions import Fraction

import pytest

from zetatails import reference
from zetatails.errors import ContractError, DivergenceError, DomainError
from zetatails.interval import Interval, euler_gamma, log, pi, sqrt
from zetatails.meanvalue import (
    HALF_LINE_SWITCH, T0, assemble_thm_4_3, assemble_thm_4_5, assemble_thm_4_6, base_constants,
    extension_transfer, headline_mean_square, headline_tail_bound, mean_square_bounds, prop_z_all,
    prop_z_allb, simplify_to_headline, tail_bound_second_approach,
)
from zetatails.meanvalue import _f11
from zetatails.verify import integral_enclosure
from zetatails.zeta_eval import zeta_real

# frozen outputs of the assembly at sigma in [1/2, 1]
UPPER_STRIP_CONSTANTS = {
    "half_a_plus": "2.0", "half_b_plus": "21.1524", "half_a_minus": "2.0", "half_b_minus": "0.99061",
    "strip_plus": ("0.0814", "7.48615", "1.80183", "5.94688"),
    "strip_minus": ("0.69962", "4.15475", "1.0", "4.63011", "0.70046"),
    "one_log_plus": "22.23757", "one_log_minus": "-0.20288",
}


def _check(published, expected):
    rows = reference.compare(published, expected)
    bad = [r for r in rows if not r[3]]
    assert not bad, bad


def test_strip_and_line_constants():
    _check(assemble_thm_4_3().published, UPPER_STRIP_CONSTANTS)


def test_low_strip_constants():
    _check(assemble_thm_4_5().published, reference.MEAN_VALUE_LOW)


def test_tail_constants():
    _check(assemble_thm_4_6().published, reference.TAIL_SECOND)


def test_simplified_constants():
    pub = simplify_to_headline().published
    _check(pub, reference.HEADLINE_TAIL)
    _check(pub, reference.HEADLINE_MEAN_SQUARE)


def test_assembled_text_lists_keys():
    text = assemble_thm_4_6().text()
    assert "half_b" in text and "one_a" in text


def test_base_constants():
    base = base_constants()
    assert base["D"].certainly_positive()


def test_f11_half_line_form():
    T = Interval(37)
    assert _f11("half", Interval(Fraction(1, 2)), T, 1).overlaps(log(T) + euler_gamma() + 1 / (2 * T))


def test_segment_bounds_are_ordered():
    seg = prop_z_all(1, 1, 100, rho=1 / sqrt(zeta_real(2) * 100))
    assert seg.upper is not None
    both = prop_z_all(1, 1, 100)
    assert both.lower.hi <= both.upper.lo
    segb = prop_z_allb(Fraction(3, 4), 10, 200)
    assert segb.lower.hi <= segb.upper.lo
    with pytest.raises(DomainError):
        prop_z_all(Fraction(1, 4), 1, 10)
    with pytest.raises(DomainError):
        prop_z_all(1, 10, 5)


@pytest.mark.parametrize("sigma", [Fraction(1, 2), Fraction(3, 4), 1])
@pytest.mark.parametrize("T1, T2", [(1, 50), (10, 200)])
def test_segment_bounds_contain_quadrature(sigma, T1, T2):
    quad = integral_enclosure(sigma, T1, T2).enclosure
    for seg in (prop_z_all(sigma, T1, T2), prop_z_allb(sigma, T1, T2)):
        assert seg.lower.hi <= quad.lo and quad.hi <= seg.upper.lo


def test_lower_segment_bound_as_stated_overshoots():
    # adding E f12^- instead of subtracting the off-diagonal error is not a lower bound
    quad = integral_enclosure(Fraction(1, 2), 1, 50).enclosure
    assert prop_z_all(Fraction(1, 2), 1, 50, as_stated=True).lower > quad
    assert prop_z_all(Fraction(1, 2), 1, 50).lower < quad


@pytest.mark.parametrize("sigma", [0, Fraction(1, 10), Fraction(1, 4), Fraction(1, 2), Fraction(3, 5), Fraction(3, 4), 1])
@pytest.mark.parametrize("T", [4, 100, 10 ** 6])
def test_mean_square_lower_below_upper(sigma, T):
    rep = mean_square_bounds(sigma, T)
    assert rep.lower.hi <= rep.upper.lo
    assert headline_mean_square(sigma, T).upper.hi >= rep.upper.lo


def test_mean_square_domain():
    with pytest.raises(DomainError):
        mean_square_bounds(Fraction(1, 2), 3)
    mean_square_bounds(Fraction(1, 2), T0)


def test_simplified_strip_example():
    s, T = Fraction(3, 4), Interval(100)
    expected = zeta_real(Fraction(3, 2)) * T + Interval("2.12") / (Fraction(1, 4) * Fraction(1, 16)) * max(
        10 * log(T), Interval(10), key=lambda x: x.mid())
    assert headline_mean_square(s, 100).upper.overlaps(expected)


def test_second_approach_tail():
    with pytest.raises(DivergenceError):
        tail_bound_second_approach(0, 100)
    for s in (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), 1):
        vals = [tail_bound_second_approach(s, T).value for T in (10, 100, 1000)]
        assert all(v.certainly_positive() for v in vals)
        assert vals[1] < vals[0] and vals[2] < vals[1]


def test_half_line_tail_closed_form():
    T = Interval(1000)
    v = tail_bound_second_approach(Fraction(1, 2), 1000).value
    assert v.overlaps(log(T) / T + 4 * sqrt(log(T)) / T + Interval("46.00343") / T)


def test_one_line_tail_closed_form():
    T = Interval(50)
    v = tail_bound_second_approach(1, 50).value
    expected = pi().square() / (6 * T) + Interval("25.04878") * log(T) / T.square() + Interval("15.94452") / T.square()
    assert v.overlaps(expected)


def test_headline_tail_ranges():
    with pytest.raises(DomainError):
        headline_tail_bound(Fraction(1, 2), 10 ** 6, "second")
    assert headline_tail_bound(Fraction(1, 2), HALF_LINE_SWITCH, "second").upper.certainly_positive()
    with pytest.raises(DomainError):
        headline_tail_bound(Fraction(3, 4), 100, "first")
    with pytest.raises(DivergenceError):
        headline_tail_bound(0, 1000)
    with pytest.raises(ValueError):
        headline_tail_bound(Fraction(3, 4), 1000, "third")


def test_extension_transfer_linear_weight():
    # Z = 1 on [1, 2], F(u, 2) = 2 - u exactly, so r = 0 returns int (u - 1) du = 1/2
    zero = lambda u: Interval(0)
    up, lo = extension_transfer(lambda u: Interval(-1), zero, zero, lambda u: u - 1, lambda u: Interval(1),
                                1, 2, "i")
    assert lo <= Fraction(1, 2) <= up
    assert up - lo < Fraction(1, 256)
    c = Fraction(1, 10)
    up, lo = extension_transfer(lambda u: Interval(-1), lambda u: Interval(c), lambda u: Interval(c),
                                lambda u: u - 1, lambda u: Interval(1), 1, 2, "i")
    assert up >= Fraction(1, 2) + c and lo <= Fraction(1, 2) - c
    assert up - lo < 2 * c + Fraction(1, 256)


def test_extension_transfer_case_two_and_contracts():
    zero = lambda u: Interval(0)
    up, lo = extension_transfer(lambda u: Interval(1), zero, zero, lambda u: 2 - u, lambda u: Interval(-1),
                                1, 2, "ii")
    assert lo <= Fraction(1, 2) <= up
    with pytest.raises(ContractError):
        extension_transfer(lambda u: Interval(-1), zero, zero, lambda u: u, lambda u: Interval(1), 1, 2, "i")
    with pytest.raises(ValueError):
        extension_transfer(lambda u: Interval(-1), zero, zero, lambda u: u - 1, lambda u: Interval(1), 1, 2, "x")
