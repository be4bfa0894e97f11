from fractions import Fraction

import pytest

from zetatails import reference
from zetatails.errors import DomainError
from zetatails.thresholds import (
    HIGH_CUTOFF, LOW_CUTOFF, ThresholdQuery, find_threshold, half_line_threshold, ratio_functions,
    render_table, table_low, table_strip,
)
from zetatails.interval import Interval


@pytest.mark.parametrize("sigma", ["0.922", "0.923", "0.924", "0.925", "0.926"])
def test_strip_crossing(sigma):
    r = find_threshold(ThresholdQuery(Fraction(sigma), "headline", 100, 10 ** 6))
    assert r.status == "ok" and r.value == reference.STRIP_FIRST_CROSSING
    assert r.indeterminate == []


@pytest.mark.parametrize("sigma", ["0.097", "0.098", "0.099"])
def test_low_crossing(sigma):
    r = find_threshold(ThresholdQuery(Fraction(sigma), "headline", 100, 10 ** 6))
    assert r.status == "ok" and r.value == reference.LOW_FIRST_CROSSING


def test_crossing_is_a_sign_change():
    numer, asymp = ratio_functions(Fraction(924, 1000))
    assert numer(Interval(590)) / asymp(Interval(590)) >= 1
    assert numer(Interval(589)) / asymp(Interval(589)) < 1


def test_half_line_crossing_has_37_digits():
    r = half_line_threshold()
    assert r.status == "ok" and len(str(r.value)) == 37
    assert r.indeterminate == []
    # the 53-bit reference run agrees to 12 significant digits
    ref = reference.HALF_LINE_THRESHOLD_53BIT
    assert round(r.value, -25) == round(ref, -25)
    assert abs(r.value - ref) < ref // 10 ** 11


def test_half_line_crossing_stable_under_precision():
    assert half_line_threshold(bits=192).value == half_line_threshold().value


def test_status_rendering():
    assert str(find_threshold(ThresholdQuery(Fraction(51, 100), "refined", 100, 10 ** 50))) == "Error"
    below = find_threshold(ThresholdQuery(Fraction(58, 100), "refined", 4, 10 ** 8), reference_form=True)
    assert str(below) == f"<{LOW_CUTOFF}"
    assert HIGH_CUTOFF == 10 ** 40


def test_bad_queries():
    with pytest.raises(DomainError):
        find_threshold(ThresholdQuery(Fraction(1, 2), "headline", 100, 50))
    with pytest.raises(DomainError):
        ratio_functions(Fraction(3, 2))
    with pytest.raises(ValueError):
        ratio_functions(Fraction(3, 4), "other")


def test_tables():
    strip = table_strip()
    assert [str(r[1]) for r in strip][-3:] == ["909", "622", "644"]
    assert str(strip[4][1]) == "5907"
    low = table_low()
    assert (str(low[1][1]), str(low[1][2])) == ("1555", "299")
    assert str(low[0][2]) == "272"
    text = render_table(low)
    assert text.splitlines()[0].split("\t") == ["0.05", "2053", "272"]


def test_reference_form_refined_column():
    rows = table_strip(reference_form=True)
    assert [str(r[3]) for r in rows] == [
        ">10^40", "218949227265891139404", "1566611725095", "95107257", "186207", "1665", "<200", "<200", "<200"]
