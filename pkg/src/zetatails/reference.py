"""Published values of every derived constant, as decimal strings, together
with the comparison used by the CLI and the acceptance checks."""

from __future__ import annotations

from fractions import Fraction

SMOOTHING = {
    "kpar": "27.8821", "k111": "0.15659", "k112": "0.15655", "k113": "0.00979", "k114": "0.07407",
    "k12x": "0.30016", "c21x": "2.4476", "c22x": "1.58493", "k314": "0.11361", "c30x": "0.39113",
}

MEAN_VALUE_LOW = {
    "L_plus": ("6.97134", "45.49404", "44.08609", "22.40776"),
    "L_minus": ("6.97134", "37.22909", "42.38738", "15.46041"),
    "zero_a_plus": "3.98664", "zero_b_plus": "7.36493", "zero_a_minus": "0.12432",
}

TAIL_SECOND = {"half_a": "4.0", "half_b": "46.00343", "one_a": "25.04878", "one_b": "15.94452"}

HEADLINE_TAIL = {
    "C_1": "28.06", "C_121_num_a": "18.85", "C_121_num_b": "0.61", "C_121_opt": "12.13",
    "C_12_num": "7.72", "C_12_opt": "8.99", "C_012_num_a": "0.5", "C_012_num_b": "0.95",
    "C_012_num_c": "5.62", "C_012_num_d": "0.66", "C_012_opt": "15.49",
}

HEADLINE_MEAN_SQUARE = {
    "Cz_1": "18.34", "Cz_121": "2.12", "Cz_12_a": "2.00", "Cz_12_b": "21.16", "Cz_012": "7.75", "Cz_0": "9.3",
}

HALF_LINE_THRESHOLD_53BIT = 7873901852750136399422663268191174656
STRIP_FIRST_CROSSING = 590
LOW_FIRST_CROSSING = 1554


def _as_fraction(v) -> Fraction:
    return Fraction(v)


def compare(computed: dict, expected: dict) -> list:
    """Rows (key, computed, expected, ok); tuples are compared entrywise."""
    rows = []
    for key, exp in expected.items():
        got = computed.get(key)
        if isinstance(exp, tuple):
            ok = got is not None and len(got) == len(exp) and all(
                _as_fraction(g) == _as_fraction(e) for g, e in zip(got, exp))
        else:
            ok = got is not None and _as_fraction(got) == _as_fraction(exp)
        rows.append((key, got, exp, ok))
    return rows
