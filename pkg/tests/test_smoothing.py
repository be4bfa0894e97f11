from fractions import Fraction

import mpmath
import pytest

from zetatails import reference
from zetatails.errors import DomainError, InadmissibleError
from zetatails.interval import ComplexInterval, Interval, log, pi
from zetatails.smoothing import (
    DEFAULT_POLYNOMIAL, SmoothingPolynomial, alpha_of, b_coefficients, beta_exact, beta_of,
    c_prime, corollary_tail_bound, d_min_max, first_approach_constants, i_sigma_bound,
    leading_coefficient_certified, leading_objective, least_T0_for_three_fifths, linear_polynomial,
    mellin_G, optimize_coefficients, polynomial_from_mapping, polynomial_to_config, read_polynomial,
    tail_bound_first_approach, tail_integral_first, validate, write_polynomial,
)

G = DEFAULT_POLYNOMIAL


def _replace(g, k, value):
    a = list(g.a)
    a[k] = Fraction(value)
    return SmoothingPolynomial(g.n, tuple(a), g.r)


def _g_float(g, x, delta):
    """Direct evaluation of g from its defining formula, as an mpmath oracle."""
    x, d = mpmath.mpf(x), mpmath.mpf(delta)
    if x <= 1 - d:
        return mpmath.mpf(1)
    if x >= 1 + d:
        return mpmath.mpf(0)
    total = mpmath.mpf(1) / 2
    for k, ak in enumerate(g.a):
        if k == 0:
            total += mpmath.mpf(ak.numerator) / ak.denominator * (1 - x) / d
            continue
        total += (mpmath.mpf(ak.numerator) / ak.denominator
                  * ((1 + d - x) * (1 - d - x)) ** k * (1 - x) / d ** (2 * k + 1))
    return total


def test_shipped_polynomial_is_admissible():
    assert validate(G) == []
    assert validate(linear_polynomial()) == []


def test_admissibility_violations():
    assert any("k=0" in v for v in validate(_replace(G, 1, Fraction(-3, 10))))
    assert any("a_2" in v for v in validate(_replace(G, 2, Fraction(-3, 16))))


def _expand_b(g):
    """b_j from multiplying out the polynomial in y = 1 + delta - x (delta = 1)."""
    # (1+d-x) = y, (1-x) = y - 1, (1-d-x) = y - 2 with d = 1
    def mul(p, q):
        out = [Fraction(0)] * (len(p) + len(q) - 1)
        for i, pi_ in enumerate(p):
            for j, qj in enumerate(q):
                out[i + j] += pi_ * qj
        return out

    total = [Fraction(0)] * (4 * g.n + 3)
    for k, ak in enumerate(g.a):
        term = [ak]
        for _ in range(k):
            term = mul(term, [Fraction(0), Fraction(1)])
            term = mul(term, [Fraction(-2), Fraction(1)])
        term = mul(term, [Fraction(-1), Fraction(1)])
        for j, c in enumerate(term):
            total[j] += c
    total[0] += Fraction(1, 2)
    return [(-1) ** (j + 1) * c for j, c in enumerate(total)]


def test_b_coefficients_two_independent_paths():
    b = b_coefficients(G)
    assert b[0] == 0
    # support lies in 3..2n+1: the choice a_1 = -1/4 cancels b_1, and b_2 vanishes too
    assert [j for j, x in enumerate(b) if x != 0] == list(range(3, 14))
    assert list(b) == _expand_b(G)
    lin = b_coefficients(SmoothingPolynomial(0, (Fraction(1, 2),), 3))
    assert lin[1] == Fraction(1, 2) and all(x == 0 for i, x in enumerate(lin) if i != 1)


def test_beta_and_alpha_linear_case():
    g = linear_polynomial()
    assert beta_exact(g) == Fraction(1, 12)
    assert alpha_of(g).contains(Fraction(1, 16))


def test_beta_matches_numeric_integral():
    delta = mpmath.mpf("0.01")
    with mpmath.workdps(30):
        numeric = mpmath.quad(lambda x: _g_float(G, x, delta) ** 2, [1, 1 + delta]) / delta
    assert abs(beta_of(G).mid() - numeric) < 1e-10
    assert alpha_of(G, Fraction(1, 100)).certainly_positive()


def test_mellin_linear_case_matches_quadrature():
    g = linear_polynomial()
    delta = Fraction(1, 10)
    enc = mellin_G(g, ComplexInterval(2, 0), delta)
    with mpmath.workdps(30):
        ref = mpmath.quad(lambda x: _g_float(g, x, mpmath.mpf(1) / 10) * x, [0, 0.9, 1.1])
    assert enc.re.contains(ref) or abs(enc.re.mid() - ref) < 1e-20
    assert enc.im.contains(0)


def test_mellin_shipped_polynomial_near_one():
    T = 200
    s = ComplexInterval(Fraction(1, 2), T)
    Gs = mellin_G(G, s, G.r / T)
    dev = abs(ComplexInterval(1, 0) - Gs * s)
    assert dev.certainly_positive() and dev < 1
    with pytest.raises(DomainError):
        mellin_G(G, ComplexInterval(0, 1), Fraction(1, 100))


def test_d_min_max():
    d_min, d_max = d_min_max(G, G.r, 200)
    assert d_min.certainly_positive() and d_max < 4
    assert d_min < 1 < d_max
    lim_min, lim_max = d_min_max(G)
    assert lim_min.lo >= d_min.lo and lim_max.hi <= d_max.hi
    with pytest.raises(InadmissibleError):
        d_min_max(G, 1, 200)


@pytest.mark.parametrize("sigma", [Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), 1])
def test_i_sigma_bound_positive(sigma):
    assert i_sigma_bound(sigma, Fraction(1, 100), alpha_of(G), beta_of(G)).certainly_positive()


def test_i_sigma_half_example():
    d = Fraction(1, 100)
    a, b = Fraction(1, 16), Fraction(1, 12)
    got = i_sigma_bound(Fraction(1, 2), d, a, b)
    g = float(mpmath.euler)
    expected = 2 * b * (d * float(mpmath.log(100)) + g * d + d * d / (2 * (1 - d * d))) + d * (
        Fraction(1, 4) + a / 2 + a * a / 3)
    assert abs(got.mid() - float(expected)) < 1e-12


def test_first_approach_constant_table():
    pub = first_approach_constants().published
    for key, value in reference.SMOOTHING.items():
        assert pub[key] == Fraction(value), key


def test_leading_certificate_and_least_T0():
    assert leading_coefficient_certified()
    assert least_T0_for_three_fifths() == 192


def test_half_line_tail_plug_in():
    rep = tail_bound_first_approach(Fraction(1, 2), 200)
    T = Interval(200)
    expected = Fraction(3, 5) * log(T) / T + Interval("2.4476") / T + Interval("1.58493") / T.square()
    assert rep.upper.overlaps(expected)
    assert tail_integral_first(Fraction(1, 2), 200).overlaps(expected * pi())


@pytest.mark.parametrize("sigma", [Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), 1])
def test_tail_bound_decreasing_in_T(sigma):
    vals = [tail_bound_first_approach(sigma, T).upper for T in (200, 400, 1000, 10 ** 5)]
    assert all(b < a for a, b in zip(vals, vals[1:]))
    with pytest.raises(DomainError):
        tail_bound_first_approach(sigma, 150)


def test_corollary_constants():
    assert c_prime(Fraction(1, 2)).contains(Fraction(217, 768))
    far = corollary_tail_bound(Fraction(3, 4), 10 ** 12).coefficients["rho"]
    assert abs(far.mid() - 2.25) < 1e-9
    with pytest.raises(DomainError):
        corollary_tail_bound(Fraction(1, 10), 5)


def test_corollary_beats_table_for_small_sigma():
    # the linear transition wins only very close to sigma = 0
    sigma, T = Fraction(4, 100), 10 ** 4
    assert corollary_tail_bound(sigma, T).upper < tail_bound_first_approach(sigma, T).upper
    sigma = Fraction(1, 10)
    assert corollary_tail_bound(sigma, T).upper > tail_bound_first_approach(sigma, T).upper


def test_optimizer_small_degree_and_idempotence():
    g2 = optimize_coefficients(2, step=Fraction(1, 1000))
    assert validate(g2) == []
    assert leading_objective(g2) > leading_objective(G)
    assert optimize_coefficients(2, seed=g2, step=Fraction(1, 1000)).a == g2.a


def test_shipped_objective_below_three_fifths():
    assert leading_objective(G) < 0.6


def test_config_round_trip(tmp_path):
    text = polynomial_to_config(G)
    assert "a3 = -533639/10000000" in text
    path = tmp_path / "g.ini"
    write_polynomial(G, path)
    assert read_polynomial(path) == G
    assert polynomial_from_mapping({"n": "0", "a0": "1/2", "r": "3"}) == linear_polynomial()
