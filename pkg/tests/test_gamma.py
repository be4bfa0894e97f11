import random
from fractions import Fraction

import mpmath
import pytest

from zetatails.errors import DomainError
from zetatails.gamma import (
    G_sigma, functional_transfer_factor, gamma_abs_enclosure, sin_half_plane_factor, stirling_F,
    transfer_constants, transferred_zeta_sq,
)
from zetatails.interval import ComplexInterval, Interval, pi
from zetatails.zeta_eval import zeta_enclosure


def test_G_values():
    assert G_sigma(Fraction(1, 2)).contains(Fraction(5, 24))
    assert G_sigma(1).contains(Fraction(3, 4))
    for k in range(50):
        s = Fraction(k, 100)
        assert not G_sigma(1 - s) > Fraction(3, 4)


def test_stirling_F_at_right_angle():
    assert stirling_F(pi() / 2).contains(Fraction(1, 6))
    assert stirling_F(Fraction(1)) >= Fraction(1, 12)


def test_gamma_abs_one_plus_i():
    enc = gamma_abs_enclosure(1, 1)
    assert enc.contains(Interval("0.498015668118356", "0.498015668118357"))
    assert abs(enc.lo - mpmath.mpf("0.2461")) < 5e-4 and abs(enc.hi - mpmath.mpf("1.1033")) < 5e-4


def test_gamma_abs_random_points_and_width_shrinks():
    rng = random.Random(5)
    for _ in range(100):
        sigma, t = rng.uniform(0, 3), rng.uniform(1, 60) * rng.choice((-1, 1))
        with mpmath.workdps(30):
            ref = abs(mpmath.gamma(mpmath.mpc(sigma, t)))
        assert gamma_abs_enclosure(Interval(sigma), Interval(t)).contains(ref)
    w10 = gamma_abs_enclosure(Fraction(1, 2), 10)
    w40 = gamma_abs_enclosure(Fraction(1, 2), 40)
    assert w40.width() / w40.mid() < w10.width() / w10.mid()
    with pytest.raises(DomainError):
        gamma_abs_enclosure(1, Fraction(1, 2))


def test_sin_factor_at_zero():
    enc = sin_half_plane_factor(0, 1)
    assert enc.contains(Interval("5.325573", "5.325574"))
    assert abs(enc.lo - mpmath.mpf("5.28546")) < 5e-4 and abs(enc.hi - mpmath.mpf("6.28527")) < 5e-4
    with pytest.raises(DomainError):
        sin_half_plane_factor(Fraction(1, 2), 2)


def test_sin_factor_random_points():
    rng = random.Random(9)
    for _ in range(100):
        sigma, t = rng.uniform(0, 0.499), rng.uniform(1, 30)
        with mpmath.workdps(80):
            ref = abs(mpmath.sin(mpmath.pi * mpmath.mpc(sigma, t) / 2)) ** 2
        assert sin_half_plane_factor(Interval(sigma), Interval(t)).contains(ref)


def test_transfer_constants():
    c = transfer_constants()
    assert c.K1.overlaps(Interval("1.11700").hull(Interval("1.11701")))
    assert 3.5 < c.K2.lo and c.K2.hi < 4


def test_transfer_spot_check():
    sigma, t = Fraction(3, 10), 20
    direct = abs(zeta_enclosure(ComplexInterval(sigma, t))).square()
    conj = abs(zeta_enclosure(ComplexInterval(1 - sigma, t))).square()
    assert transferred_zeta_sq(sigma, t, conj).contains(direct)


def test_transfer_random_closure():
    rng = random.Random(13)
    for _ in range(100):
        sigma, t = rng.uniform(0, 0.499), rng.uniform(2, 50)
        direct = abs(zeta_enclosure(ComplexInterval(Interval(sigma), Interval(t)))).square()
        conj = abs(zeta_enclosure(ComplexInterval(Interval(1 - sigma), Interval(t)))).square()
        assert transferred_zeta_sq(Interval(sigma), Interval(t), conj).overlaps(direct)
    f = functional_transfer_factor(Fraction(1, 4), 10)
    assert f.contains(1)
