"""Explicit Stirling-type bounds for |Gamma| on vertical lines and the
functional-equation transfer factor for sigma < 1/2."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .interval import Interval, exp, iv, log, pi, sin, sqrt


def G_sigma(sigma) -> Interval:
    """G_sigma = sigma^3/3 + (sigma^2/2)|sigma - 1/2| + 1/6."""
    s = iv(sigma)
    return s ** 3 / 3 + s.square() / 2 * abs(s - Fraction(1, 2)) + Fraction(1, 6)


def stirling_F(theta) -> Interval:
    """F(theta) = 1/(12 sin^2(theta/2)), the constant in the explicit Stirling bound."""
    th = iv(theta)
    return 1 / (12 * sin(th / 2).square())


@dataclass(frozen=True)
class TransferConstants:
    K1: Interval
    K2: Interval


def transfer_constants() -> TransferConstants:
    K1 = exp(Interval(Fraction(3, 4))) - 1
    e_pi = exp(pi())
    K2 = 2 * K1 + K1.square() + 2 / e_pi + 4 * K1 / e_pi + 2 * K1.square() / e_pi
    return TransferConstants(K1, K2)


def gamma_abs_enclosure(sigma, t, T=None) -> Interval:
    """Enclosure of |Gamma(sigma + i t)| valid for sigma >= 0, |t| >= T >= 1.

    T defaults to the smallest |t| in the box.
    """
    s = iv(sigma)
    t = iv(t)
    at = abs(t)
    if s.lo < 0:
        raise DomainError("gamma_abs_enclosure needs sigma >= 0")
    if at.lo < 1:
        raise DomainError("gamma_abs_enclosure needs |t| >= 1")
    T = Interval(at.lo) if T is None else iv(T)
    if T.lo < 1 or T.hi > at.lo:
        raise DomainError("need 1 <= T <= |t|")
    G = G_sigma(s)
    core = sqrt(2 * pi()) * exp((s - Fraction(1, 2)) * log(at)) * exp(-pi() * at / 2)
    spread = G / T
    lo = core * exp(-spread)
    hi = core * exp(spread)
    return Interval(lo.lo, hi.hi)


def sin_half_plane_factor(sigma, t) -> Interval:
    """|sin(pi s / 2)|^2 enclosed as (e^{pi t}/4)(1 +- 2 e^{-pi t})."""
    s = iv(sigma)
    t = iv(t)
    if s.lo < 0 or s.hi >= 0.5:
        raise DomainError("sin_half_plane_factor needs 0 <= sigma < 1/2")
    if t.lo < 1:
        raise DomainError("sin_half_plane_factor needs t >= 1")
    ept = exp(pi() * t)
    base = ept / 4
    rel = 2 / ept
    lo = base * (1 - rel)
    hi = base * (1 + rel)
    return Interval(lo.lo, hi.hi)


def functional_transfer_factor(sigma, t) -> Interval:
    """Multiplicative enclosure (1 +- K2/t) linking |zeta(sigma+it)|^2 to
    (2 pi)^{2 sigma - 1} t^{1 - 2 sigma} |zeta(1 - sigma + it)|^2."""
    s = iv(sigma)
    t = iv(t)
    if s.lo < 0 or s.hi >= 0.5:
        raise DomainError("functional_transfer_factor needs 0 <= sigma < 1/2")
    if t.lo < 1:
        raise DomainError("functional_transfer_factor needs t >= 1")
    K2 = transfer_constants().K2
    rel = K2 / Interval(t.lo)
    return Interval((1 - rel).lo, (1 + rel).hi)


def transferred_zeta_sq(sigma, t, zeta_conj_sq) -> Interval:
    """Enclosure of |zeta(sigma+it)|^2 from an enclosure of |zeta(1-sigma+it)|^2."""
    s = iv(sigma)
    t = iv(t)
    pref = exp((2 * s - 1) * log(2 * pi())) * exp((1 - 2 * s) * log(t))
    return pref * iv(zeta_conj_sq) * functional_transfer_factor(s, t)
