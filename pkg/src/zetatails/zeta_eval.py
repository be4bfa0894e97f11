"""Certified enclosures of zeta via Euler-Maclaurin summation, the truncation
constant D(C), and the mean-value constant E."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, ParameterError, PoleError
from .interval import (
    ComplexInterval,
    Interval,
    cexp,
    cos_sin,
    exp,
    get_precision,
    iv,
    log,
    pi,
    sqrt,
)
from .special import K_MAX, bernoulli_poly, bernoulli_sup_bound

D_CLAMP = 10_000


@dataclass(frozen=True)
class ZetaEMParams:
    X: int
    K: int = 10

    def __post_init__(self):
        if self.X < 1:
            raise ParameterError("truncation point X must be >= 1")
        if not 1 <= self.K <= K_MAX:
            raise ParameterError(f"correction order K must be in 1..{K_MAX}")


def default_params(t) -> ZetaEMParams:
    tmax = float(abs(iv(t)).hi)
    return ZetaEMParams(X=max(int(math.ceil(2 * tmax)), 32), K=10)


def _frac_part(X: int | Fraction):
    X = Fraction(X)
    n = math.floor(X)
    return n, Interval(X - n)


def zeta_enclosure(s, params: ZetaEMParams | None = None) -> ComplexInterval:
    """Enclosure of zeta(s) for a complex box s (sigma > 1-K, 1 not in s)."""
    if not isinstance(s, ComplexInterval):
        s = ComplexInterval(iv(s.real), iv(s.imag)) if isinstance(s, complex) else ComplexInterval(iv(s), 0)
    if params is None:
        params = default_params(s.im)
    X, K = params.X, params.K
    sigma = s.re
    if sigma.lo <= 1 - K:
        raise ParameterError(f"need sigma > 1-K = {1 - K}")
    if s.re.contains(1) and s.im.contains(0):
        raise PoleError("the box contains s = 1")
    if s.im.certainly_negative():
        # zeta(conj s) = conj zeta(s); evaluating in the upper half plane keeps
        # the two enclosures bit-identical
        return zeta_enclosure(s.conjugate(), params).conjugate()

    n_max, frac = _frac_part(X)
    total = ComplexInterval(0, 0)
    for n in range(1, n_max + 1):
        total = total + _npow_neg(n, s)

    Xi = Interval(X)
    logX = log(Xi)
    x_neg_s = _npow_neg_real(Xi, logX, s)           # X^{-s}
    one_minus_s = ComplexInterval(1 - s.re, -s.im)
    s_minus_1 = ComplexInterval(s.re - 1, s.im)
    total = total + (x_neg_s * Xi) / s_minus_1     # X^{1-s}/(s-1)

    # Boundary terms: sum_{k=1}^K a_k(s) B_k({X}) / (k! X^{s+k-1}).
    a_k = ComplexInterval(1, 0)                     # a_1 = 1
    fact = 1
    x_pow = Interval(1)                             # X^{k-1}
    for k in range(1, K + 1):
        if k >= 2:
            a_k = a_k * ComplexInterval(s.re + (k - 2), s.im)
            fact *= k
            x_pow = x_pow * Xi
        bk = bernoulli_poly(k, frac)
        if bk.is_point() and bk.lo == 0:
            continue
        total = total + (a_k * x_neg_s) * (bk / (Interval(fact) * x_pow))

    # Remainder: |A_K(s)|/K! * sup|B_K| * int_X^inf x^{-sigma-K} dx.
    A_K = a_k * ComplexInterval(s.re + (K - 1), s.im)
    fact_K = math.factorial(K)
    expo = sigma + (K - 1)
    tail = Interval(abs(A_K).hi) * Interval(bernoulli_sup_bound(K).hi)
    tail = tail / (Interval(fact_K) * Interval(expo.lo) * exp(Interval(expo.lo) * logX))
    r = Interval(-tail.hi, tail.hi)
    _ = one_minus_s
    return ComplexInterval(total.re + r, total.im + r)


def _npow_neg(n: int, s: ComplexInterval) -> ComplexInterval:
    ln = _log_int(n)
    return _npow_neg_real(Interval(n), ln, s)


def _npow_neg_real(n: Interval, ln: Interval, s: ComplexInterval) -> ComplexInterval:
    mag = exp(-(s.re * ln))
    c, sn = cos_sin(s.im * ln)
    return ComplexInterval(mag * c, -(mag * sn))


@lru_cache(maxsize=4096)
def _log_int_cached(n: int, prec: int) -> Interval:
    return log(Interval(n))


def _log_int(n: int) -> Interval:
    return _log_int_cached(n, get_precision())


def zeta_real(alpha, params: ZetaEMParams | None = None) -> Interval:
    """Real enclosure of zeta(alpha) for real alpha != 1."""
    alpha = iv(alpha)
    if alpha.contains(1):
        raise PoleError("zeta has a pole at 1")
    return _zeta_real_cached(alpha._a, alpha._b, params, get_precision())


@lru_cache(maxsize=2048)
def _zeta_real_cached(a, b, params, prec):
    alpha = Interval._raw((a, b))
    if params is None:
        params = ZetaEMParams(X=32, K=10)
        # keep sigma > 1-K for moderately negative arguments
        if alpha.lo <= 1 - params.K:
            k = min(K_MAX, int(math.ceil(2 - float(alpha.lo))) + 2)
            params = ZetaEMParams(X=32, K=k)
    z = zeta_enclosure(ComplexInterval(alpha, 0), params)
    return z.re


# -- truncation constant D(C) -------------------------------------------------

@dataclass(frozen=True)
class TruncationConstant:
    C: int
    D: Interval
    clamped: bool = False


def d_constant(C: int) -> TruncationConstant:
    """D(C) bounding |zeta(s) - sum_{n<=X} n^-s - X^{1-s}/(s-1)| * X^sigma."""
    if C < 1:
        raise DomainError("C must be a positive integer")
    clamped = C > D_CLAMP
    Ce = min(int(C), D_CLAMP)
    return TruncationConstant(int(C), _d_value(Ce, get_precision()), clamped)


@lru_cache(maxsize=256)
def _d_value(C: int, prec: int) -> Interval:
    P = pi()
    invC2 = Interval(Fraction(1, C * C))
    r1 = sqrt(1 + invC2)
    QC = (r1 + 1) / (2 * P)
    zeta3 = zeta_real(Interval(3))
    part = Fraction(1, 2) + r1 * (Fraction(1, 12) + zeta3 / (4 * P ** 3 * (1 - QC)) * sqrt(1 + 2 * invC2))
    last = (
        zeta_real(Interval(C + 2))
        / (P * (2 * P) ** (C + 1))
        * r1
        * (r1 + 1 + Interval(Fraction(1, C))) ** (C + 1)
    )
    return part + last


def d_limit() -> Interval:
    """lim_{C->inf} D(C) = 7/12 + zeta(3)/(4 pi^2 (pi-1))."""
    P = pi()
    return Fraction(7, 12) + zeta_real(Interval(3)) / (4 * P ** 2 * (P - 1))


def truncated_zeta_error(s, X, C: int) -> Interval:
    """Bound D(C)/X^sigma for the truncated approximation of zeta(s)."""
    if not isinstance(s, ComplexInterval):
        s = ComplexInterval(iv(s.real), iv(s.imag)) if isinstance(s, complex) else ComplexInterval(iv(s), 0)
    Xi = iv(X)
    if s.re.contains(1) and s.im.contains(0):
        raise PoleError("the box contains s = 1")
    if s.re.lo <= 0 or s.re.hi > 1:
        raise DomainError("truncated_zeta_error needs 0 < sigma <= 1")
    if abs(s.im).hi > Xi.lo:
        raise DomainError("truncated_zeta_error needs |t| <= X")
    if Xi.lo < 1 or Xi.lo < C:
        raise DomainError("truncated_zeta_error needs X >= max(1, C)")
    D = d_constant(C).D
    bound = D / exp(s.re * log(Xi))
    return Interval(bound.hi)


def meanvalue_constant_E() -> Interval:
    """E = 2 pi sqrt(1 + (2/3) sqrt(6/5))."""
    return 2 * pi() * sqrt(1 + Fraction(2, 3) * sqrt(Interval(Fraction(6, 5))))
