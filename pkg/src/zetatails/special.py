"""Bernoulli numbers and polynomials, elementary sum enclosures and small
inequalities used when assembling explicit constants."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import CapacityError, ContractError, DomainError
from .interval import Interval, euler_gamma, iv, log

K_MAX = 64


@lru_cache(maxsize=None)
def bernoulli_numbers() -> tuple:
    """b_0..b_K_MAX as exact fractions, with b_1 = -1/2."""
    b = [Fraction(0)] * (K_MAX + 1)
    b[0] = Fraction(1)
    for m in range(1, K_MAX + 1):
        b[m] = -sum(comb(m + 1, k) * b[k] for k in range(m)) / (m + 1)
    return tuple(b)


@lru_cache(maxsize=None)
def bernoulli_poly_coeffs(k: int) -> tuple:
    """Coefficients c_0..c_k of B_k(x) = sum c_j x^j."""
    if k < 0 or k > K_MAX:
        raise CapacityError(f"Bernoulli index {k} outside 0..{K_MAX}")
    b = bernoulli_numbers()
    return tuple(comb(k, j) * b[k - j] for j in range(k + 1))


def bernoulli_poly(k: int, x) -> Interval:
    """Enclosure of B_k(x) for x an Interval inside [0, 1]."""
    if k > K_MAX:
        raise CapacityError(f"Bernoulli index {k} exceeds K_MAX={K_MAX}")
    x = iv(x)
    if x.lo < 0 or x.hi > 1:
        raise DomainError("Bernoulli polynomials are evaluated on [0, 1] only")
    coeffs = bernoulli_poly_coeffs(k)
    if x.is_point():
        acc = Interval(0)
        for c in reversed(coeffs):
            acc = acc * x + Interval(c)
        return acc
    # Horner on an interval overestimates; the centred form with a derivative
    # bound keeps things tight, and the plain Horner value is intersected in.
    m = Interval(x.mid())
    at_mid = bernoulli_poly(k, m)
    horner = Interval(0)
    for c in reversed(coeffs):
        horner = horner * x + Interval(c)
    if k == 0:
        return Interval(1)
    dcoeffs = [j * coeffs[j] for j in range(1, k + 1)]
    deriv = Interval(0)
    for c in reversed(dcoeffs):
        deriv = deriv * x + Interval(c)
    centred = at_mid + deriv * (x - m)
    return centred.intersect(horner) if centred.overlaps(horner) else horner


def bernoulli_sup_bound(k: int) -> Interval:
    """Upper bound for max over [0,1] of |B_k|."""
    from .zeta_eval import zeta_real
    from .interval import pi as _pi
    if k > K_MAX:
        raise CapacityError(f"Bernoulli index {k} exceeds K_MAX={K_MAX}")
    if k == 0:
        return Interval(1)
    if k == 1:
        return Interval(Fraction(1, 2))
    if k % 2 == 0:
        return Interval(abs(bernoulli_numbers()[k]))
    fact = 1
    for j in range(2, k + 1):
        fact *= j
    return 2 * zeta_real(Interval(k)) * fact / (2 * _pi()) ** k


def harmonic_bounds(X):
    """(lower, upper) enclosures bracketing sum_{n<=X} 1/n."""
    X = iv(X)
    if X.lo < 1:
        raise DomainError("harmonic_bounds needs X >= 1")
    base = log(X) + euler_gamma()
    return base - Fraction(2, 3) / X, base + Fraction(1, 2) / X


def power_sum_enclosure(alpha, X) -> Interval:
    """Enclosure of sum_{n<=X} n^-alpha for alpha > 0, alpha != 1."""
    from .zeta_eval import zeta_real
    alpha = iv(alpha)
    X = iv(X)
    if not alpha.certainly_positive():
        raise DomainError("power_sum_enclosure needs alpha > 0")
    if alpha.contains(1):
        raise DomainError("power_sum_enclosure excludes alpha = 1")
    if not X.certainly_positive():
        raise DomainError("power_sum_enclosure needs X > 0")
    main = zeta_real(alpha) - X ** (1 - alpha) / (alpha - 1)
    err = Fraction(1, 2) / X ** alpha
    return Interval((main - err).lo, (main + err).hi)


def stieltjes_zeta_bounds(sigma):
    """Bracketing of zeta(sigma) near its pole.

    Returns (lower, upper) with lower = 1/(sigma-1) valid on (0, 2) minus {1}
    and upper = 1/(sigma-1) + zeta(2) - 1 on (1, 2); upper is None below 1.
    """
    from .zeta_eval import zeta_real
    sigma = iv(sigma)
    if sigma.lo <= 0 or sigma.hi >= 2 or sigma.contains(1):
        raise DomainError("stieltjes_zeta_bounds needs sigma in (0, 2), sigma != 1")
    lower = 1 / (sigma - 1)
    if sigma > 1:
        return lower, lower + zeta_real(Interval(2)) - 1
    return lower, None


@dataclass(frozen=True)
class RhoSplit:
    rho: Interval
    coef_a: Interval
    coef_b: Interval
    direction: str

    def combine(self, a2, b2) -> Interval:
        return self.coef_a * a2 + self.coef_b * b2


def rho_split(A, B, rho):
    """Coefficients (1+rho, 1+1/rho) for (A+B)^2 <= (1+rho)A^2 + (1+1/rho)B^2.

    For rho in (-1, 0) the same pair gives the lower bound
    (A-B)^2 >= (1+rho)A^2 + (1+1/rho)B^2.
    Returns (RhoSplit, value) where value is the combined bound.
    """
    A, B, rho = iv(A), iv(B), iv(rho)
    if A.lo < 0 or B.lo < 0:
        raise DomainError("rho_split needs A, B >= 0")
    if rho > 0:
        direction = "upper"
    elif rho.lo > -1 and rho < 0:
        direction = "lower"
    else:
        raise DomainError("rho must lie in (0, inf) or in (-1, 0)")
    split = RhoSplit(rho, 1 + rho, 1 + 1 / rho, direction)
    return split, split.combine(A.square(), B.square())


def improved_em_second_order(f0, fprime0, integral, tv_fprime) -> Interval:
    """Enclosure of sum_{n>=1} f(n) from caller-certified functionals.

    f0 = f(0), fprime0 = lim f'(0+), integral = int_0^inf f,
    tv_fprime = a certified bound for the total variation of f'.
    """
    if tv_fprime is None:
        raise ContractError("a certified total-variation bound for f' is required")
    tv = iv(tv_fprime)
    if tv.lo < 0:
        raise ContractError("total variation bound must be non-negative")
    centre = iv(integral) - iv(f0) / 2 - iv(fprime0) / 16
    err = tv.hi / 16
    return Interval((centre - Interval(err)).lo, (centre + Interval(err)).hi)
