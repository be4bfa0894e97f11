"""Smoothing-function approach to tails of |zeta(s)/s|^2.

A smoothing polynomial g drops from 1 to 0 on [1-delta, 1+delta]; its Mellin
transform G is explicit, and the bound on the tail integral comes from
|1 - G(s)s|^2 >= d_min together with an upper bound for
I(sigma) = (1/2 pi i) int |1/s - G(s)|^2 |zeta(s)|^2 ds.
"""

from __future__ import annotations

import configparser
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb, factorial

from .errors import DomainError, InadmissibleError
from .interval import (
    ComplexInterval,
    Interval,
    cpow_real_base,
    euler_gamma,
    iv,
    log,
    pi,
)
from .report import BoundReport
from .rounding import fmt, lower_fraction, rounddown, roundup
from .zeta_eval import zeta_real

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class SmoothingPolynomial:
    """g(x) = 1/2 + sum_k a_k (1+d-x)^k (1-x) (1-d-x)^k / d^(2k+1) on [1-d, 1+d],
    with d = r/T."""

    n: int
    a: tuple
    r: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(Fraction(x) for x in self.a))
        object.__setattr__(self, "r", Fraction(self.r))
        if len(self.a) != self.n + 1:
            raise ValueError("need exactly n+1 coefficients a_0..a_n")


DEFAULT_POLYNOMIAL = SmoothingPolynomial(
    n=6,
    a=(
        HALF,
        Fraction(-1, 4),
        Fraction(3, 16),
        Fraction(-533639, 10 ** 7),
        Fraction(81112, 10 ** 7),
        Fraction(-7415, 10 ** 7),
        Fraction(370, 10 ** 7),
    ),
    r=Fraction(528035, 100000),
)

# The smallest T at which the constant table below is claimed.
T0_FIRST = 200


def linear_polynomial() -> SmoothingPolynomial:
    """The plain linear transition g = 1/2 - (x-1)/(2 delta)."""
    return SmoothingPolynomial(n=0, a=(HALF,), r=Fraction(3))


# -- admissibility -------------------------------------------------------------

def validate(g: SmoothingPolynomial) -> list:
    """Return the list of violated admissibility conditions (empty when ok)."""
    bad = []
    a = g.a
    if a[0] != HALF:
        bad.append("a_0 must equal 1/2")
    if g.n >= 1 and a[1] != Fraction(-1, 4):
        bad.append("a_1 must equal -1/4")
    for k, ak in enumerate(a):
        if ak != 0 and (ak > 0) != (k % 2 == 0):
            bad.append(f"sign of a_{k} must be (-1)^{k}")
    for k in range(g.n):
        if abs(a[k + 1]) > Fraction(2 * k + 1, 2 * k + 2) * abs(a[k]):
            bad.append(f"|a_{k + 1}| exceeds (2k+1)/(2k+2)|a_{k}| at k={k}")
    if g.r <= 0:
        bad.append("r must be positive")
    return bad


# -- derived quantities ---------------------------------------------------------

def _binom(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0


@lru_cache(maxsize=256)
def _b_coeffs(n: int, a: tuple) -> tuple:
    b = [Fraction(0)] * (4 * n + 3)
    for j in range(1, 2 * n + 2):
        s = Fraction(0)
        for k in range(n + 1):
            s += Fraction(2) ** (2 * k - j) * (2 * _binom(k, j - k - 1) + _binom(k, j - k)) * a[k]
        b[j] = s
    return tuple(b)


def b_coefficients(g: SmoothingPolynomial) -> tuple:
    """Exact b_j, 0 <= j <= 4n+2, with g(x) = sum_j (-1)^(j+1) b_j (y/delta)^j,
    y = 1 + delta - x. Entries past 2n+1 are zero."""
    return _b_coeffs(g.n, g.a)


def beta_exact(g: SmoothingPolynomial) -> Fraction:
    """beta = (1/delta) int_1^(1+delta) g^2 as an exact rational."""
    b = b_coefficients(g)
    total = Fraction(0)
    for i in range(4 * g.n + 3):
        conv = sum(b[l] * b[i - l] for l in range(i + 1))
        total += Fraction((-1) ** i, i + 1) * conv
    return total


def beta_of(g: SmoothingPolynomial) -> Interval:
    return Interval(beta_exact(g))


# g on the transition in u = (x-1)/delta is 1/2 - u S(u^2) with
# S(w) = sum |a_k| (1-w)^k, so g'' has the sign of -u (6 S'(w) + 4 w S''(w)).

def _S_derivs(g: SmoothingPolynomial, w: Interval):
    """First three derivatives of S at w."""
    one_minus = 1 - w
    s1 = Interval(0)
    s2 = Interval(0)
    s3 = Interval(0)
    for k, ak in enumerate(g.a):
        c = Interval(abs(ak))
        if k >= 1:
            s1 = s1 - c * k * one_minus ** (k - 1)
        if k >= 2:
            s2 = s2 + c * (k * (k - 1)) * one_minus ** (k - 2)
        if k >= 3:
            s3 = s3 - c * (k * (k - 1) * (k - 2)) * one_minus ** (k - 3)
    return s1, s2, s3


def _tv_certified(g: SmoothingPolynomial, pieces: int = 64) -> bool:
    """True when g'' <= 0 on (1-delta, 1) and >= 0 on (1, 1+delta).

    Works with f(w) = 6 S'(w) + 4 w S''(w), which must be <= 0 on [0, 1].
    On an inconclusive piece, f' >= 0 lets the right endpoint decide.
    """
    for i in range(pieces):
        w = Interval(Fraction(i, pieces), Fraction(i + 1, pieces))
        s1, s2, s3 = _S_derivs(g, w)
        if (6 * s1 + 4 * w * s2).hi <= 0:
            continue
        if (10 * s2 + 4 * w * s3).lo < 0:
            return False
        right = Interval(Fraction(i + 1, pieces))
        r1, r2, _ = _S_derivs(g, right)
        if (6 * r1 + 4 * right * r2).hi > 0:
            return False
    return True


def _tv_fallback(g: SmoothingPolynomial, pieces: int = 64) -> Interval:
    """(1/8) int_0^1 |p''(u)| du via per-piece sup bounds, p(u) = u S(u^2)."""
    total = Interval(0)
    for i in range(pieces):
        u = Interval(Fraction(i, pieces), Fraction(i + 1, pieces))
        w = u.square()
        s1, s2, _ = _S_derivs(g, w)
        pp = abs(u * (6 * s1 + 4 * w * s2))
        total = total + Interval(pp.hi) / pieces
    return total / 8


def alpha_of(g: SmoothingPolynomial, delta=None) -> Interval:
    """alpha = (delta/16) TV(g'), which does not depend on delta.

    When g' is certified unimodal the total variation is 2|g'(1)| and
    alpha = sum |a_k| / 8; otherwise a subdivided bound is used.
    """
    if delta is not None:
        d = iv(delta)
        if d.lo <= 0 or d.hi > 0.5:
            raise DomainError("delta must lie in (0, 1/2]")
    if _tv_certified(g):
        return Interval(sum(abs(x) for x in g.a) / 8)
    return _tv_fallback(g)


def mellin_G(g: SmoothingPolynomial, s, delta) -> ComplexInterval:
    """Enclosure of the Mellin transform of g at s (Re s > 0)."""
    if not isinstance(s, ComplexInterval):
        s = ComplexInterval(iv(s.real), iv(s.imag)) if isinstance(s, complex) else ComplexInterval(iv(s), 0)
    if s.re.lo <= 0:
        raise DomainError("mellin_G needs Re(s) > 0")
    d = iv(delta)
    if d.lo <= 0 or d.hi > 0.5:
        raise DomainError("delta must lie in (0, 1/2]")
    b = b_coefficients(g)
    total = ComplexInterval(0, 0)
    denom = s
    for j in range(1, 2 * g.n + 2):
        denom = denom * ComplexInterval(s.re + j, s.im)
        if b[j] == 0:
            continue
        sj = ComplexInterval(s.re + j, s.im)
        up = cpow_real_base(1 + d, sj)
        down = cpow_real_base(1 - d, sj)
        num = up - down if j % 2 == 1 else ComplexInterval(0, 0) - up - down
        coef = Interval(factorial(j) * b[j]) / d ** j
        total = total + (num * coef) / denom
    return total


def _sumexpr(g: SmoothingPolynomial, r: Interval, T: Interval) -> Interval:
    b = b_coefficients(g)
    total = Interval(0)
    for j in range(1, 2 * g.n + 2):
        inner = Interval(0)
        for i in range(0, j + 2, 2):
            inner = inner + comb(j + 1, i) * r ** i / T ** i
        total = total + 2 * factorial(j) * Interval(abs(b[j])) / r ** j * inner
    return total


def d_min_max(g: SmoothingPolynomial, r=None, T=None):
    """(d_min, d_max) = ((1 - S)^2, (1 + S)^2) where S bounds |G(s)s - 1 + 1|
    departures on |Im s| >= T with delta = r/T. T=None gives the T -> oo limit."""
    r = iv(g.r if r is None else r)
    if T is None:
        b = b_coefficients(g)
        S = Interval(0)
        for j in range(1, 2 * g.n + 2):
            S = S + 2 * factorial(j) * Interval(abs(b[j])) / r ** j
    else:
        T = iv(T)
        if not 2 * r <= T:
            raise DomainError("need 0 < r <= T/2")
        S = _sumexpr(g, r, T)
    if not S < 1:
        raise InadmissibleError("the defining sum is not below 1; r is too small")
    return (1 - S).square(), (1 + S).square()


def i_sigma_bound(sigma, delta, alpha, beta) -> Interval:
    """Upper bound for I(sigma) = int_0^oo |h(x)|^2 x^(2 sigma - 1) dx."""
    s = iv(sigma)
    d = iv(delta)
    alpha, beta = iv(alpha), iv(beta)
    if s.lo <= 0 or s.hi > 1:
        raise DomainError("i_sigma_bound needs 0 < sigma <= 1")
    if d.lo <= 0 or d.hi > 0.5:
        raise DomainError("delta must lie in (0, 1/2]")
    c = 1 / (8 * s) + alpha / (2 * s + 1) + alpha.square() / (2 * s + 2)
    d2s = d ** (2 * s)
    if s.is_point() and s.lo == 0.5:
        X = log(1 / d) + euler_gamma() + d / (2 * (1 - d.square()))
    elif s.contains(HALF):
        raise DomainError("sigma interval straddles 1/2; split it")
    else:
        X = zeta_real(2 * s) - d ** (2 * s - 1) / (2 * s - 1) + d2s / (2 * (1 - d.square()))
    return c * d2s + 2 * beta * d * X


# -- the constant table ---------------------------------------------------------

@dataclass(frozen=True)
class FirstApproachConstants:
    """Raw enclosures and published roundings of the smoothing-approach table."""

    raw: dict
    published: dict
    leading: Interval           # 2 beta r / d_min
    alpha: Interval
    beta: Interval
    d_min: Interval
    d_max: Interval

    def text(self) -> str:
        return "\n".join(f"{k} = {fmt(v, 5)}" for k, v in self.published.items())


# Keys rounded down (their lower endpoint) because they enter with a minus
# sign or multiply a negative quantity.
_ROUND_DOWN = ("k114", "c30x")
_KEYS = ("kpar", "k111", "k112", "k113", "k114", "k12x", "c21x", "c22x", "k314", "c30x")


def first_approach_constants(g: SmoothingPolynomial = DEFAULT_POLYNOMIAL, T0=T0_FIRST) -> FirstApproachConstants:
    return _first_constants(g, Fraction(T0))


@lru_cache(maxsize=32)
def _first_constants(g, T0):
    r = Interval(g.r)
    T = Interval(T0)
    d_min, d_max = d_min_max(g, r, T)
    beta = beta_of(g)
    alpha = alpha_of(g)
    gamma = euler_gamma()
    shrink = 1 - r.square() / T.square()
    raw = {
        "kpar": r.square(),
        "k111": 1 / (8 * d_min),
        "k112": alpha / d_min,
        "k113": alpha.square() / (2 * d_min),
        "k114": 2 * beta * (1 - Fraction(1, 10 ** 5) / r.square()) / d_max,
        "k12x": beta * r / (shrink * d_min),
        "c21x": r / (4 * d_min) + alpha * r / (2 * d_min) + alpha.square() * r / (3 * d_min)
        + 2 * beta * gamma * r / d_min,
        "c22x": beta * r.square() / (shrink * d_min),
        "k314": 2 * beta / d_min,
        "c30x": 2 * beta * r / d_max,
    }
    published = {
        k: (rounddown(v, 5) if k in _ROUND_DOWN else roundup(v, 5)) for k, v in raw.items()
    }
    return FirstApproachConstants(raw, published, 2 * beta * r / d_min, alpha, beta, d_min, d_max)


def leading_coefficient_certified(g: SmoothingPolynomial = DEFAULT_POLYNOMIAL, T0=T0_FIRST) -> bool:
    """Rigorous check that 2 beta r / d_min <= 3/5."""
    return first_approach_constants(g, T0).leading <= Fraction(3, 5)


def least_T0_for_three_fifths(g: SmoothingPolynomial = DEFAULT_POLYNOMIAL, lo: int = 11, hi: int = 10 ** 6):
    """Least integer T for which 2 beta r / d_min(T) <= 3/5 is certified."""
    def ok(T):
        try:
            d_min, _ = d_min_max(g, Interval(g.r), Interval(T))
        except (InadmissibleError, DomainError):
            return False
        return 2 * beta_of(g) * Interval(g.r) / d_min <= Fraction(3, 5)

    if not ok(hi):
        return None
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if ok(mid):
            hi = mid
        else:
            lo = mid
    return hi


def _sigma_point(sigma) -> Interval:
    s = iv(sigma)
    if s.lo <= 0 or s.hi > 1:
        raise DomainError("sigma must lie in (0, 1]")
    return s


def tail_bound_first_approach(sigma, T, constants: FirstApproachConstants | None = None) -> BoundReport:
    """Bound for (1/2 pi i)(int_{sigma-i oo}^{sigma-iT} + int_{sigma+iT}^{sigma+i oo}) |zeta(s)/s|^2 ds.

    The same quantity equals (1/pi) int_T^oo |zeta(sigma+it)/(sigma+it)|^2 dt.
    """
    s = _sigma_point(sigma)
    T = iv(T)
    if lower_fraction(T) < T0_FIRST:
        raise DomainError(f"T must be at least {T0_FIRST}")
    c = constants or first_approach_constants()
    p = {k: Interval(v) for k, v in c.published.items()}
    kap = p["kpar"] ** s
    coeffs = {}
    if s.is_point() and s.lo == 0.5:
        formula = "(3/5) log T / T + c21 / T + c22 / T^2"
        value = Fraction(3, 5) * log(T) / T + p["c21x"] / T + p["c22x"] / T.square()
        coeffs = {"c21": p["c21x"], "c22": p["c22x"]}
    elif s.lo > 0.5:
        formula = (
            "3 zeta(2s)/(5T) + (c111/s + c112/(2s+1) + c113/(s+1) - c114/(2s-1)) / T^(2s)"
            " + c12 / T^(2s+1)"
        )
        c111, c112, c113, c114 = (kap * p[k] for k in ("k111", "k112", "k113", "k114"))
        c12 = kap * p["k12x"]
        main = 3 * zeta_real(2 * s) / (5 * T)
        second = (c111 / s + c112 / (2 * s + 1) + c113 / (s + 1) - c114 / (2 * s - 1)) / T ** (2 * s)
        value = main + second + c12 / T ** (2 * s + 1)
        coeffs = {"c111": c111, "c112": c112, "c113": c113, "c114": c114, "c12": c12}
    elif s.hi < 0.5:
        formula = (
            "(c311/s + c312/(2s+1) + c313/(s+1) + c314/(1-2s)) / T^(2s)"
            " + c30 zeta(2s) / T + c32 / T^(2s+1)"
        )
        c311, c312, c313 = (kap * p[k] for k in ("k111", "k112", "k113"))
        c314 = kap * p["k314"]
        c32 = kap * p["k12x"]
        first = (c311 / s + c312 / (2 * s + 1) + c313 / (s + 1) + c314 / (1 - 2 * s)) / T ** (2 * s)
        value = first + p["c30x"] * zeta_real(2 * s) / T + c32 / T ** (2 * s + 1)
        coeffs = {"c311": c311, "c312": c312, "c313": c313, "c314": c314, "c30": p["c30x"], "c32": c32}
    else:
        raise DomainError("sigma interval straddles 1/2; split it")
    return BoundReport(
        family="smoothing",
        sigma=s,
        T=T,
        formula=formula,
        coefficients=coeffs,
        upper=value,
        notes=["multiply by pi for int_T^oo |zeta(sigma+it)/(sigma+it)|^2 dt"],
    )


def tail_integral_first(sigma, T) -> Interval:
    """Upper bound for int_T^oo |zeta(sigma+it)/(sigma+it)|^2 dt."""
    return pi() * tail_bound_first_approach(sigma, T).upper


def corollary_tail_bound(sigma, T) -> BoundReport:
    """Tail bound from the linear transition g with delta = 3/T or (1+1/sigma)/T."""
    s = _sigma_point(sigma)
    T = iv(T)
    if not (T > 3 and T > 1 + 1 / s):
        raise DomainError("need T > max(3, 1 + 1/sigma)")
    c_prime = 1 / (8 * s) + 1 / (16 * (2 * s + 1)) + 1 / (512 * (s + 1))

    def c0(kappa):
        kappa = iv(kappa)
        return kappa ** (2 * s) * (c_prime + kappa / (12 * T * (1 - kappa.square() / T.square())))

    def c1(kappa):
        return iv(kappa) ** (2 * s) / (6 * (2 * s - 1))

    if s.lo >= 0.5:
        rho = Fraction(9, 4) / (1 - Fraction(9, 2) / T.square()).square()
    elif s.hi < 0.5:
        rho = (1 + s).square() / (1 - (1 + s).square() / (s * T.square())).square()
    else:
        raise DomainError("sigma interval straddles 1/2; split it")
    if s.is_point() and s.lo == 0.5:
        c2 = (log(Interval(3)) - euler_gamma()) / 2
        inner = log(T) / (2 * T) + (c0(3) - c2) / T
        formula = "rho (log T / (2T) + (c0(3) - c2) / T)"
        coeffs = {"rho": rho, "c0": c0(3), "c2": c2}
    elif s.lo > 0.5:
        inner = zeta_real(2 * s) / (2 * T) + (c0(3) - c1(3)) / T ** (2 * s)
        formula = "rho (zeta(2s)/(2T) + (c0(3) - c1(3)) / T^(2s))"
        coeffs = {"rho": rho, "c0": c0(3), "c1": c1(3)}
    elif s.hi < 0.5:
        k = 1 + 1 / s
        c3 = (s + 1) * zeta_real(2 * s) / (6 * s)
        inner = (c0(k) - c1(k)) / T ** (2 * s) + c3 / T
        formula = "rho ((c0(1+1/s) - c1(1+1/s)) / T^(2s) + c3 / T)"
        coeffs = {"rho": rho, "c0": c0(k), "c1": c1(k), "c3": c3}
    else:
        raise DomainError("sigma interval straddles 1/2; split it")
    return BoundReport(
        family="linear-smoothing",
        sigma=s,
        T=T,
        formula=formula,
        coefficients=coeffs,
        upper=rho * inner,
        notes=["multiply by pi for int_T^oo |zeta(sigma+it)/(sigma+it)|^2 dt"],
    )


def c_prime(sigma) -> Interval:
    s = iv(sigma)
    return 1 / (8 * s) + 1 / (16 * (2 * s + 1)) + 1 / (512 * (s + 1))


# -- optimizer ---------------------------------------------------------------------

def _objective_float(n: int, a: tuple, r: float) -> float:
    b = _b_coeffs(n, a)
    S = sum(2 * math.factorial(j) * abs(float(b[j])) / r ** j for j in range(1, 2 * n + 2))
    if S >= 1:
        return math.inf
    beta = float(beta_exact(SmoothingPolynomial(n, a, Fraction(1))))
    return 2 * beta * r / (1 - S) ** 2


def _best_r(n: int, a: tuple, lo: float = 0.5, hi: float = 40.0, iters: int = 80):
    """Golden-section minimisation of the leading coefficient over r."""
    phi = (math.sqrt(5) - 1) / 2
    x1 = hi - phi * (hi - lo)
    x2 = lo + phi * (hi - lo)
    f1 = _objective_float(n, a, x1)
    f2 = _objective_float(n, a, x2)
    for _ in range(iters):
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - phi * (hi - lo)
            f1 = _objective_float(n, a, x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + phi * (hi - lo)
            f2 = _objective_float(n, a, x2)
    r = (lo + hi) / 2
    return _objective_float(n, a, r), r


def leading_objective(g: SmoothingPolynomial) -> float:
    """min over r of 2 beta r / d_min in the T -> oo limit."""
    return _best_r(g.n, g.a)[0]


def _admissible(n: int, a: tuple) -> bool:
    return not validate(SmoothingPolynomial(n, a, Fraction(1)))


def optimize_coefficients(n: int, seed: SmoothingPolynomial | None = None, step=Fraction(1, 10 ** 7),
                          max_rounds: int = 1000, workers: int = 4) -> SmoothingPolynomial:
    """Coordinate descent over increments in {0, +-step}^(n-1) on a_2..a_n.

    The best increment is repeated while it keeps improving; the search stops
    when no increment improves the objective.
    """
    step = Fraction(step)
    if seed is None:
        a = [HALF, Fraction(-1, 4)] + [Fraction(0)] * (n - 1) if n >= 1 else [HALF]
    else:
        a = list(seed.a) + [Fraction(0)] * max(0, n + 1 - len(seed.a))
        a = a[: n + 1]
    a = tuple(a)
    if not _admissible(n, a):
        raise InadmissibleError("seed polynomial is not admissible")
    if n < 2:
        best, r = _best_r(n, a)
        return SmoothingPolynomial(n, a, Fraction(r).limit_denominator(10 ** 6))
    best, _ = _best_r(n, a)
    moves = [x for x in product((0, 1, -1), repeat=n - 1) if any(x)]

    def shifted(base, x, j=1):
        return base[:2] + tuple(base[2 + i] + j * x[i] * step for i in range(n - 1))

    def score(x):
        cand = shifted(a, x)
        if not _admissible(n, cand):
            return math.inf
        return _best_r(n, cand)[0]

    for _ in range(max_rounds):
        with ThreadPoolExecutor(max_workers=workers) as pool:
            scores = list(pool.map(score, moves))
        k = min(range(len(moves)), key=lambda i: (scores[i], i))
        if not scores[k] < best:
            break
        x = moves[k]
        a, best = shifted(a, x), scores[k]
        while True:
            cand = shifted(a, x)
            if not _admissible(n, cand):
                break
            val = _best_r(n, cand)[0]
            if not val < best:
                break
            a, best = cand, val
    _, r = _best_r(n, a)
    return SmoothingPolynomial(n, a, Fraction(r).limit_denominator(10 ** 6))


# -- config records ----------------------------------------------------------------

def polynomial_to_config(g: SmoothingPolynomial, section: str = "polynomial") -> str:
    cp = configparser.ConfigParser()
    rec = {"n": str(g.n), "r": str(g.r)}
    for k, ak in enumerate(g.a):
        rec[f"a{k}"] = str(ak)
    cp[section] = rec
    import io
    buf = io.StringIO()
    cp.write(buf)
    return buf.getvalue()


def polynomial_from_mapping(rec) -> SmoothingPolynomial:
    from .errors import ConfigError
    try:
        n = int(rec["n"])
        a = tuple(Fraction(rec[f"a{k}"]) for k in range(n + 1))
        r = Fraction(rec["r"])
    except (KeyError, ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"bad polynomial record: {exc}") from exc
    return SmoothingPolynomial(n, a, r)


def read_polynomial(path, section: str = "polynomial") -> SmoothingPolynomial:
    from .errors import ConfigError
    cp = configparser.ConfigParser()
    try:
        with open(path) as fh:
            cp.read_file(fh)
    except (OSError, configparser.Error) as exc:
        raise ConfigError(str(exc)) from exc
    if section not in cp:
        raise ConfigError(f"missing [{section}] section")
    return polynomial_from_mapping(cp[section])


def write_polynomial(g: SmoothingPolynomial, path, section: str = "polynomial") -> None:
    with open(path, "w") as fh:
        fh.write(polynomial_to_config(g, section))
