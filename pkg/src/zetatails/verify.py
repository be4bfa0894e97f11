"""Certified quadrature of |zeta(sigma+it)|^2 and |zeta(sigma+it)/(sigma+it)|^2
over finite t-segments, used as an independent check of the bounds.

Two methods are provided.

``taylor`` (default) cuts [T1, T2] into short panels. On each panel, zeta is
expanded to second order around the midpoint, and the square of that
quadratic is integrated in closed form. Everything the expansion misses is
bounded explicitly:

* the cubic remainder, via a crude bound on zeta''' over the panel;
* the Euler-Maclaurin remainder and its derivatives, via Cauchy estimates;
* floating-point error in the vectorised Dirichlet sums, via an a priori
  bound of (N + 8 + 4 t log N) eps times the sum of absolute terms.

``interval`` evaluates zeta on t-boxes with the interval Euler-Maclaurin
enclosure and sums width times the box range. It is fully interval-based but
needs many narrow boxes, so it is only practical for short segments.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import CapacityError, DomainError
from .interval import ComplexInterval, Interval, iv
from .special import bernoulli_numbers, bernoulli_sup_bound
from .zeta_eval import ZetaEMParams, zeta_enclosure

INTEGRANDS = ("zeta_sq", "zeta_over_s_sq")
PANEL_BUDGET = 200_000
EM_ORDER = 10
CAUCHY_RADIUS = 0.5
_EPS = np.finfo(float).eps
_BLOCK_ENTRIES = 2_000_000


@dataclass
class QuadratureResult:
    sigma: Fraction
    T1: Fraction
    T2: Fraction
    integrand: str
    enclosure: Interval
    panels: int
    max_panel_width: float
    method: str = "taylor"
    budget_exhausted: bool = False
    notes: list = field(default_factory=list)

    @property
    def relative_width(self) -> float:
        mid = float(self.enclosure.mid())
        return float(self.enclosure.width()) / mid if mid > 0 else math.inf


# -- Euler-Maclaurin pieces in floating point ---------------------------------

def _em_cutoff(t_hi: float) -> int:
    return max(20, math.ceil(t_hi / 2))


def _tail_sup(sigma_lo: float, s_abs_max: float, dist_to_pole: float, N: int):
    """Upper bounds on a box for |N^{1-s}/(s-1) + boundary terms| and for
    the Euler-Maclaurin remainder."""
    K = EM_ORDER
    B = bernoulli_numbers()
    L = math.log(N)
    total = math.exp((1 - sigma_lo) * L) / dist_to_pole
    poly = 1.0
    for k in range(1, K + 1):
        if k >= 2:
            poly *= s_abs_max + (k - 2)
        bk = abs(float(B[k]))
        if bk:
            total += bk / math.factorial(k) * poly * math.exp(-(sigma_lo + k - 1) * L)
    poly *= s_abs_max + (K - 1)
    expo = sigma_lo + K - 1
    if expo <= 0:
        raise DomainError("sigma too negative for the Euler-Maclaurin order")
    rem = poly * float(bernoulli_sup_bound(K).hi) / (math.factorial(K) * expo) * math.exp(-expo * L)
    return total * (1 + 1e-12), rem * (1 + 1e-12)


def _tail_derivs(s: np.ndarray, N: int):
    """Values and first two s-derivatives of N^{1-s}/(s-1) + sum_k B_k a_k(s) N^{-s-k+1}/k!,
    plus a magnitude scale for the rounding allowance."""
    L = math.log(N)
    B = bernoulli_numbers()
    v = 1 / (s - 1)
    E = np.exp((1 - s) * L)
    d0 = E * v
    d1 = E * (-L * v - v * v)
    d2 = E * (L * L * v + 2 * L * v * v + 2 * v ** 3)
    scale = np.abs(d0) + np.abs(d1) + np.abs(d2)
    a = np.polynomial.Polynomial([1.0])
    for k in range(1, EM_ORDER + 1):
        if k >= 2:
            a = a * np.polynomial.Polynomial([k - 2, 1.0])
        bk = float(B[k])
        if not bk:
            continue
        c = bk / math.factorial(k)
        Ek = np.exp(-(s + k - 1) * L)
        p0, p1, p2 = a(s), a.deriv(1)(s), a.deriv(2)(s) if a.degree() >= 2 else 0 * s
        t0 = c * p0 * Ek
        t1 = c * (p1 - L * p0) * Ek
        t2 = c * (p2 - 2 * L * p1 + L * L * p0) * Ek
        d0, d1, d2 = d0 + t0, d1 + t1, d2 + t2
        scale = scale + np.abs(t0) + np.abs(t1) + np.abs(t2)
    return d0, d1, d2, scale


def _panel_block(sigma: float, mids: np.ndarray, h: np.ndarray, square_over_s: bool):
    """Lower and upper enclosures of the panel integrals for one block of panels."""
    t_lo = float((mids - h).min())
    t_hi = float((mids + h).max())
    N = _em_cutoff(t_hi)
    n = np.arange(1, N + 1, dtype=float)
    logn = np.log(n)
    w0 = n ** (-sigma)
    w1 = logn * w0
    w2 = logn * w1
    w3 = logn * w2
    phase = np.exp(np.outer(mids, -1j * logn))
    S0 = phase @ w0
    S1 = -(phase @ w1)
    S2 = phase @ w2
    rounding = (N + 8 + 4 * t_hi * math.log(N)) * _EPS
    e_sum = rounding * np.array([w0.sum(), w1.sum(), w2.sum()])

    s = sigma + 1j * mids
    q0, q1, q2, qscale = _tail_derivs(s, N)
    e_tail = 64 * _EPS * qscale

    r = CAUCHY_RADIUS
    # sups over discs of radius r about any point of the block's panels:
    # the remainder alone feeds its derivatives at the midpoints (Cauchy),
    # everything beyond the finite sum feeds the bound on zeta'''
    tail_box, rem_pt = _tail_sup(sigma - r, math.hypot(abs(sigma) + r, t_hi + r), t_lo - r, N)
    M3 = float(w3.sum()) + 6 * (tail_box + rem_pt) / r ** 3
    M3 *= 1 + 1e-12

    zA = S0 + q0
    zB = 1j * (S1 + q1)                   # d/dt = i d/ds
    zC = -(S2 + q2) / 2
    eA = e_sum[0] + e_tail + rem_pt
    eB = e_sum[1] + e_tail + rem_pt / r
    eC = (e_sum[2] + e_tail + 2 * rem_pt / r ** 2) / 2

    A2 = np.abs(zA) ** 2
    B2 = np.abs(zB) ** 2
    C2 = np.abs(zC) ** 2
    AC = (zA * np.conj(zC)).real
    mid_val = 2 * h * A2 + (2 * h ** 3 / 3) * (B2 + 2 * AC) + (2 * h ** 5 / 5) * C2
    Pmax = np.abs(zA) + h * np.abs(zB) + h * h * np.abs(zC)
    rho = h ** 3 * M3 / 6 + eA + h * eB + h * h * eC
    rad = 2 * h * (2 * Pmax * rho + rho * rho) + 64 * _EPS * 2 * h * (Pmax + rho) ** 2
    lo = np.maximum(mid_val - rad, 0.0)
    hi = mid_val + rad
    if square_over_s:
        lo = lo / (sigma * sigma + (mids + h) ** 2) * (1 - 4 * _EPS)
        hi = hi / (sigma * sigma + (mids - h) ** 2) * (1 + 4 * _EPS)
    return lo, hi


def _panel_grid(T1: float, T2: float, density: float):
    """Panel midpoints and half-widths; the density is in panels per unit t
    per unit of (1 + log t)."""
    edges = [T1]
    t = T1
    while t < T2:
        step = 1.0 / (density * (1 + math.log(max(t, 1.0))))
        t = min(T2, t + step)
        edges.append(t)
    e = np.array(edges)
    return (e[1:] + e[:-1]) / 2, (e[1:] - e[:-1]) / 2


def _taylor_enclosure(sigma: float, T1: float, T2: float, square_over_s: bool, density: float, workers: int):
    mids, h = _panel_grid(T1, T2, density)
    # blocks with comparable t so one cutoff N serves the block
    blocks = []
    start = 0
    while start < len(mids):
        t_cap = 1.25 * float(mids[start]) + 1
        stop = int(np.searchsorted(mids, t_cap, side="right"))
        stop = max(start + 1, min(stop, start + _BLOCK_ENTRIES // _em_cutoff(t_cap + 1)))
        blocks.append((start, stop))
        start = stop
    with ThreadPoolExecutor(max_workers=workers) as ex:
        parts = list(ex.map(lambda b: _panel_block(sigma, mids[b[0]:b[1]], h[b[0]:b[1]], square_over_s), blocks))
    lo = math.fsum(float(x) for p in parts for x in p[0])
    hi = math.fsum(float(x) for p in parts for x in p[1])
    # fsum is correctly rounded; one ulp outward each way
    lo = max(0.0, math.nextafter(lo, -math.inf))
    hi = math.nextafter(hi, math.inf)
    return Interval(lo, hi), len(mids), float(2 * h.max())


def _interval_enclosure(sigma, T1: Fraction, T2: Fraction, square_over_s: bool, budget: int,
                        refine: int = 1):
    width_cap = 1 / Fraction(refine * math.ceil(T2))
    panels = math.ceil((T2 - T1) / width_cap)
    if panels > budget:
        raise CapacityError(f"{panels} boxes exceed the budget {budget}; use the taylor method")
    step = (T2 - T1) / panels
    total = Interval(0)
    s_re = iv(sigma)
    for j in range(panels):
        a = T1 + j * step
        box = Interval(a, a + step)
        z = zeta_enclosure(ComplexInterval(s_re, box), ZetaEMParams(X=max(32, math.ceil(2 * T2)), K=EM_ORDER))
        sq = z.re.square() + z.im.square()
        sq = Interval(max(0.0, float(sq.lo)) if sq.lo > 0 else 0, sq.hi)
        if square_over_s:
            sq = sq / (s_re.square() + box.square())
        total = total + sq * step
    return total, panels, float(step)


def integral_enclosure(sigma, T1, T2, integrand: str = "zeta_sq", tol=None, rel_tol: float = 1e-3,
                       method: str = "taylor", budget: int = PANEL_BUDGET, workers: int = 4,
                       refine: int = 1) -> QuadratureResult:
    """Enclosure of int_{T1}^{T2} |zeta(sigma+it)|^2 dt (or of |zeta/s|^2).

    Refines until the enclosure width is at most ``tol`` (absolute) or
    ``rel_tol`` times its midpoint. If the panel budget runs out first, the
    last valid enclosure is returned with ``budget_exhausted`` set.
    The interval method ignores the tolerances and uses boxes of width
    1/(refine * ceil(T2)).
    """
    if integrand not in INTEGRANDS:
        raise ValueError(f"integrand must be one of {INTEGRANDS}")
    s = Fraction(sigma)
    a, b = Fraction(T1), Fraction(T2)
    if not 0 <= s <= 1:
        raise DomainError("sigma must lie in [0, 1]")
    if not (1 <= a <= b <= 10 ** 4):
        raise DomainError("need 1 <= T1 <= T2 <= 10^4")
    over_s = integrand == "zeta_over_s_sq"
    if a == b:
        return QuadratureResult(s, a, b, integrand, Interval(0), 0, 0.0, method)
    if method == "interval":
        enc, panels, width = _interval_enclosure(s, a, b, over_s, budget, refine)
        return QuadratureResult(s, a, b, integrand, enc, panels, width, method)
    if method != "taylor":
        raise ValueError("method must be 'taylor' or 'interval'")
    # float endpoints must cover the exact segment
    fa = float(a)
    fa = fa if Fraction(fa) <= a else math.nextafter(fa, -math.inf)
    fb = float(b)
    fb = fb if Fraction(fb) >= b else math.nextafter(fb, math.inf)
    density = 4.0
    best = None
    while True:
        enc, panels, width = _taylor_enclosure(float(s), fa, fb, over_s, density, workers)
        if best is None or enc.width() <= best[0].width():
            best = (enc, panels, width)
        limit = tol if tol is not None else rel_tol * float(enc.mid())
        if float(enc.width()) <= limit:
            return QuadratureResult(s, a, b, integrand, best[0], best[1], best[2], method)
        if panels * 2 > budget:
            return QuadratureResult(s, a, b, integrand, best[0], best[1], best[2], method,
                                    budget_exhausted=True, notes=["panel budget reached"])
        density *= 2


# -- containment checks --------------------------------------------------------

MEAN_SQUARE_FAMILIES = ("thm43", "thm45", "meansquare")
TAIL_FAMILIES = ("thm31", "thm46")


@dataclass
class ContainmentReport:
    sigma: Fraction
    T: Fraction
    family: str
    quadrature: QuadratureResult
    lower: Interval | None
    upper: Interval
    passed: bool

    def line(self) -> str:
        q = self.quadrature.enclosure
        lo = "-" if self.lower is None else f"{float(self.lower.lo):.6g}"
        return (f"{'PASS' if self.passed else 'FAIL'} family={self.family} sigma={float(self.sigma):g} "
                f"T={float(self.T):g} quad=[{float(q.lo):.6g}, {float(q.hi):.6g}] "
                f"bounds=[{lo}, {float(self.upper.hi):.6g}]")


def check_bound_containment(sigma, T, family: str, span: int = 5) -> ContainmentReport:
    """Mean-square families: the enclosure of int_1^T |zeta|^2 must sit inside
    [lower, upper]. Tail families: the enclosure of int_T^{span T} |zeta/s|^2
    must not exceed the tail bound at T (the integrand is nonnegative, so
    truncating the tail is sound)."""
    from .meanvalue import mean_square_bounds, tail_bound_second_approach
    from .smoothing import tail_integral_first

    s, T = Fraction(sigma), Fraction(T)
    if family in MEAN_SQUARE_FAMILIES:
        rep = mean_square_bounds(s, T)
        q = integral_enclosure(s, 1, T, "zeta_sq")
        passed = bool(rep.lower.lo <= q.enclosure.lo and q.enclosure.hi <= rep.upper.hi)
        return ContainmentReport(s, T, family, q, rep.lower, rep.upper, passed)
    if family in TAIL_FAMILIES:
        bound = tail_integral_first(s, T) if family == "thm31" else tail_bound_second_approach(s, T).value
        q = integral_enclosure(s, T, span * T, "zeta_over_s_sq")
        passed = bool(q.enclosure.hi <= bound.hi)
        return ContainmentReport(s, T, family, q, None, bound, passed)
    raise ValueError(f"unknown family {family!r}")


DEFAULT_GRID = (
    [(s, T, "meansquare") for s in (Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1))
     for T in (10, 50, 200)]
    + [(s, T, fam) for s in (Fraction(1, 2), Fraction(1)) for T in (200, 500) for fam in TAIL_FAMILIES]
)


def run_grid(grid=DEFAULT_GRID) -> list:
    return [check_bound_containment(*item) for item in grid]
