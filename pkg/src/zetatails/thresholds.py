"""Crossover points between the smoothing-based tail bounds and the
mean-value tail bounds, found by integer bisection on the ratio of the two.

Both bounds are written multiplied by the power of T that makes their main
terms constant, so T = 10^37 costs the same as T = 10^3.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError
from .interval import Interval, exp, get_precision, iv, log, pi, precision, sqrt
from .zeta_eval import zeta_real

HALF = Fraction(1, 2)
LOW_CUTOFF = 200
HIGH_CUTOFF = 10 ** 40

PAIRS = ("headline", "refined")


@dataclass(frozen=True)
class ThresholdQuery:
    """pair 'headline' compares the two simplified tail bounds of a sigma
    range, 'refined' the full smoothing bound with the full mean-value bound.
    At sigma = 1/2 both pairs are the full bounds."""

    sigma: Fraction
    pair: str = "headline"
    Tmin: int = 100
    Tmax: int = 10 ** 6


@dataclass
class ThresholdResult:
    query: ThresholdQuery
    status: str                       # ok | below | above | no-crossing
    value: int | None = None
    indeterminate: list = field(default_factory=list)
    steps: int = 0

    def __str__(self):
        if self.status == "ok":
            return str(self.value)
        return {"below": f"<{LOW_CUTOFF}", "above": ">10^40", "no-crossing": "Error"}[self.status]


def _pow(T: Interval, a) -> Interval:
    return exp(iv(a) * log(T))


def _published():
    from .meanvalue import assemble_thm_4_5, assemble_thm_4_6, base_constants, simplify_to_headline
    from .smoothing import first_approach_constants

    return (first_approach_constants().published, simplify_to_headline().published,
            assemble_thm_4_5().published, assemble_thm_4_6().published, base_constants())


def ratio_functions(sigma, pair: str = "headline", reference_form: bool = False):
    """(numer, asymp): callables T -> Interval whose ratio exceeds 1 exactly
    when the mean-value bound is the smaller one.

    With ``reference_form`` the refined pair on 1/2 < sigma < 1 evaluates the
    second-order coefficient as 2 N(sigma) instead of 2 N(1 - sigma); the
    reference tables were produced that way.
    """
    s = Fraction(sigma)
    if pair not in PAIRS:
        raise ValueError(f"pair must be one of {PAIRS}")
    fa, head, c_low, c_tail, base = _published()
    q = lambda x: Interval(x)
    P = pi()
    si = Interval(s)
    if s == HALF:
        def numer(T):
            return P * (Fraction(3, 5) * log(T) + q(fa["c21x"]) + q(fa["c22x"]) / T)

        def asymp(T):
            lT = log(T)
            return lT + q(c_tail["half_a"]) * sqrt(lT) + q(c_tail["half_b"])
        return numer, asymp
    if HALF < s < 1:
        z = zeta_real(2 * si)
        if pair == "headline":
            a = q(head["C_121_num_a"]) - q(head["C_121_num_b"]) / (si - HALF)
            b = q(head["C_121_opt"]) / ((si - HALF) * (1 - si))
            lead = Fraction(3, 5) * P * z
            return (lambda T: lead + a * _pow(T, 1 - 2 * si)), (lambda T: z + b * _pow(T, 1 - 2 * si))
        kp = q(fa["kpar"])
        ks = _pow(kp, si)
        a = ks * (q(fa["k111"]) / si + q(fa["k112"]) / (2 * si + 1) + q(fa["k113"]) / (si + 1)
                  - q(fa["k114"]) / (2 * si - 1))
        c = ks * q(fa["k12x"])
        N0, N1, N2 = (q(x) for x in c_low["N_plus"])
        x = si if reference_form else 1 - si
        N = N1 / x + N2 / (1 - 2 * x) + N0
        b = 2 * N + (base["D"] + 4) * sqrt(z)

        def numer(T):
            return P * (Fraction(3, 5) * z + a / _pow(T, 2 * si - 1) + c / _pow(T, 2 * si))
        return numer, (lambda T: z + b * _pow(T, 1 - 2 * si))
    if 0 < s < HALF:
        lead = zeta_real(2 - 2 * si) / (2 * si * exp((1 - 2 * si) * log(2 * P)))
        z = zeta_real(2 * si)
        if pair == "headline":
            const = q(head["C_012_num_a"]) / si + q(head["C_012_num_b"]) / (HALF - si) + q(head["C_012_num_c"])
            d = q(head["C_012_num_d"]) * abs(z)
            b = q(head["C_012_opt"]) / (si * si * (HALF - si))
            return (lambda T: const + d * _pow(T, 2 * si - 1)), (lambda T: lead + b * _pow(T, 2 * si - 1))
        kp = q(fa["kpar"])
        ks = _pow(kp, si)
        const = ks * (q(fa["k111"]) / si + q(fa["k112"]) / (2 * si + 1) + q(fa["k113"]) / (si + 1)
                      + q(fa["k314"]) / (1 - 2 * si))
        L11, L1, L12, L0 = (q(x) for x in c_low["L_plus"])
        L = (L11 / (si * si) + L1 / si + L12 / (1 - 2 * si) + L0) / exp((1 - 2 * si) * log(2 * P))
        c30 = q(fa["c30x"])
        k12 = ks * q(fa["k12x"])

        def numer(T):
            return P * (const + c30 * z / _pow(T, 1 - 2 * si) + k12 / T)
        return numer, (lambda T: lead + 2 * L * _pow(T, 2 * si - 1))
    raise DomainError("thresholds are defined for 0 < sigma < 1")


class _RatioOracle:
    """Evaluates numer/asymp at integer T, rebuilding the constants whenever a
    higher working precision is requested."""

    def __init__(self, sigma, pair, reference_form):
        self._args = (sigma, pair, reference_form)
        self._built: dict = {}

    def ratio(self, T: int, bits: int) -> Interval | None:
        with precision(bits):
            if bits not in self._built:
                self._built[bits] = ratio_functions(*self._args)
            numer, asymp = self._built[bits]
            Ti = Interval(T)
            try:
                return numer(Ti) / asymp(Ti)
            except DomainError:
                return None      # denominator straddles 0: nothing is certain

    def compare(self, T: int, bits: int) -> int:
        """+1 if the ratio is certainly > 1, -1 if certainly <= 1, else 0."""
        r = self.ratio(T, bits)
        if r is None:
            return 0
        if r > 1:
            return 1
        return -1 if r <= 1 else 0

    def holds(self, T: int, bits: int, op: str) -> bool:
        r = self.ratio(T, bits)
        if r is None:
            return False
        return r >= 1 if op == ">=" else r <= 1


def find_threshold(q: ThresholdQuery, reference_form: bool = False, bits: int | None = None) -> ThresholdResult:
    """Least integer T in (Tmin, Tmax] from which the mean-value bound wins.

    Unresolved comparisons are retried once at doubled precision; if still
    unresolved they count as 'not better' and the point is reported in
    ``indeterminate``.
    """
    bits = bits or get_precision()
    oracle = _RatioOracle(q.sigma, q.pair, reference_form)
    Tmin, Tmax = int(q.Tmin), int(q.Tmax)
    if Tmin >= Tmax:
        raise DomainError("need Tmin < Tmax")
    undecided: list = []
    wins_at_start = oracle.holds(Tmin, bits, ">=")
    if (wins_at_start and Tmin >= LOW_CUTOFF) or oracle.holds(Tmax, bits, "<="):
        return ThresholdResult(q, "no-crossing")
    if wins_at_start:
        return ThresholdResult(q, "below")
    steps = 0
    while Tmax - Tmin > 1:
        Tmed = (Tmax + Tmin) // 2
        verdict = oracle.compare(Tmed, bits)
        if verdict == 0:
            verdict = oracle.compare(Tmed, 2 * bits)
            if verdict == 0:
                undecided.append(Tmed)
        if verdict > 0:
            Tmax = Tmed
        else:
            Tmin = Tmed
        steps += 1
    if Tmax > HIGH_CUTOFF:
        return ThresholdResult(q, "above", None, undecided, steps)
    if Tmax < LOW_CUTOFF:
        return ThresholdResult(q, "below", None, undecided, steps)
    return ThresholdResult(q, "ok", Tmax, undecided, steps)


# tables -----------------------------------------------------------------------

TABLE_STRIP_HEADLINE = [
    (Fraction(55, 100), 100, 10 ** 25), (Fraction(6, 10), 100, 10 ** 10), (Fraction(65, 100), 100, 10 ** 10),
    (Fraction(7, 10), 100, 10 ** 7), (Fraction(75, 100), 100, 10 ** 6), (Fraction(8, 10), 100, 10 ** 6),
    (Fraction(85, 100), 100, 10 ** 6), (Fraction(9, 10), 100, 10 ** 6), (Fraction(95, 100), 100, 10 ** 6),
]
TABLE_STRIP_REFINED = [
    (Fraction(51, 100), 100, 10 ** 50), (Fraction(52, 100), 100, 10 ** 30), (Fraction(53, 100), 100, 10 ** 18),
    (Fraction(54, 100), 100, 10 ** 18), (Fraction(55, 100), 100, 10 ** 18), (Fraction(56, 100), 100, 10 ** 18),
    (Fraction(57, 100), 10, 10 ** 8), (Fraction(58, 100), 4, 10 ** 8), (Fraction(59, 100), 4, 10 ** 8),
]
TABLE_LOW = [
    (Fraction(5, 100), (100, 10 ** 6), (10, 10 ** 6)), (Fraction(1, 10), (100, 10 ** 6), (100, 10 ** 6)),
    (Fraction(15, 100), (100, 10 ** 6), (100, 10 ** 6)), (Fraction(2, 10), (100, 10 ** 6), (100, 10 ** 6)),
    (Fraction(25, 100), (100, 10 ** 6), (100, 10 ** 6)), (Fraction(3, 10), (100, 10 ** 8), (100, 10 ** 8)),
    (Fraction(35, 100), (100, 10 ** 10), (100, 10 ** 10)), (Fraction(4, 10), (100, 10 ** 15), (100, 10 ** 15)),
    (Fraction(45, 100), (100, 10 ** 25), (100, 10 ** 25)),
]


def _run(queries, reference_form, workers):
    with ThreadPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(lambda q: find_threshold(q, reference_form), queries))


def table_strip(reference_form: bool = False, workers: int = 4) -> list:
    """Rows (sigma_a, headline threshold, sigma_b, refined threshold) for 1/2 < sigma < 1."""
    qa = [ThresholdQuery(s, "headline", a, b) for s, a, b in TABLE_STRIP_HEADLINE]
    qb = [ThresholdQuery(s, "refined", a, b) for s, a, b in TABLE_STRIP_REFINED]
    ra = _run(qa, reference_form, workers)
    rb = _run(qb, reference_form, workers)
    return [(x.query.sigma, x, y.query.sigma, y) for x, y in zip(ra, rb)]


def table_low(workers: int = 4) -> list:
    """Rows (sigma, headline threshold, refined threshold) for 0 < sigma < 1/2."""
    qa = [ThresholdQuery(s, "headline", *ra) for s, ra, _ in TABLE_LOW]
    qb = [ThresholdQuery(s, "refined", *rb) for s, _, rb in TABLE_LOW]
    ra = _run(qa, False, workers)
    rb = _run(qb, False, workers)
    return [(x.query.sigma, x, y) for x, y in zip(ra, rb)]


def half_line_threshold(bits: int | None = None) -> ThresholdResult:
    """Crossover on sigma = 1/2, searched in (100, 10^39]."""
    return find_threshold(ThresholdQuery(HALF, "headline", 100, 10 ** 39), bits=bits)


def render_table(rows, sep: str = "\t") -> str:
    out = []
    for row in rows:
        out.append(sep.join(_cell(x) for x in row))
    return "\n".join(out)


def _cell(x):
    if isinstance(x, Fraction):
        return str(float(x))
    return str(x)
