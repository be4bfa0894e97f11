"""Mean values of |zeta|^2 on vertical segments and the tail bounds built from
them: the two segment bounds, the assembled constants for
1/2 <= sigma <= 1 and 0 <= sigma < 1/2, the tail bounds for |zeta(s)/s|^2 and
the simplified headline forms.

Every assembled constant is produced by building the coefficient ledger of
the relevant bound (see ``ledger``), merging lower-order terms at T0 = 4 and
only then evaluating.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .errors import ContractError, DivergenceError, DomainError
from .gamma import transfer_constants
from .interval import Interval, euler_gamma, exp, get_precision, imax, iv, log, pi, sqrt
from .ledger import (
    B1,
    B2,
    SCALAR,
    AsymptoticTermSum,
    RhoSpec,
    absorb,
    absorb_sqrt_or_log_power,
    absorb_two_sigma,
    rho_combine,
)
from .report import BoundReport
from .rounding import lower_fraction, pos_part, rounddown, roundup
from .zeta_eval import d_constant, meanvalue_constant_E, zeta_real

T0 = 4                  # validity threshold of the assembled mean-value bounds
T0_FIRST = 200          # validity threshold of the smoothing-based bounds
HALF_LINE_SWITCH = 10 ** 37
HALF = Fraction(1, 2)


# shared constants ------------------------------------------------------------

@lru_cache(maxsize=8)
def _base_at(prec: int) -> dict:
    P = pi()
    z2 = P ** 2 / 6
    return {
        "E": meanvalue_constant_E(),
        "H": z2 - 1,
        "D": d_constant(T0).D,
        "g": euler_gamma(),
        "z2": z2,
        "z0": Interval(-HALF),
        "K2": transfer_constants().K2,
        "pi": P,
    }


def base_constants() -> dict:
    return _base_at(get_precision())


# ledger builders -------------------------------------------------------------

def _plain(entries: dict) -> AsymptoticTermSum:
    """Scalar plain sum from {(p, m): c} meaning c T^p (log T)^m."""
    return AsymptoticTermSum.from_entries(
        SCALAR, "plain", [((p, 0, m, 0), c) for (p, m), c in entries.items()])


def _main_plus(f11, f12, E):
    """(T + E/2 - 1) f11 + E f12, the rho-scaled part of the segment bound at T1 = 1."""
    return f11.shift(1) + f11.scale(E / 2 - 1) + f12.scale(E)


def _half_arrays(direction):
    b = base_constants()
    D, g = b["D"], b["g"]
    f13 = _plain({(1, 0): 1, (0, 1): 2 * D, (0, 0): D.square() - 1, (-1, 0): -D.square()})
    if direction == "upper":
        f11 = _plain({(0, 1): 1, (0, 0): g, (-1, 0): HALF})
        f12 = _plain({(1, 0): 1})
        return f11, f12, f13
    # lower bounds are carried as deficits: the ledger holds minus the bound
    f11 = _plain({(0, 1): -1, (0, 0): -g, (-1, 0): Fraction(2, 3)})
    f12 = _plain({(1, 0): -1, (0, 0): HALF - b["z0"]})
    return f11, f12, -f13


def half_line_ledger(direction: str = "upper") -> AsymptoticTermSum:
    """sigma = 1/2 with rho = +-1/sqrt(log T); lower ledger is the deficit."""
    b = base_constants()
    f11, f12, f13 = _half_arrays(direction)
    c = Interval(1) if direction == "upper" else Interval(-1)
    rho = RhoSpec(c, b=Fraction(-1, 2))
    return rho_combine(_main_plus(f11, f12, b["E"]), f13, rho, direction, T0)


def _one_arrays(direction):
    b = base_constants()
    D, g, z2 = b["D"], b["g"], b["z2"]
    f13 = _plain({(0, 0): 1, (-1, 1): 2 * D, (-1, 0): D.square() - 1, (-2, 0): -D.square()})
    if direction == "upper":
        f11 = _plain({(0, 0): z2, (-1, 0): -1, (-2, 0): HALF})
        f12 = _plain({(0, 1): 1, (0, 0): g, (-1, 0): HALF})
        return f11, f12, f13
    f11 = _plain({(0, 0): -z2, (-1, 0): 1, (-2, 0): HALF})
    f12 = _plain({(0, 1): -1, (0, 0): -g, (-1, 0): Fraction(2, 3)})
    return f11, f12, -f13


def one_line_ledger(direction: str = "upper", general_lower: bool = False) -> AsymptoticTermSum:
    """sigma = 1 with rho = +-1/sqrt(zeta(2) T), or +-1/sqrt(zeta(2) u T) for a
    variable lower extremum u in [1, T] (then 1/rho is bounded with u -> T)."""
    b = base_constants()
    f11, f12, f13 = _one_arrays(direction)
    c = 1 / sqrt(b["z2"])
    c = c if direction == "upper" else -c
    inv = RhoSpec(c, a=Fraction(-1)) if general_lower else None
    rho = RhoSpec(c, a=Fraction(-1, 2), inv=inv)
    return rho_combine(_main_plus(f11, f12, b["E"]), f13, rho, direction, T0)


def _b1(entries):
    return AsymptoticTermSum.from_entries(B1, "one_minus_2s", entries)


def _strip_arrays(direction):
    b = base_constants()
    E, g, D = b["E"], b["g"], b["D"]
    q = E / 4 - 1
    f22 = _b1([
        ((1, 1, 1, 1), 1), ((1, 1, 0, 1), E / 4 + g), ((1, 1, 0, 2), 1),
        ((0, 0, 0, 5), q), ((0, 1, 0, 1), HALF), ((0, 1, 0, 3), q),
        ((-1, 1, 0, 0), q / 2),
    ])
    if direction == "upper":
        f21 = _b1([((1, 0, 0, 5), 1), ((0, 0, 0, 5), -1)])
        f23 = _b1([((0, 0, 0, 3), (1 + D).square())])
    else:
        f21 = _b1([
            ((1, 0, 0, 5), -1), ((1, 1, 0, 4), HALF), ((0, 0, 0, 3), -1),
            ((0, 0, 0, 4), -HALF), ((0, 0, 0, 5), 1), ((0, 1, 0, 3), 1),
        ])
        f23 = _b1([((0, 0, 0, 3), -(1 + D).square())])
    return f21, f22, f23


def strip_ledger(direction: str = "upper") -> AsymptoticTermSum:
    """1/2 < sigma < 1 via the time-dependent truncation bound with
    rho = +-(1+D)/sqrt((2 sigma - 1) zeta(2 sigma) T).

    zeta(2s) is removed with zeta(2s) < 1/(2s-1) + H, (2s-1) zeta(2s) > 1
    and (2s-1) zeta(2s) < 1 + H, H = zeta(2) - 1.
    """
    b = base_constants()
    H = b["H"]
    r1H = sqrt(1 + H)
    f21, f22, f23 = _strip_arrays(direction)
    c = 1 + b["D"]
    c = c if direction == "upper" else -c

    def plain(s):
        return s.rewrite(5, {3: 1, 0: H})

    def with_rho(s):
        return s.rewrite(5, {3: r1H})

    def with_inv(s):
        return s.map_coeffs(lambda k, x: x if k == 5 else r1H * x).rewrite(5, {3: r1H, 0: r1H * H})

    rho = RhoSpec(c, a=Fraction(-1, 2))
    return rho_combine(f21 + f22, f23, rho, direction, T0,
                       plain_rewrite=plain, rho_rewrite=with_rho, inv_rewrite=with_inv)


def _b2(entries):
    return AsymptoticTermSum.from_entries(B2, "s", entries)


def _reflected_arrays(direction):
    b = base_constants()
    D = b["D"]
    f13 = _b2([((0, 2, 0, 0), 1), ((-1, 2, 1, 0), 2 * D), ((-1, 2, 0, 0), D.square() - 1),
               ((-2, 2, 0, 0), -D.square())])
    if direction == "upper":
        f11 = _b2([((0, 0, 0, 3), 1), ((-1, 2, 0, 2), -1), ((-2, 2, 0, 0), HALF)])
        f12 = _b2([((0, 2, 0, 1), HALF)])
        return f11, f12, f13
    f11 = _b2([((0, 0, 0, 3), -1), ((-1, 2, 0, 2), 1), ((-2, 2, 0, 0), HALF)])
    # zeta(1-2s) > -1/(2s) on 0 < s < 1/2
    f12 = _b2([((0, 0, 0, 1), HALF), ((0, 2, 0, 1), -HALF), ((-1, 2, 0, 0), HALF)])
    return f11, f12, -f13


def reflected_ledger(direction: str = "upper") -> AsymptoticTermSum:
    """int_u^T |zeta(1-s+it)|^2 for 0 < s < 1/2 and variable u in [1, T], with
    rho = +-T^(s-1/2)/sqrt(zeta(2-2s) u); written in mode 's'.

    rho is bounded with u -> 1 and 1/rho with u -> T. zeta(2-2s) is removed
    with zeta(2-2s) < 1/(1-2s) + H and sqrt(zeta(2-2s)) < 1/(1-2s) + sqrt(H).
    """
    b = base_constants()
    H = b["H"]
    sH = sqrt(H)
    f11, f12, f13 = (f.rewrite(3, {2: 1, 0: H}) for f in _reflected_arrays(direction))
    c = Interval(1) if direction == "upper" else Interval(-1)

    def with_inv(s):
        # only the 1-coefficient carries through; sqrt(zeta) goes to 1/(1-2s) and sqrt(H)
        return s.map_coeffs(lambda k, x: Interval(0) if k else x).rewrite(0, {2: 1, 0: sH})

    rho = RhoSpec(c, a=Fraction(-1, 2), q=1, inv=RhoSpec(c, a=Fraction(-1), q=1))
    return rho_combine(_main_plus(f11, f12, b["E"]), f13, rho, direction, T0,
                       inv_rewrite=with_inv, rho_on_penalty=True)


def _sign(direction):
    return 1 if direction == "upper" else -1


def _general_lower_one(direction):
    """sigma = 1, variable lower extremum: drop the zeta(2)(-u) piece that the
    extension step accounts for separately, then merge below log T."""
    b = base_constants()
    s = one_line_ledger(direction, general_lower=True)
    # the removal is applied twice to the T^0 entry, as in the reference assembly
    s = s + _plain({(0, 0): 2 * _sign(direction) * b["z2"]})
    return _merge_plain(s, (0, 0, 1))


def _merge_plain(s, target):
    _, rest = s.split_at(target)
    return absorb(rest, T0, target)


def _reflected_coeffs(direction):
    b = base_constants()
    sg = _sign(direction)
    s = reflected_ledger(direction)
    s = s + _b2([((0, 0, 0, 2), sg), ((0, 0, 0, 0), b["H"] * sg)])
    return absorb_two_sigma(s, T0)


# assembled constants -----------------------------------------------------------

@dataclass(frozen=True)
class AssembledConstants:
    """Raw enclosures (``raw``) and their published roundings (``published``)."""

    raw: dict
    published: dict

    def text(self, digits: int = 5) -> str:
        from .rounding import fmt
        lines = []
        for k, v in self.published.items():
            if isinstance(v, tuple):
                lines.append(f"{k} = (" + ", ".join(fmt(x, digits) for x in v) + ")")
            else:
                lines.append(f"{k} = {fmt(v, _digits_of(v, digits))}")
        return "\n".join(lines)


def _digits_of(v: Fraction, default: int) -> int:
    d = 0
    while (v * 10 ** d).denominator != 1:
        d += 1
    return max(d, 1) if d <= default else default


def _ru(x, d=5):
    return roundup(x, d)


@lru_cache(maxsize=4)
def _consts_upper_strip(prec: int) -> AssembledConstants:
    up = half_line_ledger("upper")
    lo = half_line_ledger("lower")
    ua = up.coeff(1, 0, HALF)[0]
    la = lo.coeff(1, 0, HALF)[0]
    ub = _merge_plain(up, (1, 0, 0))
    lb = _merge_plain(lo, (1, 0, 0))
    cu = absorb_sqrt_or_log_power(strip_ledger("upper"), T0)
    cl = absorb_sqrt_or_log_power(strip_ledger("lower"), T0)
    w_u = _merge_plain(one_line_ledger("upper"), (0, 0, 1))
    w_l = _merge_plain(one_line_ledger("lower"), (0, 0, 1))
    raw = {
        "half_a_plus": ua, "half_b_plus": ub, "half_a_minus": la, "half_b_minus": lb,
        "strip_plus": cu, "strip_minus": cl,
        "one_log_plus": w_u, "one_log_minus": w_l,
    }
    pub = {
        "half_a_plus": _ru(ua), "half_b_plus": _ru(ub),
        "half_a_minus": _ru(la), "half_b_minus": _ru(lb),
        "strip_plus": tuple(_ru(x) for x in cu[:4]),
        "strip_minus": tuple(_ru(x) for x in cl),
        "one_log_plus": _ru(w_u), "one_log_minus": _ru(w_l),
    }
    return AssembledConstants(raw, pub)


def assemble_thm_4_3() -> AssembledConstants:
    """Constants of the mean-square bounds for 1/2 <= sigma <= 1, T >= 4.

    strip_plus = (c0, c1, c2, c3) for c2/(1-s)^2 + c1/(1-s) + c3/(2s-1) + c0;
    strip_minus = (c0..c4) adding c4/((1-s)(2s-1)).
    """
    return _consts_upper_strip(get_precision())


@lru_cache(maxsize=4)
def _consts_lower_strip(prec: int) -> AssembledConstants:
    b = base_constants()
    H, D, K2, P = b["H"], b["D"], b["K2"], b["pi"]
    sH = sqrt(H)
    N_u = _reflected_coeffs("upper")
    N_l = _reflected_coeffs("lower")
    W_u = _general_lower_one("upper")
    W_l = _general_lower_one("lower")
    C = _consts_upper_strip(prec).raw["strip_plus"]

    S_u = (2 * N_u[0] + 6 * sH + 3 * D * sH, 2 * N_u[1], 2 * N_u[2] + 6 + 3 * D)
    S_l = (2 * N_l[0] + 6 * sH + 3 * D * sH + H, 2 * N_l[1], 2 * N_l[2] + 7 + 3 * D)

    def L(S):
        # (L11, L1, L12, L0) for L11/s^2 + L1/s + L12/(1-2s) + L0
        return (K2 * C[2], S[1] + K2 * C[1], S[2] + K2 * (1 + C[3]), S[0] + K2 * (H + C[0]))

    L_u, L_l = L(S_u), L(S_l)
    cz1_u = _consts_upper_strip(prec).raw["one_log_plus"]
    b0 = sqrt(Interval(Fraction(2, 3))) + K2 / (2 * P) * (
        b["z2"] + P * sqrt(Interval(Fraction(2, 3))) / sqrt(Interval(T0)) + cz1_u * log(Interval(T0)) / T0)
    raw = {
        "N_plus": N_u, "N_minus": N_l, "W_plus": W_u, "W_minus": W_l,
        "S_plus": S_u, "S_minus": S_l, "L_plus": L_u, "L_minus": L_l,
        "zero_a_plus": W_u / (2 * P), "zero_b_plus": b0,
        "zero_a_minus": W_l / (2 * P), "zero_b_minus": b0,
    }
    pub = {
        "N_plus": tuple(_ru(x) for x in N_u), "N_minus": tuple(_ru(x) for x in N_l),
        "W_plus": _ru(W_u), "W_minus": _ru(W_l),
        "S_plus": tuple(_ru(x) for x in S_u), "S_minus": tuple(_ru(x) for x in S_l),
        "L_plus": tuple(_ru(x) for x in L_u), "L_minus": tuple(_ru(x) for x in L_l),
        "zero_a_plus": _ru(W_u / (2 * P)), "zero_b_plus": _ru(b0),
        "zero_a_minus": _ru(W_l / (2 * P)), "zero_b_minus": _ru(b0),
    }
    return AssembledConstants(raw, pub)


def assemble_thm_4_5() -> AssembledConstants:
    """Constants of the mean-square bounds for 0 <= sigma < 1/2, T >= 4.

    L_plus / L_minus = (L11, L1, L12, L0); N_plus = (N0, N1, N2) with
    N(s) = N1/s + N2/(1-2s) + N0; S as (S0, S1, S2) likewise.
    """
    return _consts_lower_strip(get_precision())


@lru_cache(maxsize=4)
def _consts_tail(prec: int) -> AssembledConstants:
    r_up = _consts_upper_strip(prec).raw
    r_low = _consts_lower_strip(prec).raw
    P = pi()
    ua, ub = r_up["half_a_plus"], r_up["half_b_plus"]
    W = r_low["W_plus"]
    a12 = 2 * ua
    b12 = 2 + 2 * ub + ua / sqrt(log(Interval(T0)))
    a1 = W
    b1 = P * sqrt(Interval(Fraction(2, 3))) * Fraction(4, 3) + W / 2
    raw = {"half_a": a12, "half_b": b12, "one_a": a1, "one_b": b1}
    return AssembledConstants(raw, {k: _ru(v) for k, v in raw.items()})


def assemble_thm_4_6() -> AssembledConstants:
    """Constants of the tail bounds for sigma = 1/2 and sigma = 1."""
    return _consts_tail(get_precision())


# headline simplification --------------------------------------------------------

@lru_cache(maxsize=4)
def _headline(prec: int) -> AssembledConstants:
    from .smoothing import first_approach_constants

    b = base_constants()
    P, H, D = b["pi"], b["H"], b["D"]
    fa = first_approach_constants().raw
    kp, k111, k112, k113, k114 = (iv(fa[k]) for k in ("kpar", "k111", "k112", "k113", "k114"))
    k12x, c21x, c22x, k314, c30x = (iv(fa[k]) for k in ("k12x", "c21x", "c22x", "k314", "c30x"))
    sk = sqrt(kp)
    TH = Interval(T0_FIRST)
    p_up = _consts_upper_strip(prec)
    p_low = _consts_lower_strip(prec).published
    p_tail = _consts_tail(prec).published
    N_u = _consts_lower_strip(prec).raw["N_plus"]
    C = p_up.raw["strip_plus"]
    raw = {}
    # tail bounds, sigma = 1
    raw["C_1"] = iv(p_tail["one_a"]) + iv(p_tail["one_b"]) / log(TH)
    # 1/2 < sigma < 1
    raw["C_121_num_a"] = P * (k111 * imax(sk / HALF, kp) + k112 * imax(sk / 2, kp / 3)
                              + k113 * imax(sk / Fraction(3, 2), kp / 2) + k12x * imax(sk, kp) / TH)
    raw["C_121_num_b"] = P * k114 * imin_(sk, kp) / 2
    max_sqrtzeta = sqrt(Interval(Fraction(2, 3) - HALF)) * Fraction(1, 3)
    raw["C_121_opt"] = (2 * (N_u[1] * HALF + HALF * N_u[2] * HALF + N_u[0] * Fraction(1, 16))
                        + (D + 4) * (1 / sqrt(Interval(2)) * max_sqrtzeta + sqrt(H) * Fraction(1, 16)))
    # sigma = 1/2
    raw["C_12_num"] = P * (c21x + c22x / TH)
    raw["C_12_opt"] = iv(p_tail["half_a"]) + iv(p_tail["half_b"]) / sqrt(log(Interval(HALF_LINE_SWITCH)))
    # 0 < sigma < 1/2
    raw["C_012_num_a"] = P * k111
    raw["C_012_num_b"] = P * k314 * sk / 2
    raw["C_012_num_c"] = P * (k111 * (sk - 1) / HALF + k112 * imax(Interval(1), sk / 2)
                              + k113 * imax(Interval(1), sk / Fraction(3, 2)))
    raw["C_012_num_d"] = P * pos_part(-c30x + k12x * imax(Interval(1), sk / TH) / abs(b["z0"]))
    L11, L1, L12, L0 = (iv(x) for x in p_low["L_plus"])
    lg = log(2 * P)
    sL1 = (lg - 2 + sqrt(lg.square() + 4)) / (4 * lg)
    mL1 = sL1 * (HALF - sL1) / exp((1 - 2 * sL1) * lg)
    mL11 = (HALF - sL1) / exp((1 - 2 * sL1) * lg)
    mL12 = Interval(Fraction(1, 4))
    sL0 = (lg - 3 + sqrt(lg.square() + 2 * lg + 9)) / (4 * lg)
    mL0 = sL0.square() * (HALF - sL0) / exp((1 - 2 * sL0) * lg)
    inner = L1 * mL1 + L11 * mL11 + HALF * L12 * mL12 + L0 * mL0
    raw["C_012_opt"] = 2 * inner
    # mean-square headline
    raw["Cz_1"] = _merge_plain(one_line_ledger("upper"), (HALF, 0, 0))
    raw["Cz_121"] = (C[2] * HALF + C[1] * Fraction(1, 16) + HALF * C[3] * Fraction(1, 4)
                     + C[0] * Fraction(1, 6) * Fraction(1, 9))
    raw["Cz_12_a"] = p_up.raw["half_a_plus"]
    raw["Cz_12_b"] = p_up.raw["half_b_plus"]
    raw["Cz_012"] = inner
    raw["Cz_0"] = iv(p_low["zero_a_plus"]) + iv(p_low["zero_b_plus"]) / log(Interval(T0))
    pub = {k: (rounddown(v, 2) if k == "C_121_num_b" else roundup(v, 2)) for k, v in raw.items()}
    return AssembledConstants(raw, pub)


def imin_(a, b):
    from .interval import imin
    return imin(a, b)


def simplify_to_headline() -> AssembledConstants:
    """Two-decimal headline constants for the tail and mean-square bounds.

    C_121_num_b enters with a minus sign and is rounded down; all others are
    rounded up.
    """
    return _headline(get_precision())


# segment bounds -------------------------------------------------------------------

@dataclass
class SegmentBound:
    sigma: Interval
    T1: Interval
    T2: Interval
    upper: Interval | None
    lower: Interval | None
    rho_upper: Interval | None = None
    rho_lower: Interval | None = None


def _segment_case(sigma) -> str:
    s = iv(sigma)
    if s.is_point() and s.lo == 0.5:
        return "half"
    if s.is_point() and s.lo == 1:
        return "one"
    if s.lo > 0.5 and s.hi < 1:
        return "strip"
    raise DomainError("segment bounds need sigma = 1/2, 1/2 < sigma < 1 or sigma = 1")


def _segment_args(sigma, T1, T2):
    s, T1, T2 = iv(sigma), iv(T1), iv(T2)
    if T1.lo < 1 or T2 < T1:
        raise DomainError("need 1 <= T1 <= T2")
    return s, T1, T2, _segment_case(s)


def _pw(x, a):
    return exp(a * log(x))


def _f11(case, s, T, sign):
    g = euler_gamma()
    if case == "half":
        return log(T) + g + (HALF / T if sign > 0 else -Fraction(2, 3) / T)
    base = zeta_real(2 * s) - 1 / ((2 * s - 1) * _pw(T, 2 * s - 1))
    return base + (1 if sign > 0 else -1) * HALF / _pw(T, 2 * s)


def _f12(case, s, T, sign):
    g = euler_gamma()
    if case == "one":
        return log(T) + g + (HALF / T if sign > 0 else -Fraction(2, 3) / T)
    out = _pw(T, 2 - 2 * s) / (2 * (1 - s))
    if sign < 0:
        out = out + zeta_real(2 * s - 1) - HALF / _pw(T, 2 * s - 1)
    return out


def _auto_rho(A, B, cap=None):
    r = sqrt(B / A) if A.lo > 0 and B.lo > 0 else Interval(1)
    r = Interval(r.mid())
    if cap is not None and r > cap:
        r = Interval(cap)
    return r


def prop_z_all(sigma, T1, T2, rho=None, as_stated: bool = False) -> SegmentBound:
    """Bounds for int_{T1}^{T2} |zeta(sigma+it)|^2 dt from a fixed truncation
    point X = T2; rho > 0 gives the upper bound, -1 < rho < 0 the lower.

    With rho omitted, the upper bound uses rho = sqrt(B/A) for the two
    brackets A, B and the lower bound uses -min(sqrt(B/A), 1/2).

    The lower bound subtracts the off-diagonal mean-value error, giving
    (T2 - T1 + E/2) f11^- - E f12^+. ``as_stated=True`` instead adds E f12^-,
    which is the form the reference states; quadrature shows that form can
    exceed the integral (e.g. sigma = 1/2 on [1, 50]).
    """
    s, T1, T2, case = _segment_args(sigma, T1, T2)
    E = meanvalue_constant_E()
    D = d_constant(max(1, int(math.floor(T2.lo)))).D
    pen = (_pw(T2, 2 - 2 * s) * (1 / T1 - 1 / T2) + D.square() * (T2 - T1) / _pw(T2, 2 * s)
           + 2 * D * _pw(T2, 1 - 2 * s) * log(T2 / T1))
    A_u = (T2 - T1 + E / 2) * _f11(case, s, T2, 1) + E * _f12(case, s, T2, 1)
    if as_stated:
        A_l = (T2 - T1 + E / 2) * _f11(case, s, T2, -1) + E * _f12(case, s, T2, -1)
    else:
        A_l = (T2 - T1 + E / 2) * _f11(case, s, T2, -1) - E * _f12(case, s, T2, 1)
    return _combine(s, T1, T2, A_u, A_l, pen, pen, rho)


def _combine(s, T1, T2, A_u, A_l, B_u, B_l, rho):
    rho_u = rho_l = None
    if rho is None:
        rho_u = _auto_rho(A_u, B_u)
        rho_l = -_auto_rho(pos_part(A_l) if A_l.lo > 0 else Interval(1), B_l, cap=HALF)
    else:
        rho = iv(rho)
        if rho > 0:
            rho_u = rho
            if rho < 1:
                rho_l = -rho
        elif rho < 0 and rho > -1:
            rho_l = rho
        else:
            raise DomainError("rho must lie in (0, inf) or (-1, 0)")
    up = (1 + rho_u) * A_u + (1 + 1 / rho_u) * B_u if rho_u is not None else None
    lo = (1 + rho_l) * A_l + (1 + 1 / rho_l) * B_l if rho_l is not None else None
    return SegmentBound(s, T1, T2, up, lo, rho_u, rho_l)


def prop_z_allb(sigma, T1, T2, rho=None) -> SegmentBound:
    """Bounds for int_{T1}^{T2} |zeta(sigma+it)|^2 dt from the time-dependent
    truncation X = t. Same rho convention as ``prop_z_all``."""
    s, T1, T2, case = _segment_args(sigma, T1, T2)
    E = meanvalue_constant_E()
    g = euler_gamma()
    D = d_constant(max(1, int(math.floor(T2.lo)))).D
    q = E / 4 - 1
    L2, L1 = log(T2), log(T1)
    if case == "half":
        f21 = T2 * L2 - T1 * L1 - (1 - g) * (T2 - T1)
        f21_u = f21 + HALF * (L2 - L1)
        f21_l = f21 - Fraction(2, 3) * (L2 - L1)
        f22 = (2 * T2 * L2 + (2 * g + E / 2 + 4) * T2 + q * L2 + 1 + q * g + q / (2 * T2))
        f23 = (1 + D).square() * (L2 - L1)
    else:
        z = zeta_real(2 * s)
        f21_u = z * (T2 - T1)
        if case == "one":
            f21_l = f21_u - (L2 - L1) - (1 / T2 - 1 / T1) / 2
            f22 = (3 * L2.square() + (6 * g + E / 2) * L2 + 3 * g.square() + E * g / 2
                   + q * z + 3 * L2 / T2 + (3 * g + 1) / T2 + (E + 2) / (8 * T2.square()))
        else:
            f21_l = (f21_u - (_pw(T2, 2 - 2 * s) - _pw(T1, 2 - 2 * s)) / (2 * (1 - s) * (2 * s - 1))
                     - (_pw(T2, 1 - 2 * s) - _pw(T1, 1 - 2 * s)) / (2 * (2 * s - 1)))
            t22 = _pw(T2, 2 - 2 * s)
            f22 = (t22 * L2 / (1 - s) + (E / 4 + g + 1 / (1 - s)) * t22 / (1 - s) + q * z
                   + (q / (2 * s - 1) + 1 / (2 * (1 - s))) * _pw(T2, 1 - 2 * s) + q / (2 * _pw(T2, 2 * s)))
        f23 = (1 + D).square() / (2 * s - 1)
    return _combine(s, T1, T2, f21_u + f22, f21_l - f22, f23, f23, rho)


# extension by integration by parts --------------------------------------------------

def _enclose_integral(fn: Callable, a, b, pieces: int) -> Interval:
    a, b = iv(a), iv(b)
    if not (a.is_point() and b.is_point()):
        raise ContractError("integration limits must be exact")
    lo, hi = Fraction(*_ratio(a)), Fraction(*_ratio(b))
    if hi < lo:
        raise ContractError("empty integration range")
    h = (hi - lo) / pieces
    total = Interval(0)
    for i in range(pieces):
        box = Interval(lo + i * h, lo + (i + 1) * h)
        total = total + fn(box) * Interval(h)
    return total


def _ratio(x):
    from .interval import _as_ratio
    return _as_ratio(x._a)


def extension_transfer(dF: Callable, r_plus: Callable, r_minus: Callable, f: Callable,
                       fprime: Callable, a, b, case: str, pieces: int = 512):
    """Bounds for int f(t) Z(t) dt from bounds F -+ r on int Z.

    case 'i' (f(a0) = 0, f' >= 0): integrate over [a0, T2] = [a, b]
        upper = int (-f dF/du + f' r+),  lower = int (-f dF/du - f' r-),
    where dF(u) is the partial derivative of F(u, T2) in u.
    case 'ii' (f(a1) = 0, f' <= 0): integrate over [T1, a1] = [a, b]
        upper = int (f dF/du - f' r+),  lower = int (f dF/du + f' r-),
    where dF(u) is the partial derivative of F(T1, u) in u.

    The callables receive an Interval box for u and must return enclosures;
    the integrals are enclosed by a Riemann sum of box evaluations, so the
    result is rigorous for finite limits. Returns (upper, lower) as the upper
    end of the upper enclosure and the lower end of the lower one.
    """
    if case == "i":
        if not f(Interval(a)).contains(0):
            raise ContractError("case (i) needs f(a0) = 0")
        up = _enclose_integral(lambda u: -f(u) * dF(u) + fprime(u) * r_plus(u), a, b, pieces)
        lo = _enclose_integral(lambda u: -f(u) * dF(u) - fprime(u) * r_minus(u), a, b, pieces)
    elif case == "ii":
        if not f(Interval(b)).contains(0):
            raise ContractError("case (ii) needs f(a1) = 0")
        up = _enclose_integral(lambda u: f(u) * dF(u) - fprime(u) * r_plus(u), a, b, pieces)
        lo = _enclose_integral(lambda u: f(u) * dF(u) + fprime(u) * r_minus(u), a, b, pieces)
    else:
        raise ValueError("case must be 'i' or 'ii'")
    return Interval(up.hi), Interval(lo.lo)


# evaluation of assembled bounds -----------------------------------------------------

def _mean_case(s) -> str:
    if s.is_point() and s.lo == 0:
        return "zero"
    if s.lo > 0 and s.hi < 0.5:
        return "low"
    return _segment_case(s)


def _check_T(T, T_min):
    T = iv(T)
    if lower_fraction(T) < T_min:     # exact; mpf < int would round the int
        raise DomainError(f"the bound holds for T >= {T_min}")
    return T


def _strip_factor(s, T):
    return imax(_pw(T, 2 - 2 * s) * log(T), sqrt(T))


def _L_of(s, coeffs):
    L11, L1, L12, L0 = (iv(x) for x in coeffs)
    return (L11 / s.square() + L1 / s + L12 / (1 - 2 * s) + L0) / exp((1 - 2 * s) * log(2 * pi()))


def mean_square_bounds(sigma, T) -> BoundReport:
    """Lower and upper bounds for int_1^T |zeta(sigma+it)|^2 dt, 0 <= sigma <= 1, T >= 4."""
    s = iv(sigma)
    T = _check_T(T, T0)
    case = _mean_case(s)
    P = pi()
    c_up = assemble_thm_4_3().published
    c_low = assemble_thm_4_5().published
    q = lambda k: iv(c_up[k])
    if case == "half":
        lT = log(T)
        up = T * lT + q("half_a_plus") * T * sqrt(lT) + q("half_b_plus") * T
        lo = T * lT - q("half_a_minus") * T * sqrt(lT) - q("half_b_minus") * T
        coeffs = {k: c_up[k] for k in ("half_a_plus", "half_b_plus", "half_a_minus", "half_b_minus")}
        formula = "T log T +- a T sqrt(log T) +- b T"
    elif case == "strip":
        cp, cm = c_up["strip_plus"], c_up["strip_minus"]
        Cp = iv(cp[2]) / (1 - s).square() + iv(cp[1]) / (1 - s) + iv(cp[3]) / (2 * s - 1) + iv(cp[0])
        Cm = (iv(cm[2]) / (1 - s).square() + iv(cm[4]) / ((1 - s) * (2 * s - 1)) + iv(cm[1]) / (1 - s)
              + iv(cm[3]) / (2 * s - 1) + iv(cm[0]))
        main = zeta_real(2 * s) * T
        fac = _strip_factor(s, T)
        up, lo = main + Cp * fac, main - Cm * fac
        coeffs = {"C_plus": Cp, "C_minus": Cm}
        formula = "zeta(2s) T +- C(s) max(T^(2-2s) log T, sqrt T)"
    elif case == "one":
        main = P ** 2 / 6 * T
        mid = P * sqrt(Interval(Fraction(2, 3))) * sqrt(T)
        up = main + mid + q("one_log_plus") * log(T)
        lo = main - mid - q("one_log_minus") * log(T)
        coeffs = {"one_log_plus": c_up["one_log_plus"], "one_log_minus": c_up["one_log_minus"]}
        formula = "pi^2 T/6 +- pi sqrt(2/3) sqrt T + W log T"
    elif case == "low":
        main = zeta_real(2 - 2 * s) / (exp((1 - 2 * s) * log(2 * P)) * (2 - 2 * s)) * _pw(T, 2 - 2 * s)
        Lp, Lm = _L_of(s, c_low["L_plus"]), _L_of(s, c_low["L_minus"])
        up, lo = main + Lp * T, main - Lm * T
        coeffs = {"L_plus": Lp, "L_minus": Lm}
        formula = "zeta(2-2s) T^(2-2s)/((2 pi)^(1-2s)(2-2s)) +- L(s) T"
    else:
        main = P / 24 * T.square()
        up = main + iv(c_low["zero_a_plus"]) * T * log(T) + iv(c_low["zero_b_plus"]) * T
        lo = main - iv(c_low["zero_a_minus"]) * T * log(T) - iv(c_low["zero_b_minus"]) * T
        coeffs = {k: c_low[k] for k in ("zero_a_plus", "zero_b_plus", "zero_a_minus", "zero_b_minus")}
        formula = "pi T^2/24 +- a T log T +- b T"
    return BoundReport("mean-square", s, T, formula, coeffs, upper=up, lower=lo)


def headline_mean_square(sigma, T) -> BoundReport:
    """Simplified upper bound for int_1^T |zeta(sigma+it)|^2 dt, T >= 4."""
    s = iv(sigma)
    T = _check_T(T, T0)
    h = simplify_to_headline().published
    c = lambda k: iv(h[k])
    case = _mean_case(s)
    P = pi()
    if case == "one":
        up = P ** 2 / 6 * T + c("Cz_1") * sqrt(T)
    elif case == "strip":
        up = zeta_real(2 * s) * T + c("Cz_121") / ((s - HALF) * (1 - s).square()) * _strip_factor(s, T)
    elif case == "half":
        up = T * log(T) + c("Cz_12_a") * T * sqrt(log(T)) + c("Cz_12_b") * T
    elif case == "low":
        main = zeta_real(2 - 2 * s) / (exp((1 - 2 * s) * log(2 * P)) * (2 - 2 * s)) * _pw(T, 2 - 2 * s)
        up = main + c("Cz_012") / (s.square() * (HALF - s)) * T
    else:
        up = P / 24 * T.square() + c("Cz_0") * T * log(T)
    return BoundReport("mean-square-headline", s, T, "simplified upper bound", dict(h), upper=up)


@dataclass
class TailBound:
    sigma: Interval
    T: Interval
    value: Interval
    decomposition: dict = field(default_factory=dict)

    def report(self) -> BoundReport:
        return BoundReport("tail-mean-value", self.sigma, self.T,
                           "int_T^inf |zeta(s)/s|^2 dt <= value", dict(self.decomposition), upper=self.value)


def _N_of(s, coeffs):
    N0, N1, N2 = (iv(x) for x in coeffs)
    return N1 / s + N2 / (1 - 2 * s) + N0


def tail_bound_second_approach(sigma, T) -> TailBound:
    """Upper bound for int_T^inf |zeta(sigma+it)/(sigma+it)|^2 dt, T >= 4."""
    s = iv(sigma)
    T = _check_T(T, T0)
    if s.is_point() and s.lo == 0:
        raise DivergenceError("the tail integral diverges at sigma = 0")
    case = _mean_case(s)
    P = pi()
    dec = {}
    if case == "low":
        Lp = _L_of(s, assemble_thm_4_5().published["L_plus"])
        main = zeta_real(2 - 2 * s) / (2 * s * exp((1 - 2 * s) * log(2 * P))) / _pw(T, 2 * s)
        val = main + 2 * Lp / T
        dec = {"L_plus": Lp}
    elif case == "half":
        c = assemble_thm_4_6().published
        lT = log(T)
        val = lT / T + iv(c["half_a"]) * sqrt(lT) / T + iv(c["half_b"]) / T
        dec = {"half_a": c["half_a"], "half_b": c["half_b"]}
    elif case == "strip":
        N = _N_of(1 - s, assemble_thm_4_5().published["N_plus"])
        z = zeta_real(2 * s)
        D = base_constants()["D"]
        coef = 2 * N + (D + 4) * sqrt(z)
        val = z / T + coef / _pw(T, 2 * s)
        dec = {"second_order": coef}
    else:
        c = assemble_thm_4_6().published
        val = P ** 2 / (6 * T) + iv(c["one_a"]) * log(T) / T.square() + iv(c["one_b"]) / T.square()
        dec = {"one_a": c["one_a"], "one_b": c["one_b"]}
    return TailBound(s, T, val, dec)


def headline_tail_bound(sigma, T, form: str = "second") -> BoundReport:
    """Simplified tail bounds; form 'first' is the smoothing-based one
    (T >= 200), 'second' the mean-value one (T >= 4, or T >= 10^37 at 1/2)."""
    s = iv(sigma)
    T = iv(T)
    if s.is_point() and s.lo == 0:
        raise DivergenceError("the tail integral diverges at sigma = 0")
    h = simplify_to_headline().published
    c = lambda k: iv(h[k])
    case = _mean_case(s)
    P = pi()
    if form not in ("first", "second"):
        raise ValueError("form must be 'first' or 'second'")
    if case == "one":
        _check_T(T, T0_FIRST)
        val = P ** 2 / (6 * T) + c("C_1") * log(T) / T.square()
    elif case == "strip":
        z = zeta_real(2 * s)
        if form == "first":
            _check_T(T, T0_FIRST)
            val = 3 * P * z / (5 * T) + (c("C_121_num_a") - c("C_121_num_b") / (s - HALF)) / _pw(T, 2 * s)
        else:
            _check_T(T, T0)
            val = z / T + c("C_121_opt") / ((s - HALF) * (1 - s)) / _pw(T, 2 * s)
    elif case == "half":
        if form == "first":
            _check_T(T, T0_FIRST)
            val = 3 * P / 5 * log(T) / T + c("C_12_num") / T
        else:
            _check_T(T, HALF_LINE_SWITCH)
            val = log(T) / T + c("C_12_opt") * sqrt(log(T)) / T
    else:
        if form == "first":
            _check_T(T, T0_FIRST)
            val = ((c("C_012_num_a") / s + c("C_012_num_b") / (HALF - s) + c("C_012_num_c")) / _pw(T, 2 * s)
                   - c("C_012_num_d") * zeta_real(2 * s) / T)
        else:
            _check_T(T, T0)
            val = (zeta_real(2 - 2 * s) / (2 * s * exp((1 - 2 * s) * log(2 * P))) / _pw(T, 2 * s)
                   + c("C_012_opt") / (s.square() * (HALF - s)) / T)
    return BoundReport(f"tail-headline-{form}", s, T, "simplified tail bound", dict(h), upper=val)
