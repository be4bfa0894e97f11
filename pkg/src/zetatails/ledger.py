"""Formal sums of asymptotic terms c * T^(p + q*g(sigma)) * (log T)^m * phi_k(sigma).

A sum carries a basis of sigma-functions phi_k and a mode that fixes g:
``plain`` (g = 0), ``one_minus_2s`` (g = 1 - 2 sigma) or ``s`` (g = sigma).
Keys are (p, q, m) with p, m half-integers stored as Fractions and q an int;
the value is a tuple of Interval coefficients, one per basis function.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .errors import AssemblyError, DomainError, InadmissibleError
from .interval import Interval, e, exp, iv, log
from .rounding import pos_part

MODES = ("plain", "one_minus_2s", "s")


@dataclass(frozen=True)
class SigmaBasis:
    name: str
    labels: tuple
    funcs: tuple = field(compare=False, repr=False)

    def __len__(self):
        return len(self.labels)

    def values(self, sigma) -> tuple:
        s = iv(sigma)
        return tuple(f(s) for f in self.funcs)


def _zeta(x):
    from .zeta_eval import zeta_real
    return zeta_real(x)


def _check_b1(s):
    if s.lo <= 0.5 or s.hi >= 1:
        raise DomainError("basis B1 is defined for 1/2 < sigma < 1")
    return s


def _check_b2(s):
    if s.lo <= 0 or s.hi >= 0.5:
        raise DomainError("basis B2 is defined for 0 < sigma < 1/2")
    return s


SCALAR = SigmaBasis("scalar", ("1",), (lambda s: Interval(1),))

B1 = SigmaBasis(
    "B1",
    ("1", "1/(1-s)", "1/(1-s)^2", "1/(2s-1)", "1/((1-s)(2s-1))", "zeta(2s)"),
    (
        lambda s: Interval(1),
        lambda s: 1 / (1 - _check_b1(s)),
        lambda s: 1 / (1 - _check_b1(s)).square(),
        lambda s: 1 / (2 * _check_b1(s) - 1),
        lambda s: 1 / ((1 - _check_b1(s)) * (2 * s - 1)),
        lambda s: _zeta(2 * _check_b1(s)),
    ),
)

B2 = SigmaBasis(
    "B2",
    ("1", "1/s", "1/(1-2s)", "zeta(2-2s)"),
    (
        lambda s: Interval(1),
        lambda s: 1 / _check_b2(s),
        lambda s: 1 / (1 - 2 * _check_b2(s)),
        lambda s: _zeta(2 - 2 * _check_b2(s)),
    ),
)


def _is_zero(c: Interval) -> bool:
    return c.is_point() and c.lo == 0


def _key(p, q, m):
    return (Fraction(p), int(q), Fraction(m))


class AsymptoticTermSum:
    """Immutable formal sum; every operation returns a new sum."""

    __slots__ = ("basis", "mode", "_terms")

    def __init__(self, basis: SigmaBasis, mode: str = "plain", terms=None):
        if mode not in MODES:
            raise ValueError(f"unknown mode {mode!r}")
        self.basis = basis
        self.mode = mode
        clean = {}
        for key, coeffs in (terms or {}).items():
            key = _key(*key)
            if mode == "plain" and key[1] != 0:
                raise AssemblyError("plain sums carry no sigma-coupled exponent")
            coeffs = tuple(iv(c) for c in coeffs)
            if len(coeffs) != len(basis):
                raise AssemblyError("coefficient vector does not match the basis")
            if not all(_is_zero(c) for c in coeffs):
                clean[key] = coeffs
        self._terms = clean

    # construction -------------------------------------------------------

    @classmethod
    def zero(cls, basis: SigmaBasis = SCALAR, mode: str = "plain"):
        return cls(basis, mode)

    @classmethod
    def term(cls, basis, mode, p, q, m, k, c):
        vec = [Interval(0)] * len(basis)
        vec[k] = iv(c)
        return cls(basis, mode, {(p, q, m): vec})

    @classmethod
    def from_entries(cls, basis, mode, entries):
        """entries: iterable of ((p, q, m, k), c); repeated keys add up."""
        acc = cls(basis, mode)
        for (p, q, m, k), c in entries:
            acc = acc + cls.term(basis, mode, p, q, m, k, c)
        return acc

    # access -------------------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def keys(self):
        return sorted(self._terms, key=lambda k: (-k[0], -k[1], -k[2]))

    def coeff(self, p, q=0, m=0, k=None):
        vec = self._terms.get(_key(p, q, m))
        if vec is None:
            vec = tuple(Interval(0) for _ in self.basis.labels)
        return vec if k is None else vec[k]

    def is_zero(self) -> bool:
        return not self._terms

    def _like(self, terms):
        return AsymptoticTermSum(self.basis, self.mode, terms)

    def _compatible(self, other):
        if self.basis != other.basis or self.mode != other.mode:
            raise AssemblyError("cannot combine sums with different basis or mode")

    # algebra ------------------------------------------------------------

    def __add__(self, other):
        self._compatible(other)
        out = dict(self._terms)
        for key, vec in other._terms.items():
            if key in out:
                out[key] = tuple(a + b for a, b in zip(out[key], vec))
            else:
                out[key] = vec
        return self._like(out)

    def __neg__(self):
        return self._like({k: tuple(-c for c in v) for k, v in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = iv(c)
        return self._like({k: tuple(c * x for x in v) for k, v in self._terms.items()})

    def shift(self, dp=0, dq=0, dm=0):
        """Multiply by T^(dp + dq*g(sigma)) (log T)^dm."""
        if self.mode == "plain" and dq:
            raise AssemblyError("plain sums cannot take a sigma-coupled shift")
        dp, dm = Fraction(dp), Fraction(dm)
        return self._like({(p + dp, q + dq, m + dm): v for (p, q, m), v in self._terms.items()})

    def rewrite(self, k_from: int, targets: dict):
        """Replace phi_{k_from} by sum_j factor_j * phi_j, term by term.

        This is how a bound like zeta(2s) < 1/(2s-1) + (zeta(2)-1) is pushed
        into the ledger; the caller decides the inequality sense.
        """
        out = {}
        for key, vec in self._terms.items():
            vec = list(vec)
            c = vec[k_from]
            vec[k_from] = Interval(0)
            for j, f in targets.items():
                vec[j] = vec[j] + iv(f) * c
            out[key] = tuple(vec)
        return self._like(out)

    def map_coeffs(self, fn: Callable):
        """Apply fn(k, c) to every coefficient."""
        return self._like({key: tuple(fn(k, c) for k, c in enumerate(v)) for key, v in self._terms.items()})

    def select(self, pred: Callable):
        return self._like({k: v for k, v in self._terms.items() if pred(*k)})

    def split_at(self, target):
        """(higher, rest): terms of strictly higher plain order than target."""
        if self.mode != "plain":
            raise AssemblyError("split_at orders plain sums only")
        p0, _, m0 = _key(*target)
        hi = {}
        rest = {}
        for key, vec in self._terms.items():
            p, _, m = key
            (hi if (p > p0 or (p == p0 and m > m0)) else rest)[key] = vec
        return self._like(hi), self._like(rest)

    # evaluation ---------------------------------------------------------

    def _g(self, s):
        if self.mode == "plain":
            return Interval(0)
        if self.mode == "s":
            return s
        return 1 - 2 * s

    def evaluate(self, sigma, T) -> Interval:
        s, T = iv(sigma), iv(T)
        if T.lo <= 1:
            raise DomainError("evaluation needs T > 1")
        phis = self.basis.values(s) if len(self.basis) > 1 else (Interval(1),)
        lT = log(T)
        llT = log(lT)
        g = self._g(s)
        total = Interval(0)
        for (p, q, m), vec in self._terms.items():
            c = Interval(0)
            for ck, phk in zip(vec, phis):
                if not _is_zero(ck):
                    c = c + ck * phk
            expo = p + q * g
            total = total + c * exp(expo * lT + m * llT)
        return total

    # display ------------------------------------------------------------

    def dump(self, digits: int = 12) -> str:
        import mpmath

        g = {"plain": "", "one_minus_2s": "(1-2s)", "s": "s"}[self.mode]
        lines = [f"basis={self.basis.name} mode={self.mode}"]
        for key in self.keys():
            p, q, m = key
            for k, c in enumerate(self._terms[key]):
                if _is_zero(c):
                    continue
                expo = f"{p}" + (f"{q:+d}{g}" if q else "")
                lines.append(
                    f"T^({expo}) log^({m}) [{self.basis.labels[k]}]: "
                    f"[{mpmath.nstr(c.lo, digits)}, {mpmath.nstr(c.hi, digits)}]"
                )
        return "\n".join(lines)

    def __repr__(self):
        return f"AsymptoticTermSum({self.basis.name}, {self.mode}, {len(self._terms)} terms)"


# rho-splitting ----------------------------------------------------------

@dataclass(frozen=True)
class RhoSpec:
    """rho = c * T^a * (log T)^b * T^(q*g(sigma)) * psi(sigma).

    ``inv`` optionally overrides the shape used for 1/rho, for bounds in
    which rho also depends on a variable lower extremum u and each factor is
    simplified with u -> 1 or u -> T separately. ``psi_sup`` is an upper
    bound for |psi| over the admissible sigma range, used only by the
    admissibility check.
    """

    c: Interval
    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)
    q: int = 0
    inv: "RhoSpec | None" = None
    psi_sup: Interval = Interval(1)

    def magnitude_at(self, T0) -> Interval:
        T0 = iv(T0)
        return abs(self.c) * self.psi_sup * exp(self.a * log(T0) + self.b * log(log(T0))) if (self.a or self.b) else abs(self.c) * self.psi_sup


def _apply(sum_, c, a, b, q, rewrite):
    out = sum_.shift(a, q, b).scale(c)
    return rewrite(out) if rewrite is not None else out


def rho_combine(main: AsymptoticTermSum, penalty: AsymptoticTermSum, rho: RhoSpec,
                direction: str = "upper", T0=None, *, plain_rewrite=None,
                rho_rewrite=None, inv_rewrite=None, rho_on_penalty=False):
    """(1 + rho) * main + (1 + 1/rho) * penalty expanded into the ledger.

    The rewrite callables carry the sigma-dependent factor psi of rho (and
    1/psi) into the basis; without them psi is taken as 1. With
    ``rho_on_penalty`` the rho factor also multiplies the penalty, which is a
    harmless overestimate used by one of the assemblies.
    """
    if direction == "upper":
        if not rho.c > 0:
            raise InadmissibleError("an upper bound needs rho > 0")
    elif direction == "lower":
        if not rho.c < 0:
            raise InadmissibleError("a lower bound needs -1 < rho < 0")
        if T0 is not None and not rho.magnitude_at(T0) < 1:
            raise InadmissibleError("|rho(T0)| must be < 1 for a lower bound")
    else:
        raise ValueError("direction must be 'upper' or 'lower'")
    plain = main + penalty
    if plain_rewrite is not None:
        plain = plain_rewrite(plain)
    rho_part = main + penalty if rho_on_penalty else main
    out = plain + _apply(rho_part, rho.c, rho.a, rho.b, rho.q, rho_rewrite)
    if not penalty.is_zero():
        inv = rho.inv or RhoSpec(rho.c, rho.a, rho.b, rho.q)
        out = out + _apply(penalty, 1 / inv.c, -inv.a, -inv.b, -inv.q, inv_rewrite)
    return out


# absorption -------------------------------------------------------------

def sup_ratio(T0, a, b) -> Interval:
    """sup over T >= T0 of (log T)^a / T^b, for b > 0."""
    T0 = iv(T0)
    a, b = Fraction(a), Fraction(b)
    if b <= 0:
        raise AssemblyError("sup_ratio needs a positive power of T")
    if a > 0 and T0 < exp(Interval(a / b)):
        return exp(a * (log(Interval(a / b)) - 1))
    return exp(a * log(log(T0)) - b * log(T0))


def absorb(sum_: AsymptoticTermSum, T0, target, direction: str = "upper") -> Interval:
    """Bound every term of a plain scalar sum by a multiple of the target term.

    Valid for T >= T0. Lower-order terms get the factor
    sup_{T>=T0} T^(p'-p)(log T)^(m'-m); those of the wrong sign are dropped
    (bounded by 0). The target's own coefficient is kept as is.
    """
    if sum_.mode != "plain" or len(sum_.basis) != 1:
        raise AssemblyError("absorb handles plain scalar sums")
    if direction not in ("upper", "lower"):
        raise ValueError("direction must be 'upper' or 'lower'")
    higher, rest = sum_.split_at(target)
    if not higher.is_zero():
        raise AssemblyError("a term of higher order than the target is present")
    T0 = iv(T0)
    p0, _, m0 = _key(*target)
    total = Interval(0)
    for (p, _, m), (c,) in rest.terms.items():
        if (p, m) == (p0, m0):
            total = total + c
            continue
        b, a = p0 - p, m - m0
        if b == 0:
            corr = exp(a * log(log(T0)))
        else:
            corr = sup_ratio(T0, a, b)
        s = c * corr
        total = total + (pos_part(s) if direction == "upper" else -pos_part(-s))
    return total


def absorb_sqrt_or_log_power(sum_: AsymptoticTermSum, T0) -> tuple:
    """Per-basis coefficients of max(T^(2-2s) log T, sqrt T) for a B1 sum in
    mode one_minus_2s, 1/2 < s < 1.

    The main terms T^1 * T^0 are excluded (they are reported separately).
    A term T^(p + q(1-2s)) (log T)^m picks up T0^(p-1/2) when q = 0 and
    T0^(p-1) (log T0)^m when q = 1, dropping negative contributions. Terms
    with q = 0 carrying log T are not covered and raise.
    """
    if sum_.mode != "one_minus_2s":
        raise AssemblyError("expected a sum in mode one_minus_2s")
    T0 = iv(T0)
    lT0 = log(T0)
    n = len(sum_.basis)
    S = [Interval(0)] * (n - 1)
    for (p, q, m), vec in sum_.terms.items():
        if p == 1 and q == 0:
            continue
        if q not in (0, 1) or p > 1:
            raise AssemblyError(f"term T^({p}{q:+d}(1-2s)) log^{m} outside the absorbable pattern")
        for k in range(n - 1):
            c = vec[k]
            if _is_zero(c):
                continue
            if q == 0:
                if m != 0:
                    raise AssemblyError("q = 0 terms with log T are not absorbable here")
                corr = exp((p - Fraction(1, 2)) * lT0)
            else:
                corr = exp((p - 1) * lT0 + m * log(lT0))
            S[k] = S[k] + pos_part(c * corr)
        if not _is_zero(vec[n - 1]):
            raise AssemblyError("zeta(2s) must be eliminated before absorption")
    return tuple(S)


def is_above_two_sigma(p, q, m) -> bool:
    """Terms T^(p + q s)(log T)^m not dominated by T^(2s) on 0 < s < 1/2."""
    i = 2 - 2 * p
    return i < 2 or q - i > 0 or ((i == 2 or q == i) and m == 1)


def absorb_two_sigma(sum_: AsymptoticTermSum, T0) -> tuple:
    """Per-basis coefficients of T^(2s) for a B2 sum in mode s, 0 < s < 1/2.

    Terms not dominated by T^(2s) are skipped (see ``is_above_two_sigma``).
    A term T^(p + q s)(log T)^m is bounded using its worst exponent over
    s in [0, 1/2], i.e. T0^(max(p, p + q/2 - 1)) (log T0)^m, with the
    calculus maximum 2/e of log x / sqrt x when T0 < e^2 for the mixed case.
    """
    if sum_.mode != "s":
        raise AssemblyError("expected a sum in mode s")
    T0 = iv(T0)
    lT0 = log(T0)
    n = len(sum_.basis)
    S = [Interval(0)] * (n - 1)
    for (p, q, m), vec in sum_.terms.items():
        if not _is_zero(vec[n - 1]):
            raise AssemblyError("zeta(2-2s) must be eliminated before absorption")
        if is_above_two_sigma(p, q, m):
            continue
        i = 2 - 2 * p
        exact = (i == 2 and q == 2 and m == 0)
        for k in range(n - 1):
            c = vec[k]
            if _is_zero(c):
                continue
            if exact:
                S[k] = S[k] + c
                continue
            e2 = Fraction(max(2 - i, q - i), 2)
            corr = exp(e2 * lT0 + m * log(lT0))
            if min(2 - i, q - i) == -1 and m == 1 and T0 < exp(Interval(2)):
                corr = 2 / e()
            S[k] = S[k] + pos_part(c * corr)
    return tuple(S)
