"""Outward-rounded real and complex interval arithmetic.

Endpoints are raw mpmath ``libmp`` floats; every operation goes through the
``mpi_*`` primitives, which round the lower endpoint toward -inf and the upper
endpoint toward +inf. Working precision lives in a context variable, so
``with precision(256): ...`` is safe under threads.
"""

from __future__ import annotations

import contextlib
import contextvars
from fractions import Fraction
from numbers import Integral, Rational

import mpmath
from mpmath import libmp
from mpmath.libmp import round_ceiling, round_floor

from .errors import DomainError

DEFAULT_PRECISION = 96

_prec = contextvars.ContextVar("zetatails_prec", default=DEFAULT_PRECISION)

# Reference digits (truncated, not rounded). The enclosure adds one unit in the
# last stored place on top.
PI_DIGITS = (
    "3.14159265358979323846264338327950288419716939937510"
    "58209749445923078164062862089986280348253421170679"
)
EULER_GAMMA_DIGITS = (
    "0.57721566490153286060651209008240243104215933593992"
    "35988057672348848677267776646709369470632917467495"
)


def get_precision() -> int:
    return _prec.get()


@contextlib.contextmanager
def precision(bits: int):
    """Temporarily change the working precision (in bits)."""
    token = _prec.set(int(bits))
    try:
        yield
    finally:
        _prec.reset(token)


_exact_mpf = mpmath.mp.make_mpf


def _mpf_down(x):
    return _to_raw(x, round_floor)


def _mpf_up(x):
    return _to_raw(x, round_ceiling)


def _to_raw(x, rnd):
    prec = _prec.get()
    if isinstance(x, bool):
        x = int(x)
    if isinstance(x, Integral):
        return libmp.from_int(int(x), prec, rnd)
    if isinstance(x, Rational):
        return libmp.from_rational(int(x.numerator), int(x.denominator), prec, rnd)
    if isinstance(x, float):
        if x != x:
            raise DomainError("NaN endpoint")
        return libmp.from_float(x)
    if isinstance(x, str):
        return libmp.from_str(x, prec, rnd)
    if isinstance(x, mpmath.mpf):
        return libmp.normalize(*x._mpf_, prec, rnd) if x._mpf_[1] else x._mpf_
    raise TypeError(f"cannot build an interval endpoint from {type(x).__name__}")


class Interval:
    """Closed real interval [lo, hi] with outward rounding."""

    __slots__ = ("_a", "_b")

    def __init__(self, lo=0, hi=None):
        if isinstance(lo, Interval) and hi is None:
            self._a, self._b = lo._a, lo._b
            return
        if hi is None:
            hi = lo
        a = lo._a if isinstance(lo, Interval) else _mpf_down(lo)
        b = hi._b if isinstance(hi, Interval) else _mpf_up(hi)
        if a == libmp.fnan or b == libmp.fnan:
            raise DomainError("NaN endpoint")
        if libmp.mpf_gt(a, b):
            raise DomainError(f"empty interval [{lo}, {hi}]")
        self._a, self._b = a, b

    @classmethod
    def _raw(cls, v):
        a, b = v
        if a == libmp.fnan or b == libmp.fnan:
            raise DomainError("operation produced NaN")
        out = cls.__new__(cls)
        out._a, out._b = a, b
        return out

    @property
    def _v(self):
        return (self._a, self._b)

    # -- accessors -------------------------------------------------------
    @property
    def lo(self) -> mpmath.mpf:
        # make_mpf keeps every bit; mpmath.mpf(...) would round to mp.prec
        return _exact_mpf(self._a)

    @property
    def hi(self) -> mpmath.mpf:
        return _exact_mpf(self._b)

    def lower(self) -> mpmath.mpf:
        return self.lo

    def upper(self) -> mpmath.mpf:
        return self.hi

    def mid(self) -> mpmath.mpf:
        return _exact_mpf(libmp.mpf_shift(libmp.mpf_add(self._a, self._b, _prec.get() + 2), -1))

    def width(self) -> mpmath.mpf:
        return _exact_mpf(libmp.mpf_sub(self._b, self._a, _prec.get(), round_ceiling))

    def mag(self) -> mpmath.mpf:
        """Largest absolute value in the interval."""
        return max(abs(self.lo), abs(self.hi))

    def is_point(self) -> bool:
        return self._a == self._b

    def __float__(self):
        return float(self.mid())

    # -- set relations ---------------------------------------------------
    def contains(self, x) -> bool:
        if isinstance(x, Interval):
            return libmp.mpf_le(self._a, x._a) and libmp.mpf_ge(self._b, x._b)
        if isinstance(x, Rational) and not isinstance(x, Integral):
            f = Fraction(x)
            lo_ok = self._a == libmp.fninf or Fraction(*_as_ratio(self._a)) <= f
            hi_ok = self._b == libmp.finf or f <= Fraction(*_as_ratio(self._b))
            return lo_ok and hi_ok
        if isinstance(x, mpmath.mpf):
            # exact comparison; rounding x first could push it outside
            return libmp.mpf_le(self._a, x._mpf_) and libmp.mpf_ge(self._b, x._mpf_)
        lo = _mpf_down(x)
        hi = _mpf_up(x)
        return libmp.mpf_le(self._a, lo) and libmp.mpf_ge(self._b, hi)

    __contains__ = contains

    def overlaps(self, other) -> bool:
        other = _coerce(other)
        return libmp.mpf_le(self._a, other._b) and libmp.mpf_le(other._a, self._b)

    def intersect(self, other) -> "Interval":
        other = _coerce(other)
        if not self.overlaps(other):
            raise DomainError("empty intersection")
        a = self._a if libmp.mpf_ge(self._a, other._a) else other._a
        b = self._b if libmp.mpf_le(self._b, other._b) else other._b
        return Interval._raw((a, b))

    def hull(self, other) -> "Interval":
        other = _coerce(other)
        a = self._a if libmp.mpf_le(self._a, other._a) else other._a
        b = self._b if libmp.mpf_ge(self._b, other._b) else other._b
        return Interval._raw((a, b))

    def inflate(self, factor) -> "Interval":
        """Interval with the same midpoint and ``factor`` times the radius."""
        m = Interval(self.mid())
        r = Interval(self.width()) * Interval(factor) / 2
        return Interval._raw(((m - r)._a, (m + r)._b))

    # -- certain comparisons: true only if true for every pair of points ---
    def __lt__(self, other):
        other = _coerce(other)
        return libmp.mpf_lt(self._b, other._a)

    def __le__(self, other):
        other = _coerce(other)
        return libmp.mpf_le(self._b, other._a)

    def __gt__(self, other):
        other = _coerce(other)
        return libmp.mpf_gt(self._a, other._b)

    def __ge__(self, other):
        other = _coerce(other)
        return libmp.mpf_ge(self._a, other._b)

    def __eq__(self, other):
        if not isinstance(other, Interval):
            try:
                other = _coerce(other)
            except TypeError:
                return NotImplemented
        return self._a == other._a and self._b == other._b

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash((self._a, self._b))

    def certainly_positive(self) -> bool:
        return libmp.mpf_gt(self._a, libmp.fzero)

    def certainly_negative(self) -> bool:
        return libmp.mpf_lt(self._b, libmp.fzero)

    def contains_zero(self) -> bool:
        return libmp.mpf_le(self._a, libmp.fzero) and libmp.mpf_ge(self._b, libmp.fzero)

    # -- arithmetic --------------------------------------------------------
    def __neg__(self):
        return Interval._raw(libmp.mpi_neg(self._v))

    def __pos__(self):
        return self

    def __abs__(self):
        return Interval._raw(libmp.mpi_abs(self._v))

    def __add__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return Interval._raw(libmp.mpi_add(self._v, other._v, _prec.get()))

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return Interval._raw(libmp.mpi_sub(self._v, other._v, _prec.get()))

    def __rsub__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return Interval._raw(libmp.mpi_mul(self._v, other._v, _prec.get()))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        if other.contains_zero():
            raise DomainError("division by an interval containing 0")
        return Interval._raw(libmp.mpi_div(self._v, other._v, _prec.get()))

    def __rtruediv__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, other):
        if isinstance(other, Integral):
            n = int(other)
            if n < 0:
                if self.contains_zero():
                    raise DomainError("negative power of an interval containing 0")
                return Interval(1) / Interval._raw(libmp.mpi_pow_int(self._v, -n, _prec.get()))
            return Interval._raw(libmp.mpi_pow_int(self._v, n, _prec.get()))
        other = _coerce(other)
        if other.is_point():
            v = other._a
            if libmp.mpf_eq(v, libmp.from_int(libmp.to_int(v))):
                return self ** libmp.to_int(v)
            if v == libmp.fhalf:
                return sqrt(self)
        if not self.certainly_positive():
            raise DomainError("real power needs a positive base")
        return exp(other * log(self))

    def __rpow__(self, other):
        return _coerce(other) ** self

    def square(self):
        return Interval._raw(libmp.mpi_pow_int(self._v, 2, _prec.get()))

    def __repr__(self):
        return f"Interval({mpmath.nstr(self.lo, 20)}, {mpmath.nstr(self.hi, 20)})"

    def __str__(self):
        return f"[{mpmath.nstr(self.lo, 15)}, {mpmath.nstr(self.hi, 15)}]"


def _as_ratio(v):
    sign, man, exp, _ = v
    if man == 0:
        return (0, 1)
    p = (-1) ** sign * man
    if exp >= 0:
        return (p << exp, 1)
    return (p, 1 << -exp)


def _coerce(x) -> Interval:
    if isinstance(x, Interval):
        return x
    if isinstance(x, (Integral, Rational, float, str, mpmath.mpf)):
        return Interval(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to Interval")


def _coerce_or_none(x):
    try:
        return _coerce(x)
    except TypeError:
        return None


def iv(x, hi=None) -> Interval:
    """Shorthand constructor; accepts Interval, int, Fraction, decimal str."""
    if hi is None and isinstance(x, Interval):
        return x
    return Interval(x, hi)


# -- elementary functions ----------------------------------------------------

def exp(a) -> Interval:
    a = _coerce(a)
    return Interval._raw(libmp.mpi_exp(a._v, _prec.get()))


def log(a) -> Interval:
    a = _coerce(a)
    if not a.certainly_positive():
        raise DomainError("log of an interval not contained in (0, inf)")
    return Interval._raw(libmp.mpi_log(a._v, _prec.get()))


def sqrt(a) -> Interval:
    a = _coerce(a)
    if libmp.mpf_lt(a._a, libmp.fzero):
        raise DomainError("sqrt of an interval reaching below 0")
    return Interval._raw(libmp.mpi_sqrt(a._v, _prec.get()))


def sin(a) -> Interval:
    a = _coerce(a)
    return Interval._raw(libmp.mpi_sin(a._v, _prec.get()))


def cos(a) -> Interval:
    a = _coerce(a)
    return Interval._raw(libmp.mpi_cos(a._v, _prec.get()))


def cos_sin(a):
    a = _coerce(a)
    c, s = libmp.mpi_cos_sin(a._v, _prec.get())
    return Interval._raw(c), Interval._raw(s)


def atan(a) -> Interval:
    a = _coerce(a)
    return Interval._raw(libmp.mpi_atan(a._v, _prec.get()))


def imax(a, b) -> Interval:
    """Pointwise maximum enclosure."""
    a, b = _coerce(a), _coerce(b)
    lo = a._a if libmp.mpf_ge(a._a, b._a) else b._a
    hi = a._b if libmp.mpf_ge(a._b, b._b) else b._b
    return Interval._raw((lo, hi))


def imin(a, b) -> Interval:
    a, b = _coerce(a), _coerce(b)
    lo = a._a if libmp.mpf_le(a._a, b._a) else b._a
    hi = a._b if libmp.mpf_le(a._b, b._b) else b._b
    return Interval._raw((lo, hi))


# -- constants ---------------------------------------------------------------

# Constants are always built with at least this many bits so that their width
# stays below 1e-30 even at the 96-bit default.
CONSTANT_MIN_PRECISION = 112


def _from_digits(digits: str) -> Interval:
    ndec = len(digits.split(".")[1])
    prec = max(_prec.get(), CONSTANT_MIN_PRECISION)
    lo = libmp.from_str(digits, prec, round_floor)
    hi = libmp.mpf_add(
        libmp.from_str(digits, prec, round_ceiling),
        libmp.from_rational(1, 10 ** ndec, prec, round_ceiling),
        prec,
        round_ceiling,
    )
    return Interval._raw((lo, hi))


def pi() -> Interval:
    return _from_digits(PI_DIGITS)


def euler_gamma() -> Interval:
    return _from_digits(EULER_GAMMA_DIGITS)


def constants() -> dict:
    return {"pi": pi(), "euler_gamma": euler_gamma()}


def e() -> Interval:
    return exp(Interval(1))


# -- complex boxes -----------------------------------------------------------

class ComplexInterval:
    """Rectangle re + i*im."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _coerce(re)
        self.im = _coerce(im)

    def conjugate(self):
        return ComplexInterval(self.re, -self.im)

    def __add__(self, other):
        other = _ccoerce(other)
        return ComplexInterval(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _ccoerce(other)
        return ComplexInterval(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return _ccoerce(other) - self

    def __neg__(self):
        return ComplexInterval(-self.re, -self.im)

    def __mul__(self, other):
        if isinstance(other, (Interval, Integral, Rational)):
            o = _coerce(other)
            return ComplexInterval(self.re * o, self.im * o)
        other = _ccoerce(other)
        return ComplexInterval(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def abs2(self) -> Interval:
        return self.re.square() + self.im.square()

    def __abs__(self) -> Interval:
        return sqrt(self.abs2())

    def __truediv__(self, other):
        if isinstance(other, (Interval, Integral, Rational)):
            o = _coerce(other)
            return ComplexInterval(self.re / o, self.im / o)
        other = _ccoerce(other)
        d = other.abs2()
        if d.contains_zero():
            raise DomainError("division by a complex box containing 0")
        num = self * other.conjugate()
        return ComplexInterval(num.re / d, num.im / d)

    def __rtruediv__(self, other):
        return _ccoerce(other) / self

    def contains(self, z) -> bool:
        if isinstance(z, ComplexInterval):
            return self.re.contains(z.re) and self.im.contains(z.im)
        if isinstance(z, mpmath.mpc):
            return self.re.contains(z.real) and self.im.contains(z.imag)
        z = complex(z)
        return self.re.contains(z.real) and self.im.contains(z.imag)

    def contains_zero(self) -> bool:
        return self.re.contains_zero() and self.im.contains_zero()

    def __repr__(self):
        return f"ComplexInterval({self.re!r}, {self.im!r})"


def _ccoerce(x) -> ComplexInterval:
    if isinstance(x, ComplexInterval):
        return x
    if isinstance(x, complex):
        return ComplexInterval(x.real, x.imag)
    return ComplexInterval(_coerce(x), 0)


def cexp(z: ComplexInterval) -> ComplexInterval:
    r = exp(z.re)
    c, s = cos_sin(z.im)
    return ComplexInterval(r * c, r * s)


def cpow_real_base(n, s: ComplexInterval) -> ComplexInterval:
    """n**s for a real base n > 0."""
    ln = log(_coerce(n))
    return cexp(ComplexInterval(s.re * ln, s.im * ln))
