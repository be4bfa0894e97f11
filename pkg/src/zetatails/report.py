"""Serializable record of an evaluated bound."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import mpmath

from .interval import Interval

ROUNDING_NOTE = (
    "published constants: upper-bound coefficients rounded up at the stated "
    "decimals; coefficients that enter with a minus sign rounded down"
)


def _endpoints(x: Interval, digits: int = 17):
    with mpmath.workprec(256):        # nstr converts at the global precision otherwise
        return [mpmath.nstr(x.lo, digits), mpmath.nstr(x.hi, digits)]


@dataclass
class BoundReport:
    family: str
    sigma: Interval
    T: Interval
    formula: str
    coefficients: dict = field(default_factory=dict)
    upper: Interval | None = None
    lower: Interval | None = None
    notes: list = field(default_factory=list)

    def to_dict(self) -> dict:
        coeffs = {}
        for k, v in self.coefficients.items():
            coeffs[k] = _endpoints(v) if isinstance(v, Interval) else str(v)
        return {
            "family": self.family,
            "sigma": _endpoints(self.sigma),
            "T": _endpoints(self.T),
            "formula": self.formula,
            "coefficients": coeffs,
            "upper": None if self.upper is None else _endpoints(self.upper),
            "lower": None if self.lower is None else _endpoints(self.lower),
            "notes": list(self.notes),
            "rounding": ROUNDING_NOTE,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        d = self.to_dict()
        lines = [
            f"family: {d['family']}",
            f"sigma: [{d['sigma'][0]}, {d['sigma'][1]}]",
            f"T: [{d['T'][0]}, {d['T'][1]}]",
            f"bound: {d['formula']}",
        ]
        for k, v in d["coefficients"].items():
            lines.append(f"  {k} = {v if isinstance(v, str) else '[' + v[0] + ', ' + v[1] + ']'}")
        if d["upper"] is not None:
            lines.append(f"upper: [{d['upper'][0]}, {d['upper'][1]}]")
        if d["lower"] is not None:
            lines.append(f"lower: [{d['lower'][0]}, {d['lower'][1]}]")
        for n in d["notes"]:
            lines.append(f"note: {n}")
        lines.append(f"rounding: {d['rounding']}")
        return "\n".join(lines)
