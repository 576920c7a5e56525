"""Angles and evolution times kept exact as rational multiples of pi."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

_PI_FORM = re.compile(r"^\s*(-?)(\d*)\s*pi\s*(?:/\s*(\d+))?\s*$")


@dataclass(frozen=True)
class Radians:
    """A real value in radians.

    When ``pi_units`` is set the value is exactly ``pi_units * pi`` and
    arithmetic between exact values stays exact. Otherwise ``value`` holds a
    plain float.
    """

    pi_units: Fraction | None = None
    value: float | None = None

    def __post_init__(self):
        if (self.pi_units is None) == (self.value is None):
            raise ValueError("exactly one of pi_units or value must be given")
        if self.pi_units is not None and not isinstance(self.pi_units, Fraction):
            object.__setattr__(self, "pi_units", Fraction(self.pi_units))
        if self.value is not None:
            v = float(self.value)
            if not math.isfinite(v):
                raise ValueError(f"non-finite angle {self.value!r}")
            object.__setattr__(self, "value", v)

    @classmethod
    def pi(cls, num: int | Fraction = 1, den: int = 1) -> Radians:
        return cls(pi_units=Fraction(num) / den)

    @classmethod
    def of(cls, x: float) -> Radians:
        return cls(value=float(x))

    @property
    def is_exact(self) -> bool:
        return self.pi_units is not None

    def __float__(self) -> float:
        if self.pi_units is not None:
            return float(self.pi_units) * math.pi
        return self.value

    def __add__(self, other: Radians) -> Radians:
        if not isinstance(other, Radians):
            return NotImplemented
        if self.is_exact and other.is_exact:
            return Radians(pi_units=self.pi_units + other.pi_units)
        return Radians(value=float(self) + float(other))

    def __sub__(self, other: Radians) -> Radians:
        if not isinstance(other, Radians):
            return NotImplemented
        if self.is_exact and other.is_exact:
            return Radians(pi_units=self.pi_units - other.pi_units)
        return Radians(value=float(self) - float(other))

    def __neg__(self) -> Radians:
        if self.is_exact:
            return Radians(pi_units=-self.pi_units)
        return Radians(value=-self.value)

    def __lt__(self, other: Radians) -> bool:
        if self.is_exact and other.is_exact:
            return self.pi_units < other.pi_units
        return float(self) < float(other)

    def __le__(self, other: Radians) -> bool:
        return self == other or self < other

    def mod_2pi(self) -> Radians:
        """Reduce into [0, 2pi)."""
        if self.is_exact:
            return Radians(pi_units=self.pi_units % 2)
        r = self.value % (2 * math.pi)
        # float % can land exactly on the modulus for tiny negative inputs
        return Radians(value=0.0 if r >= 2 * math.pi else r)

    def is_zero(self) -> bool:
        return self.pi_units == 0 if self.is_exact else self.value == 0.0

    def __str__(self) -> str:
        return format_radians(self)


ZERO = Radians.pi(0)


def format_radians(r: Radians) -> str:
    """``7pi/4``, ``pi``, ``-pi/2``, ``0`` for exact values, repr otherwise."""
    if not r.is_exact:
        return repr(r.value)
    p, q = r.pi_units.numerator, r.pi_units.denominator
    if p == 0:
        return "0"
    sign = "-" if p < 0 else ""
    p = abs(p)
    head = f"{sign}{'' if p == 1 else p}pi"
    return head if q == 1 else f"{head}/{q}"


def parse_radians(text: str) -> Radians:
    """Parse ``<p>pi/<q>`` (``p`` and ``/q`` optional) or a decimal number.

    A bare integer such as ``0`` parses as an exact value so that zero
    durations round-trip exactly.
    """
    m = _PI_FORM.match(text)
    if m:
        sign, p, q = m.groups()
        num = int(p) if p else 1
        den = int(q) if q else 1
        if den == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return Radians.pi(-num if sign else num, den)
    s = text.strip()
    if re.fullmatch(r"-?\d+", s) and int(s) == 0:
        return ZERO
    try:
        return Radians.of(float(s))
    except ValueError:
        raise ValueError(f"malformed angle {text!r}") from None
