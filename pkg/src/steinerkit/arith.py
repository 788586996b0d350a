"""Number handling for the two arithmetic modes.

``rational`` keeps every coordinate and field coefficient as a
:class:`fractions.Fraction`; square roots are exact when the radicand is a
perfect rational square and fall back to ``float`` otherwise.  ``double``
uses plain floats with fixed tolerances.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational, Real

RATIONAL_MODE = "rational"
DOUBLE_MODE = "double"
MODES = (RATIONAL_MODE, DOUBLE_MODE)

# point coincidence / sign decisions in double mode
POINT_TOL = 1e-12
# relative tolerance for comparing measures in double mode
MEASURE_RTOL = 1e-9


def _isqrt_exact(n: int) -> int | None:
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def exact_sqrt(x):
    """Square root of ``x``; a Fraction when the result is rational."""
    if isinstance(x, Rational):
        q = Fraction(x)
        if q < 0:
            raise ValueError("square root of a negative number")
        rn = _isqrt_exact(q.numerator)
        rd = _isqrt_exact(q.denominator)
        if rn is not None and rd is not None:
            return Fraction(rn, rd)
        return math.sqrt(q)
    if x < 0:
        if x > -POINT_TOL:
            return 0.0
        raise ValueError("square root of a negative number")
    return math.sqrt(x)


def parse_number(x, mode: str):
    """Coerce a JSON-ish scalar (int, float, ``"p/q"`` string) into ``mode``."""
    if isinstance(x, bool):
        raise TypeError(f"not a number: {x!r}")
    if mode == RATIONAL_MODE:
        if isinstance(x, Rational):
            return Fraction(x)
        if isinstance(x, float):
            if not math.isfinite(x):
                raise ValueError(f"non-finite number: {x!r}")
            # decimal literals in JSON mean what they say
            return Fraction(repr(x))
        if isinstance(x, str):
            return Fraction(x.strip())
        raise TypeError(f"not a number: {x!r}")
    if mode == DOUBLE_MODE:
        if isinstance(x, str):
            return float(Fraction(x.strip()))
        if isinstance(x, Real):
            v = float(x)
            if not math.isfinite(v):
                raise ValueError(f"non-finite number: {x!r}")
            return v
        raise TypeError(f"not a number: {x!r}")
    raise ValueError(f"unknown arithmetic mode {mode!r}")


@dataclass(frozen=True)
class Arithmetic:
    mode: str

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown arithmetic mode {self.mode!r}")

    @property
    def exact(self) -> bool:
        return self.mode == RATIONAL_MODE

    def num(self, x):
        return parse_number(x, self.mode)

    def is_zero(self, x, scale=1) -> bool:
        if self.exact and isinstance(x, Rational):
            return x == 0
        return abs(x) <= POINT_TOL * max(1.0, abs(scale))

    def sign(self, x, scale=1) -> int:
        if self.is_zero(x, scale):
            return 0
        return 1 if x > 0 else -1

    def sqrt(self, x):
        return exact_sqrt(x)


RATIONAL = Arithmetic(RATIONAL_MODE)
DOUBLE = Arithmetic(DOUBLE_MODE)


def arithmetic(mode: str | Arithmetic) -> Arithmetic:
    if isinstance(mode, Arithmetic):
        return mode
    return RATIONAL if mode == RATIONAL_MODE else Arithmetic(mode)


def close(a, b, rtol: float = MEASURE_RTOL, atol: float = 1e-12) -> bool:
    """Measure comparison: exact for two rationals, relative otherwise."""
    if isinstance(a, Rational) and isinstance(b, Rational):
        return a == b
    if math.isinf(a) or math.isinf(b):
        return a == b
    return abs(a - b) <= max(atol, rtol * max(abs(a), abs(b)))


def fmt(x) -> str:
    """Render a number: exact fractions stay exact, floats get 12 significant digits."""
    if isinstance(x, bool):
        return str(x).lower()
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, int):
        return str(x)
    if isinstance(x, float):
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        s = f"{x:.12g}"
        return "0" if s == "-0" else s
    return str(x)
