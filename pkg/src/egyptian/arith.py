"""Exact rational scalars.

``fractions.Fraction`` already keeps values in lowest terms with a positive
denominator, is immutable and hashable, so it is used directly as the scalar
type.  This module only adds the strict text format used by problem files and
CLI output.
"""

import operator
import re
from fractions import Fraction

Rational = Fraction

_RATIONAL_RE = re.compile(r"\A([+-]?\d+)(?:/(\d+))?\Z")

_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def rat_parse(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` (optional sign, decimal digits only)."""
    m = _RATIONAL_RE.match(text.strip())
    if m is None:
        raise ValueError(f"malformed rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(num, den)


def rat_format(x: Fraction) -> str:
    """Canonical rendering: ``"p/q"``, or ``"p"`` when q = 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def rat_binary(op: str, x: Fraction, y: Fraction) -> Fraction:
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    if op == "div" and y == 0:
        raise ZeroDivisionError("division by zero rational")
    return fn(Fraction(x), Fraction(y))


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and rational strings; reject floats."""
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass a Fraction or 'p/q' string")
    if isinstance(x, str):
        return rat_parse(x)
    return Fraction(x)


def floor(x: Fraction) -> int:
    return x.numerator // x.denominator


def ceil(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)
