"""Exact rational coefficients.

gmpy2's ``mpq`` is used when importable; ``fractions.Fraction`` otherwise.
Floats are refused everywhere.
"""
from fractions import Fraction
from numbers import Integral, Rational

try:
    from gmpy2 import mpq as QQ
except ImportError:  # pragma: no cover
    QQ = Fraction

_QQ_TYPE = type(QQ(0))


def to_qq(value):
    if isinstance(value, _QQ_TYPE):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(value, Integral):
        return QQ(int(value))
    if isinstance(value, Rational):
        return QQ(int(value.numerator), int(value.denominator))
    if isinstance(value, str):
        return QQ(Fraction(value.strip()))
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def is_coefficient(value):
    return isinstance(value, (_QQ_TYPE, Integral, Fraction)) and not isinstance(value, bool)


def qq_str(c):
    """Render ``c`` as ``p`` or ``p/q``."""
    c = to_qq(c)
    num, den = int(c.numerator), int(c.denominator)
    return str(num) if den == 1 else f"{num}/{den}"


ZERO = QQ(0)
ONE = QQ(1)
