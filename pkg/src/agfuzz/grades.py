"""Membership grades: exact rationals in [0, 1].

A grade is a plain :class:`fractions.Fraction`.  Fractions are stored
reduced, so equality is structural and ``min``/``max`` give the lattice
meet and join.  Floats are refused everywhere.
"""

import re
from fractions import Fraction
from numbers import Rational

from .errors import ParseError

_GRADE_RE = re.compile(r"^(0|1|[0-9]+/[1-9][0-9]*)$")


def as_grade(value):
    """Coerce ``value`` (Fraction, int or ``"p/q"`` string) to a checked grade."""
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"grades must be exact, got {value!r}")
    if isinstance(value, str):
        return parse_grade(value)
    if not isinstance(value, Rational):
        raise TypeError(f"not a rational grade: {value!r}")
    g = Fraction(value)
    if not 0 <= g <= 1:
        raise ValueError(f"grade {g} outside [0, 1]")
    return g


def parse_grade(text):
    """Strict parse of ``0``, ``1`` or ``p/q`` in lowest terms with 0 <= p/q <= 1."""
    s = text.strip()
    if not _GRADE_RE.match(s):
        raise ParseError(f"malformed grade {text!r}")
    if "/" in s:
        p, q = (int(part) for part in s.split("/"))
        g = Fraction(p, q)
        if (g.numerator, g.denominator) != (p, q):
            raise ParseError(f"grade {text!r} is not in lowest terms")
    else:
        g = Fraction(int(s))
    if not 0 <= g <= 1:
        raise ParseError(f"grade {text!r} outside [0, 1]")
    return g


def format_grade(g):
    g = Fraction(g)
    if g.denominator == 1:
        return str(g.numerator)
    return f"{g.numerator}/{g.denominator}"


def canonical_chain(k):
    """The strictly descending grades 1 > 1/2 > 1/4 > ... of length ``k``."""
    return [Fraction(1, 2 ** i) for i in range(k)]
