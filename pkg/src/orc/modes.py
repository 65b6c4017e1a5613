"""Arithmetic-mode switch: exact rationals vs IEEE doubles.

Every quantity the solvers produce is a ``Scalar``: a ``fractions.Fraction``
(or plain ``int``) in exact mode, a ``float`` in float mode.  Exact mode
never rounds; float mode carries the tolerance ``DEFAULT_EPS`` used for
feasibility and sign tests.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Scalar = Union[Fraction, int, float]

EXACT = "exact"
FLOAT = "float"
MODES = (EXACT, FLOAT)

DEFAULT_EPS = 1e-9


def check_mode(mode: str) -> str:
    if mode not in MODES:
        raise ValueError(f"unknown arithmetic mode {mode!r}, expected one of {MODES}")
    return mode


def parse_fraction(text: str) -> Fraction:
    """Parse an exact fraction from 'p/q', 'p', or a decimal literal.

    Decimal literals go through Fraction(str) so '0.1' means 1/10 exactly,
    not the nearest double.
    """
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse fraction from {text!r}") from exc


def check_alpha(alpha: Fraction) -> Fraction:
    """Validate a laziness parameter and normalize it to Fraction."""
    alpha = Fraction(alpha)
    if not 0 <= alpha <= 1:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    return alpha


def to_scalar(value, mode: str) -> Scalar:
    """Convert an exact value into the representation of the given mode."""
    if mode == FLOAT:
        return float(value)
    return value if isinstance(value, (Fraction, int)) else Fraction(value)


def is_exact(value) -> bool:
    return isinstance(value, (Fraction, int))
