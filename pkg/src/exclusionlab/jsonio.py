"""Exact JSON encodings shared across the package.

Rational values travel as strings like ``"3/4"`` (integers as ``"1"``), words
as digit strings, eventually periodic codes as preperiod/period pairs.
"""

from __future__ import annotations

from fractions import Fraction

from .words import Code, Word, word, word_str


def frac_str(v: Fraction) -> str:
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def parse_frac(text: str | int) -> Fraction:
    return Fraction(text)


def code_json(c: Code) -> dict:
    return {"preperiod": word_str(c.preperiod), "period": word_str(c.period)}


def code_from_json(doc: dict, alphabet_size: int = 2) -> Code:
    return Code(word(doc["preperiod"]), word(doc["period"]), alphabet_size)


def word_json(w: Word) -> str:
    return word_str(w)


def point_json(x: Fraction, y: Fraction | None = None) -> dict:
    doc = {"x": frac_str(x)}
    if y is not None:
        doc["y"] = frac_str(y)
    return doc


def entropy_str(value: float | None) -> str | None:
    """Entropies are reported as fixed 10-digit decimal strings."""
    return None if value is None else f"{value:.10f}"
