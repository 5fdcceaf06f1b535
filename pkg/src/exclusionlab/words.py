"""Finite words and eventually periodic symbol streams.

Words are tuples of small non-negative integers.  A :class:`Code` is an
eventually periodic one-sided stream stored as (preperiod, period) and kept
in a canonical form, so equal streams compare equal as values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import AlphabetMismatchError

Word = tuple[int, ...]


def word(text: str) -> Word:
    """Parse a word from a digit string such as ``"0110"``."""
    if not all("0" <= ch <= "9" for ch in text):
        raise ValueError(f"word digits must be 0-9, got {text!r}")
    return tuple(int(ch) for ch in text)


def word_str(w: Word) -> str:
    return "".join(str(d) for d in w)


def check_word(w: Word, alphabet_size: int) -> None:
    for d in w:
        if not 0 <= d < alphabet_size:
            raise AlphabetMismatchError(
                f"symbol {d} outside alphabet of size {alphabet_size}"
            )


def word_value(w: Word, base: int) -> int:
    """Integer value of ``w`` read as base-``base`` digits, first digit high."""
    v = 0
    for d in w:
        v = v * base + d
    return v


def word_fraction(w: Word, base: int) -> Fraction:
    """Value of ``0.w`` in base ``base``."""
    return Fraction(word_value(w, base), base ** len(w)) if w else Fraction(0)


def factor_set(w: Word, length: int) -> set[Word]:
    """All length-``length`` factors of ``w``."""
    if length > len(w):
        return set()
    return {w[i : i + length] for i in range(len(w) - length + 1)}


def contains_factor(w: Word, f: Word) -> bool:
    if len(f) > len(w):
        return False
    return any(w[i : i + len(f)] == f for i in range(len(w) - len(f) + 1))


def _primitive(v: Word) -> Word:
    for d in range(1, len(v)):
        if len(v) % d == 0 and v[:d] * (len(v) // d) == v:
            return v[:d]
    return v


@dataclass(frozen=True)
class Code:
    """Eventually periodic stream ``preperiod . period period period ...``.

    Canonical form: the period is primitive and no trailing preperiod symbol
    can be absorbed into a rotation of the period.  Construction normalizes,
    so two Codes denote the same stream iff they are equal.
    """

    preperiod: Word
    period: Word
    alphabet_size: int = 2

    def __post_init__(self) -> None:
        if not self.period:
            raise ValueError("period must be nonempty")
        check_word(self.preperiod, self.alphabet_size)
        check_word(self.period, self.alphabet_size)
        u, v = self.preperiod, _primitive(self.period)
        while u and u[-1] == v[-1]:
            u = u[:-1]
            v = (v[-1],) + v[:-1]
        object.__setattr__(self, "preperiod", u)
        object.__setattr__(self, "period", v)

    def __getitem__(self, i: int) -> int:
        if i < 0:
            raise IndexError("stream index must be non-negative")
        if i < len(self.preperiod):
            return self.preperiod[i]
        return self.period[(i - len(self.preperiod)) % len(self.period)]

    def prefix(self, length: int) -> Word:
        return tuple(self[i] for i in range(length))

    def shift(self, k: int = 1) -> "Code":
        if k < 0:
            raise ValueError("shift must be non-negative")
        if k <= len(self.preperiod):
            pre = self.preperiod[k:]
            per = self.period
        else:
            r = (k - len(self.preperiod)) % len(self.period)
            pre = ()
            per = self.period[r:] + self.period[:r]
        return Code(pre, per, self.alphabet_size)

    def value(self) -> Fraction:
        """The point ``sum_i self[i] * base**-(i+1)`` coded by the stream."""
        n = self.alphabet_size
        head = word_fraction(self.preperiod, n)
        p = len(self.period)
        tail = Fraction(word_value(self.period, n), n ** p - 1)
        return head + tail * Fraction(1, n ** len(self.preperiod))

    def __str__(self) -> str:
        return f"{word_str(self.preperiod)}({word_str(self.period)})"

    @staticmethod
    def from_word(w: Word, alphabet_size: int = 2) -> "Code":
        """The stream ``w 0 0 0 ...``."""
        return Code(w, (0,), alphabet_size)


def lt_order(a: Code, b: Code) -> bool:
    """Strict order: does ``a`` precede ``b`` in coordinatewise-first-difference
    order?

    Decided exactly by comparing the two streams up to one full common period
    beyond both preperiods; agreement there implies equality.
    """
    if a.alphabet_size != b.alphabet_size:
        raise AlphabetMismatchError("codes over different alphabets")
    bound = max(len(a.preperiod), len(b.preperiod)) + lcm(
        len(a.period), len(b.period)
    )
    for i in range(bound):
        if a[i] != b[i]:
            return a[i] < b[i]
    return False
