"""Digit-string combinatorics over a fixed base.

Words are finite digit strings over {0, ..., q-1}, most significant digit
first.  An Expansion is the canonical digit string of a nonnegative integer
(no leading zeros, except "0" itself).  Occurrence counting is always of the
overlapping kind: e.g. "11" occurs 5 times in "111111".
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import gmpy2

__all__ = [
    "Word",
    "Expansion",
    "AllZerosWordError",
    "expansion",
    "occurrences",
    "count_in_integer",
    "concat_power",
    "gamma",
    "gamma_prime",
    "split_leading_zeros",
    "word_value",
    "parse_word",
    "format_digits",
]

# gmpy2's digits() alphabet for bases up to 36 (lowercase letters).
_GMP_ALPHABET = "0123456789abcdefghijklmnopqrstuvwxyz"


class AllZerosWordError(ValueError):
    """Raised when an operation excludes words consisting only of zeros."""


def _check_base(q: int) -> None:
    if q < 2:
        raise ValueError(f"base must be >= 2, got {q}")


@dataclass(frozen=True)
class Word:
    """A finite digit string over {0, ..., base-1}, most significant first.

    Leading zeros are allowed (unlike in a canonical Expansion).  The empty
    word is representable (for w^0) but rejected by all counting entry
    points.
    """

    base: int
    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_base(self.base)
        for d in self.digits:
            if not 0 <= d < self.base:
                raise ValueError(
                    f"digit {d} out of range for base {self.base}"
                )

    @property
    def length(self) -> int:
        return len(self.digits)

    @property
    def is_empty(self) -> bool:
        return not self.digits

    @property
    def is_all_zeros(self) -> bool:
        return bool(self.digits) and not any(self.digits)

    def text(self) -> str:
        return format_digits(self.digits, self.base)

    def __str__(self) -> str:
        return self.text()


@dataclass(frozen=True)
class Expansion:
    """Canonical base-q expansion of a nonnegative integer."""

    base: int
    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_base(self.base)
        if not self.digits:
            raise ValueError("expansion cannot be empty; 0 is written '0'")
        if len(self.digits) > 1 and self.digits[0] == 0:
            raise ValueError("canonical expansion has no leading zeros")
        for d in self.digits:
            if not 0 <= d < self.base:
                raise ValueError(
                    f"digit {d} out of range for base {self.base}"
                )

    @property
    def length(self) -> int:
        return len(self.digits)

    @property
    def msd_position(self) -> int:
        """Position M of the most significant digit (floor(log_q n))."""
        return len(self.digits) - 1

    def value(self) -> int:
        return word_value(Word(self.base, self.digits), self.base)

    def text(self) -> str:
        return format_digits(self.digits, self.base)

    def __str__(self) -> str:
        return self.text()


def format_digits(digits: tuple[int, ...], base: int) -> str:
    """Render digits in the word text format.

    Plain concatenation for base <= 10, comma-separated decimal letters
    for larger bases ("19,3,0").
    """
    if base <= 10:
        return "".join(str(d) for d in digits)
    return ",".join(str(d) for d in digits)


def parse_word(text: str, base: int) -> Word:
    """Parse the word text format (see format_digits)."""
    _check_base(base)
    text = text.strip()
    if not text:
        raise ValueError("empty word text")
    if "," in text:
        digits = tuple(int(part) for part in text.split(","))
    else:
        if base > 10:
            raise ValueError(
                f"base {base} words must use the comma-separated form"
            )
        if not text.isdigit():
            raise ValueError(f"malformed word {text!r}")
        digits = tuple(int(ch) for ch in text)
    return Word(base, digits)


def _digit_string(n: int, q: int) -> str:
    """Base-q digits of n as a string over gmpy2's alphabet (q <= 36).

    Uses GMP's subquadratic radix conversion, which matters for the
    multi-million-digit expansions of m^N'.
    """
    return gmpy2.mpz(n).digits(q)


def expansion(n: int, q: int) -> Expansion:
    """Canonical base-q expansion of n >= 0, with (0)_q = "0"."""
    _check_base(q)
    if n < 0:
        raise ValueError(f"expansion requires n >= 0, got {n}")
    if n == 0:
        return Expansion(q, (0,))
    if q <= 36:
        digits = tuple(_GMP_ALPHABET.index(ch) for ch in _digit_string(n, q))
    else:
        rev = []
        while n:
            n, r = divmod(n, q)
            rev.append(r)
        digits = tuple(reversed(rev))
    return Expansion(q, digits)


def _count_overlapping(text: str, pattern: str) -> int:
    if not any(
        pattern[:k] == pattern[-k:] for k in range(1, len(pattern))
    ):
        # borderless patterns cannot overlap themselves, so the
        # non-overlapping C scan already counts every occurrence
        return text.count(pattern)
    count = 0
    start = 0
    while True:
        idx = text.find(pattern, start)
        if idx < 0:
            return count
        count += 1
        start = idx + 1


def _as_text(digits: tuple[int, ...]) -> str:
    # chr() keeps string matching usable for any base that fits a codepoint
    return "".join(map(chr, digits))


def occurrences(w: Word, v: Word | Expansion) -> int:
    """Number of possibly overlapping occurrences of w in v."""
    if w.is_empty:
        raise ValueError("occurrence counting rejects the empty word")
    if w.base != v.base:
        raise ValueError(f"base mismatch: {w.base} vs {v.base}")
    return _count_overlapping(_as_text(v.digits), _as_text(w.digits))


def count_in_integer(w: Word, n: int, q: int) -> int:
    """e_q(w; n): occurrences of w in the base-q expansion of n."""
    if w.is_empty:
        raise ValueError("occurrence counting rejects the empty word")
    if w.base != q:
        raise ValueError(f"base mismatch: word base {w.base}, q={q}")
    if n < 0:
        raise ValueError(f"e_q(w; n) requires n >= 0, got {n}")
    if q <= 36:
        if n == 0:
            text = "0"
        else:
            text = _digit_string(n, q)
        pattern = "".join(_GMP_ALPHABET[d] for d in w.digits)
        return _count_overlapping(text, pattern)
    return occurrences(w, expansion(n, q))


def concat_power(w: Word, k: int) -> Word:
    """The k-th concatenation power w^k; w^0 is the empty word."""
    if k < 0:
        raise ValueError(f"concatenation power requires k >= 0, got {k}")
    return Word(w.base, w.digits * k)


def gamma_prime(w: Word) -> int:
    """Occurrences of w in w^2 (counts circular shifts, plus one)."""
    if w.is_empty:
        raise ValueError("gamma requires a non-empty word")
    return occurrences(w, concat_power(w, 2))


def gamma(w: Word) -> int:
    """Self-overlap constant gamma(w) = gamma'(w) - 1, in [1, l(w)]."""
    return gamma_prime(w) - 1


def split_leading_zeros(w: Word) -> tuple[int, Word]:
    """Split w = 0^k tail with tail starting in a nonzero digit."""
    if w.is_empty:
        raise ValueError("cannot split the empty word")
    if w.is_all_zeros:
        raise AllZerosWordError(
            "word is all zeros; use the zero-block construction"
        )
    k = 0
    while w.digits[k] == 0:
        k += 1
    return k, Word(w.base, w.digits[k:])


def word_value(v: Word, p: int) -> int:
    """phi_p(v): the integer whose (possibly padded) digit string is v."""
    if v.base != p:
        raise ValueError(f"base mismatch: word base {v.base}, p={p}")
    acc = 0
    for d in v.digits:
        acc = acc * p + d
    return acc


def ratio_denominator(n: int) -> float:
    """ln n, defined for arbitrary-precision integers n >= 2."""
    if n < 2:
        raise ValueError(f"log ratio needs n >= 2, got {n}")
    return math.log(n)
