"""Witness construction along polynomial sequences.

Given f, q, w and a scale L, builds N < q^L' such that the base-q
expansion of f(N) ends in w^L 0^c (f(a0))_q, so that f(N) contains at
least gamma(w)(L-2) occurrences of w.  The all-zeros word gets its own,
much simpler construction N = q^L + a.

Every congruence and count in a WitnessReport is re-verified by direct
arbitrary-precision evaluation; nothing is trusted from the lift.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Optional

from . import words
from .lifting import LiftTrace, hensel_lift_poly
from .padic import crt, factorize, vp
from .words import Word, expansion, split_leading_zeros, word_value

__all__ = [
    "IntPoly",
    "WitnessReport",
    "choose_base_point",
    "padding_c",
    "target_value",
    "construct_poly_witness",
    "zero_block_witness",
]

REPORT_FORMAT = "digit-witness/1"


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial c_0 + c_1 X + ... + c_d X^d.

    Constant polynomials are allowed so derivatives are representable;
    the witness constructions themselves require degree >= 1.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("polynomial needs at least one coefficient")
        if len(self.coeffs) > 1 and self.coeffs[-1] == 0:
            raise ValueError("leading coefficient must be nonzero")

    @classmethod
    def parse(cls, text: str) -> "IntPoly":
        """Parse "c0,c1,...,cd"."""
        return cls(tuple(int(part) for part in text.split(",")))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPoly":
        if self.degree == 0:
            return IntPoly((0,))
        return IntPoly(
            tuple(i * c for i, c in enumerate(self.coeffs) if i >= 1)
        )

    def shift(self, a: int) -> "IntPoly":
        """Coefficients of f(X + a)."""
        d = self.degree
        out = [0] * (d + 1)
        for i, c in enumerate(self.coeffs):
            for jj in range(i + 1):
                out[jj] += c * math.comb(i, jj) * a ** (i - jj)
        return IntPoly(tuple(out))

    def text(self) -> str:
        return ",".join(str(c) for c in self.coeffs)


def _eval_nat(f: IntPoly, x: int) -> int:
    """Evaluate f enforcing the f(N) subset N hypothesis dynamically."""
    y = f(x)
    if y < 0:
        raise ValueError(
            f"f({x}) = {y} < 0: polynomial does not map N into N"
        )
    return y


@dataclass
class WitnessReport:
    """Structured record of one witness construction and its checks."""

    kind: str                     # "poly" | "exp" | "zero-block"
    base: int                     # q, or p for exponential witnesses
    word: str
    scale: int                    # L
    poly: Optional[str] = None
    m: Optional[int] = None
    m_reduced: Optional[int] = None
    stripped_exponent: Optional[int] = None
    a0: Optional[int] = None
    c: Optional[int] = None
    length_target: Optional[int] = None   # L'
    target_value: Optional[int] = None    # b
    excess: Optional[int] = None          # L' - l*L, Eq-(3)-style constant
    witness: Optional[int] = None         # N
    witness_exponent: Optional[int] = None  # N' (exp only)
    verified_congruence: bool = False
    expansion_tail: Optional[str] = None
    occurrence_count: Optional[int] = None
    claimed_bound: Optional[int] = None
    ratio: Optional[float] = None
    theorem_target: Optional[float] = None
    diff_params: Optional[dict] = None
    digit_budget: Optional[int] = None
    materialized: Optional[bool] = None
    size_bound_ok: Optional[bool] = None
    # one (prime, LiftTrace) pair per lift; reviewer/debug data, not
    # part of the serialized document
    traces: list[tuple[int, LiftTrace]] = field(
        default_factory=list, repr=False
    )

    def to_document(self) -> dict:
        """JSON-compatible document; integers become decimal strings."""
        doc: dict = {"format": REPORT_FORMAT}
        for key in (
            "kind", "base", "word", "scale", "poly", "m", "m_reduced",
            "stripped_exponent", "a0", "c", "length_target", "target_value",
            "excess", "witness", "witness_exponent", "verified_congruence",
            "expansion_tail", "occurrence_count", "claimed_bound", "ratio",
            "theorem_target", "diff_params", "digit_budget", "materialized",
            "size_bound_ok",
        ):
            value = getattr(self, key)
            if value is None:
                continue
            if isinstance(value, bool):
                doc[key] = value
            elif isinstance(value, int):
                doc[key] = str(value)
            else:
                doc[key] = value
        return doc

    def to_json(self) -> str:
        return json.dumps(self.to_document(), sort_keys=True, indent=2) + "\n"


def choose_base_point(f: IntPoly) -> int:
    """Smallest a0 >= 0 with f'(a0) != 0 and f(a0) >= 0."""
    if f.degree < 1:
        raise ValueError("degree must be >= 1")
    fd = f.derivative()
    a0 = 0
    while True:
        if fd(a0) != 0 and f(a0) >= 0:
            return a0
        a0 += 1


def padding_c(q: int, f: IntPoly, a0: int) -> int:
    """Smallest zero padding c making the Hensel precondition hold.

    c is chosen so that e_i*(c + len_q(f(a0))) > 2 v_{p_i}(f'(a0)) for
    every prime power p_i^e_i of q; since b = f(a0) (mod q^(c+len)) by
    construction, this bounds v_{p_i}(f(a0) - b) from below for every L.
    """
    fd_val = f.derivative()(a0)
    if fd_val == 0:
        raise ValueError("f'(a0) must be nonzero")
    fa0 = _eval_nat(f, a0)
    length = expansion(fa0, q).length
    c = 0
    for p, e in factorize(q).factors:
        v = int(vp(fd_val, p))
        # smallest c with e*(c + length) > 2v
        need = 2 * v // e - length + 1
        if need > c:
            c = need
    return max(c, 0)


def target_value(
    w: Word, L: int, c: int, f: IntPoly, a0: int, q: int
) -> tuple[int, int]:
    """The target b_{q,L} and the window length L'.

    (b)_q = w_{k+1}...w_l w^(L-1) 0^c (f(a0))_q, and L' is the length of
    w^L 0^c (f(a0))_q.
    """
    if L < 1:
        raise ValueError("L must be >= 1")
    k, tail = split_leading_zeros(w)
    fa0 = _eval_nat(f, a0)
    fa0_digits = expansion(fa0, q).digits
    digit_string = (
        tail.digits + w.digits * (L - 1) + (0,) * c + fa0_digits
    )
    b = word_value(Word(q, digit_string), q)
    L_prime = w.length * L + c + len(fa0_digits)
    return b, L_prime


def construct_poly_witness(
    f: IntPoly, q: int, w: Word, L: int
) -> WitnessReport:
    """Build and verify a witness N with f(N) ending in w^L 0^c (f(a0))_q.

    L >= 3 makes the claimed bound gamma(w)(L-2) positive; smaller L is
    accepted and simply reports a non-positive claimed bound.
    """
    if q < 2:
        raise ValueError(f"base must be >= 2, got {q}")
    if f.degree < 1:
        raise ValueError("degree must be >= 1")
    if w.base != q:
        raise ValueError(f"base mismatch: word base {w.base}, q={q}")
    if w.is_empty:
        raise ValueError("word must be non-empty")
    if w.is_all_zeros:
        raise words.AllZerosWordError(
            "all-zeros word: use zero_block_witness"
        )

    a0 = choose_base_point(f)
    c = padding_c(q, f, a0)
    b, L_prime = target_value(w, L, c, f, a0, q)
    g = IntPoly((f.coeffs[0] - b,) + f.coeffs[1:])

    residues = []
    traces = []
    for p, e in factorize(q).factors:
        K = L_prime * e
        n_i, tr = hensel_lift_poly(g, p, a0, K)
        residues.append((n_i, p ** K))
        traces.append((p, tr))
    N = crt(residues)

    modulus = q ** L_prime
    fN = _eval_nat(f, N)
    verified = N < modulus and fN % modulus == b
    tail_digits = expansion(fN % modulus, q).digits
    tail_padded = (0,) * (L_prime - len(tail_digits)) + tail_digits
    count = words.count_in_integer(w, fN, q)
    gam = words.gamma(w)
    claimed = gam * (L - 2)
    ratio = count / math.log(N) if N >= 2 else math.inf
    target = gam / (w.length * math.log(q))

    return WitnessReport(
        kind="poly",
        base=q,
        word=w.text(),
        scale=L,
        poly=f.text(),
        a0=a0,
        c=c,
        length_target=L_prime,
        target_value=b,
        excess=L_prime - w.length * L,
        witness=N,
        verified_congruence=verified,
        expansion_tail=words.format_digits(tail_padded, q),
        occurrence_count=count,
        claimed_bound=claimed,
        ratio=ratio,
        theorem_target=target,
        traces=traces,
    )


def _positive_shift(f: IntPoly) -> int:
    """Smallest positive a with all coefficients of f(X+a) positive."""
    a = 1
    while True:
        if all(coef > 0 for coef in f.shift(a).coeffs):
            return a
        a += 1


def zero_block_witness(
    f: IntPoly, q: int, l: int, L: int
) -> WitnessReport:
    """Witness N = q^L + a for the all-zeros word 0^l.

    Each of the d gaps between consecutive powers of q in f(q^L + a)
    carries a run of zeros of length L + O(1), giving at least
    d*(L - l - C_f) occurrences for C_f depending only on q and f.
    """
    if f.degree < 1:
        raise ValueError("degree must be >= 1")
    if l < 1 or L < 1:
        raise ValueError("block length and scale must be >= 1")
    a = _positive_shift(f)
    shifted = f.shift(a)
    N = q ** L + a
    fN = _eval_nat(f, N)
    w = Word(q, (0,) * l)
    count = words.count_in_integer(w, fN, q)
    d = f.degree
    C_f = max(
        1 + expansion(abs(coef), q).length for coef in shifted.coeffs
    )
    claimed = d * (L - l - C_f)
    ratio = count / math.log(N)
    return WitnessReport(
        kind="zero-block",
        base=q,
        word=w.text(),
        scale=L,
        poly=f.text(),
        a0=a,
        witness=N,
        verified_congruence=True,
        occurrence_count=count,
        claimed_bound=claimed,
        ratio=ratio,
        theorem_target=l / (l * math.log(q)),
    )
