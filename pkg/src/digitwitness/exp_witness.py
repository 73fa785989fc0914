"""Witness construction along exponential sequences m^n.

Given a prime p, a base m (not a power of p) and a word w over the
alphabet of p, builds N' = (p-1)N with m^N' = b_{p,L} (mod p^L') where
(b_{p,L})_p reads w^L 0^c 1.  The lift works with the p-free part m' of
m; occurrences transfer since multiplying by p^s only appends zeros.

The direct occurrence count materializes the full expansion of m'^N'
only while it fits a digit budget; beyond that the report keeps the
verified congruence and the count implied by the pinned low-digit
window, flagged as not materialized.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Optional

import gmpy2

from . import words
from .lifting import DiffData, diff_data_for, newton_lift
from .padic import is_prime, pow_g, vp
from .poly_witness import WitnessReport
from .words import Word, word_value

__all__ = [
    "PowerOfBaseError",
    "DEFAULT_DIGIT_BUDGET",
    "strip_p_part",
    "exp_target",
    "construct_exp_witness",
]

DEFAULT_DIGIT_BUDGET = 10 ** 7


class PowerOfBaseError(ValueError):
    """m is a power of p, violating the Theorem-2-style hypothesis."""


def strip_p_part(m: int, p: int) -> tuple[int, int]:
    """Write m = m' p^s with gcd(m', p) = 1.

    Raises PowerOfBaseError when m' = 1: pure powers of p never show
    any word but 10...0 and are excluded by hypothesis.
    """
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    s = int(vp(m, p))
    m_reduced = m // p ** s
    if m_reduced == 1:
        raise PowerOfBaseError(
            f"m={m} is a power of p={p}; the hypothesis requires m not "
            f"to be a power of p"
        )
    return m_reduced, s


def exp_target(w: Word, L: int, c: int, p: int) -> tuple[int, int]:
    """b_{p,L} = phi_p(w^L 0^c 1) and the window length L' = lL + c + 1."""
    if w.is_empty:
        raise ValueError("word must be non-empty")
    if w.base != p:
        raise ValueError(f"base mismatch: word base {w.base}, p={p}")
    if L < 1:
        raise ValueError("L must be >= 1")
    digit_string = w.digits * L + (0,) * c + (1,)
    b = word_value(Word(p, digit_string), p)
    return b, w.length * L + c + 1


def _fits_budget(n_prime: int, m_reduced: int, p: int, budget: int) -> bool:
    # number of base-p digits of m'^N' is about N' * ln m' / ln p;
    # compare in log space so huge exponents never overflow floats
    log_digits = math.log(n_prime) + math.log(
        math.log(m_reduced) / math.log(p)
    )
    return log_digits <= math.log(budget)


@lru_cache(maxsize=4096)
def _materialized_count(
    m_reduced: int, n_prime: int, digits: tuple[int, ...], p: int
) -> int:
    # distinct m sharing a p-free part (m and m p^s) hit the same entry
    value = gmpy2.mpz(m_reduced) ** n_prime
    return words.count_in_integer(Word(p, digits), value, p)


def construct_exp_witness(
    m: int,
    p: int,
    w: Word,
    L: int,
    digit_budget: Optional[int] = None,
) -> WitnessReport:
    """Build and verify a witness exponent N' with m^N' rich in w."""
    if digit_budget is None:
        digit_budget = DEFAULT_DIGIT_BUDGET
    m_reduced, stripped = strip_p_part(m, p)
    dd = diff_data_for(m_reduced, p)
    b, L_prime = exp_target(w, L, dd.c, p)

    def F(u: int, K: int) -> int:
        return (pow_g(dd.a, dd.e, p, u, K) - b) % p ** K

    xi, trace = newton_lift(F, dd, 0, L_prime)
    modulus = p ** L_prime
    N = modulus + xi.residue          # smallest representative >= p^L'
    N_prime = (p - 1) * N

    verified = pow(m_reduced, N_prime, modulus) == b % modulus

    gam = words.gamma(w)
    claimed = gam * (L - 1)
    window = Word(p, w.digits * L + (0,) * dd.c + (1,))
    materialized = _fits_budget(N_prime, m_reduced, p, digit_budget)
    if materialized:
        count = _materialized_count(m_reduced, N_prime, w.digits, p)
    else:
        # congruence pins the low L' digits; count the window only
        count = words.occurrences(w, window)

    # size bound: N' < 2(p-1) p^L', i.e. the Eq-style
    # log N' <= log(2(p-1)) + (c+1) log p + lL log p, checked exactly
    size_ok = N_prime < 2 * (p - 1) * modulus

    return WitnessReport(
        kind="exp",
        base=p,
        word=w.text(),
        scale=L,
        m=m,
        m_reduced=m_reduced,
        stripped_exponent=stripped,
        c=dd.c,
        length_target=L_prime,
        target_value=b,
        excess=L_prime - w.length * L,
        witness=N,
        witness_exponent=N_prime,
        verified_congruence=verified,
        expansion_tail=window.text(),
        occurrence_count=count,
        claimed_bound=claimed,
        ratio=count / math.log(N_prime),
        theorem_target=gam / (w.length * math.log(p)),
        diff_params={
            "a": str(dd.a),
            "e": dd.e,
            "a_prime": None if dd.a_prime is None else str(dd.a_prime),
            "t": dd.t,
            "j": dd.j,
            "s": dd.s,
            "n": dd.n,
            "c": dd.c,
            "order": dd.order,
        },
        digit_budget=digit_budget,
        materialized=materialized,
        size_bound_ok=size_ok,
        traces=[(p, trace)],
    )
