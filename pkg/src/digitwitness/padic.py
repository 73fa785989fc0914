"""Truncated p-adic arithmetic: valuations, base factorization, CRT,
and evaluation of g(u) = (1 + a p^e)^u to prescribed precision.

Elements are stored as (residue, precision) pairs: everything downstream
only ever needs a congruence modulo a fixed prime power.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

__all__ = [
    "INFINITE_VALUATION",
    "PadicApprox",
    "BaseFactorization",
    "is_prime",
    "vp",
    "factorize",
    "crt",
    "pow_g",
]

# Marker for v_p(0); compares greater than every finite valuation.
INFINITE_VALUATION = math.inf


def is_prime(n: int) -> bool:
    """Deterministic primality check by trial division (bases are tiny)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


def vp(n: int, p: int) -> Union[int, float]:
    """p-adic order of n; INFINITE_VALUATION for n = 0."""
    _require_prime(p)
    if n == 0:
        return INFINITE_VALUATION
    n = abs(n)
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


@dataclass(frozen=True)
class PadicApprox:
    """An element of Z_p known modulo p^precision."""

    prime: int
    precision: int
    residue: int

    def __post_init__(self) -> None:
        _require_prime(self.prime)
        if self.precision < 1:
            raise ValueError("precision must be >= 1")
        if not 0 <= self.residue < self.prime ** self.precision:
            raise ValueError("residue out of range for stated precision")

    @property
    def modulus(self) -> int:
        return self.prime ** self.precision

    def truncate(self, k: int) -> "PadicApprox":
        """Forget precision down to k digits (k <= current precision)."""
        if k > self.precision:
            raise ValueError("cannot increase precision by truncation")
        return PadicApprox(self.prime, k, self.residue % self.prime ** k)


@dataclass(frozen=True)
class BaseFactorization:
    """Prime factorization q = p_1^e_1 ... p_t^e_t, primes increasing."""

    factors: tuple[tuple[int, int], ...]

    @property
    def value(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p ** e
        return out

    @property
    def prime_count(self) -> int:
        return len(self.factors)


def factorize(q: int) -> BaseFactorization:
    """Complete prime factorization of q >= 2 by trial division."""
    if q < 2:
        raise ValueError(f"factorize requires q >= 2, got {q}")
    factors = []
    n = q
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        factors.append((n, 1))
    return BaseFactorization(tuple(factors))


def crt(residues: Sequence[tuple[int, int]]) -> int:
    """Solve N = r_i (mod M_i) for pairwise coprime moduli.

    Returns the unique N in [0, prod M_i).  Raises ValueError if the
    moduli are not pairwise coprime.
    """
    if not residues:
        raise ValueError("crt needs at least one congruence")
    n, m = residues[0]
    n %= m
    for r, mod in residues[1:]:
        if math.gcd(m, mod) != 1:
            raise ValueError(f"moduli not coprime: gcd({m}, {mod}) != 1")
        # n + m*k = r (mod mod)  =>  k = (r - n) / m (mod mod)
        k = ((r - n) * pow(m, -1, mod)) % mod
        n += m * k
        m *= mod
    return n % m


def _exponent_precision_needed(a: int, e: int, p: int, K: int) -> int:
    # By the lifting congruences, g(u) mod p^K only depends on u mod
    # p^(K-e) when e >= 2 or p >= 3.  In the p=2, e=1 regime the relevant
    # depth comes from (1+2a)^2 = 1 + a'2^t: u mod 2^(K-t+1) suffices.
    if e >= 2 or p >= 3:
        return max(K - e, 1)
    t = int(vp((1 + 2 * a) ** 2 - 1, 2))
    return max(K - t + 1, 1)


def pow_g(
    a: int,
    e: int,
    p: int,
    u: Union[int, PadicApprox],
    K: int,
) -> int:
    """(1 + a p^e)^u mod p^K for an exponent u in Z_p.

    u may be a plain integer or a PadicApprox carrying enough precision;
    the exponent representative is reduced modulo p^K, a multiple of the
    multiplicative order of 1 + a p^e, before square-and-multiply.
    """
    _require_prime(p)
    if e < 1:
        raise ValueError("e must be >= 1")
    if a % p == 0:
        raise ValueError(f"p={p} must not divide a={a}")
    if K < 1:
        raise ValueError("target precision must be >= 1")
    if isinstance(u, PadicApprox):
        if u.prime != p:
            raise ValueError("exponent lives over a different prime")
        needed = _exponent_precision_needed(a, e, p, K)
        if u.precision < needed:
            raise ValueError(
                f"exponent precision {u.precision} insufficient for "
                f"target p^{K} (need {needed})"
            )
        rep = u.residue
    else:
        rep = u
    mod = p ** K
    base = 1 + a * p ** e
    return pow(base, rep % mod, mod)
