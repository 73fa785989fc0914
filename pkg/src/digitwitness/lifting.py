"""Root lifting modulo prime powers.

One digit-by-digit engine serves both classical Hensel lifting of
polynomial congruences and the Newton lift for abstract functions that
are differentiable modulo p^s (the exponential case g(u) = (1+ap^e)^u).

The engine maintains an iterate u with residual valuation n and a known
derivative valuation j.  Each step searches the p candidate digits
i = 0, 1, ..., p-1 in increasing order and takes the first one for which
F(u + p^(n-j) * i) gains at least one more power of p.  Taking the first
success makes every lift deterministic and every witness reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional, Union

from .padic import INFINITE_VALUATION, PadicApprox, vp

__all__ = [
    "DiffData",
    "LiftStep",
    "LiftTrace",
    "LiftError",
    "diff_data_for",
    "hensel_lift_poly",
    "newton_lift",
]

# F(u, K) must return a value congruent to F(u) modulo p^K.
Evaluator = Callable[[int, int], int]


class LiftError(RuntimeError):
    """No digit advanced the residual: the supplied evaluator broke the
    differentiability contract (cannot occur for valid inputs)."""


@dataclass(frozen=True)
class DiffData:
    """Parameters of g(u) = (1 + a p^e)^u = m^((p-1)u) and of its lift.

    For e >= 2 or p >= 3 the derivative has valuation j = e; in the
    p = 2, e = 1 regime squaring gives (1+2a)^2 = 1 + a'2^t with a' odd,
    t >= 3, and j = t - 1.  Always s = j + 1, n = j + 1, c = n - 1,
    order = 0.
    """

    prime: int
    a: int
    e: int
    j: int
    s: int
    n: int
    c: int
    order: int = 0
    a_prime: Optional[int] = None
    t: Optional[int] = None

    @property
    def derivative_valuation(self) -> int:
        return self.j

    @property
    def g_base(self) -> int:
        return 1 + self.a * self.prime ** self.e


@dataclass(frozen=True)
class LiftStep:
    precision: int          # the step certified F(u) = 0 mod p^precision
    digit: int              # chosen i in [0, p)
    residual_valuation: Union[int, float]


@dataclass
class LiftTrace:
    steps: list[LiftStep] = field(default_factory=list)

    def log_lines(self) -> list[str]:
        return [
            f"precision={s.precision} digit={s.digit} "
            f"valuation={s.residual_valuation}"
            for s in self.steps
        ]

    def to_log(self) -> str:
        return "\n".join(self.log_lines()) + ("\n" if self.steps else "")


def diff_data_for(m: int, p: int) -> DiffData:
    """Differentiability parameters for g(u) = m^((p-1)u)."""
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    if m % p == 0:
        raise ValueError(f"gcd(m, p) > 1 for m={m}, p={p}")
    m1 = m ** (p - 1)
    e = int(vp(m1 - 1, p))
    a = (m1 - 1) // p ** e
    a_prime = None
    t = None
    if p == 2 and e == 1:
        sq = (1 + 2 * a) ** 2 - 1
        t = int(vp(sq, 2))
        a_prime = sq >> t
        j = t - 1
    else:
        j = e
    n = j + 1
    return DiffData(
        prime=p,
        a=a,
        e=e,
        j=j,
        s=j + 1,
        n=n,
        c=n - 1,
        a_prime=a_prime,
        t=t,
    )


def _capped_valuation(r: int, p: int, cap: int) -> Union[int, float]:
    v = vp(r, p)
    return v if v < cap else cap


def _lift_digits(
    F: Evaluator,
    p: int,
    u0: int,
    n0: Union[int, float],
    j: int,
    stop: int,
) -> tuple[int, LiftTrace]:
    """Raise the residual valuation of F at u0 from n0 to at least stop.

    Requires n0 >= j + 1 so step sizes p^(n-j) stay within the
    differentiability contract.  Valuations are only ever measured up to
    stop + 1 digits; a vanishing residual at that depth ends the run.
    """
    probe = stop + 1
    pk_probe = p ** probe
    u = u0
    n = n0
    trace = LiftTrace()
    while n < stop:
        step_size = p ** (int(n) - j)
        chosen = None
        for i in range(p):
            cand = u + i * step_size
            r = F(cand, probe) % pk_probe
            val = _capped_valuation(r, p, probe) if r else probe
            if val >= n + 1:
                chosen = (cand, i, val)
                break
        if chosen is None:
            raise LiftError(
                f"no digit raises the residual valuation past {n} "
                f"(p={p}, j={j}); evaluator violates the lifting contract"
            )
        u, i, val = chosen
        trace.steps.append(LiftStep(int(n) + 1, i, val))
        n = min(val, stop)
    return u, trace


def hensel_lift_poly(
    g,
    p: int,
    a0: int,
    K: int,
) -> tuple[int, LiftTrace]:
    """Lift a0 to a root of g modulo p^K (classical Hensel lifting).

    Requires v_p(g(a0)) > 2 v_p(g'(a0)).  Returns N in [0, p^K) with
    g(N) = 0 (mod p^K) and N = a0 (mod p^(v+1)), v = v_p(g'(a0)).
    """
    if K < 1:
        raise ValueError("target precision must be >= 1")
    gd = g.derivative()
    v = vp(gd(a0), p)
    n0 = vp(g(a0), p)
    if n0 is INFINITE_VALUATION or n0 >= K:
        # already a root to the required depth
        return a0 % p ** K, LiftTrace()
    if v is INFINITE_VALUATION or n0 <= 2 * v:
        raise ValueError(
            f"Hensel precondition violated: v_p(g(a0))={n0} must exceed "
            f"2*v_p(g'(a0))={2 * v if v is not INFINITE_VALUATION else v}"
        )

    def F(x: int, prec: int) -> int:
        return g(x) % p ** prec

    u, trace = _lift_digits(F, p, a0, n0, int(v), K)
    return u % p ** K, trace


def newton_lift(
    F: Evaluator,
    dd: DiffData,
    u0: Union[int, PadicApprox],
    target: int,
) -> tuple[PadicApprox, LiftTrace]:
    """Digit-by-digit Newton lift of F from u0 to precision `target`.

    F must be differentiable modulo p^dd.s with order dd.order at every
    point congruent to u0 modulo p^(n-j), with derivative valuation
    exactly dd.j, and v_p(F(u0)) >= dd.n must hold.  The result xi
    satisfies v_p(F(xi)) >= target + dd.j and xi = u0 (mod p^(n-j)).
    """
    p = dd.prime
    if target < 1:
        raise ValueError("target precision must be >= 1")
    if dd.j + dd.order >= dd.n or dd.j >= dd.s:
        raise ValueError("DiffData violates j+order < n and j < s")
    rep = u0.residue if isinstance(u0, PadicApprox) else u0
    if F(rep, dd.n) % p ** dd.n != 0:
        raise ValueError(
            f"v_p(F(u0)) >= n={dd.n} required at the starting point"
        )
    stop = target + dd.j
    u, trace = _lift_digits(F, p, rep, dd.n, dd.j, stop)
    return PadicApprox(p, target, u % p ** target), trace
