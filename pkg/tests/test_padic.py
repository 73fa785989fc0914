import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from digitwitness.padic import (
    INFINITE_VALUATION,
    PadicApprox,
    crt,
    factorize,
    is_prime,
    pow_g,
    vp,
)

PRIMES = st.sampled_from([2, 3, 5, 7, 11, 13])


def test_vp_examples():
    assert vp(12, 2) == 2
    assert vp(0, 7) is INFINITE_VALUATION
    assert vp(-54, 3) == 3
    with pytest.raises(ValueError):
        vp(10, 4)


@given(st.integers(min_value=1, max_value=10 ** 12),
       st.integers(min_value=1, max_value=10 ** 12), PRIMES)
def test_vp_multiplicative(m, n, p):
    assert vp(m * n, p) == vp(m, p) + vp(n, p)


def test_factorize_examples():
    assert factorize(10).factors == ((2, 1), (5, 1))
    assert factorize(8).factors == ((2, 3),)
    assert factorize(360).factors == ((2, 3), (3, 2), (5, 1))
    with pytest.raises(ValueError):
        factorize(1)


@given(st.integers(min_value=2, max_value=10 ** 6))
def test_factorize_multiplies_back(q):
    fact = factorize(q)
    assert fact.value == q
    primes = [p for p, _ in fact.factors]
    assert primes == sorted(primes)
    assert all(is_prime(p) for p in primes)


def test_crt_examples():
    assert crt([(1, 2), (2, 5)]) == 7
    assert crt([(13, 40)]) == 13
    with pytest.raises(ValueError):
        crt([(0, 4), (1, 6)])


@given(st.data())
def test_crt_random_three_moduli(data):
    moduli = [8, 27, 25]
    residues = [
        (data.draw(st.integers(0, m - 1)), m) for m in moduli
    ]
    n = crt(residues)
    assert 0 <= n < 8 * 27 * 25
    for r, m in residues:
        assert n % m == r


def test_pow_g_trivial_and_derived():
    assert pow_g(1, 1, 3, 0, 4) == 1
    assert pow_g(1, 1, 3, 3, 3) == 10  # 4^3 = 64 = 10 mod 27


def test_pow_g_lemma_congruence_paper():
    # (1+ap^e)^(p^k) = 1 + a p^(k+e)  (mod p^(k+e+1)), e>=2 or p>=3
    for p, a, e in [(3, 1, 1), (3, 2, 2), (5, 4, 1), (2, 3, 2), (7, 5, 1)]:
        for k in range(5):
            got = pow_g(a, e, p, p ** k, k + e + 1)
            assert got == (1 + a * p ** (k + e)) % p ** (k + e + 1)


def test_pow_g_rejects_p_dividing_a():
    with pytest.raises(ValueError):
        pow_g(6, 1, 3, 2, 4)


def test_pow_g_padic_exponent_precision():
    u = PadicApprox(3, 5, 17)
    assert pow_g(1, 1, 3, u, 4) == pow(4, 17, 81)
    with pytest.raises(ValueError):
        pow_g(1, 1, 3, PadicApprox(3, 1, 2), 5)


def test_pow_g_padic_exponent_p2_regime():
    # base 3 = 1 + 1*2: precision K-t+1 = K-2 suffices
    u = PadicApprox(2, 4, 11)
    assert pow_g(1, 1, 2, u, 6) == pow(3, 11, 64)
    with pytest.raises(ValueError):
        pow_g(1, 1, 2, PadicApprox(2, 2, 3), 6)


@given(st.data())
def test_lemma_2_7_exact_powers(data):
    # (1+ap^e)^(h p^k) = 1 + a h p^(k+e)  (mod p^(k+e+1))
    p = data.draw(st.sampled_from([3, 5, 7, 2]))
    e = data.draw(st.integers(2, 3)) if p == 2 else data.draw(st.integers(1, 3))
    a = data.draw(st.integers(1, 50).filter(lambda x: x % p))
    h = data.draw(st.integers(0, p ** 3 - 1))
    k = data.draw(st.integers(0, 6))
    mod = p ** (k + e + 1)
    exact = pow(1 + a * p ** e, h * p ** k, mod)
    assert exact == (1 + a * h * p ** (k + e)) % mod


@given(st.data())
def test_eq_2_1_contraction(data):
    # v_p(u - u') >= N  =>  v_p(g(u) - g(u')) >= N + 1
    p = data.draw(st.sampled_from([2, 3, 5]))
    e = data.draw(st.integers(1, 2))
    a = data.draw(st.integers(1, 30).filter(lambda x: x % p))
    N = data.draw(st.integers(0, 5))
    u = data.draw(st.integers(0, 400))
    delta = data.draw(st.integers(1, 8))
    u2 = u + delta * p ** N
    g = 1 + a * p ** e
    diff = pow(g, u2) - pow(g, u)
    assert vp(diff, p) >= N + 1


def test_padic_approx_validation():
    with pytest.raises(ValueError):
        PadicApprox(4, 2, 1)
    with pytest.raises(ValueError):
        PadicApprox(3, 2, 9)
    x = PadicApprox(3, 4, 80)
    assert x.truncate(2).residue == 80 % 9
    assert math.isinf(INFINITE_VALUATION)
