"""
q- and p,q-analogues of integers, factorials, binomials and Stirling numbers.

>>> str(q_fact(3))
'1 + 2*q + 2*q^2 + q^3'
>>> str(pq_int(3))
'q^2 + p*q + p^2'
>>> str(stirling_q(3, 2))
'2 + q'
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .poly import ONE, ZERO, LaurentPolynomial

__all__ = [
    "q_int", "q_fact", "q_binom", "pq_int", "pq_fact",
    "stirling_q", "stirling_pq", "stirling_tilde_pq", "stirling_tilde_by_substitution",
    "eulerian_q",
]


def _check_n(n: int) -> None:
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")


@lru_cache(maxsize=None)
def q_int(n: int) -> LaurentPolynomial:
    """[n]_q = 1 + q + ... + q^(n-1)."""
    _check_n(n)
    return LaurentPolynomial({(i, 0, 0, 0): 1 for i in range(n)})


@lru_cache(maxsize=None)
def q_fact(n: int) -> LaurentPolynomial:
    _check_n(n)
    return ONE if n == 0 else q_fact(n - 1) * q_int(n)


@lru_cache(maxsize=None)
def q_binom(n: int, k: int) -> LaurentPolynomial:
    """Gaussian binomial via [n, k] = [n-1, k-1] + q^k [n-1, k]."""
    _check_n(n)
    if not 0 <= k <= n:
        raise ValueError(f"k={k} outside 0..{n}")
    if k == 0 or k == n:
        return ONE
    return q_binom(n - 1, k - 1) + q_binom(n - 1, k).shift(q=k)


@lru_cache(maxsize=None)
def pq_int(n: int) -> LaurentPolynomial:
    """[n]_{p,q} = p^(n-1) + p^(n-2) q + ... + q^(n-1)."""
    _check_n(n)
    return LaurentPolynomial({(i, n - 1 - i, 0, 0): 1 for i in range(n)})


@lru_cache(maxsize=None)
def pq_fact(n: int) -> LaurentPolynomial:
    _check_n(n)
    return ONE if n == 0 else pq_fact(n - 1) * pq_int(n)


@lru_cache(maxsize=None)
def stirling_q(n: int, k: int) -> LaurentPolynomial:
    """S_{n,k}(q) from S_{n+1,k} = S_{n,k-1} + [k]_q S_{n,k}, S_{0,0} = 1."""
    if n < 0 or k < 0 or k > n:
        return ZERO
    if n == 0:
        return ONE
    return stirling_q(n - 1, k - 1) + q_int(k) * stirling_q(n - 1, k)


@lru_cache(maxsize=None)
def stirling_pq(n: int, k: int) -> LaurentPolynomial:
    """S_{n,k}(p,q): the same recursion with [k]_{p,q}."""
    if n < 0 or k < 0 or k > n:
        return ZERO
    if n == 0:
        return ONE
    return stirling_pq(n - 1, k - 1) + pq_int(k) * stirling_pq(n - 1, k)


@lru_cache(maxsize=None)
def stirling_tilde_pq(n: int, k: int) -> LaurentPolynomial:
    """Tilde S_{n,k}(p,q) from its own recursion.

    Tilde S_{n+1,k} = p^(n+1-k) (Tilde S_{n,k-1} + [k]_{p,q} Tilde S_{n,k}).
    Equal to p^(C(n,2) - C(k,2)) S_{n,k}(q/p).
    """
    if n < 0 or k < 0 or k > n:
        return ZERO
    if n == 0:
        return ONE
    inner = stirling_tilde_pq(n - 1, k - 1) + pq_int(k) * stirling_tilde_pq(n - 1, k)
    return inner.shift(p=n - k)


def stirling_tilde_by_substitution(n: int, k: int) -> LaurentPolynomial:
    """p^(C(n,2) - C(k,2)) S_{n,k}(q/p), computed directly."""
    return stirling_q(n, k).substitute_q_over_p().shift(p=comb(n, 2) - comb(k, 2))


@lru_cache(maxsize=None)
def _euler_mahonian(n: int) -> LaurentPolynomial:
    from ..perm import des, enumerate_sn, maj

    counts: dict[tuple[int, int], int] = {}
    for p in enumerate_sn(n):
        key = (maj(p), des(p))
        counts[key] = counts.get(key, 0) + 1
    return LaurentPolynomial({(m, 0, 0, d): c for (m, d), c in counts.items()})


def eulerian_q(n: int, k: int) -> LaurentPolynomial:
    """A_{n,k}(q): coefficient of t^k in the joint (maj, des) distribution on S_n."""
    _check_n(n)
    if not 0 <= k <= max(n - 1, 0):
        raise ValueError(f"k={k} outside 0..{max(n - 1, 0)}")
    return _euler_mahonian(n).coefficient("t", k)
