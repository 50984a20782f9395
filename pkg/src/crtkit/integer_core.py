"""Exact integer primitives: gcd, Bezout coefficients, modular inverse and
power, trial-division factorization and Euler's totient.

Integers are plain Python ints throughout.  On the wire they travel as
decimal strings (see :func:`format_int` / :func:`parse_int`).
"""
from __future__ import annotations

import math
import re
from functools import lru_cache

from .errors import FactorBoundExceeded, InvalidInput, NotCoprime

DEFAULT_FACTOR_BOUND = 1 << 20

# Miller-Rabin with the first 13 primes as bases is exact below this value.
_MR_DETERMINISTIC_LIMIT = 3_317_044_064_679_887_385_961_981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)

_INT_RE = re.compile(r"-?[0-9]+")


def gcd(a: int, b: int) -> int:
    """Non-negative greatest common divisor, with ``gcd(0, 0) == 0``."""
    return math.gcd(a, b)


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``g = gcd(a, b) >= 0`` and ``a*x + b*y == g``."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        return -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def mod_inverse(a: int, m: int) -> int:
    """Inverse of ``a`` modulo ``m`` in ``[0, m)``.

    ``mod_inverse(a, 1)`` is 0, the only element of Z/1.
    """
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    g, x, _ = ext_gcd(a % m, m)
    if g != 1:
        raise NotCoprime(f"{a} is not invertible modulo {m} (gcd {g})")
    return x % m


def mod_pow(b: int, e: int, m: int) -> int:
    """``b**e mod m`` by right-to-left square-and-multiply.

    Every intermediate product is below ``m**2``.
    """
    if e < 0:
        raise ValueError("exponent must be non-negative")
    if m < 1:
        raise ValueError("modulus must be >= 1")
    result = 1 % m
    b %= m
    while e:
        if e & 1:
            result = result * b % m
        b = b * b % m
        e >>= 1
    return result


@lru_cache(maxsize=8)
def _primes_up_to(bound: int) -> tuple[int, ...]:
    # divisor table for trial division, not a totient cache
    if bound < 2:
        return ()
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(bound) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, bound + 1, p)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def _strong_probable_prime(n: int, base: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(base, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _jacobi(a: int, n: int) -> int:
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas_probable_prime(n: int) -> bool:
    # Selfridge parameter choice; n odd, > 2 and not a perfect square
    D = 5
    while True:
        j = _jacobi(D, n)
        if j == -1:
            break
        if j == 0 and abs(D) != n:
            return False
        D = -D - 2 if D > 0 else -D + 2
    P, Q = 1, (1 - D) // 4

    def half(x: int) -> int:
        x %= n
        return (x + n) // 2 if x & 1 else x // 2

    d, s = n + 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    U, V, Qk = 1, P, Q % n
    for bit in bin(d)[3:]:
        U = U * V % n
        V = (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if bit == "1":
            U, V = half(P * U + V), half(D * U + P * V)
            Qk = Qk * Q % n
    if U == 0 or V == 0:
        return True
    for _ in range(s - 1):
        V = (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if V == 0:
            return True
    return False


def _bpsw(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    if math.isqrt(n) ** 2 == n:
        return False
    return _strong_probable_prime(n, 2) and _strong_lucas_probable_prime(n)


def is_prime(n: int) -> bool:
    """Deterministic primality test.

    Exact Miller-Rabin below 3.3e24; Baillie-PSW above (no known
    counterexample).
    """
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    if n < _MR_DETERMINISTIC_LIMIT:
        return all(_strong_probable_prime(n, a) for a in _MR_BASES)
    return _bpsw(n)


def factorize(n: int, bound: int = DEFAULT_FACTOR_BOUND) -> dict[int, int]:
    """Prime factorization of ``n >= 1`` as ``{prime: exponent}``.

    Trial division by primes up to ``bound``; a leftover cofactor must then
    pass :func:`is_prime`, otherwise :class:`FactorBoundExceeded` is raised.
    """
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    factors: dict[int, int] = {}
    for p in _primes_up_to(bound):
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors[p] = e
    if n > 1:
        # no prime factor <= bound left, so n <= bound**2 forces n prime
        if n > bound * bound and not is_prime(n):
            raise FactorBoundExceeded(
                f"cofactor {n} has no prime factor <= {bound} and is not prime"
            )
        factors[n] = factors.get(n, 0) + 1
    return factors


def euler_phi(n: int, bound: int = DEFAULT_FACTOR_BOUND) -> int:
    """Euler's totient, ``n * prod(1 - 1/p)`` over the factorization of n."""
    phi = n
    for p in factorize(n, bound):
        phi = phi // p * (p - 1)
    return phi


def format_int(n: int) -> str:
    return str(n)


def parse_int(text) -> int:
    """Parse the decimal-string interchange form (optional leading '-')."""
    if not isinstance(text, str) or not _INT_RE.fullmatch(text):
        raise InvalidInput(f"expected a decimal integer string, got {text!r}")
    return int(text)
