"""Exact big-integer arithmetic: floor k-th roots and perfect-power detection.

Everything here is pure integer arithmetic.  No floating point is used
anywhere, so results are bit-exact at any operand size.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .errors import DomainError

__all__ = [
    "is_prime",
    "primes_up_to",
    "kth_root_floor",
    "perfect_pth_power",
    "is_perfect_kth_power",
    "prescreen_primes",
    "passes_residue_prescreen",
]

# Witnesses making Miller-Rabin deterministic for n < 3.3 * 10^24 (Sorenson &
# Webster).  Inputs validated here (exponents p, scan primes q) are far below
# that bound.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test for the sizes used in this package."""
    if n < 2:
        return False
    for w in _MR_WITNESSES:
        if n == w:
            return True
        if n % w == 0:
            return False
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for w in _MR_WITNESSES:
        x = pow(w, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_up_to(limit: int) -> list[int]:
    """All primes <= limit, ascending (simple byte sieve)."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i, flag in enumerate(sieve) if flag]


def kth_root_floor(n: int, k: int) -> tuple[int, bool]:
    """Largest integer r with r**k <= n, plus an exactness flag.

    For odd k and n < 0 the floor convention still holds:
    r**k <= n < (r+1)**k.  Even k with negative n raises DomainError.
    """
    if k < 1:
        raise DomainError(f"root index must be >= 1, got {k}")
    if k == 1:
        return n, True
    if n < 0:
        if k % 2 == 0:
            raise DomainError(f"even root index {k} with negative radicand {n}")
        r, exact = kth_root_floor(-n, k)
        return (-r, True) if exact else (-r - 1, False)
    if n == 0:
        return 0, True
    if k == 2:
        r = math.isqrt(n)
        return r, r * r == n
    if n.bit_length() <= k:
        # 1 <= n < 2**k, so the root is 1
        return 1, n == 1
    # Newton iteration started above the root; with floor division the
    # iterate decreases monotonically until it crosses the true floor root.
    x = 1 << ((n.bit_length() + k - 1) // k)
    while True:
        y = ((k - 1) * x + n // pow(x, k - 1)) // k
        if y >= x:
            break
        x = y
    while pow(x, k) > n:
        x -= 1
    while pow(x + 1, k) <= n:
        x += 1
    return x, pow(x, k) == n


@lru_cache(maxsize=None)
def prescreen_primes(p: int, count: int = 10) -> tuple[int, ...]:
    """First `count` primes q with q = 1 (mod p).

    Each such q filters a (1 - 1/p) fraction of non-p-th-powers by a single
    modular exponentiation, far cheaper than an exact root extraction on a
    multi-million-bit orbit value.
    """
    found: list[int] = []
    q = p + 1
    while len(found) < count:
        if is_prime(q):
            found.append(q)
        q += p
    return tuple(found)


def passes_residue_prescreen(n: int, p: int) -> bool:
    """True when n survives every modular p-th-power residue test.

    Sound, not complete: a true p-th power always passes; a non-power
    usually fails quickly.
    """
    for q in prescreen_primes(p):
        m = n % q
        if m != 0 and pow(m, (q - 1) // p, q) != 1:
            return False
    return True


def perfect_pth_power(n: int, p: int) -> int | None:
    """Return r with r**p == n if such an integer exists, else None.

    p must be prime.  For p == 2 negative n immediately yields None; odd p
    follows the sign of n.  Candidates are prescreened against small primes
    q = 1 (mod p) before the exact root extraction.
    """
    if not is_prime(p):
        raise DomainError(f"power index must be prime, got {p}")
    if n == 0:
        return 0
    if n < 0:
        if p == 2:
            return None
        r = perfect_pth_power(-n, p)
        return None if r is None else -r
    if n == 1:
        return 1
    if not passes_residue_prescreen(n, p):
        return None
    root, exact = kth_root_floor(n, p)
    return root if exact else None


def is_perfect_kth_power(n: int, k: int) -> bool:
    """True when n == r**k for some integer r; k >= 1 need not be prime."""
    if k < 1:
        raise DomainError(f"power index must be >= 1, got {k}")
    if k == 1 or n in (0, 1):
        return True
    if n < 0:
        if k % 2 == 0:
            return False
        return is_perfect_kth_power(-n, k)
    return kth_root_floor(n, k)[1]
