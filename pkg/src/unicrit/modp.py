"""Finite-field side: residue tests, composed irreducibility, and scanning.

The composed-word test never expands the composition: over F_q with q != p
irreducibility of an outer word extends to one more inner factor exactly when
the outer word's value at the new critical point is not a p-th power residue,
so a word of length n costs O(n) modular exponentiations instead of a
polynomial of degree p**n.  The prime q == p is wild: x**p + c is a p-th
power of a linear polynomial there, hence reducible for every word.

rabin_irreducible is the independent general-purpose oracle used to
cross-check the recursion; it works on dense coefficient vectors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .arith import primes_up_to
from .errors import DomainError
from .semigroup import GeneratorSet, validate_word

__all__ = [
    "pth_power_residue",
    "base_irreducible_Fq",
    "word_irreducible_Fq",
    "rabin_irreducible",
    "local_global_scan",
    "ScanReport",
]


def pth_power_residue(a: int, p: int, q: int) -> bool:
    """True iff a is a p-th power in F_q (zero counts as 0**p).

    Computed as a**((q-1)/gcd(p, q-1)) == 1; when gcd(p, q-1) == 1 the p-th
    power map is a bijection and everything passes.
    """
    a %= q
    if a == 0:
        return True
    d = math.gcd(p, q - 1)
    return pow(a, (q - 1) // d, q) == 1


def base_irreducible_Fq(p: int, c: int, q: int) -> bool:
    """Irreducibility of x**p + c over F_q.

    q == p is wild (the binomial is a p-th power of a linear); otherwise the
    prime-degree binomial is irreducible exactly when -c is not a p-th power
    residue.
    """
    if q == p:
        return False
    return not pth_power_residue(-c % q, p, q)


def _eval_word_mod(S: GeneratorSet, w, x: int, q: int) -> int:
    v = x % q
    for idx in reversed(w):
        v = (pow(v, S.p, q) + S.coeffs[idx]) % q
    return v


def word_irreducible_Fq(S: GeneratorSet, w, q: int) -> bool:
    """Irreducibility over F_q of the composition named by w (|w| >= 1).

    Recursion on the innermost factor: the length-(n-1) outer word must be
    irreducible and its value at the new critical point must not be a p-th
    power residue; this is two-directional over finite fields of
    characteristic != p.  For p == 2 every non-base level has even degree,
    as the criterion requires.
    """
    w = validate_word(S, w)
    if not w:
        raise DomainError("word must have length >= 1")
    if q == S.p:
        return False
    if not base_irreducible_Fq(S.p, S.coeffs[w[0]], q):
        return False
    for j in range(2, len(w) + 1):
        value = _eval_word_mod(S, w[: j - 1], S.coeffs[w[j - 1]], q)
        if pth_power_residue(value, S.p, q):
            return False
    return True


# ---------------------------------------------------------------------------
# dense-polynomial irreducibility over F_q (independent oracle)
# ---------------------------------------------------------------------------


class _FqMod:
    """Arithmetic modulo a monic f over F_q with a precomputed reduction map.

    Residues are int64 vectors of length deg(f).  Products are reduced by one
    matrix multiply: row i of ``red`` is x**(deg+i) mod f.
    """

    def __init__(self, f: np.ndarray, q: int):
        self.q = q
        self.n = len(f) - 1
        self.f = f
        rows = []
        # x**n mod f = -tail(f); successive shifts reduce with earlier rows
        cur = (-f[:-1]) % q
        rows.append(cur.copy())
        for _ in range(self.n - 2):
            nxt = np.zeros(self.n, dtype=np.int64)
            nxt[1:] = cur[:-1]
            nxt = (nxt + cur[-1] * rows[0]) % q
            rows.append(nxt)
            cur = nxt
        self.red = np.array(rows, dtype=np.int64) if rows else np.zeros((0, self.n), np.int64)

    def mulmod(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        full = np.convolve(a, b)
        head = full[: self.n]
        tail = full[self.n :]
        if len(tail):
            head = head + tail @ self.red[: len(tail)]
        out = np.zeros(self.n, dtype=np.int64)
        out[: len(head)] = head % self.q
        return out

    def powmod(self, a: np.ndarray, e: int) -> np.ndarray:
        result = np.zeros(self.n, dtype=np.int64)
        result[0] = 1
        base = a % self.q
        while e:
            if e & 1:
                result = self.mulmod(result, base)
            e >>= 1
            if e:
                base = self.mulmod(base, base)
        return result


def _poly_trim(a: np.ndarray) -> np.ndarray:
    nz = np.nonzero(a)[0]
    return a[: nz[-1] + 1] if len(nz) else a[:0]


def _poly_mod(a: np.ndarray, b: np.ndarray, q: int) -> np.ndarray:
    a = _poly_trim(a % q).astype(np.int64)
    b = _poly_trim(b % q).astype(np.int64)
    inv_lead = pow(int(b[-1]), -1, q)
    while len(a) >= len(b):
        coef = (a[-1] * inv_lead) % q
        if coef:
            a[len(a) - len(b) :] = (a[len(a) - len(b) :] - coef * b) % q
        a = _poly_trim(a)
    return a


def _poly_gcd_is_const(a: np.ndarray, b: np.ndarray, q: int) -> bool:
    a = _poly_trim(a % q)
    b = _poly_trim(b % q)
    while len(b):
        a, b = b, _poly_mod(a, b, q)
    return len(a) == 1


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def rabin_irreducible(coeffs, q: int) -> bool:
    """Irreducibility over F_q of a monic dense polynomial (ascending coeffs).

    Standard criterion: x**(q**n) == x (mod f) and, for every prime l | n,
    gcd(x**(q**(n/l)) - x, f) == 1.  The Frobenius chain x -> x**q is built by
    repeated squaring; intermediate checks at proper divisors of n exit early
    on reducible input without changing the verdict.
    """
    f = np.array([c % q for c in coeffs], dtype=np.int64)
    f = _poly_trim(f)
    if len(f) < 2:
        raise DomainError("polynomial must have degree >= 1")
    if f[-1] != 1:
        raise DomainError("polynomial must be monic (after reduction mod q)")
    n = len(f) - 1
    if n == 1:
        return True
    ctx = _FqMod(f, q)
    x = np.zeros(n, dtype=np.int64)
    x[1] = 1
    proper_divisors = {n // l for l in _prime_factors(n)}
    X = x.copy()
    for i in range(1, n + 1):
        X = ctx.powmod(X, q)
        if i < n:
            if np.array_equal(X, x):
                # every irreducible factor has degree dividing i < n
                return False
            if i in proper_divisors or n % i == 0:
                if not _poly_gcd_is_const((X - x) % q, f, q):
                    return False
    return np.array_equal(X, x)


# ---------------------------------------------------------------------------
# local-global scanning
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ScanReport:
    """Reducibility map q -> irreducible for all primes q <= q_max."""

    p: int
    word: tuple
    q_max: int
    entries: tuple
    all_reducible: bool
    family_t: int | None = None

    def to_json_dict(self) -> dict:
        d = {
            "kind": "modscan",
            "p": self.p,
            "word": list(self.word),
            "q_max": self.q_max,
            "entries": [{"q": q, "irreducible": flag} for q, flag in self.entries],
            "all_reducible": self.all_reducible,
        }
        if self.family_t is not None:
            d["t"] = self.family_t
        return d

    def to_csv_rows(self) -> list[list]:
        rows = [["q", "irreducible"]]
        rows += [[q, str(flag).lower()] for q, flag in self.entries]
        return rows


def _scan_one(args) -> tuple[int, bool]:
    S, w, q = args
    return q, word_irreducible_Fq(S, w, q)


def local_global_scan(
    S: GeneratorSet, w, q_max: int, jobs: int | None = None, family_t: int | None = None
) -> ScanReport:
    """word_irreducible_Fq at every prime q <= q_max, ordered by q.

    `jobs` > 1 distributes primes over a process pool; the report order is
    by q ascending regardless of completion order.
    """
    w = validate_word(S, w)
    qs = primes_up_to(q_max)
    if jobs and jobs > 1:
        import multiprocessing

        with multiprocessing.Pool(jobs) as pool:
            results = pool.map(_scan_one, [(S, w, q) for q in qs], chunksize=16)
        entries = tuple(sorted(results))
    else:
        entries = tuple((q, word_irreducible_Fq(S, w, q)) for q in qs)
    return ScanReport(
        p=S.p,
        word=w,
        q_max=q_max,
        entries=entries,
        all_reducible=not any(flag for _, flag in entries),
        family_t=family_t,
    )
