"""Base irreducibility over Q and fixed-point / two-cycle structure detection.

x**p + c is "fixed-point special" when c == s**p - s**(p*p) for a rational s:
the point s**p is then a rational fixed point that is a p-th power.  For
p == 2, x**2 + c is "two-cycle special" when c == -1 - s**2 - s**4: the points
s**2 and -(s**2 + 1) form a rational two-cycle containing the square s**2.
Both structures are the exact obstructions to power-free critical orbits, so
downstream prefix selection keys on this report.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import is_prime, kth_root_floor, perfect_pth_power
from .errors import DomainError

__all__ = [
    "TypeReport",
    "base_irreducible_Q",
    "classify_type",
    "type1_witnesses_int",
    "type2_witnesses_int",
]


@dataclass(frozen=True)
class TypeReport:
    """Witness lists for both special forms, plus base irreducibility.

    Witnesses are sorted with nonnegative representatives first.  A report
    may in principle carry both lists; for integer c a parity argument rules
    that out, and the audit searches for coincidences rather than assuming.
    """

    p: int
    c: int | Fraction
    irreducible_over_Q: bool
    type1_witnesses: tuple
    type2_witnesses: tuple

    @property
    def is_type1(self) -> bool:
        return bool(self.type1_witnesses)

    @property
    def is_type2(self) -> bool:
        return bool(self.type2_witnesses)

    @property
    def is_special(self) -> bool:
        return self.is_type1 or self.is_type2


def _witness_sort_key(s):
    return (abs(s), s < 0)


def _rational_is_pth_power(c: Fraction, p: int) -> bool:
    num, den = c.numerator, c.denominator
    return perfect_pth_power(num, p) is not None and perfect_pth_power(den, p) is not None


def base_irreducible_Q(p: int, c) -> bool:
    """True iff x**p + c is irreducible over Q.

    For prime degree the binomial is reducible exactly when -c is a p-th
    power (rational when c is rational).
    """
    if not is_prime(p):
        raise DomainError(f"exponent must be prime, got {p}")
    if isinstance(c, Fraction):
        if c.denominator == 1:
            c = int(c)
        else:
            return not _rational_is_pth_power(-c, p)
    return perfect_pth_power(-c, p) is None


def type1_witnesses_int(p: int, c: int) -> tuple:
    """All integers s with c == s**p - s**(p*p).

    |s**(p*p) - s**p| >= (|s| - 1)**(p*p) for |s| >= 2, so any large witness
    sits within one unit of the p^2-th root of |c|; small candidates are
    tried directly.
    """
    if c == 0:
        sols = [0, 1, -1]
    else:
        k = p * p
        r = kth_root_floor(abs(c), k)[0]
        cands = {0, 1, -1}
        for m in range(max(2, r - 2), r + 3):
            cands.add(m)
            cands.add(-m)
        sols = [s for s in cands if s ** p - s ** k == c]
    return tuple(sorted(sols, key=_witness_sort_key))


def type2_witnesses_int(c: int) -> tuple:
    """All integers s with c == -1 - s**2 - s**4 (p == 2 only).

    Solved exactly: s**2 is a root of z**2 + z + (1 + c).
    """
    if c > -1:
        return ()
    disc = -3 - 4 * c
    if disc < 0:
        return ()
    d, exact = kth_root_floor(disc, 2)
    if not exact or (d - 1) % 2:
        return ()
    s2 = (d - 1) // 2
    s, exact = kth_root_floor(s2, 2)
    if not exact:
        return ()
    sols = [0] if s == 0 else [s, -s]
    return tuple(sorted(sols, key=_witness_sort_key))


def _type1_witnesses_rational(p: int, c: Fraction) -> tuple:
    # s = a/b in lowest terms forces denominator(c) == b**(p*p) exactly
    k = p * p
    u, v = c.numerator, c.denominator
    b, exact = kth_root_floor(v, k)
    if not exact:
        return ()
    bound = max(2 * b, kth_root_floor(2 * abs(u), k)[0] + 2)
    sols = []
    for a in range(-bound, bound + 1):
        s = Fraction(a, b)
        if s ** p - s ** k == c:
            sols.append(s)
    return tuple(sorted(set(sols), key=_witness_sort_key))


def _type2_witnesses_rational(c: Fraction) -> tuple:
    u, v = c.numerator, c.denominator
    b, exact = kth_root_floor(v, 4)
    if not exact or u >= 0:
        return ()
    n = -u  # b**4 + (a*b)**2 + a**4 must equal n
    disc = 4 * n - 3 * b ** 4
    if disc < 0:
        return ()
    d, exact = kth_root_floor(disc, 2)
    if not exact:
        return ()
    if d < b * b or (d - b * b) % 2:
        return ()
    a2 = (d - b * b) // 2
    a, exact = kth_root_floor(a2, 2)
    if not exact:
        return ()
    cands = [Fraction(0, 1)] if a == 0 else [Fraction(a, b), Fraction(-a, b)]
    sols = [s for s in cands if -1 - s ** 2 - s ** 4 == c]
    return tuple(sorted(sols, key=_witness_sort_key))


def classify_type(p: int, c) -> TypeReport:
    """Find every rational s putting x**p + c in a special form.

    Integer c yields integer witnesses (the defining polynomials are monic);
    rational c is served for completeness of the classification queries and
    is never used on certification paths.
    """
    if not is_prime(p):
        raise DomainError(f"exponent must be prime, got {p}")
    if isinstance(c, Fraction) and c.denominator == 1:
        c = int(c)
    if isinstance(c, int):
        t1 = type1_witnesses_int(p, c)
        t2 = type2_witnesses_int(c) if p == 2 else ()
    elif isinstance(c, Fraction):
        t1 = _type1_witnesses_rational(p, c)
        t2 = _type2_witnesses_rational(c) if p == 2 else ()
    else:
        raise DomainError(f"coefficient must be int or Fraction, got {c!r}")
    for s in t1:
        assert s ** p - s ** (p * p) == c
    for s in t2:
        assert -1 - s ** 2 - s ** 4 == c
    return TypeReport(
        p=p,
        c=c,
        irreducible_over_Q=base_irreducible_Q(p, c),
        type1_witnesses=t1,
        type2_witnesses=t2,
    )
