"""Unicritical polynomials, generator sets, and composition words.

A generator set fixes one prime exponent p and coefficients c_0..c_{r-1};
the word (i_0, ..., i_{n-1}) names the composition

    phi_{i_0} o phi_{i_1} o ... o phi_{i_{n-1}}    (index 0 is OUTERMOST)

where phi_i(x) = x**p + c_i.  Dense integer polynomials are plain lists of
coefficients in ascending degree order, leading coefficient nonzero.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .arith import is_prime
from .errors import (
    DegreeCapExceeded,
    DomainError,
    DuplicateGenerator,
    EmptySet,
    InvalidExponent,
    OrbitSizeExceeded,
)

__all__ = [
    "DEFAULT_BIT_GUARD",
    "DEFAULT_DEGREE_CAP",
    "UnicriticalPoly",
    "GeneratorSet",
    "Word",
    "make_generator_set",
    "validate_word",
    "eval_word",
    "expand_word",
    "enumerate_words",
    "count_words",
    "prefix_extension_count",
    "prefix_extension_fraction",
    "poly_eval",
    "poly_mul",
    "poly_compose",
    "poly_to_text",
    "parse_poly",
    "word_to_text",
    "parse_word",
]

# Orbit values are never silently truncated; growing past this many bits
# aborts with a diagnostic instead of thrashing memory.
DEFAULT_BIT_GUARD = 1 << 20
DEFAULT_DEGREE_CAP = 4096

Word = tuple  # index sequence over [0, r); empty tuple is the identity


@dataclass(frozen=True)
class UnicriticalPoly:
    """x**p + c with p prime; c is an int, or a Fraction in lowest terms."""

    p: int
    c: int | Fraction

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise InvalidExponent(f"exponent must be prime, got {self.p}")
        if isinstance(self.c, Fraction) and self.c.denominator == 1:
            object.__setattr__(self, "c", int(self.c))

    def __call__(self, x):
        return x ** self.p + self.c

    def coeffs(self) -> list:
        return [self.c] + [0] * (self.p - 1) + [1]

    def __str__(self) -> str:
        return poly_to_text(self.coeffs())


@dataclass(frozen=True)
class GeneratorSet:
    """Ordered alphabet of distinct integer coefficients sharing one prime p."""

    p: int
    coeffs: tuple

    @property
    def r(self) -> int:
        return len(self.coeffs)

    def poly(self, i: int) -> UnicriticalPoly:
        return UnicriticalPoly(self.p, self.coeffs[i])

    def polys(self) -> list[UnicriticalPoly]:
        return [UnicriticalPoly(self.p, c) for c in self.coeffs]


def make_generator_set(p: int, coeffs: Iterable[int]) -> GeneratorSet:
    """Validated GeneratorSet; raises on non-prime p, duplicates, empty list."""
    coeffs = tuple(coeffs)
    if not is_prime(p):
        raise InvalidExponent(f"exponent must be prime, got {p}")
    if not coeffs:
        raise EmptySet("generator set needs at least one coefficient")
    for c in coeffs:
        if not isinstance(c, int):
            raise DomainError(f"generator coefficients must be integers, got {c!r}")
    if len(set(coeffs)) != len(coeffs):
        raise DuplicateGenerator(f"coefficients must be pairwise distinct: {coeffs}")
    return GeneratorSet(p, coeffs)


def validate_word(S: GeneratorSet, w) -> tuple:
    w = tuple(w)
    for i in w:
        if not isinstance(i, int) or not 0 <= i < S.r:
            raise DomainError(f"word index {i!r} out of range [0, {S.r})")
    return w


def eval_word(S: GeneratorSet, w, x: int, bit_guard: int | None = DEFAULT_BIT_GUARD) -> int:
    """Value of the composed polynomial at x, innermost-first, no expansion.

    The empty word is the identity.  Aborts with OrbitSizeExceeded when an
    intermediate value grows past `bit_guard` bits (pass None to disable).
    """
    w = validate_word(S, w)
    p = S.p
    v = x
    for level, idx in enumerate(reversed(w), start=1):
        v = v ** p + S.coeffs[idx]
        if bit_guard is not None and v.bit_length() > bit_guard:
            raise OrbitSizeExceeded(
                f"orbit value reached {v.bit_length()} bits at level {level} of "
                f"word {list(w)} (guard: {bit_guard} bits)"
            )
    return v


def _mul_by_generator(h: list, p: int, c) -> list:
    # h(x) * (x**p + c), used as the Horner step of substitution
    out = [a * c for a in h] + [0] * p
    for i, a in enumerate(h):
        out[i + p] += a
    return out


def _substitute(h: list, p: int, c) -> list:
    # h(x**p + c) by Horner's rule; the inner polynomial has two terms, so
    # each step is a shift plus a scalar multiple (binomial convolution).
    res = [h[-1]]
    for k in range(len(h) - 2, -1, -1):
        res = _mul_by_generator(res, p, c)
        res[0] += h[k]
    return res


def expand_word(S: GeneratorSet, w, degree_cap: int = DEFAULT_DEGREE_CAP) -> list:
    """Exact coefficient vector (ascending) of the composition named by w.

    Monic of degree p**len(w); raises DegreeCapExceeded when that degree
    would exceed `degree_cap`.
    """
    w = validate_word(S, w)
    if S.p ** len(w) > degree_cap:
        raise DegreeCapExceeded(
            f"degree {S.p}**{len(w)} exceeds cap {degree_cap}"
        )
    if not w:
        return [0, 1]
    coeffs = S.poly(w[0]).coeffs()
    for idx in w[1:]:
        coeffs = _substitute(coeffs, S.p, S.coeffs[idx])
    return coeffs


def enumerate_words(S: GeneratorSet, max_len: int) -> Iterator[tuple]:
    """All nonempty words of length <= max_len, length-first then lexicographic."""
    if max_len < 0:
        raise DomainError(f"max_len must be >= 0, got {max_len}")
    for length in range(1, max_len + 1):
        yield from itertools.product(range(S.r), repeat=length)


def count_words(r: int, max_len: int) -> int:
    """Number of nonempty words of length <= max_len over r generators."""
    return sum(r ** L for L in range(1, max_len + 1))


def prefix_extension_count(r: int, prefix_len: int, max_len: int) -> int:
    """How many nonempty words of length <= max_len start with a fixed prefix."""
    lo = max(prefix_len, 1)
    return sum(r ** (L - prefix_len) for L in range(lo, max_len + 1))


def prefix_extension_fraction(r: int, prefix_len: int, max_len: int) -> Fraction:
    """Exact fraction of nonempty words (length <= max_len) extending a prefix.

    Among words of one exact length L >= prefix_len the fraction is exactly
    r**(-prefix_len); this cumulative form mixes in the shorter lengths.
    """
    total = count_words(r, max_len)
    if total == 0:
        raise DomainError("no words of positive length in range")
    return Fraction(prefix_extension_count(r, prefix_len, max_len), total)


# ---------------------------------------------------------------------------
# dense integer polynomial helpers (coefficients ascending)
# ---------------------------------------------------------------------------

def poly_eval(coeffs: list, x):
    v = 0
    for a in reversed(coeffs):
        v = v * x + a
    return v


def poly_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def poly_compose(outer: list, inner: list) -> list:
    """outer(inner(x)) by Horner's rule."""
    res = [outer[-1]]
    for k in range(len(outer) - 2, -1, -1):
        res = poly_mul(res, inner)
        if not res:
            res = [0]
        res[0] += outer[k]
    while len(res) > 1 and res[-1] == 0:
        res.pop()
    return res


# ---------------------------------------------------------------------------
# text forms: "x^2 - 12" for polynomials, "[0,0,1,0]" for words
# ---------------------------------------------------------------------------

def poly_to_text(coeffs: list) -> str:
    """Render an ascending coefficient vector; grammar: signed decimal
    integers, caret powers, single variable x."""
    deg = len(coeffs) - 1
    while deg > 0 and coeffs[deg] == 0:
        deg -= 1
    if deg < 0 or all(c == 0 for c in coeffs):
        return "0"
    parts: list[str] = []
    for k in range(deg, -1, -1):
        a = coeffs[k]
        if a == 0:
            continue
        if k == 0:
            body = str(abs(a))
        else:
            var = "x" if k == 1 else f"x^{k}"
            body = var if abs(a) == 1 else f"{abs(a)}{var}"
        if not parts:
            parts.append(body if a > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if a > 0 else f"- {body}")
    return " ".join(parts)


_TERM_RE = re.compile(r"^([+-])(\d*)(x(?:\^(\d+))?)?$")


def parse_poly(text: str) -> list:
    """Inverse of poly_to_text; raises DomainError on anything off-grammar."""
    compact = text.replace(" ", "")
    if not compact:
        raise DomainError("empty polynomial text")
    if compact == "0":
        return [0]
    if compact[0] not in "+-":
        compact = "+" + compact
    terms = re.findall(r"[+-][^+-]+", compact)
    if "".join(terms) != compact:
        raise DomainError(f"cannot parse polynomial text: {text!r}")
    coeffs: dict[int, int] = {}
    for term in terms:
        m = _TERM_RE.match(term)
        if not m:
            raise DomainError(f"cannot parse term {term!r} in {text!r}")
        sign, digits, xpart, exp = m.groups()
        if not digits and not xpart:
            raise DomainError(f"cannot parse term {term!r} in {text!r}")
        coeff = int(digits) if digits else 1
        if sign == "-":
            coeff = -coeff
        k = 0 if not xpart else (int(exp) if exp else 1)
        coeffs[k] = coeffs.get(k, 0) + coeff
    deg = max(coeffs)
    out = [coeffs.get(k, 0) for k in range(deg + 1)]
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def word_to_text(w) -> str:
    return "[" + ",".join(str(i) for i in w) + "]"


_WORD_PREFIX_RE = re.compile(r"^[A-Za-z_]\w*\s*=\s*")


def parse_word(text: str) -> tuple:
    """Parse "[0,0,1,0]" (an optional leading "name =" is accepted)."""
    body = _WORD_PREFIX_RE.sub("", text.strip())
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    body = body.strip()
    if not body:
        return ()
    try:
        indices = tuple(int(tok) for tok in body.split(","))
    except ValueError as exc:
        raise DomainError(f"cannot parse word text: {text!r}") from exc
    if any(i < 0 for i in indices):
        raise DomainError(f"word indices must be >= 0: {text!r}")
    return indices
