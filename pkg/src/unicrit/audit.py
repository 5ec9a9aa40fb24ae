"""Brute-force re-verification of the classification and Diophantine claims.

Each audit exhaustively searches a finite window and reports violations of
the claimed conclusion; an empty violation list is a PASS.  Search bounds
come from the same triangle-inequality facts the claims rest on, padded by
a safety margin of two, so a PASS genuinely covers the whole window.  The
bounded curve searches are consistency checks: they must rediscover every
embedded known point and find nothing else up to the height searched, but
they cannot prove completeness beyond that height, and the reports say so.

Big windows are swept with numpy prescreens (wraparound arithmetic modulo
2**64 plus a smooth odd modulus) and every surviving candidate is then
re-checked with exact integer arithmetic before it is reported.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .arith import kth_root_floor, perfect_pth_power
from .classify import classify_type
from .errors import DomainError, UnknownCurve
from .semigroup import make_generator_set, expand_word, poly_compose, poly_eval, poly_mul

__all__ = [
    "CHUNK",
    "AuditReport",
    "CurveSpec",
    "CURVES",
    "curve_ids",
    "audit_mod24_sieve",
    "audit_square_classification",
    "audit_refinement_lemmas",
    "audit_pth_classification",
    "audit_diophantine",
    "curve_point_search",
    "audit_quartic_octic",
    "kronecker_monic_factor",
]

CHUNK = 10_000  # candidates per progress/resume unit


@dataclass
class AuditReport:
    """Outcome of one exhaustive check; violations empty means PASS.

    Every violation tuple is re-checked against the raw defining equation
    before being appended, so reports are self-verifying.
    """

    claim: str
    params: dict
    violations: list = field(default_factory=list)
    details: dict = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict:
        return {
            "kind": "audit",
            "claim": self.claim,
            "params": self.params,
            "violations": [list(map(str, v)) for v in self.violations],
            "pass": self.passed,
            "details": self.details,
            "seconds": round(self.seconds, 3),
        }


def _is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


def _tick(progress, done: int, total: int) -> None:
    if progress is not None:
        progress(done, total)


# ---------------------------------------------------------------------------
# quadratic square classification
# ---------------------------------------------------------------------------

_SIEVE_COEFFS = (-2, -3, -5, -6, -7, -8)
_SQUARES_MOD_24 = frozenset((i * i) % 24 for i in range(24))


def _mod24_admissible() -> list[int]:
    admissible = []
    for c in _SIEVE_COEFFS:
        for a in range(24):
            v = a
            for _ in range(4):
                v = (v * v + c) % 24
            if v in _SQUARES_MOD_24:
                admissible.append(c)
                break
    return admissible


def audit_mod24_sieve() -> AuditReport:
    """Among the small-coefficient residue cases, only c = -3 admits a
    solution of phi**4(a) == y**2 modulo 24."""
    t0 = time.perf_counter()
    admissible = _mod24_admissible()
    report = AuditReport(
        claim="mod24-sieve",
        params={"coefficients": list(_SIEVE_COEFFS)},
        details={"admissible": admissible},
    )
    if admissible != [-3]:
        report.violations.append(("admissible-set", tuple(admissible)))
    report.seconds = time.perf_counter() - t0
    return report


def _fourth_iterate_square_hits(c: int) -> list[int]:
    """Nonnegative a <= 2|c| with phi**4(a) a perfect square, c <= -2.

    Pruning: a square image of phi bounds its preimage by |c| (the factor
    pair of -c), and any iterate past |c| in absolute value grows forever,
    so the orbit is abandoned as soon as it leaves [-|c|, |c|].
    """
    bound = -c
    hits = []
    for a in range(0, 2 * bound + 1):
        v = a * a + c
        if not -bound <= v <= bound:
            continue
        v = v * v + c
        if not -bound <= v <= bound:
            continue
        v = v * v + c
        if not -bound <= v <= bound:
            continue
        v = v * v + c
        if _is_square(v):
            hits.append(a)
    return hits


def audit_square_classification(c_min: int, c_max: int, progress=None) -> AuditReport:
    """Every a with phi**4(a) square matches a special-form witness.

    Scans irreducible x**2 + c for c in [c_min, c_max] (c_max < 0) and all
    |a| <= 2|c|; each hit must equal +-s**2 for a fixed-point or two-cycle
    witness s of c.  The mod-24 residue sieve is reproduced alongside.
    """
    if c_max >= 0:
        raise DomainError(f"c_max must be negative, got {c_max}")
    if c_min > c_max:
        raise DomainError("empty range")
    t0 = time.perf_counter()
    report = AuditReport(
        claim="square-classification",
        params={"c_min": c_min, "c_max": c_max},
    )
    hit_map = {}
    total = c_max - c_min + 1
    for done, c in enumerate(range(c_min, c_max + 1)):
        if _is_square(-c):
            continue  # reducible
        hits = _fourth_iterate_square_hits(c)
        rep = classify_type(2, c)
        allowed = {s * s for s in rep.type1_witnesses} | {s * s for s in rep.type2_witnesses}
        if set(hits) != allowed:
            for a in sorted(set(hits) ^ allowed):
                kind = "unexplained-hit" if a in hits else "missing-expected-hit"
                report.violations.append((kind, c, a))
        if hits:
            hit_map[c] = sorted({a for a in hits} | {-a for a in hits})
        if done % CHUNK == 0:
            _tick(progress, done, total)
    report.details["hits"] = {str(c): v for c, v in sorted(hit_map.items())}
    report.details["mod24_admissible"] = _mod24_admissible()
    if report.details["mod24_admissible"] != [-3]:
        report.violations.append(("mod24-admissible-set", tuple(report.details["mod24_admissible"])))
    report.seconds = time.perf_counter() - t0
    return report


# ---------------------------------------------------------------------------
# third-iterate refinements
# ---------------------------------------------------------------------------


def _third_iterate_square_hits(c: int, a_bound: int) -> list[int]:
    """Nonnegative a <= a_bound with phi**3(a) a perfect square (c <= -2).

    numpy prescreen: a hit forces |phi**2(a)| <= |c| (factor pair of -c),
    hence phi(a)**2 <= 2|c|; only those a survive to the exact check.
    int64 is safe while a_bound**2 + |c| < 2**63.
    """
    assert a_bound * a_bound + abs(c) < 2 ** 63
    thr = math.isqrt(2 * abs(c)) + 1
    hits = []
    for start in range(0, a_bound + 1, 10 ** 6):
        stop = min(start + 10 ** 6 - 1, a_bound)
        arr = np.arange(start, stop + 1, dtype=np.int64)
        v1 = arr * arr + c
        for a in arr[np.abs(v1) <= thr]:
            a = int(a)
            v = a * a + c
            v = v * v + c
            if not -abs(c) <= v <= abs(c):
                continue
            v = v * v + c
            if _is_square(v):
                hits.append(a)
    return hits


def audit_refinement_lemmas(s_max: int, progress=None) -> AuditReport:
    """Third-iterate squares pin a to the structural points exactly.

    Fixed-point form (c = s**2 - s**4, s >= 2): hits are exactly {+-s**2}.
    Two-cycle form (c = -1 - s**2 - s**4, s >= 1): exactly {+-(s**2 + 1)}.
    The scan window |a| <= s**4 + s**2 + 2 covers every possible hit.
    """
    if s_max < 2:
        raise DomainError(f"s_max must be >= 2, got {s_max}")
    t0 = time.perf_counter()
    report = AuditReport(claim="refinement-lemmas", params={"s_max": s_max})
    cases = [("fixed-point", s, s ** 2 - s ** 4, s * s) for s in range(2, s_max + 1)]
    cases += [("two-cycle", s, -1 - s ** 2 - s ** 4, s * s + 1) for s in range(1, s_max + 1)]
    for done, (kind, s, c, expect) in enumerate(cases):
        a_bound = s ** 4 + s ** 2 + 2
        hits = _third_iterate_square_hits(c, a_bound)
        if hits != [expect]:
            report.violations.append((kind, s, tuple(hits)))
        _tick(progress, done + 1, len(cases))
    report.details["cases"] = len(cases)
    report.seconds = time.perf_counter() - t0
    return report


# ---------------------------------------------------------------------------
# odd-prime third-iterate classification
# ---------------------------------------------------------------------------


def audit_pth_classification(p: int, c_bound: int, progress=None) -> AuditReport:
    """For odd p, third-iterate p-th powers occur only at powered fixed points.

    For every irreducible x**p + c with |c| <= c_bound, any integer a with
    phi**3(a) = y**p must be a = s**p where c = s**p - s**(p*p).  The scan
    bound (|c|/p)**(1/(p-1)) + 2 dominates the chained preimage bounds, so
    the window is complete.  The underlying gap bound
    |x| <= (|c|/p)**(1/(p-1)) + 1 for x**p + c = y**p is itself re-verified
    on the window |x|, |y| <= 50.
    """
    if p not in (3, 5):
        raise DomainError(f"desk-scale audit supports p in {{3, 5}}, got {p}")
    t0 = time.perf_counter()
    report = AuditReport(claim="pth-classification", params={"p": p, "c_bound": c_bound})
    pp = p * p
    total = 2 * c_bound + 1
    hit_map = {}
    for done, c in enumerate(range(-c_bound, c_bound + 1)):
        if c == 0 or perfect_pth_power(-c, p) is not None:
            continue  # reducible
        a_bound = kth_root_floor(abs(c) // p, p - 1)[0] + 2
        plateau = kth_root_floor(abs(c) // p, p - 1)[0] + 1  # |phi^2(a)| cap
        hits = []
        for a in range(-a_bound, a_bound + 1):
            v = a ** p + c
            v = v ** p + c
            if abs(v) > plateau:
                continue
            v = v ** p + c
            if perfect_pth_power(v, p) is not None:
                hits.append(a)
        rep = classify_type(p, c)
        allowed = {s ** p for s in rep.type1_witnesses}
        if set(hits) != allowed:
            for a in sorted(set(hits) ^ allowed):
                kind = "unexplained-hit" if a in hits else "missing-expected-hit"
                report.violations.append((kind, c, a))
        if hits:
            hit_map[c] = sorted(hits)
        if done % CHUNK == 0:
            _tick(progress, done, total)
    report.details["hits"] = {str(c): v for c, v in sorted(hit_map.items())}

    gap_window = 50
    gap_violations = 0
    for x in range(-gap_window, gap_window + 1):
        for y in range(-gap_window, gap_window + 1):
            c = y ** p - x ** p
            if c == 0:
                continue
            if p * (abs(x) - 1) ** (p - 1) > abs(c):
                report.violations.append(("gap-bound", x, y, c))
                gap_violations += 1
    report.details["gap_bound_window"] = gap_window
    report.details["gap_bound_violations"] = gap_violations
    report.seconds = time.perf_counter() - t0
    return report


# ---------------------------------------------------------------------------
# Diophantine systems
# ---------------------------------------------------------------------------


def _two_special_systems(rng: int) -> list[tuple]:
    violations = []
    # system 1: a^2 + s^2 - s^4 = +-t^2 and b^2 + t^2 - t^4 = +-s^2 forces s^2 == t^2
    for s in range(1, rng + 1):
        for t in range(1, rng + 1):
            if s * s == t * t:
                continue
            for e1 in (1, -1):
                if not _is_square(e1 * t * t - s * s + s ** 4):
                    continue
                for e2 in (1, -1):
                    if _is_square(e2 * s * s - t * t + t ** 4):
                        violations.append(("system-1", s, t, e1, e2))
    # system 2: a^2 + s^2 - s^4 = +-(1 + t^2) and b^2 - 1 - t^2 - t^4 = +-s^2 forces t == 0
    for s in range(0, rng + 1):
        for t in range(1, rng + 1):
            for e1 in (1, -1):
                if not _is_square(e1 * (1 + t * t) - s * s + s ** 4):
                    continue
                for e2 in (1, -1):
                    if _is_square(e2 * s * s + 1 + t * t + t ** 4):
                        violations.append(("system-2", s, t, e1, e2))
    # system 3: a^2 - 1 - s^2 - s^4 = +-(1 + t^2) and b^2 - 1 - t^2 - t^4 = +-(1 + s^2)
    # forces s^2 == t^2
    for s in range(1, rng + 1):
        for t in range(1, rng + 1):
            if s * s == t * t:
                continue
            for e1 in (1, -1):
                if not _is_square(e1 * (1 + t * t) + 1 + s * s + s ** 4):
                    continue
                for e2 in (1, -1):
                    if _is_square(e2 * (1 + s * s) + 1 + t * t + t ** 4):
                        violations.append(("system-3", s, t, e1, e2))
    return violations


def _chain_systems(rng: int) -> list[tuple]:
    violations = []
    # (y^2 + s^2 - s^4)^2 - t^2 = +-s^2 forces s in {0, +-1}
    for y in range(0, rng + 1):
        for s in range(2, rng + 1):
            u = y * y + s * s - s ** 4
            for e in (1, -1):
                if _is_square(u * u - e * s * s):
                    violations.append(("chain-fixed-point", y, s, e))
    # (y^2 - 1 - s^2 - s^4)^2 - t^2 = +-(1 + s^2) forces s == 0
    for y in range(0, rng + 1):
        for s in range(1, rng + 1):
            u = y * y - 1 - s * s - s ** 4
            for e in (1, -1):
                if _is_square(u * u - e * (1 + s * s)):
                    violations.append(("chain-two-cycle", y, s, e))
    return violations


def _odd_pair_system(rng: int, p: int) -> list[tuple]:
    # a^p + s^p - s^(p^2) = t^p and b^p + t^p - t^(p^2) = s^p force
    # min(|s|, |t|) <= 1 or s == t
    violations = []
    pp = p * p
    for s in range(-rng, rng + 1):
        if abs(s) <= 1:
            continue
        for t in range(-rng, rng + 1):
            if abs(t) <= 1 or s == t:
                continue
            if perfect_pth_power(t ** p - s ** p + s ** pp, p) is None:
                continue
            if perfect_pth_power(s ** p - t ** p + t ** pp, p) is not None:
                violations.append((f"odd-pair-p{p}", s, t))
    return violations


def _inequality_lemmas(rng: int) -> list[tuple]:
    violations = []
    for d in (3, 5, 7):
        for t in range(2, rng + 1):
            if not (t ** d - 1) ** d < t ** (d * d) - 2 * t ** d:
                violations.append(("gap-inequality", t, d))
    # y**d - 2 is never again a d-th power once |y| >= 2
    for d in (2, 3, 5, 7):
        for y in range(-rng, rng + 1):
            if abs(y) <= 1:
                continue
            if is_perfect_kth_power(y ** d - 2, d):
                violations.append(("power-gap-two", y, d))
    return violations


def _flt_window(rng: int, exponents=(3, 5, 7)) -> list[tuple]:
    violations = []
    for n in exponents:
        for x in range(1, rng + 1):
            xn = x ** n
            for y in range(x, rng + 1):
                z, exact = kth_root_floor(xn + y ** n, n)
                if exact:
                    violations.append(("flt", x, y, z, n))
    return violations


def _sandwich_chains(rng: int) -> list[tuple]:
    violations = []
    # quadratic family: phi1^2(phi2(phi1(a))) is never a square
    for t in range(2, min(rng, 40) + 1):
        c1, c2 = t * t - t ** 4, -t * t
        for a in range(0, max(rng, t * t + 2) + 1):  # even in a
            v = a * a + c1
            v = v * v + c2
            v = v * v + c1
            v = v * v + c1
            if _is_square(v):
                violations.append(("sandwich-square", t, a))
    # cubic family: phi1(phi2(phi1(a))) is never a cube
    p = 3
    for t in range(2, min(rng, 12) + 1):
        c1, c2 = t ** p - t ** (p * p), t ** p
        for a in range(-max(rng, t ** p + 2), max(rng, t ** p + 2) + 1):
            v = a ** p + c1
            v = v ** p + c2
            v = v ** p + c1
            if perfect_pth_power(v, p) is not None:
                violations.append(("sandwich-cube", t, a))
    return violations


def audit_diophantine(rng: int, progress=None) -> AuditReport:
    """Exhaustive desk-scale sweep of the supporting Diophantine claims.

    Systems where a square (or p-th power) is determined up to sign are
    enumerated over their free variables only, with a perfect-power check
    replacing the bound variable.
    """
    if rng < 10:
        raise DomainError(f"range must be >= 10, got {rng}")
    t0 = time.perf_counter()
    report = AuditReport(claim="diophantine", params={"range": rng})
    parts = [
        ("two-special-systems", _two_special_systems),
        ("chain-systems", _chain_systems),
        ("odd-pair-p3", lambda r: _odd_pair_system(r, 3)),
        ("odd-pair-p5", lambda r: _odd_pair_system(r, 5)),
        ("inequality-lemmas", _inequality_lemmas),
        ("flt-window", lambda r: _flt_window(min(r, 50))),
        ("sandwich-chains", _sandwich_chains),
    ]
    for done, (name, fn) in enumerate(parts):
        found = fn(rng)
        report.violations.extend(found)
        report.details[name] = "pass" if not found else f"{len(found)} violations"
        _tick(progress, done + 1, len(parts))
    report.seconds = time.perf_counter() - t0
    return report


# ---------------------------------------------------------------------------
# bounded rational point search
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CurveSpec:
    """Y**2 = poly(X) with an embedded list of all known affine points."""

    curve_id: str
    poly_coeffs: tuple
    known_points: tuple
    description: str

    def __post_init__(self) -> None:
        for x, y in self.known_points:
            if y * y != poly_eval(list(self.poly_coeffs), x):
                raise DomainError(
                    f"known point ({x}, {y}) fails the defining equation of "
                    f"{self.curve_id}"
                )


def _fr(a, b=1):
    return Fraction(a, b)


CURVES: dict[str, CurveSpec] = {
    spec.curve_id: spec
    for spec in (
        CurveSpec(
            "C1",
            (1, 0, -3, 0, 1),
            ((_fr(0), _fr(1)), (_fr(0), _fr(-1))),
            "t^2 = s^4 - 3s^2 + 1",
        ),
        CurveSpec(
            "C2",
            (1, 0, -1, 0, 1),
            (
                (_fr(0), _fr(1)),
                (_fr(0), _fr(-1)),
                (_fr(1), _fr(1)),
                (_fr(1), _fr(-1)),
                (_fr(-1), _fr(1)),
                (_fr(-1), _fr(-1)),
            ),
            "t^2 = s^4 - s^2 + 1",
        ),
        CurveSpec(
            "C3",
            (1, 0, 1, 0, 1),
            ((_fr(0), _fr(1)), (_fr(0), _fr(-1))),
            "t^2 = s^4 + s^2 + 1",
        ),
        CurveSpec(
            "C4",
            (-1, 0, -1, 0, 9),
            (),
            "t^2 = 9s^4 - s^2 - 1",
        ),
        CurveSpec(
            "C",
            (-1, 3, 3, -11, 3, 3, -1),
            (
                (_fr(-1), _fr(3)),
                (_fr(-1), _fr(-3)),
                (_fr(2), _fr(3)),
                (_fr(2), _fr(-3)),
                (_fr(1, 2), _fr(3, 8)),
                (_fr(1, 2), _fr(-3, 8)),
            ),
            "Y^2 = -X^6 + 3X^5 + 3X^4 - 11X^3 + 3X^2 + 3X - 1",
        ),
        CurveSpec(
            "E",
            (1, 0, 0, 1),
            (
                (_fr(0), _fr(1)),
                (_fr(0), _fr(-1)),
                (_fr(-1), _fr(0)),
                (_fr(2), _fr(3)),
                (_fr(2), _fr(-3)),
            ),
            "Y^2 = X^3 + 1",
        ),
        CurveSpec(
            "B1",
            (0, 2, 6, 6, 6, 2),
            ((_fr(0), _fr(0)), (_fr(-1), _fr(0))),
            "Y^2 = 2t(t+1)(t^3 + 2t^2 + t + 1)",
        ),
        CurveSpec(
            "B2",
            (0, -2, -4, -2, 2, 2),
            ((_fr(0), _fr(0)), (_fr(-1), _fr(0))),
            "Y^2 = 2t(t+1)(t^3 - t - 1)",
        ),
        CurveSpec(
            "B3",
            (0, 2, 8, 10, 6, 2),
            ((_fr(0), _fr(0)), (_fr(-1), _fr(0))),
            "Y^2 = 2t(t+1)(t^3 + 2t^2 + 3t + 1)",
        ),
    )
}


def curve_ids() -> list[str]:
    return sorted(CURVES)


_SQ64_MASK = np.zeros(64, dtype=bool)
_SQ64_MASK[list({(i * i) % 64 for i in range(64)})] = True
_SMOOTH_MOD = 45045  # 9 * 5 * 7 * 11 * 13
_SQM_MASK = np.zeros(_SMOOTH_MOD, dtype=bool)
_SQM_MASK[list({(i * i) % _SMOOTH_MOD for i in range(_SMOOTH_MOD)})] = True


def _numerator_exact(coeffs, a: int, b: int, two_k: int) -> int:
    return sum(c * a ** i * b ** (two_k - i) for i, c in enumerate(coeffs) if c)


def curve_point_search(spec, height_bound: int, progress=None) -> AuditReport:
    """Enumerate X = a/b with |a|, b <= height_bound and collect points.

    Squareness of the homogenized numerator is prescreened modulo 64 (exact
    low bits of the wraparound value) and modulo 45045, then confirmed with
    exact integer arithmetic.  The found set must match the embedded known
    list in both directions; the report labels itself a bounded consistency
    check, not a completeness proof.
    """
    if isinstance(spec, str):
        if spec not in CURVES:
            raise UnknownCurve(f"unknown curve id {spec!r}; known: {curve_ids()}")
        spec = CURVES[spec]
    if height_bound < 100:
        raise DomainError(f"height bound must be >= 100, got {height_bound}")
    t0 = time.perf_counter()
    coeffs = list(spec.poly_coeffs)
    d = len(coeffs) - 1
    k = (d + 1) // 2
    two_k = 2 * k

    found: set[tuple[Fraction, Fraction]] = set()
    H = height_bound
    a_arr = np.arange(-H, H + 1, dtype=np.int64)
    a_wrap = a_arr.astype(np.uint64)
    a_mod = (a_arr % _SMOOTH_MOD).astype(np.int64)
    for b in range(1, H + 1):
        # Horner over the homogeneous degree-d part, times b**(2k-d)
        acc_w = np.full(a_wrap.shape, np.uint64(coeffs[d] % 2 ** 64), dtype=np.uint64)
        acc_m = np.full(a_mod.shape, coeffs[d] % _SMOOTH_MOD, dtype=np.int64)
        bw = b % 2 ** 64
        for i in range(d - 1, -1, -1):
            term_w = np.uint64((coeffs[i] * pow(b, d - i, 2 ** 64)) % 2 ** 64)
            acc_w = acc_w * a_wrap + term_w
            term_m = (coeffs[i] * pow(b, d - i, _SMOOTH_MOD)) % _SMOOTH_MOD
            acc_m = (acc_m * a_mod + term_m) % _SMOOTH_MOD
        if two_k > d:
            acc_w = acc_w * np.uint64(pow(b, two_k - d, 2 ** 64))
            acc_m = (acc_m * pow(b, two_k - d, _SMOOTH_MOD)) % _SMOOTH_MOD
        mask = _SQ64_MASK[(acc_w & np.uint64(63)).astype(np.int64)] & _SQM_MASK[acc_m]
        for idx in np.nonzero(mask)[0]:
            a = int(a_arr[idx])
            n = _numerator_exact(coeffs, a, b, two_k)
            if n < 0:
                continue
            y = math.isqrt(n)
            if y * y != n:
                continue
            X = Fraction(a, b)
            Y = Fraction(y, b ** k)
            found.add((X, Y))
            found.add((X, -Y))
        if b % 200 == 0:
            _tick(progress, b, H)

    report = AuditReport(
        claim=f"curve-points-{spec.curve_id}",
        params={"curve": spec.curve_id, "height_bound": height_bound},
        details={
            "equation": spec.description,
            "found": sorted(f"({x}, {y})" for x, y in found),
            "note": (
                "bounded search: confirms the known point list at this height, "
                "does not prove completeness"
            ),
        },
    )
    known = set(spec.known_points)
    for x, y in sorted(found - known):
        report.violations.append(("unexpected-point", str(x), str(y)))
    for x, y in sorted(known - found):
        report.violations.append(("known-point-missed", str(x), str(y)))
    report.seconds = time.perf_counter() - t0
    return report


# ---------------------------------------------------------------------------
# quartic criterion and octic factor search
# ---------------------------------------------------------------------------


def _signed_divisors(n: int) -> list[int]:
    n = abs(n)
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    divs = sorted(set(small + [n // d for d in small]))
    return [d for pair in ((d, -d) for d in divs) for d in pair]


def _divides(F: list, A: list) -> bool:
    # exact division test of monic A into F over Z
    rem = list(F)
    while len(rem) >= len(A):
        coef = rem[-1]
        shift = len(rem) - len(A)
        for i, ac in enumerate(A):
            rem[shift + i] -= coef * ac
        while len(rem) > 1 and rem[-1] == 0:
            rem.pop()
        if rem == [0]:
            return True
        if len(rem) < len(A):
            break
    return all(c == 0 for c in rem)


def kronecker_monic_factor(F: list, max_degree: int = 3):
    """Exhaustive search for a monic integer factor of degree <= max_degree.

    A monic factor A satisfies A(j) | F(j) at every integer node, and its
    low-degree coefficients are determined by the values at 0, +-1; so
    enumerating signed divisor tuples covers every possible factor.
    Returns an ascending coefficient list or None.
    """
    if max_degree > 3:
        raise DomainError("node layout supports degrees up to 3")
    f0 = poly_eval(F, 0)
    f1 = poly_eval(F, 1)
    fm1 = poly_eval(F, -1)
    for x0, v in ((0, f0), (1, f1), (-1, fm1)):
        if v == 0:
            return [-x0, 1]
    d0s = _signed_divisors(f0)
    if max_degree >= 1:
        for d0 in d0s:
            if poly_eval(F, -d0) == 0:
                return [d0, 1]
    if max_degree >= 2:
        for d0 in d0s:
            for u in _signed_divisors(f1):
                A = [d0, u - 1 - d0, 1]
                if _divides(F, A):
                    return A
    if max_degree >= 3:
        for d0 in d0s:
            for u in _signed_divisors(f1):
                for v in _signed_divisors(fm1):
                    if (u + v) % 2:
                        continue
                    a2 = (u + v) // 2 - d0
                    a1 = (u - v) // 2 - 1
                    A = [d0, a1, a2, 1]
                    if _divides(F, A):
                        return A
    return None


def _even_octic_pair_factor(F: list):
    """Search for F == A(x) * A(-x) with A a monic integer quartic.

    For an even octic with no factor of degree <= 3 this split is the only
    remaining possibility, so together with kronecker_monic_factor the
    search is exhaustive.
    """
    assert len(F) == 9 and F[8] == 1 and all(F[i] == 0 for i in (1, 3, 5, 7))
    C6, C4, C2, C0 = F[6], F[4], F[2], F[0]
    d_abs = math.isqrt(abs(C0))
    if C0 < 0 or d_abs * d_abs != C0:
        return None
    # Fujiwara root bound of F caps |sum of any four roots|
    rho = 2 * max(
        kth_root_floor(abs(C6), 2)[0] + 1,
        kth_root_floor(abs(C4), 4)[0] + 1,
        kth_root_floor(abs(C2), 6)[0] + 1,
        kth_root_floor(abs(C0), 8)[0] + 1,
    )
    a_bound = 4 * rho
    for d in {d_abs, -d_abs}:
        for a in range(-a_bound, a_bound + 1):
            if (C6 + a * a) % 2:
                continue
            bb = (C6 + a * a) // 2
            if a == 0:
                if bb * bb + 2 * d != C4:
                    continue
                cc2 = 2 * bb * d - C2
                if not _is_square(cc2):
                    continue
                c_candidates = {math.isqrt(cc2), -math.isqrt(cc2)}
            else:
                num = bb * bb + 2 * d - C4
                if num % (2 * a):
                    continue
                c_candidates = {num // (2 * a)}
            for c in c_candidates:
                if c * c != 2 * bb * d - C2:
                    continue
                A = [d, c, bb, a, 1]
                A_neg = [d, -c, bb, -a, 1]
                if poly_mul(A, A_neg) == F:
                    return A
    return None


def audit_quartic_octic(t_max: int, progress=None) -> AuditReport:
    """Irreducibility of the shared-parameter quartic and its even octic.

    For 2 <= |t| <= t_max: (i) the depressed form of
    x^4 - 4t^2 x^3 + (4t^4 + 2t^2) x^2 - 4t^4 x + t^2 is re-derived and its
    two reducibility quantities 4t^4 - 4t^2 and t^8 - 2t^6 + t^2 are shown
    to be non-squares; (ii) the degree-8 composition over
    {x^2 + t^2 - t^4, x^2 - t^2} equals the quartic in x^2 and admits no
    monic integer factor (degrees 1-3 by divisor enumeration, 4 by the
    paired-quartic split).  Reduction modulo a prime can never certify this
    octic: its two-step head evaluates to t^2 at the critical point, so it
    is reducible modulo every prime.
    """
    if t_max < 2:
        raise DomainError(f"t_max must be >= 2, got {t_max}")
    t0 = time.perf_counter()
    report = AuditReport(claim="quartic-octic", params={"t_max": t_max})
    ts = [t for m in range(2, t_max + 1) for t in (m, -m)]
    for done, t in enumerate(ts):
        quartic = [t ** 2, -4 * t ** 4, 4 * t ** 4 + 2 * t ** 2, -4 * t ** 2, 1]
        depressed = poly_compose(quartic, [t * t, 1])
        expected = [t ** 8 - 2 * t ** 6 + t ** 2, 0, 2 * t ** 2 - 2 * t ** 4, 0, 1]
        if depressed != expected:
            report.violations.append(("depressed-form", t, tuple(depressed)))
            continue
        q_lin = 4 * t ** 4 - 4 * t ** 2
        q_const = t ** 8 - 2 * t ** 6 + t ** 2
        if (2 * t ** 2 - 2 * t ** 4) ** 2 - 4 * q_const != q_lin:
            report.violations.append(("criterion-identity", t))
        if _is_square(q_lin):
            report.violations.append(("criterion-square", t, q_lin))
        if _is_square(q_const):
            report.violations.append(("criterion-square", t, q_const))

        S = make_generator_set(2, [t * t - t ** 4, -t * t])
        octic = expand_word(S, (0, 0, 1), degree_cap=8)
        interleaved = [0] * 9
        interleaved[::2] = quartic
        if octic != interleaved:
            report.violations.append(("octic-shape", t, tuple(octic)))
            continue
        factor = kronecker_monic_factor(octic, max_degree=3)
        if factor is None:
            factor = _even_octic_pair_factor(octic)
        if factor is not None:
            report.violations.append(("octic-factor", t, tuple(factor)))
        _tick(progress, done + 1, len(ts))
    report.details["t_values"] = len(ts)
    report.seconds = time.perf_counter() - t0
    return report
