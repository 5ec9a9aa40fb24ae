"""Universal-prefix selection and chained per-word verification.

Every recipe here has the same shape: choose a short word g over the
generator set so that g composed with ANY further word stays irreducible
over Q.  Which g works is decided by the structure of the irreducible
generators (fixed-point special, two-cycle special, or neither) and of the
reducible ones.  The "either/or" situations are settled by a finite
obstruction test: g = phi_i**3 o phi_j is universal as soon as no integer a
has phi_j(a) inside the finite set of points whose third iterate under
phi_i can be a p-th power; a double failure of that test is provably
impossible for valid input and therefore raises InternalContradiction.

Per-word verification runs the chained criterion directly: peel the word
from the outside, and at each level check that the value of the
already-certified part at the next critical point is not a perfect p-th
power.  Over Q that criterion is one-directional, so a hit is reported as
Inconclusive, never as "reducible".
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .arith import is_perfect_kth_power, perfect_pth_power
from .classify import TypeReport, base_irreducible_Q, classify_type
from .errors import (
    DomainError,
    InputNotSpecial,
    InternalContradiction,
    NoIrreducibleGenerator,
    OpenCase,
    PrefixNotCertified,
)
from .semigroup import (
    DEFAULT_BIT_GUARD,
    GeneratorSet,
    UnicriticalPoly,
    eval_word,
    make_generator_set,
    validate_word,
    word_to_text,
)

__all__ = [
    "CASE_TAGS",
    "TrailEntry",
    "Certificate",
    "Inconclusive",
    "EitherOrDecision",
    "decide_either_or",
    "pick_universal_prefix",
    "verify_word_irreducible",
    "minimal_power_index",
    "local_global_family",
]

CASE_TAGS = frozenset(
    {
        "SingleGenerator",
        "NonSpecialPhi4",
        "NonSpecialPhi3",
        "BothSpecialEitherOr",
        "TypeIPlusReducibleDistinct",
        "TypeIPlusMatchingReducible",
        "TypeIIPlusReducible",
        "OddTwoSpecial",
        "FLTDistinct",
        "FLTZeroT",
        "P3SpecialPair",
        "LocalGlobalFamily",
        # auto-justified single-generator prefixes in per-word verification
        "BaseIrreducible",
    }
)


@dataclass(frozen=True)
class TrailEntry:
    description: str
    outcome: str  # "pass" | "info" | "hit"
    value: int | None = None


@dataclass(frozen=True)
class Certificate:
    """A prefix word plus the justification trail that makes it checkable."""

    case_tag: str
    scope: str  # "universal" | "per-word"
    prefix: tuple
    generator_set: GeneratorSet
    trail: tuple = ()
    word: tuple | None = None
    notes: tuple = ()
    claims: tuple = ()

    def __post_init__(self) -> None:
        if self.case_tag not in CASE_TAGS:
            raise DomainError(f"unknown case tag {self.case_tag!r}")
        if self.scope == "per-word" and not self.trail:
            raise DomainError("per-word certificates need a nonempty trail")

    def full_word(self) -> tuple:
        return self.prefix + (self.word or ())

    def to_json_dict(self, value_formatter=str) -> dict:
        d = {
            "kind": "certificate",
            "case_tag": self.case_tag,
            "scope": self.scope,
            "generator_set": {
                "p": self.generator_set.p,
                "c": [str(c) for c in self.generator_set.coeffs],
            },
            "prefix": list(self.prefix),
            "trail": [
                {
                    "description": t.description,
                    "outcome": t.outcome,
                    **({"value": value_formatter(t.value)} if t.value is not None else {}),
                }
                for t in self.trail
            ],
        }
        if self.word is not None:
            d["word"] = list(self.word)
        if self.notes:
            d["notes"] = list(self.notes)
        if self.claims:
            d["claims"] = list(self.claims)
        return d


@dataclass(frozen=True)
class Inconclusive:
    """A chained check hit a perfect p-th power; nothing is concluded over Q."""

    generator_set: GeneratorSet
    prefix: tuple
    word: tuple
    level: int
    value: int
    root: int | None
    trail: tuple = ()

    def to_json_dict(self, value_formatter=str) -> dict:
        return {
            "kind": "inconclusive",
            "generator_set": {
                "p": self.generator_set.p,
                "c": [str(c) for c in self.generator_set.coeffs],
            },
            "prefix": list(self.prefix),
            "word": list(self.word),
            "level": self.level,
            "value": value_formatter(self.value),
            "root": value_formatter(self.root) if self.root is not None else None,
        }


# ---------------------------------------------------------------------------
# either/or obstruction test
# ---------------------------------------------------------------------------


def _obstruction_targets(p: int, report: TypeReport) -> tuple[list[int], str]:
    """Integer values v for which phi**3(a) = y**p is possible only if the
    inner composition evaluates to v."""
    if p == 2:
        if report.is_type1 and report.is_type2:
            raise InternalContradiction(
                f"coefficient {report.c} reported as both special forms"
            )
        if report.is_type1:
            s = report.type1_witnesses[0]
            return [s * s, -s * s], "fixed-point"
        if report.is_type2:
            s = report.type2_witnesses[0]
            return [s * s + 1, -(s * s + 1)], "two-cycle"
    else:
        if report.is_type1:
            s = report.type1_witnesses[0]
            return [s ** p], "fixed-point"
    raise InputNotSpecial(f"x^{p} + {report.c} has no special structure")


@dataclass(frozen=True)
class EitherOrDecision:
    order: tuple  # (0, 1) for phi1**3 o phi2, (1, 0) for phi2**3 o phi1
    first_universal: bool
    second_universal: bool
    trail: tuple


def decide_either_or(phi1: UnicriticalPoly, phi2: UnicriticalPoly) -> EitherOrDecision:
    """Pick whichever of phi_1**3 o phi_2 and phi_2**3 o phi_1 is universal.

    An order (outer, inner) passes when, for every obstruction target v of
    the outer polynomial, v - c_inner is not a perfect p-th power (no integer
    a has inner(a) == v).  Both orders passing prefers the given order; both
    failing is impossible for distinct irreducible special inputs and raises
    InternalContradiction.
    """
    if phi1.p != phi2.p:
        raise InputNotSpecial("both polynomials must share one exponent")
    p = phi1.p
    if phi1.c == phi2.c:
        raise InputNotSpecial("the two polynomials must be distinct")
    if not isinstance(phi1.c, int) or not isinstance(phi2.c, int):
        raise InputNotSpecial("integer coefficients required")
    reports = (classify_type(p, phi1.c), classify_type(p, phi2.c))
    for phi, rep in zip((phi1, phi2), reports):
        if not rep.irreducible_over_Q:
            raise InputNotSpecial(f"{phi} is reducible over Q")
        if not (rep.is_type1 or (p == 2 and rep.is_type2)):
            raise InputNotSpecial(f"{phi} has no special structure")

    trail: list[TrailEntry] = []

    def order_universal(outer_i: int, inner_i: int) -> bool:
        outer_rep = reports[outer_i]
        inner_c = (phi1.c, phi2.c)[inner_i]
        targets, kind = _obstruction_targets(p, outer_rep)
        ok = True
        for v in targets:
            hit = perfect_pth_power(v - inner_c, p)
            trail.append(
                TrailEntry(
                    description=(
                        f"order {outer_i + 1}/{inner_i + 1} ({kind} target {v}): "
                        f"{v} - ({inner_c}) = {v - inner_c} "
                        + ("is" if hit is not None else "is not")
                        + f" a perfect {p}th power"
                    ),
                    outcome="hit" if hit is not None else "pass",
                    value=v - inner_c,
                )
            )
            if hit is not None:
                ok = False
        return ok

    first = order_universal(0, 1)
    second = order_universal(1, 0)
    if not first and not second:
        raise InternalContradiction(
            f"both prefix orders fail the obstruction test for "
            f"c1={phi1.c}, c2={phi2.c}, p={p}; this contradicts the "
            f"two-special classification"
        )
    order = (0, 1) if first else (1, 0)
    return EitherOrDecision(
        order=order, first_universal=first, second_universal=second, trail=tuple(trail)
    )


# ---------------------------------------------------------------------------
# universal-prefix decision tree
# ---------------------------------------------------------------------------


@dataclass
class _Candidate:
    prefix: tuple
    case_tag: str
    trail: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def sort_key(self):
        # shortest prefix first; ties resolved by the prefix itself, which
        # favors low generator indices deterministically
        return (len(self.prefix), self.prefix)


def pick_universal_prefix(S: GeneratorSet) -> Certificate:
    """Walk the recipe decision tree and return a universal certificate.

    Raises NoIrreducibleGenerator when no generator is irreducible, OpenCase
    for the one configuration with no known recipe (p > 3 with exactly the
    pair {x^p + t^p - t^(p^2), x^p + t^p}), and InternalContradiction if no
    case applies in a situation the classification proves impossible.
    """
    p = S.p
    reports = {i: classify_type(p, c) for i, c in enumerate(S.coeffs)}
    irreducible = [i for i in range(S.r) if reports[i].irreducible_over_Q]
    if not irreducible:
        raise NoIrreducibleGenerator(
            f"no generator of {tuple(S.coeffs)} is irreducible over Q"
        )

    if S.r == 1:
        i = irreducible[0]
        cand = _Candidate(prefix=(), case_tag="SingleGenerator")
        cand.trail.append(
            TrailEntry(
                f"single generator {S.poly(i)} is irreducible over Q; every "
                f"iterate stays irreducible",
                "pass",
            )
        )
        return _finish(S, cand, [])

    candidates: list[_Candidate] = []
    special = [i for i in irreducible if reports[i].is_type1 or (p == 2 and reports[i].is_type2)]
    nonspecial = [i for i in irreducible if i not in special]
    reducible = [i for i in range(S.r) if i not in irreducible]
    open_pair: tuple[int, int] | None = None

    for i in nonspecial:
        reps = 4 if p == 2 else 3
        cand = _Candidate(prefix=(i,) * reps, case_tag="NonSpecialPhi4" if p == 2 else "NonSpecialPhi3")
        cand.trail.append(
            TrailEntry(f"generator {i} ({S.poly(i)}) is irreducible over Q", "pass")
        )
        cand.trail.append(
            TrailEntry(
                f"generator {i} has no p-th-powered fixed point"
                + (" and no squared two-cycle point" if p == 2 else ""),
                "pass",
            )
        )
        candidates.append(cand)

    if len(special) >= 2:
        i, j = special[0], special[1]
        decision = decide_either_or(S.poly(i), S.poly(j))
        outer, inner = (i, j) if decision.order == (0, 1) else (j, i)
        cand = _Candidate(
            prefix=(outer,) * 3 + (inner,),
            case_tag="BothSpecialEitherOr" if p == 2 else "OddTwoSpecial",
        )
        cand.trail.extend(decision.trail)
        candidates.append(cand)

    for i in special:
        rep = reports[i]
        for j in reducible:
            cj = S.coeffs[j]
            if p == 2:
                t = perfect_pth_power(-cj, 2)
                assert t is not None  # reducible quadratic is x^2 - t^2
                if rep.is_type1:
                    s = rep.type1_witnesses[0]
                    if s * s != t * t:
                        cand = _Candidate(
                            prefix=(i, i, i, j, i), case_tag="TypeIPlusReducibleDistinct"
                        )
                        cand.trail.append(
                            TrailEntry(
                                f"fixed-point witness s={s} of generator {i} and "
                                f"reducible generator {j} = x^2 - {t}^2 have s^2 != t^2",
                                "pass",
                            )
                        )
                    else:
                        cand = _Candidate(
                            prefix=(i, i, j, i), case_tag="TypeIPlusMatchingReducible"
                        )
                        cand.trail.append(
                            TrailEntry(
                                f"generator {i} = x^2 + t^2 - t^4 and generator {j} = "
                                f"x^2 - t^2 share t = {abs(t)}",
                                "pass",
                            )
                        )
                    candidates.append(cand)
                else:
                    s = rep.type2_witnesses[0]
                    cand = _Candidate(prefix=(i, i, i, j, i), case_tag="TypeIIPlusReducible")
                    cand.trail.append(
                        TrailEntry(
                            f"two-cycle witness s={s} of generator {i} with reducible "
                            f"generator {j} = x^2 - {t}^2",
                            "pass",
                        )
                    )
                    candidates.append(cand)
            else:
                t = perfect_pth_power(cj, p)
                assert t is not None  # reducible odd-degree binomial is x^p + t^p
                s = rep.type1_witnesses[0]
                if t == 0:
                    n = minimal_power_index(p, s)
                    cand = _Candidate(prefix=(i,) * 3 + (j,) * n, case_tag="FLTZeroT")
                    cand.trail.append(
                        TrailEntry(
                            f"witness s={s} is not a perfect {p}**{n - 1}-th power, so "
                            f"{n} pure-power inner factors protect the chain",
                            "pass",
                        )
                    )
                    candidates.append(cand)
                elif t != s:
                    cand = _Candidate(prefix=(i, i, i, j), case_tag="FLTDistinct")
                    cand.trail.append(
                        TrailEntry(
                            f"witness s={s} of generator {i}, reducible generator {j} = "
                            f"x^{p} + {t}^{p} with t nonzero and t != s: a^{p} + t^{p} = "
                            f"s^{p} has no integer solution",
                            "pass",
                        )
                    )
                    candidates.append(cand)
                else:
                    # the special pair {x^p + s^p - s^(p^2), x^p + s^p}
                    if p == 3:
                        cand = _Candidate(prefix=(i, j, i), case_tag="P3SpecialPair")
                        cand.trail.append(
                            TrailEntry(
                                f"special pair with t = {t}: the short sandwich prefix "
                                f"is power-free at every integer",
                                "pass",
                            )
                        )
                        candidates.append(cand)
                    else:
                        open_pair = (i, j)

    if not candidates:
        if open_pair is not None:
            i, j = open_pair
            raise OpenCase(
                f"S = {{x^{p} + {S.coeffs[i]}, x^{p} + {S.coeffs[j]}}} is the pair "
                f"{{x^p + t^p - t^(p^2), x^p + t^p}} with p = {p} > 3; no recipe is "
                f"known for this configuration (conjecturally irreducible)"
            )
        raise InternalContradiction(
            f"no recipe case applies to {tuple(S.coeffs)} with p={p} although an "
            f"irreducible generator exists"
        )

    candidates.sort(key=lambda cand: cand.sort_key)
    best = candidates[0]
    return _finish(S, best, candidates[1:])


def _finish(S: GeneratorSet, best: _Candidate, rest: list[_Candidate]) -> Certificate:
    notes = list(best.notes)
    if rest:
        others = sorted({c.case_tag for c in rest})
        notes.append(
            "selected by shortest-prefix tie-break; other applicable cases: "
            + ", ".join(others)
        )
    return Certificate(
        case_tag=best.case_tag,
        scope="universal",
        prefix=best.prefix,
        generator_set=S,
        trail=tuple(best.trail),
        notes=tuple(notes),
    )


# ---------------------------------------------------------------------------
# per-word chained verification
# ---------------------------------------------------------------------------


def verify_word_irreducible(
    S: GeneratorSet,
    g,
    w,
    prefix_certificate: Certificate | None = None,
    case_tag: str | None = None,
    bit_guard: int | None = DEFAULT_BIT_GUARD,
) -> Certificate | Inconclusive:
    """Chained criterion for the single word g ++ w.

    The prefix g must be justified: by a universal certificate, by a caller
    assertion (case_tag), or automatically when g has at most one factor
    (its base irreducibility is checked directly).  Levels peel w from the
    outside; each level evaluates the certified part at the next critical
    point and requires the value not to be a perfect p-th power.  A hit
    yields Inconclusive with the failing level and value.
    """
    g = validate_word(S, g)
    w = validate_word(S, w)
    p = S.p
    trail: list[TrailEntry] = []

    if prefix_certificate is not None:
        if prefix_certificate.generator_set != S or tuple(prefix_certificate.prefix) != g:
            raise PrefixNotCertified(
                "supplied certificate does not match this generator set and prefix"
            )
        tag = prefix_certificate.case_tag
        trail.append(
            TrailEntry(f"prefix {word_to_text(g)} certified (case {tag})", "pass")
        )
    elif case_tag is not None:
        if case_tag not in CASE_TAGS:
            raise DomainError(f"unknown case tag {case_tag!r}")
        tag = case_tag
        trail.append(
            TrailEntry(
                f"prefix {word_to_text(g)} irreducibility asserted by caller "
                f"(case {tag})",
                "info",
            )
        )
    elif len(g) <= 1:
        tag = "BaseIrreducible"
        if len(g) == 1:
            c = S.coeffs[g[0]]
            if not base_irreducible_Q(p, c):
                raise PrefixNotCertified(f"prefix generator x^{p} + {c} is reducible over Q")
            trail.append(
                TrailEntry(f"prefix generator x^{p} + {c} is irreducible over Q", "pass")
            )
    else:
        raise PrefixNotCertified(
            f"prefix {word_to_text(g)} has {len(g)} factors and no justification"
        )

    for j in range(1, len(w) + 1):
        inner_c = S.coeffs[w[j - 1]]
        if not g and j == 1:
            if not base_irreducible_Q(p, inner_c):
                trail.append(
                    TrailEntry(
                        f"level 1: outermost generator x^{p} + {inner_c} is reducible over Q",
                        "hit",
                        value=inner_c,
                    )
                )
                return Inconclusive(
                    generator_set=S,
                    prefix=g,
                    word=w,
                    level=1,
                    value=inner_c,
                    root=perfect_pth_power(-inner_c, p),
                    trail=tuple(trail),
                )
            trail.append(
                TrailEntry(
                    f"level 1: outermost generator x^{p} + {inner_c} is irreducible over Q",
                    "pass",
                )
            )
            continue
        head = g + w[: j - 1]
        value = eval_word(S, head, inner_c, bit_guard=bit_guard)
        root = perfect_pth_power(value, p)
        digits = len(str(abs(value)))
        desc = (
            f"level {j}: value of {word_to_text(head)} at critical point of "
            f"generator {w[j - 1]} ({digits} digits)"
        )
        if root is not None:
            trail.append(TrailEntry(desc + f" IS a perfect {p}th power", "hit", value=value))
            return Inconclusive(
                generator_set=S,
                prefix=g,
                word=w,
                level=j,
                value=value,
                root=root,
                trail=tuple(trail),
            )
        trail.append(TrailEntry(desc + f" is not a perfect {p}th power", "pass", value=value))

    if not trail:
        trail.append(TrailEntry("empty extension of a certified prefix", "info"))
    return Certificate(
        case_tag=tag,
        scope="per-word",
        prefix=g,
        generator_set=S,
        trail=tuple(trail),
        word=w,
    )


# ---------------------------------------------------------------------------
# auxiliary recipes
# ---------------------------------------------------------------------------


def minimal_power_index(p: int, s: int) -> int:
    """Smallest n >= 2 such that s is not a perfect p**(n-1)-th power."""
    if abs(s) <= 1:
        raise DomainError(f"|s| must be >= 2, got {s}")
    n = 2
    while is_perfect_kth_power(s, p ** (n - 1)):
        n += 1
    return n


def local_global_family(p: int, t: int, extras=()) -> Certificate:
    """Build the family generator set whose certified words are irreducible
    over Q yet reducible modulo every prime.

    S = {x^p + t^p - t^(p^2), x^p + (-1)^(p-1) t^p, extras...} for p in
    {2, 3} and |t| >= 2.  The returned prefix is the family word.
    """
    if p not in (2, 3):
        raise DomainError(f"family exists for p in {{2, 3}}, got {p}")
    if abs(t) < 2:
        raise DomainError(f"|t| must be >= 2, got {t}")
    c1 = t ** p - t ** (p * p)
    c2 = (-1) ** (p - 1) * t ** p
    S = make_generator_set(p, [c1, c2, *extras])
    prefix = (0, 0, 1, 0) if p == 2 else (0, 1, 0)
    trail = [
        TrailEntry(f"family coefficients: c1 = {c1}, c2 = {c2} (t = {t})", "info"),
        TrailEntry(
            f"x^{p} + {c1} is irreducible over Q",
            "pass" if base_irreducible_Q(p, c1) else "hit",
        ),
        TrailEntry(
            f"inner value of the two-step head is t^{p} = {t ** p}, a {p}th power "
            f"residue modulo every prime",
            "info",
            value=t ** p,
        ),
    ]
    if any(entry.outcome == "hit" for entry in trail):
        raise InternalContradiction(f"family base x^{p} + {c1} reducible for t={t}")
    claims = (
        "every extension of the prefix is irreducible over Q",
        "every extension of the prefix is reducible modulo every prime",
    )
    return Certificate(
        case_tag="LocalGlobalFamily",
        scope="universal",
        prefix=prefix,
        generator_set=S,
        trail=tuple(trail),
        claims=claims,
    )
