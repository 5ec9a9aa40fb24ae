import itertools

import pytest

from unicrit.arith import primes_up_to
from unicrit.errors import DomainError
from unicrit.modp import (
    base_irreducible_Fq,
    local_global_scan,
    pth_power_residue,
    rabin_irreducible,
    word_irreducible_Fq,
)
from unicrit.semigroup import enumerate_words, expand_word, make_generator_set

S2 = make_generator_set(2, [-12, -4])
S3 = make_generator_set(3, [-504, 8])


def test_pth_power_residue_examples():
    assert pth_power_residue(2, 3, 7) is False  # cubes mod 7 are {0,1,6}
    assert pth_power_residue(4, 2, 7) is True
    for a in range(5):
        assert pth_power_residue(a, 3, 5) is True  # cubing is a bijection mod 5
    assert pth_power_residue(0, 3, 7) is True
    assert {a for a in range(7) if pth_power_residue(a, 3, 7)} == {0, 1, 6}


def test_base_irreducible_Fq_examples():
    assert base_irreducible_Fq(2, 1, 3) is True
    for c in range(-10, 11):
        assert base_irreducible_Fq(3, c, 3) is False  # wild prime
        assert base_irreducible_Fq(2, c, 2) is False
    assert base_irreducible_Fq(3, -2, 7) is True


def test_base_irreducible_bijection_law():
    # gcd(p, q-1) == 1 makes every element a p-th power: always reducible
    for q in (2, 5, 11, 17):
        assert (q - 1) % 3 != 0
        for c in range(q):
            assert base_irreducible_Fq(3, c, q) is False


def test_word_irreducible_Fq_examples():
    assert word_irreducible_Fq(S2, (0,), 5) is True
    assert word_irreducible_Fq(S2, (0, 0, 1, 0), 5) is False
    assert word_irreducible_Fq(S3, (0, 1), 3) is False
    with pytest.raises(DomainError):
        word_irreducible_Fq(S2, (), 5)


def test_wild_prime_law():
    for S in (S2, S3):
        for w in enumerate_words(S, 3):
            assert word_irreducible_Fq(S, w, S.p) is False


def test_rabin_examples():
    assert rabin_irreducible([1, 1, 0, 1], 2) is True  # x^3 + x + 1
    assert rabin_irreducible([1, 0, 1], 2) is False  # (x + 1)^2
    assert rabin_irreducible([1, 0, 1], 5) is False  # roots +-2
    assert rabin_irreducible([1, 1], 7) is True  # linear
    with pytest.raises(DomainError):
        rabin_irreducible([1, 0, 2], 5)  # not monic
    with pytest.raises(DomainError):
        rabin_irreducible([3], 5)


def _bruteforce_irreducible(coeffs, q):
    # try all monic divisors of degree 1 .. deg//2
    from unicrit.semigroup import poly_mul

    deg = len(coeffs) - 1
    f = [c % q for c in coeffs]
    for d in range(1, deg // 2 + 1):
        for tail in itertools.product(range(q), repeat=d):
            g = list(tail) + [1]
            # long division f mod g over F_q
            rem = list(f)
            while len(rem) >= len(g) and any(rem):
                shift = len(rem) - len(g)
                coef = rem[-1]
                for i, gc in enumerate(g):
                    rem[shift + i] = (rem[shift + i] - coef * gc) % q
                while rem and rem[-1] == 0:
                    rem.pop()
            if not any(rem):
                return False
    return True


def test_rabin_against_bruteforce():
    for q in (2, 3, 5):
        for deg in (2, 3, 4):
            for tail in itertools.product(range(q), repeat=deg):
                coeffs = list(tail) + [1]
                assert rabin_irreducible(coeffs, q) == _bruteforce_irreducible(coeffs, q), (
                    coeffs,
                    q,
                )


def test_oracle_equivalence_sample():
    # full sweep lives in the acceptance suite; spot-check small primes here
    for p, qmax in ((2, 13), (3, 13)):
        for q in primes_up_to(qmax):
            if q == p:
                continue
            for c0 in range(q):
                for c1 in range(c0 + 1, q):
                    S = make_generator_set(p, [c0, c1])
                    for w in enumerate_words(S, 2):
                        expanded = expand_word(S, w, degree_cap=81)
                        assert word_irreducible_Fq(S, w, q) == rabin_irreducible(
                            expanded, q
                        ), (p, q, c0, c1, w)


def test_local_global_scan_family():
    report = local_global_scan(S2, (0, 0, 1, 0), 100)
    assert report.all_reducible is True
    assert len(report.entries) == 25
    report = local_global_scan(S3, (0, 1, 0), 100)
    assert report.all_reducible is True


def test_local_global_scan_non_family():
    report = local_global_scan(S2, (0,), 100)
    assert report.all_reducible is False
    flags = dict(report.entries)
    assert flags[5] is True


def test_scan_report_serialization():
    report = local_global_scan(S2, (0,), 20, family_t=None)
    d = report.to_json_dict()
    assert d["q_max"] == 20 and d["word"] == [0]
    rows = report.to_csv_rows()
    assert rows[0] == ["q", "irreducible"]
    assert len(rows) == 1 + len(report.entries)


def test_scan_jobs_parallel_matches_serial():
    serial = local_global_scan(S2, (0, 0, 1, 0), 60)
    parallel = local_global_scan(S2, (0, 0, 1, 0), 60, jobs=2)
    assert serial.entries == parallel.entries
