import random

import pytest
from hypothesis import given, settings, strategies as st

from unicrit.arith import (
    is_perfect_kth_power,
    is_prime,
    kth_root_floor,
    perfect_pth_power,
    prescreen_primes,
    passes_residue_prescreen,
    primes_up_to,
)
from unicrit.errors import DomainError


def test_is_prime_small():
    assert [n for n in range(2, 40) if is_prime(n)] == [
        2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37,
    ]
    assert not is_prime(1)
    assert not is_prime(0)
    assert not is_prime(-7)
    assert is_prime(2 ** 61 - 1)
    assert not is_prime(2 ** 61 + 1)


def test_primes_up_to():
    assert primes_up_to(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert primes_up_to(1) == []
    assert len(primes_up_to(1000)) == 168


def test_kth_root_floor_examples():
    assert kth_root_floor(1000, 3) == (10, True)
    assert kth_root_floor(17, 2) == (4, False)
    assert kth_root_floor(-8, 3) == (-2, True)


def test_kth_root_floor_negative_floor_convention():
    root, exact = kth_root_floor(-9, 3)
    assert (root, exact) == (-3, False)
    assert root ** 3 <= -9 < (root + 1) ** 3


def test_kth_root_floor_even_negative_rejected():
    with pytest.raises(DomainError):
        kth_root_floor(-4, 2)
    with pytest.raises(DomainError):
        kth_root_floor(5, 0)


def test_kth_root_floor_edges():
    assert kth_root_floor(0, 5) == (0, True)
    assert kth_root_floor(1, 7) == (1, True)
    assert kth_root_floor(2, 7) == (1, False)
    assert kth_root_floor(7, 1) == (7, True)
    assert kth_root_floor(-7, 1) == (-7, True)


@settings(max_examples=200, derandomize=True)
@given(st.integers(min_value=0, max_value=10 ** 30), st.integers(min_value=1, max_value=9))
def test_kth_root_floor_bracket_property(n, k):
    root, exact = kth_root_floor(n, k)
    assert root ** k <= n < (root + 1) ** k
    assert exact == (root ** k == n)


@settings(max_examples=100, derandomize=True)
@given(st.integers(min_value=0, max_value=10 ** 18), st.integers(min_value=1, max_value=8))
def test_kth_root_floor_round_trip(r, k):
    assert kth_root_floor(r ** k, k) == (r, True)


def test_perfect_pth_power_examples():
    assert perfect_pth_power(64, 3) == 4
    assert perfect_pth_power(12, 2) is None
    assert perfect_pth_power(-504, 3) is None


def test_perfect_pth_power_signs_and_edges():
    assert perfect_pth_power(0, 5) == 0
    assert perfect_pth_power(1, 3) == 1
    assert perfect_pth_power(-1, 3) == -1
    assert perfect_pth_power(-8, 3) == -2
    assert perfect_pth_power(-4, 2) is None
    assert perfect_pth_power(-512, 3) == -8
    with pytest.raises(DomainError):
        perfect_pth_power(10, 4)


def test_perfect_pth_power_round_trip_large():
    rng = random.Random(7)
    for p in (2, 3, 5):
        for bits in (16, 64, 1000):
            for _ in range(5):
                r = rng.getrandbits(bits) + 2
                assert perfect_pth_power(r ** p, p) == r
                if p != 2:
                    assert perfect_pth_power(-(r ** p), p) == -r
                assert perfect_pth_power(r ** p + 1, p) is None


def test_prescreen_primes_congruence():
    for p in (2, 3, 5, 7):
        qs = prescreen_primes(p)
        assert len(qs) == 10
        assert all(q % p == 1 and is_prime(q) for q in qs)


def test_prescreen_soundness():
    # whenever a root is returned, every residue test also passes
    for p in (2, 3, 5):
        for n in range(-2000, 2001):
            if perfect_pth_power(n, p) is not None:
                assert passes_residue_prescreen(abs(n), p)


def test_perfect_pth_power_exhaustive_small():
    cubes = {r ** 3 for r in range(-13, 14)}
    for n in range(-2000, 2001):
        got = perfect_pth_power(n, 3)
        assert (got is not None) == (n in cubes)
        if got is not None:
            assert got ** 3 == n


def test_is_perfect_kth_power():
    assert is_perfect_kth_power(512, 9)
    assert not is_perfect_kth_power(512, 27)
    assert is_perfect_kth_power(-512, 9)
    assert not is_perfect_kth_power(-512, 2)
    assert is_perfect_kth_power(1, 100)
    assert is_perfect_kth_power(0, 3)
    assert is_perfect_kth_power(7, 1)
