import pytest

from unicrit.certify import (
    Certificate,
    Inconclusive,
    decide_either_or,
    local_global_family,
    minimal_power_index,
    pick_universal_prefix,
    verify_word_irreducible,
)
from unicrit.errors import (
    DomainError,
    InputNotSpecial,
    NoIrreducibleGenerator,
    OpenCase,
    PrefixNotCertified,
)
from unicrit.semigroup import UnicriticalPoly, enumerate_words, make_generator_set


def test_decide_either_or_examples():
    d = decide_either_or(UnicriticalPoly(2, -12), UnicriticalPoly(2, -72))
    assert d.order == (0, 1) and d.first_universal

    d = decide_either_or(UnicriticalPoly(2, -3), UnicriticalPoly(2, -21))
    assert d.order == (0, 1) and d.first_universal

    with pytest.raises(InputNotSpecial):
        decide_either_or(UnicriticalPoly(2, -12), UnicriticalPoly(2, -12))
    with pytest.raises(InputNotSpecial):
        decide_either_or(UnicriticalPoly(2, -12), UnicriticalPoly(2, 2))
    with pytest.raises(InputNotSpecial):
        decide_either_or(UnicriticalPoly(2, -12), UnicriticalPoly(2, -9))


def test_decide_either_or_mixed_types():
    # fixed-point special with two-cycle special, both orders exist
    d = decide_either_or(UnicriticalPoly(2, -12), UnicriticalPoly(2, -3))
    assert d.order in ((0, 1), (1, 0))
    assert d.first_universal or d.second_universal


def test_decide_either_or_oddp():
    d = decide_either_or(UnicriticalPoly(3, -504), UnicriticalPoly(3, 3 ** 3 - 3 ** 9))
    assert d.first_universal or d.second_universal


def test_pick_nonspecial_phi4():
    S = make_generator_set(2, [2, 3])
    cert = pick_universal_prefix(S)
    assert cert.case_tag == "NonSpecialPhi4"
    assert cert.prefix == (0, 0, 0, 0)
    assert cert.scope == "universal"


def test_pick_matching_reducible():
    S = make_generator_set(2, [-12, -4])
    cert = pick_universal_prefix(S)
    assert cert.case_tag == "TypeIPlusMatchingReducible"
    assert cert.prefix == (0, 0, 1, 0)


def test_pick_open_case():
    S = make_generator_set(5, [2 ** 5 - 2 ** 25, 2 ** 5])
    with pytest.raises(OpenCase):
        pick_universal_prefix(S)


def test_pick_distinct_reducible():
    S = make_generator_set(2, [-12, -9])  # s=2, t=3
    cert = pick_universal_prefix(S)
    assert cert.case_tag == "TypeIPlusReducibleDistinct"
    assert cert.prefix == (0, 0, 0, 1, 0)


def test_pick_type2_plus_reducible():
    S = make_generator_set(2, [-3, -4])
    cert = pick_universal_prefix(S)
    assert cert.case_tag == "TypeIIPlusReducible"
    assert cert.prefix == (0, 0, 0, 1, 0)


def test_pick_both_special():
    S = make_generator_set(2, [-12, -72])
    cert = pick_universal_prefix(S)
    assert cert.case_tag == "BothSpecialEitherOr"
    assert cert.prefix == (0, 0, 0, 1)


def test_pick_oddp_cases():
    cert = pick_universal_prefix(make_generator_set(3, [-504, 27]))
    assert cert.case_tag == "FLTDistinct"
    assert cert.prefix == (0, 0, 0, 1)

    cert = pick_universal_prefix(make_generator_set(3, [-504, 0]))
    assert cert.case_tag == "FLTZeroT"
    assert cert.prefix == (0, 0, 0, 1, 1)  # n = 2 pure-power factors

    cert = pick_universal_prefix(make_generator_set(3, [-504, 8]))
    assert cert.case_tag == "P3SpecialPair"
    assert cert.prefix == (0, 1, 0)

    # shortest prefix wins when the special pair sits inside a larger set
    cert = pick_universal_prefix(make_generator_set(3, [-504, 8, 27]))
    assert cert.case_tag == "P3SpecialPair"
    assert cert.prefix == (0, 1, 0)
    assert any("tie-break" in n for n in cert.notes)

    cert = pick_universal_prefix(make_generator_set(3, [-2, 8]))
    assert cert.case_tag == "NonSpecialPhi3"
    assert cert.prefix == (0, 0, 0)


def test_pick_single_generator_and_errors():
    cert = pick_universal_prefix(make_generator_set(2, [-12]))
    assert cert.case_tag == "SingleGenerator" and cert.prefix == ()
    with pytest.raises(NoIrreducibleGenerator):
        pick_universal_prefix(make_generator_set(2, [-9]))
    with pytest.raises(NoIrreducibleGenerator):
        pick_universal_prefix(make_generator_set(2, [-4, -9]))


def test_verify_word_examples():
    S = make_generator_set(2, [-12, -4])
    cert = pick_universal_prefix(S)

    res = verify_word_irreducible(S, (0, 0, 1, 0), (1, 1), prefix_certificate=cert)
    assert isinstance(res, Certificate)
    assert res.scope == "per-word"
    power_checks = [t for t in res.trail if t.value is not None]
    assert len(power_checks) == 2
    assert all(t.outcome == "pass" for t in power_checks)

    res = verify_word_irreducible(S, (0,), ())
    assert isinstance(res, Certificate)
    assert len(res.trail) == 1  # base irreducibility only

    res = verify_word_irreducible(S, (0,), (0, 1))
    assert isinstance(res, Inconclusive)
    assert res.level == 2
    assert res.value == 4 and res.root == 2


def test_verify_word_prefix_not_certified():
    S = make_generator_set(2, [-12, -4])
    with pytest.raises(PrefixNotCertified):
        verify_word_irreducible(S, (0, 0), (1,))
    with pytest.raises(PrefixNotCertified):
        verify_word_irreducible(S, (1,), (0,))  # x^2 - 4 reducible
    # but a caller assertion is accepted
    res = verify_word_irreducible(S, (0, 0), (0,), case_tag="SingleGenerator")
    assert isinstance(res, Certificate)


def test_verify_empty_prefix_chain():
    S = make_generator_set(2, [-12, -4])
    res = verify_word_irreducible(S, (), (0, 0))
    assert isinstance(res, Certificate)
    res = verify_word_irreducible(S, (), (1,))
    assert isinstance(res, Inconclusive) and res.level == 1


def test_minimal_power_index():
    assert minimal_power_index(3, 2) == 2
    assert minimal_power_index(3, 8) == 3
    assert minimal_power_index(3, 512) == 4
    assert minimal_power_index(2, 16) == 4  # 16 is a square and a 4th power, not an 8th
    assert minimal_power_index(2, -4) == 2
    assert minimal_power_index(3, -8) == 3
    with pytest.raises(DomainError):
        minimal_power_index(3, 1)
    with pytest.raises(DomainError):
        minimal_power_index(3, 0)


def test_local_global_family():
    cert = local_global_family(2, 2)
    assert cert.generator_set.coeffs == (-12, -4)
    assert cert.prefix == (0, 0, 1, 0)
    assert cert.case_tag == "LocalGlobalFamily"

    cert = local_global_family(3, 2)
    assert cert.generator_set.coeffs == (-504, 8)
    assert cert.prefix == (0, 1, 0)

    with pytest.raises(DomainError):
        local_global_family(2, 1)
    with pytest.raises(DomainError):
        local_global_family(5, 2)

    cert = local_global_family(2, 3, extras=[7])
    assert cert.generator_set.coeffs == (-72, -9, 7)


def test_universal_soundness_desk_scale():
    # every extension of a universal prefix passes the chained verification
    sets = [
        make_generator_set(2, [2, 3]),
        make_generator_set(2, [-12, -4]),
        make_generator_set(2, [-12, -9]),
        make_generator_set(2, [-3, -4]),
        make_generator_set(2, [-12, -72]),
        make_generator_set(3, [-504, 27]),
        make_generator_set(3, [-504, 8]),
    ]
    for S in sets:
        cert = pick_universal_prefix(S)
        for w in enumerate_words(S, 3):
            res = verify_word_irreducible(S, cert.prefix, w, prefix_certificate=cert)
            assert isinstance(res, Certificate), (S.coeffs, cert.prefix, w, res)


def test_prefix_length_bound():
    # length <= 5 in every case except the pure-power tail, which is 3 + n
    sets = [
        make_generator_set(2, [2, 3]),
        make_generator_set(2, [-12, -4]),
        make_generator_set(2, [-12, -9]),
        make_generator_set(2, [-3, -4]),
        make_generator_set(2, [-12, -72]),
        make_generator_set(3, [-504, 27]),
        make_generator_set(3, [-504, 8]),
        make_generator_set(3, [-504, 0]),
    ]
    for S in sets:
        cert = pick_universal_prefix(S)
        if cert.case_tag == "FLTZeroT":
            assert len(cert.prefix) >= 5
        else:
            assert len(cert.prefix) <= 5


def test_certificate_json_round():
    S = make_generator_set(2, [-12, -4])
    cert = pick_universal_prefix(S)
    d = cert.to_json_dict()
    assert d["case_tag"] == "TypeIPlusMatchingReducible"
    assert d["generator_set"] == {"p": 2, "c": ["-12", "-4"]}
    assert d["prefix"] == [0, 0, 1, 0]
