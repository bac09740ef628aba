from fractions import Fraction

import pytest

import oracles
from compositae.congruence import (
    FAMILIES,
    CongruenceReport,
    NonIntegerCoefficients,
    ScanBoundError,
    Verdict,
    WitnessCertificate,
    corollary1_sum,
    corollary1_via_g,
    egf_family,
    euler_congruence,
    general_prime_congruence,
    scan,
    theorem1_check,
    theorem2_congruence,
    touchard_general,
    touchard_general_family,
    touchard_k0,
)
from compositae.sequences import bell
from compositae.series import Series, builtin, integer_egf, sin_egf_coefficient

PAPER_POLY3 = ["0", "0", "1", "13/4", "9", "55/2", "93", "2779/8", "12643/9", "12227/2", "28425", "560197/4", "728283"]

TEST_EGFS = {
    "expm1": builtin("expm1", 25),
    "sin": builtin("sin", 25),
    "poly3": builtin("poly3", 25),
    "artanh": builtin("artanh", 25),
    "mixed": integer_egf([2, -1, 3, 0, 5, -4, 1, 1] + [1] * 17),
}


class TestScaledComposita:
    def test_expm1_is_stirling(self):
        e = builtin("expm1", 30)
        for n in range(1, 31):
            for k in range(1, n + 1):
                assert theorem1_check(e, n, k)

    def test_identity(self):
        assert theorem1_check(builtin("x", 5), 5, 5)
        assert theorem1_check(builtin("x", 5), 5, 2)

    def test_sin(self):
        assert theorem1_check(builtin("sin", 5), 5, 3)

    def test_non_integer_egf_rejected(self):
        with pytest.raises(NonIntegerCoefficients):
            theorem1_check(Series.from_egf([0, Fraction(1, 2), 1]), 2, 1)


class TestMiddleSum:
    @pytest.mark.parametrize("n, expected, integral", [(5, "9", True), (4, "13/4", False), (7, "93", True)])
    def test_poly3(self, n, expected, integral):
        r = corollary1_sum(builtin("poly3", n), n)
        assert str(r.value) == expected
        assert r.is_integer is integral

    def test_n_below_three(self):
        with pytest.raises(ValueError):
            corollary1_sum(builtin("poly3", 5), 2)

    def test_via_g_bell(self):
        assert corollary1_via_g(builtin("expm1", 5), 5).value == 10
        r = corollary1_via_g(builtin("expm1", 4), 4)
        assert r.value == Fraction(13, 4)
        assert r.verdict is Verdict.COMPOSITE_WITNESS

    def test_identity_inner(self):
        # exp(x) has g(n) = 1 = e(1)^n, so nothing is left over
        for n in (3, 5, 7, 11):
            assert corollary1_via_g(builtin("x", n), n).value == 0
            assert corollary1_sum(builtin("x", n), n).value == 0

    @pytest.mark.parametrize("name", sorted(TEST_EGFS))
    def test_routes_agree(self, name):
        e = TEST_EGFS[name]
        for n in range(3, 26):
            assert corollary1_sum(e, n).value == corollary1_via_g(e, n).value


class TestGeneral:
    def test_reduces_to_corollary(self):
        for n in range(3, 12):
            assert general_prime_congruence(builtin("exp", n), builtin("expm1", n), n).value == corollary1_via_g(
                builtin("expm1", n), n
            ).value

    def test_poly3(self):
        r = general_prime_congruence(builtin("exp", 5), builtin("poly3", 5), 5)
        assert r.value == 9

    def test_twice_exp(self):
        r = general_prime_congruence(Series.from_egf([2] * 6), builtin("expm1", 5), 5)
        assert r.value == (2 * bell(5) - 2 - 2) // 5 == 20

    def test_non_integer_rejected(self):
        with pytest.raises(NonIntegerCoefficients):
            general_prime_congruence(Series.from_egf([1, Fraction(1, 3), 1]), builtin("expm1", 2), 2)

    def test_primes_random(self):
        outer = Series.from_egf([1, 3, -2, 0, 4, 1, 1, -1, 2, 5, 0, 3, 1, 2])
        inner = integer_egf([1, 2, -1, 1, 0, 3, -2, 1, 1, 0, 2, 1, 4])
        for p in (2, 3, 5, 7, 11, 13):
            assert general_prime_congruence(outer, inner, p).is_integer


class TestOgfOuter:
    def test_euler(self):
        assert theorem2_congruence(builtin("geom", 5), builtin("sin", 5), 5).value == 12
        assert theorem2_congruence(builtin("geom", 7), builtin("sin", 7), 7).value == 198

    def test_identity_outer(self):
        x = Series((0, 1, 0, 0, 0, 0))
        for n in range(1, 6):
            assert theorem2_congruence(x, builtin("sin", 5), n).value == 0

    def test_matches_euler_family(self):
        for n in range(2, 30):
            assert theorem2_congruence(builtin("geom", 30), builtin("sin", 30), n).value == euler_congruence(n).value

    def test_ordinary_integer_outer_required(self):
        with pytest.raises(NonIntegerCoefficients):
            theorem2_congruence(Series((1, Fraction(1, 2), 1)), builtin("sin", 2), 2)


class TestTouchard:
    def test_k0(self):
        assert touchard_k0(2).value == 0
        assert touchard_k0(7).value == 125
        r = touchard_k0(9)
        assert r.value == Fraction(21145, 9)
        assert r.verdict is Verdict.COMPOSITE_WITNESS

    def test_k0_range(self):
        with pytest.raises(ValueError):
            touchard_k0(1)

    def test_general(self):
        assert touchard_general(5, 2).value == 174
        assert touchard_general(7, 1).value == 591
        for p in (2, 3, 5, 7, 11):
            assert touchard_general(p, 0).value == touchard_k0(p).value


class TestEuler:
    @pytest.mark.parametrize("n, expected", [(3, 2), (5, 12), (4, 4)])
    def test_values(self, n, expected):
        assert euler_congruence(n).value == expected

    def test_sin_sign_matches_closed_form(self):
        # ((-1)^(n-1) + 1) (-1)^((3n+1)/2) / 2 for odd n, 0 for even n
        for n in range(1, 40, 2):
            assert sin_egf_coefficient(n) == (-1) ** ((3 * n + 1) // 2)
        for n in range(0, 40, 2):
            assert sin_egf_coefficient(n) == 0


class TestReports:
    def test_verdict_tracks_integrality(self):
        assert CongruenceReport("f", 4, Fraction(3, 2)).verdict is Verdict.COMPOSITE_WITNESS
        assert CongruenceReport("f", 5, Fraction(3)).verdict is Verdict.CONSISTENT_WITH_PRIME

    def test_certificate_requires_fraction(self):
        with pytest.raises(ValueError):
            WitnessCertificate(5, "f", Fraction(2))
        cert = WitnessCertificate(9, "touchard_k0", Fraction(21145, 9))
        assert cert.denominator == 9
        assert cert.to_record() == {"n": 9, "family": "touchard_k0", "value": "21145/9", "denominator": 9}


class TestScan:
    def test_poly3_paper_list(self):
        reports, certs = scan("poly3", range(1, 14))
        assert [str(r.value) for r in reports] == PAPER_POLY3
        assert [c.n for c in certs] == [4, 6, 8, 9, 10, 12]
        assert [r.degenerate for r in reports[:3]] == [True, True, False]

    def test_touchard_witnesses_only_composites(self):
        reports, certs = scan("touchard_k0", range(2, 21))
        assert [r.n for r in reports] == list(range(2, 21))
        assert certs
        assert all(not oracles.is_prime(c.n) for c in certs)

    def test_primes_only_give_no_certificates(self):
        primes = [p for p in range(2, 60) if oracles.is_prime(p)]
        for name, fam in FAMILIES.items():
            ns = [p for p in primes if p >= max(fam.min_n, 3)]
            assert scan(name, ns)[1] == []

    def test_deterministic_order(self):
        reports, _ = scan("euler", [9, 3, 5, 3])
        assert [r.n for r in reports] == [3, 5, 9]

    def test_bound_error_names_limit(self):
        with pytest.raises(ScanBoundError) as exc:
            scan("poly3", range(3, 40), order_cap=20)
        assert exc.value.bound == 20
        assert "20" in str(exc.value)

    def test_env_cap(self, monkeypatch):
        monkeypatch.setenv("COMPOSITAE_MAX_ORDER", "10")
        with pytest.raises(ScanBoundError):
            scan("touchard_k0", range(2, 12))

    def test_below_min_n(self):
        with pytest.raises(ValueError):
            scan("touchard_k0", [1, 2])

    def test_user_egf_family(self):
        fam = egf_family("demo", builtin("poly3", 13))
        reports, certs = scan(fam, range(1, 14))
        assert [str(r.value) for r in reports] == PAPER_POLY3
        with pytest.raises(ScanBoundError):
            scan(fam, range(3, 15))

    def test_touchard_general_family(self):
        reports, certs = scan(touchard_general_family(3), range(2, 30))
        assert all(not oracles.is_prime(c.n) for c in certs)

    def test_unknown_family(self):
        with pytest.raises(KeyError):
            scan("nope", [3])


PRIMES_200 = [p for p in range(2, 201) if oracles.is_prime(p)]


@pytest.mark.parametrize("name, bound", [("touchard_k0", 200), ("euler", 200), ("poly3", 100), ("expm1", 100), ("artanh", 100), ("sin", 100)])
def test_soundness_on_primes(name, bound):
    ns = [p for p in PRIMES_200 if p <= bound and p >= FAMILIES[name].min_n]
    reports, certs = scan(name, ns)
    assert all(r.is_integer for r in reports)
    assert certs == []


def test_one_sidedness_recorded():
    # composites with an integer value, n <= 60; nothing is claimed about the others
    passing = {}
    for name in FAMILIES:
        reports, _ = scan(name, range(max(FAMILIES[name].min_n, 3), 61))
        passing[name] = [r.n for r in reports if r.is_integer and not oracles.is_prime(r.n)]
    assert passing["euler"] == [4, 8, 16, 32]
    assert passing["poly3"] == [25, 35, 49, 55]
    assert passing["sin"] == [4, 8, 16, 18, 24, 32, 48]
