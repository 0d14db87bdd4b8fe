import json
import math

import pytest

from zmcenter import realiser
from zmcenter.config import Bounds
from zmcenter.errors import BoundExceededError, CertificateError
from zmcenter.numtheory import factorize


class TestRealise:
    def test_trivial(self):
        cert = realiser.realise(1)
        assert cert.N == 1 and cert.factors == ()

    def test_prime_power_fixture(self):
        cert = realiser.realise(4)
        assert len(cert.factors) == 1
        f = cert.factors[0]
        assert (f.q, f.alpha, f.p, f.r) == (2, 2, 5, 2)
        t = f.triple()
        assert (t.m, t.n, t.r) == (5, 16, 2)

    def test_two_factor_fixture(self):
        cert = realiser.realise(12)
        assert [(f.q, f.alpha, f.p) for f in cert.factors] == [(2, 2, 5), (3, 1, 7)]
        triples = cert.triples()
        assert math.prod(t.order for t in triples) == 5040

    def test_auxiliary_primes_avoid_all_base_primes(self):
        # the q = 2 factor of N = 6 cannot take p = 3 since 3 divides 6
        cert = realiser.realise(6)
        assert [f.p for f in cert.factors] == [5, 7]

    def test_deterministic(self):
        for n in (1, 7, 12, 30):
            assert realiser.realise(n) == realiser.realise(n)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            realiser.realise(0)

    def test_factor_l_orders_multiply_to_n(self):
        from zmcenter import abscenter

        for n in range(1, 31):
            cert = realiser.realise(n)
            orders = [
                abscenter.absolute_center_formula(t).order for t in cert.triples()
            ]
            assert math.prod(orders) == n
            for t, f in zip(cert.triples(), cert.factors):
                assert t.regime_guaranteed
                assert t.d == f.q_pow


class TestCertificateValidation:
    def test_emitted_certificates_revalidate(self):
        for n in (1, 2, 9, 16, 30):
            realiser.validate_certificate(realiser.realise(n))

    def test_bad_decomposition_rejected(self):
        good = realiser.realise(4).factors[0]
        with pytest.raises(CertificateError):
            realiser.validate_certificate(realiser.RealiserCertificate(N=8, factors=(good,)))

    def test_colliding_primes_rejected(self):
        bad = realiser.FactorWitness(q=2, alpha=2, p=2, r=1)
        with pytest.raises(CertificateError):
            realiser.validate_certificate(realiser.RealiserCertificate(N=4, factors=(bad,)))

    def test_wrong_order_rejected(self):
        bad = realiser.FactorWitness(q=2, alpha=2, p=5, r=4)  # o_5(4) = 2, not 4
        with pytest.raises(CertificateError):
            realiser.validate_certificate(realiser.RealiserCertificate(N=4, factors=(bad,)))

    def test_json_roundtrip(self):
        for n in (1, 4, 12, 30):
            cert = realiser.realise(n)
            text = cert.to_json()
            again = realiser.RealiserCertificate.from_json(text)
            assert again == cert
            assert again.to_json() == text

    def test_json_schema_field(self):
        doc = realiser.realise(12).as_json_dict()
        assert doc["schema"] == 1
        with pytest.raises(CertificateError):
            realiser.RealiserCertificate.from_json_dict({**doc, "schema": 2})


class TestSubgroupForDivisor:
    def test_full_divisor_gives_the_factors_back(self):
        cert = realiser.realise(12)
        triples = realiser.subgroup_for_divisor(cert, 12)
        assert [(t.m, t.n, t.r) for t in triples] == [
            (t.m, t.n, t.r) for t in cert.triples()
        ]

    def test_unit_divisor_gives_trivial_absolute_centers(self):
        from zmcenter import abscenter

        cert = realiser.realise(12)
        for t in realiser.subgroup_for_divisor(cert, 1):
            assert t.d == t.n  # b-part shrunk to q^alpha
            assert abscenter.absolute_center_formula(t).order == 1

    def test_intermediate_divisor(self):
        from zmcenter import abscenter

        cert = realiser.realise(12)
        triples = realiser.subgroup_for_divisor(cert, 2)
        assert [(t.m, t.n) for t in triples] == [(5, 8), (7, 3)]
        assert [abscenter.absolute_center_formula(t).order for t in triples] == [2, 1]

    def test_non_divisor_rejected(self):
        cert = realiser.realise(12)
        with pytest.raises(ValueError):
            realiser.subgroup_for_divisor(cert, 5)


class TestVerifyForward:
    def test_small_fixtures_pass(self):
        for n in (1, 4, 12):
            cert = realiser.realise(n)
            rows = realiser.verify_forward(cert)
            assert [row.divisor for row in rows] == factorize(n).divisors()
            assert all(row.passed for row in rows)
            assert {row.formula_product for row in rows} == set(factorize(n).divisors())

    def test_oracle_cross_checks_ran_for_small_factors(self):
        rows = realiser.verify_forward(realiser.realise(4))
        for row in rows:
            for fr in row.factors:
                assert fr.oracle_order is not None
                assert fr.agree is True

    def test_formula_only_rows_are_marked(self):
        # N = 25 forces factors of order 101 * 5^k > 2000
        rows = realiser.verify_forward(realiser.realise(25))
        assert all(row.passed for row in rows)
        big = [fr for row in rows for fr in row.factors if fr.triple.order > 2000]
        assert big and all(fr.oracle_order is None and fr.agree is None for fr in big)


class TestVerifyConverse:
    def test_n2_full_scan(self):
        cert = realiser.realise(2)
        factor_rows, full_row = realiser.verify_converse(cert)
        assert len(factor_rows) == 1
        row = factor_rows[0]
        assert (row.triple.m, row.triple.n, row.triple.r) == (3, 4, 2)
        assert len(row.scans) == 8  # dicyclic group of order 12
        assert row.passed
        assert all(s.l_cyclic and 2 % s.l_order == 0 for s in row.scans)
        assert full_row.scanned and full_row.passed

    def test_n12_factor_scans(self):
        cert = realiser.realise(12)
        factor_rows, full_row = realiser.verify_converse(cert)
        assert [row.triple.order for row in factor_rows] == [80, 63]
        assert [len(row.scans) for row in factor_rows] == [18, 12]
        assert all(row.passed for row in factor_rows)
        assert not full_row.scanned  # order 5040 is far above the bounds
        assert full_row.passed

    def test_bound_exceeded_is_reported(self):
        cert = realiser.realise(4)
        with pytest.raises(BoundExceededError):
            realiser.verify_converse(cert, Bounds(aut=10))


class TestVerifyReport:
    def test_overall_pass_and_json(self):
        report = realiser.verify(realiser.realise(12), converse=True)
        assert report.passed
        doc = report.as_json_dict()
        assert doc["schema"] == 1 and doc["pass"] is True
        assert len(doc["forward_results"]) == 6
        assert len(doc["converse_results"]) == 2
        text = report.to_json()
        assert json.loads(text) == doc

    def test_forward_only_report_has_null_converse(self):
        report = realiser.verify(realiser.realise(4), converse=False)
        doc = report.as_json_dict()
        assert doc["converse_results"] is None
        assert doc["full_product"] is None
