import json

import jsonschema
import pytest

from zmcenter import cli, schemas


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestAbscenter:
    def test_classic_fixture_text(self, capsys):
        code, out, _ = run(capsys, "abscenter", "5", "16", "2")
        assert code == 0
        assert "d = 4" in out and "e = 1" in out
        assert "L = <b^4>  order 4" in out
        assert "agrees: yes" in out

    def test_classic_fixture_json(self, capsys):
        code, out, _ = run(capsys, "abscenter", "5", "48", "2", "--json")
        assert code == 0
        doc = json.loads(out)
        jsonschema.validate(doc, schemas.ABSCENTER_SCHEMA)
        assert doc["d"] == 4 and doc["e"] == 3
        assert doc["formula_order"] == 4 and doc["center_order"] == 12
        assert doc["equals_center"] is False
        assert doc["oracle_order"] == 4 and doc["agree"] is True

    def test_invalid_triple_is_usage_error(self, capsys):
        code, _, err = run(capsys, "abscenter", "3", "6", "2")
        assert code == 2
        assert "gcd" in err


class TestAut:
    def test_count_only(self, capsys):
        code, out, _ = run(capsys, "aut", "5", "16", "2", "--count-only")
        assert code == 0
        assert "|Aut| = 80" in out and "|Inn| = 20" in out and "|Out| = 4" in out

    def test_family_listing(self, capsys):
        code, out, _ = run(capsys, "aut", "5", "4", "2", "--family", "central")
        assert code == 0
        assert "1 automorphisms" in out

    def test_family_json(self, capsys):
        code, out, _ = run(capsys, "aut", "5", "16", "2", "--family", "inner", "--json")
        assert code == 0
        doc = json.loads(out)
        assert doc["count"] == 20
        assert len(doc["triples"]) == 20


class TestRealise:
    def test_trivial(self, capsys):
        code, out, _ = run(capsys, "realise", "1")
        assert code == 0
        assert "trivial" in out

    def test_json_schema(self, capsys):
        code, out, _ = run(capsys, "realise", "12", "--json")
        assert code == 0
        doc = json.loads(out)
        jsonschema.validate(doc, schemas.CERTIFICATE_SCHEMA)
        assert doc["N"] == 12

    def test_byte_identical_json(self, capsys):
        _, out1, _ = run(capsys, "realise", "30", "--json")
        _, out2, _ = run(capsys, "realise", "30", "--json")
        assert out1 == out2


class TestVerify:
    def test_forward_pass(self, capsys):
        code, out, _ = run(capsys, "verify", "12")
        assert code == 0
        assert "overall: PASS" in out

    def test_converse_json_schema(self, capsys):
        code, out, _ = run(capsys, "verify", "12", "--converse", "--json")
        assert code == 0
        doc = json.loads(out)
        jsonschema.validate(doc, schemas.REPORT_SCHEMA)
        assert doc["pass"] is True
        assert doc["converse_results"] is not None

    def test_report_json_is_deterministic(self, capsys):
        _, out1, _ = run(capsys, "verify", "6", "--json")
        _, out2, _ = run(capsys, "verify", "6", "--json")
        assert out1 == out2


class TestOracleCheck:
    def test_agreement_case(self, capsys):
        code, out, _ = run(capsys, "oracle-check", "5", "16", "2")
        assert code == 0
        assert "AGREE" in out

    def test_disagreement_probe(self, capsys):
        code, out, _ = run(capsys, "oracle-check", "7", "6", "2")
        assert code == 1
        assert "DISAGREE" in out

    def test_disagreement_probe_json(self, capsys):
        code, out, _ = run(capsys, "oracle-check", "7", "6", "2", "--json")
        assert code == 1
        doc = json.loads(out)
        assert doc["l_formula"] == 1
        assert doc["l_oracle"] == 2  # the ground truth
        assert doc["l_bruteforce"] == 2
        assert doc["aut_formula"] == 84 and doc["aut_enumerated"] == 42
        assert doc["aut_bruteforce"] == 42 and doc["aut_sets_match"] is True
        assert doc["agree"] is False


class TestUsage:
    def test_unknown_command_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["frobnicate"])
        assert exc.value.code == 2

    def test_nonpositive_n_is_usage_error(self, capsys):
        code, _, err = run(capsys, "realise", "0")
        assert code == 2
        assert "N must be >= 1" in err


class TestBoundExits:
    def test_scan_bound_exceeded_exits_3(self, capsys):
        code, _, err = run(capsys, "verify", "4", "--converse", "--aut-bound", "10")
        assert code == 3
        assert "exceeds the scan bounds" in err

    def test_prime_budget_exhausted_exits_3(self, capsys):
        code, _, err = run(capsys, "realise", "4", "--prime-budget", "0")
        assert code == 3
        assert "no admissible prime" in err

    def test_oracle_skipped_above_bound(self, capsys):
        # formula still answers; the oracle columns go null
        code, out, _ = run(capsys, "abscenter", "101", "625", "16", "--json")
        assert code == 0
        doc = json.loads(out)
        assert doc["formula_order"] == 25
        assert doc["oracle_order"] is None and doc["agree"] is None
