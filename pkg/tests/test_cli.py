import json
import subprocess
import sys

import pytest

from agroups.cli import main, parse_group_spec
from agroups.errors import BadParams
from agroups.groups import DEFAULT_ELEMENT_CAP


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "agroups", *args],
        capture_output=True,
        timeout=300,
    )


def test_no_command_is_bad_input(capsys):
    assert main([]) == 1
    capsys.readouterr()


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0
    out = capsys.readouterr().out
    assert "verify" in out and "search" in out and "decompose" in out


def test_decompose_help_documents_grammar(capsys):
    assert main(["decompose", "--help"]) == 0
    out = capsys.readouterr().out
    assert "semidirect(base, cyclic(K), scalar(M))" in out


def test_verify_bad_params(capsys):
    assert main(["verify", "5,2,3,1,4"]) == 1
    err = capsys.readouterr().err
    assert "6 does not divide 5^1 - 1 = 4" in err
    assert main(["verify", "5,2,3"]) == 1
    assert main(["verify", "1,2,3,4,5"]) == 1
    capsys.readouterr()


def test_verify_cap_exceeded(capsys):
    assert main(["verify", "5,2,3,2,4", "--cap", "100"]) == 3
    capsys.readouterr()


def test_verify_fixture1_json(capsys, tmp_path):
    out_file = tmp_path / "report.json"
    code = main(["verify", "5,2,3,2,4", "--json", "--out", str(out_file)])
    assert code == 0
    capsys.readouterr()
    raw = out_file.read_bytes()
    assert raw.endswith(b"\n") and b"\r" not in raw
    report = json.loads(raw.decode("utf-8"))
    assert list(report.keys()) == [
        "params",
        "order",
        "structure",
        "sylow",
        "factorizations",
        "a_prime",
        "steinitz",
    ]
    assert report["params"] == {"p": 5, "q": 2, "r": 3, "a": 2, "b": 4}
    assert report["order"] == 12000
    assert report["structure"]["derived_length"] == 2
    assert report["structure"]["centralizer_of_cr"] == {
        "order": 30,
        "expected_order": 30,
        "matches_coordinate_subgroup": True,
    }
    assert report["factorizations"] == []
    assert report["a_prime"]["value"] is False
    assert isinstance(report["a_prime"]["trace"], list)
    assert report["steinitz"]["all_checks_pass"] is True
    assert [row["prime"] for row in report["sylow"]] == [2, 3, 5]
    assert all(row["abelian"] and not row["normal"] for row in report["sylow"])
    ell3 = [r for r in report["steinitz"]["rows"] if r["ell"] == 3]
    assert all(r["exponent"] == {"num": 4000, "den": 1} for r in ell3)


def test_verify_text_output_mentions_key_fields(capsys):
    assert main(["verify", "5,2,3,2,4"]) == 0
    out = capsys.readouterr().out
    assert "order: 12000" in out
    assert "derived_length: 2" in out
    assert "all_checks_pass: true" in out


def test_search_text(capsys):
    assert main(["search", "--max-order", "30000"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines() == [
        "2,5,3,4,2 -> order 12000",
        "5,2,3,2,4 -> order 12000",
        "2,7,3,6,1 -> order 18816",
        "7,2,3,1,6 -> order 18816",
        "3,13,2,3,1 -> order 27378",
        "13,3,2,1,3 -> order 27378",
    ]


def test_search_json_and_empty(capsys):
    assert main(["search", "--max-order", "100", "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report == {"max_order": 100, "results": []}
    assert main(["search", "--max-order", "0"]) == 1
    capsys.readouterr()


def test_decompose_cyclic6(capsys):
    assert main(["decompose", "cyclic(6)", "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["order"] == 6
    assert report["primes"] == [2, 3]
    assert report["parts"] == [
        {"prime": 2, "order": 2},
        {"prime": 3, "order": 3},
    ]
    assert all(report["certificate"].values())


def test_decompose_product_fixture(capsys):
    spec = (
        "product(semidirect(field(5,2), cyclic(2), scalar(2)),"
        " semidirect(field(2,4), cyclic(5), scalar(5)))"
    )
    assert main(["decompose", spec, "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["order"] == 4000
    assert {p["prime"]: p["order"] for p in report["parts"]} == {2: 50, 5: 80}
    assert all(report["certificate"].values())


def test_decompose_family_shorthand_too_many_primes(capsys):
    assert main(["decompose", "5,2,3,2,4"]) == 2
    assert "TooManyPrimes" in capsys.readouterr().err
    assert main(["decompose", "family(5,2,3,2,4)"]) == 2
    capsys.readouterr()


def test_decompose_not_a_group(capsys):
    assert main(["decompose", "semidirect(cyclic(4), cyclic(4), scalar(2))"]) == 2
    assert "NotAGroup" in capsys.readouterr().err


def test_decompose_parse_errors(capsys):
    for spec in (
        "cyclic(6",
        "cyclic()",
        "nonsense(3)",
        "cyclic(6) extra",
        "product(cyclic(2))",
        "semidirect(product(cyclic(2), cyclic(3)), cyclic(2), scalar(2))",
        "semidirect(cyclic(5), cyclic(4), scalar(3))",
        "5,2,3,1,4",
        "cyclic(6)]",
    ):
        assert main(["decompose", spec]) == 1, spec
        capsys.readouterr()


def test_decompose_one_prime(capsys):
    assert main(["decompose", "cyclic(8)", "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["primes"] == [2]
    assert report["parts"][0] == {"prime": 2, "order": 8}
    assert report["parts"][1] == {"prime": None, "order": 1}


def test_parse_group_spec_shapes():
    g = parse_group_spec("product(cyclic(2), cyclic(3))", DEFAULT_ELEMENT_CAP)
    assert g.order == 6
    g = parse_group_spec("semidirect(cyclic(3), cyclic(4), scalar(2))", DEFAULT_ELEMENT_CAP)
    assert g.order == 12 and not g.is_abelian()
    g = parse_group_spec("field(3,3)", DEFAULT_ELEMENT_CAP)
    assert g.order == 27 and g.is_abelian()
    with pytest.raises(BadParams):
        parse_group_spec("cyclic(2,3)", DEFAULT_ELEMENT_CAP)


def test_cli_entry_point_subprocess():
    proc = run_cli("search", "--max-order", "12000")
    assert proc.returncode == 0
    lines = proc.stdout.decode().splitlines()
    assert lines == ["2,5,3,4,2 -> order 12000", "5,2,3,2,4 -> order 12000"]


def test_verify_json_byte_identical_across_processes():
    first = run_cli("verify", "5,2,3,2,4", "--json")
    second = run_cli("verify", "5,2,3,2,4", "--json")
    assert first.returncode == 0 and second.returncode == 0
    assert first.stdout == second.stdout
    assert first.stdout.endswith(b"\n")


def test_verify_fixture2_subprocess_exit_zero():
    proc = run_cli("verify", "13,3,2,1,3", "--json")
    assert proc.returncode == 0
    report = json.loads(proc.stdout.decode("utf-8"))
    assert report["order"] == 27378
    assert report["structure"]["centralizer_of_cr"]["order"] == 78
    assert report["steinitz"]["all_checks_pass"] is True
