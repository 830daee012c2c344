import json
import re
import subprocess
import sys
from pathlib import Path

import pytest
from hypothesis import given

from combstab import ParseError, ValidationError
from combstab.cli import main
from combstab.instance import Instance, dumps_instance, loads_instance, parse_instance
from combstab.report import render_table, run_analyze

from helpers import instances, make

DATA = Path(__file__).parent / "data"
CORPUS = sorted((DATA / "corpus").glob("*.json"))
MALFORMED = sorted((DATA / "malformed").glob("*.json"))


def write(tmp_path, obj, name="inst.json"):
    path = tmp_path / name
    path.write_text(obj if isinstance(obj, str) else json.dumps(obj))
    return path


MINIMAL = {"n": 2, "genera": [1, 1], "rank": 1, "degrees": [2, 1], "l": 3, "kernel_ranks": [1, 1]}


def test_parse_minimal_matches_programmatic(tmp_path):
    inst = parse_instance(write(tmp_path, MINIMAL))
    curve, pair = make((1, 1), 1, 3, (2, 1), (1, 1))
    assert inst.curve == curve and inst.pair == pair
    assert tuple(inst) == (curve, pair)


def test_integer_strings_are_accepted(tmp_path):
    data = dict(MINIMAL, l="3", degrees=["2", 1])
    assert parse_instance(write(tmp_path, data)) == parse_instance(write(tmp_path, MINIMAL, "b"))


def test_section_dims_form(tmp_path):
    data = {k: v for k, v in MINIMAL.items() if k != "kernel_ranks"}
    data["section_dims"] = [2, 2]
    inst = parse_instance(write(tmp_path, data))
    assert inst.pair.kernel_ranks == (1, 1)
    assert json.loads(dumps_instance(inst)) == data


def test_validation_messages_name_the_field(tmp_path):
    with pytest.raises(ValidationError, match="l > r required"):
        parse_instance(write(tmp_path, dict(MINIMAL, l=1, kernel_ranks=[0, 0])))
    with pytest.raises(ValidationError) as info:
        parse_instance(write(tmp_path, dict(MINIMAL, genera=[1, 1, 1])))
    assert info.value.field == "genera"


def test_parse_errors(tmp_path):
    with pytest.raises(ParseError):
        parse_instance(write(tmp_path, "{"))
    with pytest.raises(ParseError):
        parse_instance(tmp_path / "missing.json")


@pytest.mark.parametrize("path", CORPUS, ids=[p.stem for p in CORPUS])
def test_corpus_round_trip(path):
    inst = parse_instance(path)
    text = dumps_instance(inst)
    assert loads_instance(text) == inst
    assert text == path.read_text()


@given(instances())
def test_round_trip_property(inst):
    for use_kernel_ranks in (True, False):
        original = Instance(*inst, use_kernel_ranks=use_kernel_ranks)
        assert loads_instance(dumps_instance(original)) == original


@pytest.mark.parametrize("path", MALFORMED, ids=[p.stem for p in MALFORMED])
def test_malformed_exit_codes(path, capsys):
    expected = 3 if path.name.startswith("p_") else 2
    assert main(["analyze", str(path)]) == expected
    assert main(["feasibility", str(path)]) == expected
    err = capsys.readouterr().err
    assert ("parse error" if expected == 3 else "validation error") in err


def test_missing_file_is_parse_error(tmp_path):
    assert main(["analyze", str(tmp_path / "nope.json")]) == 3


def test_analyze_machine_report(tmp_path, capsys):
    path = write(tmp_path, MINIMAL)
    assert main(["analyze", str(path), "--format", "machine", "--oracle-denominator", "8"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["schema_version"] == 1
    assert report["verdict"] == "StronglyUnstable"
    cert = report["feasibility"]["certificate"]
    assert cert["summary"] == "1*C1 + 1*C2 => 5 <= 4"
    assert [t["multiplier"] for t in cert["terms"]] == ["1", "1"]
    assert report["invariants"]["ratio"] == "3/2"
    assert report["oracle"] == {"denominator": 8, "status": "NoneFound", "witness": None,
                                "consistent": True}


def test_analyze_boundary_instance(tmp_path, capsys):
    path = write(tmp_path, dict(MINIMAL, degrees=[1, 1]))
    assert main(["analyze", str(path), "--format", "machine"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["verdict"] == "NotDisprovedByCatalog"
    assert report["feasibility"]["witness"] == ["1/2", "1/2"]
    assert report["feasibility"]["verdict_at_witness"] == "CatalogSemistableAt"
    assert [r["verdict"] for r in report["restriction_checks"]] == ["Unstable", "Unstable"]


def test_analyze_empty_catalog(tmp_path, capsys):
    path = write(tmp_path, dict(MINIMAL, kernel_ranks=[0, 0]))
    assert main(["analyze", str(path)]) == 0
    out = capsys.readouterr().out
    assert "(empty" in out and "Verdict: NotDisprovedByCatalog" in out


def test_table_with_certificate(tmp_path, capsys):
    path = write(tmp_path, MINIMAL)
    assert main(["analyze", str(path), "--certificate"]) == 0
    out = capsys.readouterr().out
    assert "certificate: 1*C1 + 1*C2 => 5 <= 4" in out
    assert "1 x [5*w1 <= 2]" in out


def test_feasibility_command(tmp_path, capsys):
    assert main(["feasibility", str(write(tmp_path, MINIMAL))]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out == {"schema_version": 1, "status": "Infeasible", "verdict": "StronglyUnstable"}


def test_grid_command(tmp_path, capsys):
    path = write(tmp_path, dict(MINIMAL, degrees=[1, 1]))
    assert main(["grid", str(path), "--denominator", "2"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["status"] == "FoundWitness" and out["witness"] == ["1/2", "1/2"]
    assert main(["grid", str(path), "--denominator", "1"]) == 2


NUMBER = re.compile(r"-?\d+(?:/\d+)?")


def _machine_numbers(obj, acc):
    if isinstance(obj, dict):
        for v in obj.values():
            _machine_numbers(v, acc)
    elif isinstance(obj, list):
        for v in obj:
            _machine_numbers(v, acc)
    elif isinstance(obj, bool) or obj is None:
        pass
    elif isinstance(obj, int):
        acc.add(str(obj))
    elif isinstance(obj, str):
        acc.update(NUMBER.findall(obj))
    return acc


@pytest.mark.parametrize("path", CORPUS, ids=[p.stem for p in CORPUS])
def test_table_numbers_are_in_machine_report(path):
    report = run_analyze(parse_instance(path), oracle_denominator=parse_instance(path).curve.n + 3)
    known = _machine_numbers(report, set())
    table = render_table(report, certificate=True)
    # drop identifiers such as w1, C2, M|C_i, p_a, n-1
    scrubbed = re.sub(r"[A-Za-z_|]+\d*", " ", table.replace("n-1", " ").replace("l-r", " "))
    for number in NUMBER.findall(scrubbed):
        assert number.lstrip("-") in {k.lstrip("-") for k in known}, number


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "combstab", "analyze",
                          str(CORPUS[0]), "--format", "machine"],
                         capture_output=True, text=True, check=True)
    assert json.loads(out.stdout)["schema_version"] == 1
