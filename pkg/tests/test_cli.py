"""The command-line interface: outputs, exit codes, JSON round-trips."""

from __future__ import annotations

import json

import pytest

from excess_kit.cli import run
from excess_kit.reports import canonical_json

S4_FAMILY_G2_E8 = "ambient: s4\n[surface]\ngenus: 2\neuler_number: 8\nclass:\n"
S4_FAMILY_G1_E2 = "ambient: s4\n[surface]\ngenus: 1\neuler_number: 2\nclass:\n"
S4_PLANE_E4 = "ambient: s4\n[surface]\ngenus: 1\neuler_number: 4\nclass:\n"
MIXED = (
    "ambient: s4\n[surface]\ngenus: 1\neuler_number: 2\nclass:\n"
    "[surface]\ngenus: 1\neuler_number: -2\nclass:\n"
)


def invoke(capsys, *argv: str) -> tuple[int, str, str]:
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def family_file(tmp_path, text: str, name: str = "family.txt") -> str:
    p = tmp_path / name
    p.write_text(text, encoding="utf-8")
    return str(p)


def test_massey(capsys):
    code, out, _ = invoke(capsys, "massey", "--genus", "2")
    assert code == 0
    assert out.strip() == "-4 0 4"


def test_massey_invalid_genus(capsys):
    code, _, err = invoke(capsys, "massey", "--genus", "0")
    assert code == 2
    assert "genus" in err


def test_catalog_list_and_show(capsys):
    code, out, _ = invoke(capsys, "catalog", "list")
    assert code == 0 and out.startswith("s4:")
    code, out, _ = invoke(capsys, "catalog", "show", "s4")
    assert code == 0
    assert "b_of_m: 0" in out
    code, _, err = invoke(capsys, "catalog", "show", "missing")
    assert code == 2 and "missing" in err


def test_bound(capsys):
    code, out, _ = invoke(capsys, "bound", "--manifold", "s4")
    assert code == 0
    assert "d_of_m: 0" in out and "b_of_m: 0" in out


def test_check_obstructed_exit_one(tmp_path, capsys):
    path = family_file(tmp_path, S4_FAMILY_G2_E8)
    code, out, _ = invoke(capsys, "check", "--manifold", "s4", "--family", path)
    assert code == 1
    assert "verdict: Obstructed" in out


def test_check_bound_satisfied_exit_zero(tmp_path, capsys):
    path = family_file(tmp_path, S4_FAMILY_G1_E2)
    code, out, _ = invoke(capsys, "check", "--manifold", "s4", "--family", path)
    assert code == 0
    assert "verdict: BoundSatisfied" in out


def test_check_hypothesis_failure_exit_two(tmp_path, capsys):
    path = family_file(tmp_path, MIXED)
    code, out, _ = invoke(capsys, "check", "--manifold", "s4", "--family", path)
    assert code == 2
    assert "HypothesisFailure" in out and "same-sign" in out


def test_check_json_round_trips_and_matches_text(tmp_path, capsys):
    path = family_file(tmp_path, S4_FAMILY_G2_E8)
    code_json, out_json, _ = invoke(
        capsys, "check", "--manifold", "s4", "--family", path, "--format", "json"
    )
    document = json.loads(out_json)
    assert canonical_json(document) == out_json.rstrip("\n")
    code_text, out_text, _ = invoke(
        capsys, "check", "--manifold", "s4", "--family", path, "--format", "text"
    )
    assert code_json == code_text == 1
    assert document["verdict"] == "Obstructed"
    for step in document["trace"]:
        rendered = f"{step['label']}: {step['lhs']} {step['rel']} {step['rhs']}"
        assert rendered in out_text


def test_check_rejects_mismatched_ambient(tmp_path, capsys):
    other = tmp_path / "other.txt"
    other.write_text(
        "name: other\nsignature: 1\neuler_characteristic: 3\nb1_f2: 0\n",
        encoding="utf-8",
    )
    path = family_file(tmp_path, S4_FAMILY_G1_E2)
    code, _, err = invoke(
        capsys, "check", "--manifold", str(other), "--family", path
    )
    assert code == 2
    assert "ambient" in err


def test_audit_exit_codes(tmp_path, capsys):
    path = family_file(tmp_path, S4_PLANE_E4)
    code, out, _ = invoke(capsys, "audit", "--manifold", "s4", "--planes", path)
    assert code == 1
    assert "verdict: Obstructed" in out
    code, out, _ = invoke(
        capsys, "audit", "--manifold", "s4", "--planes", path, "--exact"
    )
    assert code == 1 and "zero-sum mode: exact" in out


def test_audit_rejects_small_euler(tmp_path, capsys):
    path = family_file(tmp_path, S4_FAMILY_G1_E2)
    code, _, err = invoke(capsys, "audit", "--manifold", "s4", "--planes", path)
    assert code == 2
    assert "|e|" in err


def test_audit_json(tmp_path, capsys):
    path = family_file(tmp_path, S4_PLANE_E4)
    code, out, _ = invoke(
        capsys, "audit", "--manifold", "s4", "--planes", path, "--format", "json"
    )
    assert code == 1
    document = json.loads(out)
    assert document["verdict"] == "Obstructed"
    assert document["subfamily_report"]["verdict"] == "Obstructed"
    assert canonical_json(document) == out.rstrip("\n")


def test_tube(tmp_path, capsys):
    text = (
        "ambient: s4\n[surface]\ngenus: 1\neuler_number: 2\nclass:\n"
        "[surface]\ngenus: 1\neuler_number: 2\nclass:\n"
    )
    path = family_file(tmp_path, text)
    code, out, _ = invoke(capsys, "tube", "--family", path)
    assert code == 0
    assert "genus: 2" in out and "euler_number: 4" in out
    assert "euler_characteristic: 0" in out


def test_cover(capsys):
    code, out, _ = invoke(
        capsys, "cover", "--manifold", "s4", "--genus", "1", "--euler", "2"
    )
    assert code == 0
    assert "sigma_n: -1" in out and "chi_n: 3" in out
    assert "ramification_euler: 1" in out


def test_cover_odd_euler(capsys):
    code, _, err = invoke(
        capsys, "cover", "--manifold", "s4", "--genus", "1", "--euler", "3"
    )
    assert code == 2 and "odd" in err


def test_cover_nonzero_class(tmp_path, capsys):
    profile = tmp_path / "p.txt"
    profile.write_text(
        "name: two\nsignature: 0\neuler_characteristic: 4\nb1_f2: 0\n",
        encoding="utf-8",
    )
    code, _, err = invoke(
        capsys,
        "cover", "--manifold", str(profile),
        "--genus", "1", "--euler", "2", "--class", "10",
    )
    assert code == 2 and "nonzero" in err


def test_zerosum_constructive_and_exact(tmp_path, capsys):
    vectors = tmp_path / "v.txt"
    vectors.write_text("10\n01\n11\n", encoding="utf-8")
    code, out, _ = invoke(capsys, "zerosum", "--vectors", str(vectors))
    assert code == 0 and out.strip() == "{1,2,3}"
    code, out, _ = invoke(capsys, "zerosum", "--vectors", str(vectors), "--exact")
    assert code == 0 and out.strip() == "{1,2,3}"


def test_zerosum_effort_exceeded(tmp_path, capsys):
    vectors = tmp_path / "v.txt"
    vectors.write_text("\n".join("10" for _ in range(12)) + "\n", encoding="utf-8")
    code, _, err = invoke(
        capsys, "zerosum", "--vectors", str(vectors), "--exact", "--effort", "16"
    )
    assert code == 2
    assert "budget" in err


def test_missing_file_is_exit_two(capsys):
    code, _, err = invoke(
        capsys, "check", "--manifold", "s4", "--family", "/no/such/file"
    )
    assert code == 2 and err


def test_parse_error_names_field_and_line(tmp_path, capsys):
    path = family_file(
        tmp_path, "ambient: s4\n[surface]\ngenus: 1\neuler_number: 2\nklass:\n"
    )
    code, _, err = invoke(capsys, "check", "--manifold", "s4", "--family", path)
    assert code == 2
    assert "klass" in err and ":5:" in err


def test_usage_error_exit_two(capsys):
    assert run(["check"]) == 2
    capsys.readouterr()


def test_no_floats_anywhere_in_json(tmp_path, capsys):
    path = family_file(tmp_path, S4_PLANE_E4)
    _, out, _ = invoke(
        capsys, "audit", "--manifold", "s4", "--planes", path, "--format", "json"
    )

    def walk(node):
        assert not isinstance(node, float)
        if isinstance(node, dict):
            for v in node.values():
                walk(v)
        elif isinstance(node, list):
            for v in node:
                walk(v)

    walk(json.loads(out))
