import json

import pytest

from qgha.cli import main, run


def write_algebra(tmp_path, name, data):
    path = tmp_path / name
    path.write_text(json.dumps(data), encoding="utf-8")
    return str(path)


@pytest.fixture
def q1_h2_h(tmp_path):
    return write_algebra(
        tmp_path,
        "a.json",
        {"field": {"type": "Q"}, "q": "1", "f": ["0", "0", "1"], "g": ["0", "1"]},
    )


@pytest.fixture
def q2_h2_h(tmp_path):
    return write_algebra(
        tmp_path,
        "b.json",
        {"field": {"type": "Q"}, "q": "2", "f": ["0", "0", "1"], "g": ["0", "1"]},
    )


@pytest.fixture
def linear(tmp_path):
    return write_algebra(
        tmp_path,
        "lin.json",
        {"field": {"type": "Q"}, "q": "1", "f": ["0", "1"], "g": ["0", "1"]},
    )


def test_analyze(q1_h2_h):
    result = run(["analyze", q1_h2_h])
    assert result.exit_code == 0
    assert result.payload == (
        "domain: true (q != 0 and deg f >= 1)\n"
        "noetherian: false (deg f != 1)\n"
        "gdua: false\n"
        "center: undetermined (q has finite order but sigma(a) - q*a = g"
        " has no polynomial solution)\n"
    )


def test_analyze_scalars_only_center(q2_h2_h):
    result = run(["analyze", q2_h2_h])
    assert result.exit_code == 0
    assert "center: scalars only (q is not a root of unity)" in result.payload


def test_mul_and_oracle_flag(q2_h2_h):
    fast = run(["mul", q2_h2_h, "y", "x"])
    assert fast.exit_code == 0
    assert fast.payload == "2*x*y + h\n"
    oracle = run(["mul", q2_h2_h, "y", "x", "--oracle"])
    assert oracle.payload == fast.payload


def test_deg(q2_h2_h):
    assert run(["deg", q2_h2_h, "x^2*h*y + h^3"]).payload == "(2, 1)\n"
    assert run(["deg", q2_h2_h, "0"]).payload == "(-inf, -inf)\n"


def test_iota(q2_h2_h):
    assert run(["iota", q2_h2_h, "x^2*h*y"]).payload == "x*h*y^2\n"


def test_iso_witness_and_negative(tmp_path, q2_h2_h):
    shifted = write_algebra(
        tmp_path,
        "shifted.json",
        {
            "field": {"type": "Q"},
            "q": "2",
            "f": ["2", "-2", "1"],  # f(h-1)+1
            "g": ["-1", "1"],  # g(h-1)
        },
    )
    result = run(["iso", q2_h2_h, shifted])
    assert result.exit_code == 0
    witness = json.loads(result.payload)
    assert witness == {
        "u": "1",
        "v": "1",
        "c": "1",
        "decomposition": {"alpha": "1", "lambda": "1", "lambda_mu": "1"},
    }
    other = write_algebra(
        tmp_path,
        "other.json",
        {"field": {"type": "Q"}, "q": "3", "f": ["0", "0", "1"], "g": ["0", "1"]},
    )
    assert run(["iso", q2_h2_h, other]).payload == "not isomorphic\n"


def test_iso_regime_exit_code(linear):
    result = run(["iso", linear, linear])
    assert result.exit_code == 3
    assert "q != 0 and deg f >= 2" in result.error


def test_aut(q2_h2_h):
    result = run(["aut", q2_h2_h])
    assert result.exit_code == 0
    data = json.loads(result.payload)
    assert data == {
        "abelian": True,
        "char_caveat": False,
        "finite_part": [{"a": "1", "b": "0"}],
        "regime": "g_nonzero",
        "torus_rank": 1,
    }


def test_center(tmp_path):
    path = write_algebra(
        tmp_path,
        "c.json",
        {"field": {"type": "Q"}, "q": "-1", "f": ["0", "0", "1"], "g": ["0", "1", "1"]},
    )
    result = run(["center", path])
    data = json.loads(result.payload)
    assert data["kind"] == "polynomial_in_z_ell"
    assert data["ell"] == 2
    assert data["a"] == ["0", "1"]
    assert data["z"] == "-1*x*y + h"


def test_gk_csv(linear):
    result = run(["gk", linear, "--max-n", "3"])
    assert result.exit_code == 0
    lines = result.payload.strip().split("\n")
    assert lines[0] == "n,dim,slope"
    assert lines[1] == "0,1,"
    assert lines[2] == "1,4,"
    assert lines[3].startswith("2,10,")
    assert lines[4].startswith("3,20,")


def test_noeth_witness(q1_h2_h):
    result = run(["noeth-witness", q1_h2_h, "--depth", "4"])
    data = json.loads(result.payload)
    assert data["beta"] == "0"
    assert data["depth"] == 4
    assert data["verified"] is True
    assert len(data["checks"]) == 5
    assert all(c["sigma_powers_divisible"] and c["h_not_divisible"] for c in data["checks"])


def test_noeth_witness_regime(linear):
    assert run(["noeth-witness", linear, "--depth", "3"]).exit_code == 3


def test_convert_from_downup(tmp_path):
    result = run(["convert", "--from-downup", "2", "-1", "0"])
    assert result.exit_code == 0
    assert json.loads(result.payload) == {
        "field": {"type": "Q"},
        "q": "1",
        "f": ["0", "1"],
        "g": ["0", "1"],
    }
    assert result.note == ""


def test_convert_from_downup_orderings():
    first = run(["convert", "--from-downup", "0", "1", "0"])
    assert json.loads(first.payload)["q"] == "1"
    assert json.loads(first.payload)["f"] == ["0", "-1"]
    assert "two root orderings" in first.note
    second = run(["convert", "--from-downup", "0", "1", "0", "--choice", "1"])
    assert json.loads(second.payload)["q"] == "-1"
    assert json.loads(second.payload)["f"] == ["0", "1"]


def test_convert_from_downup_non_split():
    result = run(["convert", "--from-downup", "0", "-1", "0"])
    assert result.exit_code == 3
    assert "no roots" in result.error


def test_convert_gdua_round_trip(tmp_path):
    result = run(["convert", "--from-gdua", "0,0,1", "1", "1", "0"])
    assert result.exit_code == 0
    data = json.loads(result.payload)
    assert data == {
        "field": {"type": "Q"},
        "q": "1",
        "f": ["0", "1"],
        "g": ["0", "0", "-1"],
    }
    path = write_algebra(tmp_path, "g.json", data)
    back = run(["convert", "--to-gdua", path])
    assert json.loads(back.payload) == {"v": ["0", "0", "1"], "r": "1", "s": "1", "gamma": "0"}


def test_convert_to_gdua_wrong_degree(q2_h2_h):
    result = run(["convert", "--to-gdua", q2_h2_h])
    assert result.exit_code == 3
    assert "deg f" in result.error


def test_convert_over_prime_field():
    result = run(["convert", "--from-gdua", "0,1", "3", "2", "6", "--field", "Fp:7"])
    assert result.exit_code == 0
    data = json.loads(result.payload)
    assert data["field"] == {"type": "Fp", "p": 7}
    assert data["f"] == ["1", "3"]  # 3h - 6 = 3h + 1 mod 7
    assert data["g"] == ["0", "6"]  # -h mod 7


def test_exit_code_usage():
    assert run(["frobnicate"]).exit_code == 1
    assert run([]).exit_code == 1
    assert run(["mul"]).exit_code == 1
    assert run(["convert", "--from-downup", "1", "2", "3", "--field", "R"]).exit_code == 1


def test_exit_code_parse(tmp_path, q2_h2_h):
    assert run(["analyze", str(tmp_path / "missing.json")]).exit_code == 2
    bad_json = tmp_path / "bad.json"
    bad_json.write_text("{", encoding="utf-8")
    assert run(["analyze", str(bad_json)]).exit_code == 2
    missing_f = write_algebra(
        tmp_path, "nof.json", {"field": {"type": "Q"}, "q": "1", "g": ["0", "1"]}
    )
    assert run(["analyze", missing_f]).exit_code == 2
    not_prime = write_algebra(
        tmp_path,
        "p6.json",
        {"field": {"type": "Fp", "p": 6}, "q": "1", "f": ["0", "1"], "g": ["0", "1"]},
    )
    assert run(["analyze", not_prime]).exit_code == 2
    parse_err = run(["mul", q2_h2_h, "x**2", "y"])
    assert parse_err.exit_code == 2
    assert "position 2" in parse_err.error


def test_exit_code_capacity(q1_h2_h, monkeypatch):
    monkeypatch.setenv("QGHA_CAPACITY", "8")
    assert run(["gk", q1_h2_h, "--max-n", "20"]).exit_code == 4


def test_outputs_byte_identical(q1_h2_h, q2_h2_h):
    for argv in (
        ["analyze", q1_h2_h],
        ["mul", q2_h2_h, "y*x", "y*x + h"],
        ["aut", q2_h2_h],
        ["gk", q1_h2_h, "--max-n", "3"],
        ["noeth-witness", q1_h2_h, "--depth", "3"],
    ):
        first = run(argv)
        second = run(argv)
        assert first == second
        assert first.exit_code == 0


def test_main_writes_streams(q2_h2_h, capsys):
    code = main(["mul", q2_h2_h, "y", "x"])
    captured = capsys.readouterr()
    assert code == 0
    assert captured.out == "2*x*y + h\n"
    assert captured.err == ""
    code = main(["iso", q2_h2_h, q2_h2_h + ".missing"])
    captured = capsys.readouterr()
    assert code == 2
    assert captured.out == ""
    assert captured.err.startswith("error:")
