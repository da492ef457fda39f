import json
import subprocess
import sys

import pytest

from demival.cli import main, run_command

GOLDEN = [
    (["valuate", "--ring", "q", "--valuation", "divisor", "4/9"],
     '{"entries":[{"label":"p:2","exp":2},{"label":"p:3","exp":-2}]}'),
    (["pgen", "--ring", "q", "--gens", "2", "X"],
     '{"generator":"X^2 + 2","w":{"entries":[]},"cofactors":["2/(X^2 + 2)","X/(X^2 + 2)"],'
     '"coefficients":["1","X"],"certificate":[{"x":"2","y":"X","c":"1","d":"X","m":"X^2 + 2"}],'
     '"verified":true}'),
    (["ideal", "--ring", "quad:-5", "principal-search", "(2, 1+sqrt(-5))", "--bound", "100"],
     '{"principal":false}'),
]


@pytest.mark.parametrize("argv, expected", GOLDEN, ids=["valuate", "pgen", "principal-search"])
def test_golden(argv, expected):
    assert run_command(argv) == (0, expected)


def test_executable(capsys):
    out = subprocess.run([sys.executable, "-m", "demival.cli", *GOLDEN[0][0]],
                         capture_output=True, text=True, check=True)
    assert out.stdout.strip() == GOLDEN[0][1]


@pytest.mark.parametrize("argv, code, err", [
    (["valuate", "X^-1"], 2, "parse_error"),
    (["frobnicate"], 2, "usage"),
    (["factor", "X^7 + 1"], 1, "degree_bound"),
    (["valuate", "--ring", "quad:5", "2"], 1, "bad_ring"),
    (["ideal", "mul", "(2)", "(3)"], 1, "ring_mismatch"),
    (["valuate", "--factor-bound", "100", "1000003*1000033"], 1, "factor_bound"),
])
def test_error_codes(argv, code, err, monkeypatch):
    monkeypatch.delenv("DEMIVAL_FACTOR_BOUND", raising=False)
    got, text = run_command(argv)
    assert got == code
    assert json.loads(text)["error"]["code"] == err


def test_subcommands_json_and_text():
    cases = [
        ["content", "6*X^2 + 4*X + 10"],
        ["bezout", "2", "X"],
        ["cofactors", "--ring", "quad:-5", "2*X + 1 + sqrt(-5)"],
        ["contract", "--ring", "quad:-5", "--gens", "2*X + 1 + sqrt(-5)"],
        ["factor", "X^6 - 1"],
        ["ideal", "--ring", "quad:-5", "mul", "(2, 1+sqrt(-5))", "(2, 1-sqrt(-5))"],
        ["ideal", "--ring", "quad:-5", "inverse", "(2, 1+sqrt(-5))"],
        ["ideal", "--ring", "quad:-5", "add", "(2)", "(3)"],
        ["ideal", "--ring", "quad:-5", "member", "3", "(2, 1+sqrt(-5))"],
        ["reconstruct", "--valuation", "u", "(X^2 - 1)/6"],
        ["valuate", "--valuation", "t", "(X^2-1)/(X+1)^2"],
        ["valuate", "--ring", "quad:-5", "--valuation", "w", "(2*X + 1 + sqrt(-5))/3"],
    ]
    for argv in cases:
        code, text = run_command(argv)
        assert code == 0, (argv, text)
        json.loads(text)
        code, human = run_command(argv + ["--text"])
        assert code == 0 and human


def test_ideal_values():
    _, text = run_command(["ideal", "--ring", "quad:-5", "mul", "(2, 1+sqrt(-5))", "(2, 1-sqrt(-5))"])
    assert json.loads(text)["ideal"]["generators"] == ["2"]
    _, text = run_command(["ideal", "--ring", "quad:-5", "member", "3", "(2, 1+sqrt(-5))"])
    assert json.loads(text) == {"member": False}


def test_check_is_reproducible():
    argv = ["check", "--seed", "11", "--samples", "5", "--suite", "axioms", "--suite", "dedekind"]
    first = run_command(argv)
    assert first[0] == 0
    assert run_command(argv) == first
    assert json.loads(first[1])["ok"] is True


def test_main_prints(capsys):
    assert main(GOLDEN[2][0]) == 0
    assert capsys.readouterr().out.strip() == GOLDEN[2][1]
