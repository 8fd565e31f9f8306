import json
import random
import subprocess
import sys
from fractions import Fraction

import jsonschema
import pytest

from qweyl.cli import act_cmd, main, reduce_cmd
from qweyl.expr import (Add, Div, EvalError, Gen, Mul, Neg, Num, ParseError, Pow, QSym, Sub,
                        evaluate, index_bounds, parse, to_source)
from qweyl.weyl import AlgebraSpec, format_element

REPORT_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["suite", "params", "checks", "elapsed_ms"],
    "properties": {
        "suite": {"type": "string"},
        "params": {
            "type": "object",
            "additionalProperties": False,
            "required": ["m", "n", "k", "l", "max_deg", "seed"],
            "properties": {
                "m": {"type": "integer"},
                "n": {"type": "integer"},
                "k": {"type": ["integer", "null"]},
                "l": {"type": ["integer", "null"]},
                "max_deg": {"type": "integer"},
                "seed": {"type": "integer"},
            },
        },
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["id", "status", "witness"],
                "properties": {
                    "id": {"type": "string"},
                    "status": {"enum": ["pass", "fail"]},
                    "witness": {"type": ["string", "null"]},
                },
            },
        },
        "elapsed_ms": {"type": "number"},
    },
}


# parsing ------------------------------------------------------------------

def test_parse_examples():
    assert parse("d[1,1]*t[1,1]") == Mul(Gen("d", 1, 1), Gen("t", 1, 1))
    assert parse("q^2*t[1,1]*d[1,1] + 1") == Add(
        Mul(Mul(Pow(QSym(), 2), Gen("t", 1, 1)), Gen("d", 1, 1)), Num(Fraction(1)))


def test_precedence_and_associativity():
    assert parse("t[1,1] - t[1,2] - q") == Sub(Sub(Gen("t", 1, 1), Gen("t", 1, 2)), QSym())
    assert parse("q*q^3") == Mul(QSym(), Pow(QSym(), 3))
    assert parse(" ( q + 1 ) ^ 2 ") == Pow(Add(QSym(), Num(Fraction(1))), 2)
    assert parse("3/4*q") == Mul(Num(Fraction(3, 4)), QSym())
    assert parse("-2") == Num(Fraction(-2))
    assert parse("-q") == Neg(QSym())
    assert parse("t[1,1]/q") == Div(Gen("t", 1, 1), QSym())
    assert parse("q^-2") == Pow(QSym(), -2)


@pytest.mark.parametrize("src,offset,fragment", [
    ("t[0,1]", 2, "index must be ≥ 1"),
    ("t[1,0]", 4, "index must be ≥ 1"),
    ("t[1,1] t[1,2]", 7, "unexpected"),
    ("t[1,1]*", 7, "end of input"),
    ("q^", 2, "unsigned integer"),
    ("(q+1", 4, "expected ')'"),
    ("x", 0, "unexpected 'x'"),
    ("1/0", 2, "zero denominator"),
])
def test_parse_errors_carry_byte_offsets(src, offset, fragment):
    with pytest.raises(ParseError) as info:
        parse(src)
    assert info.value.offset == offset
    assert fragment in info.value.message


def test_offsets_count_bytes_not_characters():
    with pytest.raises(ParseError) as info:
        parse("q*é")
    assert info.value.offset == 2


def test_index_bounds_and_eval_errors():
    assert index_bounds(parse("t[1,3]*d[2,1] + q")) == (2, 3)
    with pytest.raises(EvalError):
        evaluate(parse("t[3,1]"), AlgebraSpec(2, 2))
    with pytest.raises(EvalError):
        evaluate(parse("q/t[1,1]"), AlgebraSpec(1, 1))
    with pytest.raises(EvalError):
        evaluate(parse("t[1,1]^-1"), AlgebraSpec(1, 1))
    with pytest.raises(EvalError):
        evaluate(parse("q/(q-q)"), AlgebraSpec(1, 1))


def _random_tree(rng, depth, m, n):
    if depth == 0 or rng.random() < 0.3:
        choice = rng.randrange(4)
        if choice == 0:
            return Gen("t", rng.randint(1, m), rng.randint(1, n))
        if choice == 1:
            return Gen("d", rng.randint(1, m), rng.randint(1, n))
        if choice == 2:
            return QSym()
        return Num(Fraction(rng.randint(-3, 3), rng.randint(1, 3)))
    op = rng.choice([Add, Sub, Mul, Mul, Pow, Neg])
    if op is Pow:
        return Pow(_random_tree(rng, depth - 1, m, n), rng.randint(0, 2))
    if op is Neg:
        return Neg(_random_tree(rng, depth - 1, m, n))
    return op(_random_tree(rng, depth - 1, m, n), _random_tree(rng, depth - 1, m, n))


def test_round_trip_of_printed_forms():
    rng = random.Random(0)
    spec = AlgebraSpec(2, 2)
    for _ in range(200):
        tree = _random_tree(rng, 3, 2, 2)
        value = evaluate(tree, spec)
        assert evaluate(parse(to_source(tree)), spec) == value
        assert evaluate(parse(format_element(value)), spec) == value


# commands -----------------------------------------------------------------

def test_documented_command_outputs():
    assert reduce_cmd("d[1,1]*t[1,1]", 1, 1) == "1 + q^2*t[1,1]*d[1,1]"
    assert act_cmd("d[1,1]", "t[1,1]^2") == "(1+q^2)*t[1,1]"
    assert reduce_cmd("t[1,1]") == "t[1,1]"
    assert reduce_cmd("d[1,1]*t[1,1]", 1, 1, graded=True) == "q^2*t[1,1]*d[1,1]"


def test_act_rejects_differential_second_argument():
    with pytest.raises(EvalError):
        act_cmd("d[1,1]", "d[1,1]")


def test_main_output_and_exit_codes(capsys):
    assert main(["reduce", "--m", "1", "--n", "1", "d[1,1]*t[1,1]"]) == 0
    assert capsys.readouterr().out == "1 + q^2*t[1,1]*d[1,1]\n"
    assert main(["act", "--m", "1", "--n", "1", "d[1,1]", "t[1,1]^2"]) == 0
    assert capsys.readouterr().out == "(1+q^2)*t[1,1]\n"
    assert main(["reduce", "t[0,1]"]) == 2
    assert "index must be ≥ 1 at byte 2" in capsys.readouterr().err
    assert main(["reduce", "--m", "1", "--n", "1", "t[2,1]"]) == 2
    assert main(["verify", "--suite", "no-such", "--m", "2", "--n", "2"]) == 2
    assert "unknown suite" in capsys.readouterr().err
    assert main(["verify", "--suite", "thmA-commutation", "--m", "9", "--n", "2"]) == 2
    with pytest.raises(SystemExit) as info:
        main(["reduce", "--m", "0", "t[1,1]"])
    assert info.value.code == 2


def test_verify_json_is_schema_valid_and_stable(capsys):
    argv = ["verify", "--suite", "thmA-commutation", "--m", "2", "--n", "2", "--json"]
    assert main(argv) == 0
    first = json.loads(capsys.readouterr().out)
    jsonschema.validate(first, REPORT_SCHEMA)
    assert main(argv) == 0
    second = json.loads(capsys.readouterr().out)
    first.pop("elapsed_ms"), second.pop("elapsed_ms")
    assert first == second
    assert first["params"] == {"m": 2, "n": 2, "k": None, "l": None, "max_deg": 2, "seed": 0}


def test_verify_text_is_byte_stable(capsys):
    argv = ["verify", "--suite", "rtt-pairing", "--m", "2", "--n", "2", "--seed", "5"]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    assert capsys.readouterr().out == first
    assert first.startswith("suite rtt-pairing (m=2 n=2 k=- l=- max_deg=3 seed=5)\n")
    assert first.rstrip().endswith("checks passed")


def test_suites_listing(capsys):
    assert main(["suites"]) == 0
    names = [line.split()[0] for line in capsys.readouterr().out.splitlines()]
    assert names == ["pbw-confluence", "pbw-dimension", "action-laws", "thmA-commutation",
                     "polarization-invariance", "cartan-formulas", "capelli-annihilator",
                     "schur-identity", "gamma-homomorphism", "thmC-generation", "eta-symmetry",
                     "rtt-pairing"]


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qweyl.cli", "reduce", "t[1,1]"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "t[1,1]\n"
