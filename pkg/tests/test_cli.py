import io
import json
import random
import subprocess
import sys

import pytest

from helpers import random_cf, random_qi, random_word
from serret import DomainError, FiniteCF, ParseError, PeriodicCF, QuadraticIrrational, word_to_matrix
from serret import literals
from serret.cli import main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("text, fields", [
    ("(1+sqrt(5))/2", (1, 5, 2)),
    ("sqrt(2)", (0, 2, 1)),
    (" ( -3 + sqrt( 7 ) ) / -2 ", (-3, 7, -2)),
    ("(1+sqrt(3))", (1, 3, 1)),
])
def test_parse_qi(text, fields):
    x = literals.parse_qi(text)
    assert (x.P, x.D, x.Q) == fields


def test_parse_qi_errors():
    with pytest.raises(DomainError, match="rational"):
        literals.parse_qi("(0+sqrt(9))/1")
    with pytest.raises(ParseError) as exc:
        literals.parse_qi("(1+sqrt(5)/2")
    assert exc.value.pos == 10
    with pytest.raises(ParseError):
        literals.parse_qi("(1+sqrt(5))/2 extra")


@pytest.mark.parametrize("text, pre, per", [
    ("[1; (2)]", (1,), (2,)),
    ("[; (1)]", (), (1,)),
    ("[(1)]", (), (1,)),
    ("[-2; 1, 1, (2)]", (-2, 1, 1), (2,)),
    ("[1;1,(2,2)]", (1, 1), (2,)),
])
def test_parse_cf(text, pre, per):
    cf = literals.parse_cf(text)
    assert (cf.preperiod, cf.period) == (pre, per)


def test_parse_finite_cf_and_errors():
    assert literals.parse_cf("[2; 3]") == FiniteCF((2, 3))
    assert literals.parse_cf("[5]") == FiniteCF((5,))
    for bad in ("[1 2]", "[1; (2), 3]", "[]", "[1; (0)]", "1; (2)"):
        with pytest.raises((ParseError, DomainError)):
            literals.parse_cf(bad)


def test_parse_word_and_matrix():
    w = literals.parse_word("T^3 U T T^-2 V")
    assert w.letters == (("T", 3), ("U", 1), ("T", 1), ("T", -2), ("V", 1))
    with pytest.raises(ParseError):
        literals.parse_word("T^ U")
    assert literals.parse_matrix("[[2, 1], [1, 1]]").entries == (2, 1, 1, 1)
    with pytest.raises(DomainError):
        literals.parse_matrix("[[2,0],[0,1]]")
    with pytest.raises(ParseError):
        literals.parse_matrix("[[2,1],[1,1]")


def test_print_parse_round_trips():
    rng = random.Random(41)
    for _ in range(200):
        x = random_qi(rng, 10**6)
        assert literals.parse_qi(literals.format_qi(x)) == x
        cf = random_cf(rng, max_term=10**9)
        assert literals.parse_cf(literals.format_cf(cf)) == cf
        fin = FiniteCF(tuple([rng.randint(-99, 99)] + [rng.randint(1, 99) for _ in range(rng.randint(0, 5))]))
        assert literals.parse_cf(literals.format_cf(fin)) == fin
        M = word_to_matrix(random_word(rng))
        assert literals.parse_matrix(literals.format_matrix(M)) == M
        w = random_word(rng)
        assert literals.parse_generator_word(literals.format_word(w)) == w


def test_big_integers_survive():
    N = 10**50 + 1
    x = QuadraticIrrational(0, N * N + 1, 1)
    assert literals.parse_qi(literals.format_qi(x)) == x
    assert run("expand", literals.format_qi(x)) == (0, f"[{N}; ({2 * N})]\n", "")


def test_cli_examples():
    assert run("expand", "sqrt(2)") == (0, "[1; (2)]\n", "")
    assert run("eq", "sqrt(2)", "sqrt(3)") == (1, "not equivalent\n", "")
    assert run("normal-form", "[[2,1],[1,1]]") == (0, "T^1 U T^1 U T^0\n", "")


def test_cli_verbs():
    code, out, _ = run("value", "[; (1)]")
    assert code == 0 and literals.parse_qi(out.strip()) == QuadraticIrrational(1, 5, 2)
    code, out, _ = run("eq", "sqrt(2)", "(1+sqrt(2))/1")
    assert code == 0
    code, out, _ = run("apply", out.strip(), "sqrt(2)")
    assert literals.parse_qi(out.strip()) == QuadraticIrrational(1, 2, 1)
    assert run("decompose", "[[2,1],[1,1]]")[1] == "terms=[1, 1] r=0\n"
    assert run("decompose", "[[-1,-5],[0,-1]]")[1] == "sign=+1 shift=5\n"
    assert run("reduce", "T U V U V T^-1")[1] == "T^0\n"
    assert run("chain", "[[0,1],[1,0]]", "sqrt(2)")[1] == "[0; 1, (2)]\n[1; (2)]\n"
    code, out, _ = run("selftest")
    assert code == 0 and "FAIL" not in out and out.count("PASS") == 8


def test_cli_errors():
    code, out, err = run("expand", "(0+sqrt(9))/1")
    assert code == 2 and out == "" and "rational" in err
    code, out, err = run("expand", "(1+sqrt(5)")
    assert code == 2 and "position" in err
    code, _, err = run("value", "[1; 2]")
    assert code == 2 and "rational" in err
    code, _, err = run("chain", "[[1,1],[0,1]]", "sqrt(2)")
    assert code == 2
    assert run("bogus")[0] == 2
    assert run("eq", "sqrt(2)")[0] == 2


@pytest.mark.parametrize("argv", [
    ["expand", "sqrt(2)"],
    ["value", "[1; (2)]"],
    ["eq", "sqrt(2)", "sqrt(3)"],
    ["eq", "sqrt(2)", "(2+sqrt(2))/2"],
    ["apply", "[[0,1],[1,0]]", "sqrt(2)"],
    ["decompose", "[[2,1],[1,1]]"],
    ["decompose", "[[1,5],[0,1]]"],
    ["normal-form", "[[2,1],[1,1]]"],
    ["reduce", "U U"],
    ["chain", "[[2,1],[1,1]]", "(1+sqrt(5))/2"],
    ["selftest"],
])
def test_json_schema(argv):
    for args in (["--json"] + argv, argv + ["--json"]):
        code, out, _ = run(*args)
        lines = out.strip().splitlines()
        assert len(lines) == 1
        obj = json.loads(lines[0])
        assert set(obj) == {"verb", "result", "witness"}
        assert obj["verb"] == argv[0]


def test_json_eq_witness():
    code, out, _ = run("--json", "eq", "sqrt(2)", "(2+sqrt(2))/2")
    obj = json.loads(out)
    assert code == 0 and obj["result"] is True
    assert obj["witness"]["tail"] == [0, 1]
    M = literals.parse_matrix(obj["witness"]["literal"])
    assert (M.a, M.b, M.c, M.d) == tuple(obj["witness"][k] for k in "abcd")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "serret", "expand", "(1+sqrt(5))/2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "[; (1)]\n"
